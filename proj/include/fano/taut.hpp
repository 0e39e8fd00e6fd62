#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "fano/rational.hpp"

namespace fano::taut {

// Element of the modeled tautological ring of F over the fixed basis
//   codim 0: [F] | codim 1: g | codim 2: g^2, c | codim 3: g^3, g*c, C_x |
//   codim 4: [o].
// The codim-4 part is one-dimensional, spanned by [o].
class TautClassF {
 public:
  enum Basis { bF = 0, bG, bG2, bC, bG3, bGC, bCx, bO, kBasisSize };

  TautClassF() = default;

  static TautClassF unit();
  static TautClassF g();
  static TautClassF c();
  static TautClassF Cx();
  static TautClassF o();
  static TautClassF basis(Basis b, const Rational& k = 1);

  const Rational& coef(Basis b) const { return coef_[b]; }
  Rational& coef(Basis b) { return coef_[b]; }
  bool is_zero() const;

  TautClassF operator-() const;
  TautClassF& operator+=(const TautClassF& o);
  TautClassF& operator-=(const TautClassF& o);
  friend TautClassF operator+(TautClassF a, const TautClassF& b) { return a += b; }
  friend TautClassF operator-(TautClassF a, const TautClassF& b) { return a -= b; }
  TautClassF scaled(const Rational& k) const;

  friend bool operator==(const TautClassF&, const TautClassF&) = default;

  static const char* basis_name(Basis b);
  std::string str() const;

 private:
  std::array<Rational, kBasisSize> coef_{};
};

// Raised for a product the multiplication tables do not determine.
struct unspecified_product : error {
  explicit unspecified_product(const std::string& monomial)
      : error("unspecified product " + monomial) {}
};

// Bilinear product. Monomials in g, c multiply polynomially, with the
// degree-4 closures g^4 = 108[o], g^2 c = 45[o], c^2 = 27[o] and everything
// above degree 4 equal to zero; g * C_x = 6[o]. Any other product involving
// C_x or [o] is not determined by the tables and is rejected.
TautClassF taut_mul(const TautClassF& u, const TautClassF& v);

// Class of the surface of lines of second type: 5g^2 - 5c.
TautClassF sigma2_class();

// Element of the modeled ring of the cubic fourfold X over the basis
// [X], h, h^2, h^3, x (point class), with h^4 = 3x, plus formal curve
// symbols carried verbatim (same grade as h^3).
class ClassX {
 public:
  enum Basis { bX = 0, bH, bH2, bH3, bPt, kBasisSize };

  ClassX() = default;
  static ClassX unit();
  static ClassX h();
  static ClassX point();
  static ClassX basis(Basis b, const Rational& k = 1);
  static ClassX curve_symbol(const std::string& name, const Rational& k = 1);

  const Rational& coef(Basis b) const { return coef_[b]; }
  const std::map<std::string, Rational>& curve_symbols() const { return curves_; }
  bool is_zero() const;

  ClassX operator-() const;
  ClassX& operator+=(const ClassX& o);
  ClassX& operator-=(const ClassX& o);
  friend ClassX operator+(ClassX a, const ClassX& b) { return a += b; }
  friend ClassX operator-(ClassX a, const ClassX& b) { return a -= b; }
  ClassX scaled(const Rational& k) const;

  // Multiplication by h; h^4 = 3x, h*x = 0. Curve symbols are rejected.
  ClassX mul_h() const;
  ClassX mul_h_power(int e) const;

  friend bool operator==(const ClassX&, const ClassX&) = default;
  std::string str() const;

 private:
  std::array<Rational, kBasisSize> coef_{};
  std::map<std::string, Rational> curves_;
};

// Ring product in Q[h]/(h^5) with h^4 = 3x; curve symbols multiply only
// with multiples of the unit.
ClassX x_mul(const ClassX& u, const ClassX& v);

// Cylinder homomorphism tables. psi: g -> 6[X], g^2 -> 21h, g^3 -> 36h^2,
// [o] -> (1/3)h^3; phi: h -> [F], h^2 -> g, h^3 -> g^2 - c, x -> C_x.
// Inputs outside the tabulated span are rejected.
ClassX psi(const TautClassF& u);
TautClassF phi(const ClassX& v);

TautClassF I_star(const TautClassF& u);        // phi(psi(u))
TautClassF gamma_h_pull(const TautClassF& u);  // phi(h * psi(u))
TautClassF gamma_h2_pull(const TautClassF& u); // phi(h^2 * psi(u))

// Formal 0-cycle on F: a rational multiple of [o] plus formal point symbols
// [l] and their images under the rational self-map pushforward.
struct PointSym {
  std::string name;
  bool phi_image = false;
  friend auto operator<=>(const PointSym&, const PointSym&) = default;
  std::string str() const { return phi_image ? "phi[" + name + "]" : "pt[" + name + "]"; }
};

class FormalZeroCycle {
 public:
  FormalZeroCycle() = default;

  static FormalZeroCycle o(const Rational& k = 1);
  static FormalZeroCycle point(const std::string& name, const Rational& k = 1);
  static FormalZeroCycle phi_point(const std::string& name, const Rational& k = 1);

  const Rational& o_coef() const { return o_; }
  const std::map<PointSym, Rational>& points() const { return pts_; }
  Rational degree() const;
  bool is_zero() const { return o_.is_zero() && pts_.empty(); }
  bool is_hom_trivial() const { return degree().is_zero(); }

  FormalZeroCycle operator-() const;
  FormalZeroCycle& operator+=(const FormalZeroCycle& c);
  FormalZeroCycle& operator-=(const FormalZeroCycle& c);
  friend FormalZeroCycle operator+(FormalZeroCycle a, const FormalZeroCycle& b) { return a += b; }
  friend FormalZeroCycle operator-(FormalZeroCycle a, const FormalZeroCycle& b) { return a -= b; }
  FormalZeroCycle scaled(const Rational& k) const;

  // Pushforward along the degree-16 self-map: [l] -> phi[l], [o] -> [o].
  // Iterated images are not part of the model and are rejected.
  FormalZeroCycle phi_push() const;

  friend bool operator==(const FormalZeroCycle&, const FormalZeroCycle&) = default;
  std::string str() const;

  void add_point(const PointSym& p, const Rational& k);

 private:
  Rational o_;
  std::map<PointSym, Rational> pts_;
};

// A declared triangle of lines, possibly degenerate. The residual edge of
// the degenerate (l,l,l') triangle is the phi-image of l; the triple line
// has all edges equal.
struct TriangleDecl {
  enum class Kind { distinct, first_type, triple };
  Kind kind;
  std::string l1, l2, l3;

  static TriangleDecl distinct(const std::string& l1, const std::string& l2,
                               const std::string& l3);
  static TriangleDecl first_type(const std::string& l);
  static TriangleDecl triple(const std::string& l);
};

// S_{l1} . S_{l2} for the declared triangle (l1,l2,l3):
//   distinct:    6[o] + [l3] - [l1] - [l2]
//   first type:  6[o] + phi[l] - 2[l]
//   triple line: 6[o] - [l]
// Degree 5 in every case.
FormalZeroCycle S_product(const TriangleDecl& t);

}  // namespace fano::taut
