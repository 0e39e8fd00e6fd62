#include "fano/taut.hpp"

#include <sstream>

namespace fano::taut {

TautClassF TautClassF::unit() { return basis(bF); }
TautClassF TautClassF::g() { return basis(bG); }
TautClassF TautClassF::c() { return basis(bC); }
TautClassF TautClassF::Cx() { return basis(bCx); }
TautClassF TautClassF::o() { return basis(bO); }

TautClassF TautClassF::basis(Basis b, const Rational& k) {
  TautClassF t;
  t.coef_[b] = k;
  return t;
}

bool TautClassF::is_zero() const {
  for (const auto& x : coef_)
    if (!x.is_zero()) return false;
  return true;
}

TautClassF TautClassF::operator-() const {
  TautClassF r;
  for (int b = 0; b < kBasisSize; ++b) r.coef_[b] = -coef_[b];
  return r;
}

TautClassF& TautClassF::operator+=(const TautClassF& o) {
  for (int b = 0; b < kBasisSize; ++b) coef_[b] += o.coef_[b];
  return *this;
}

TautClassF& TautClassF::operator-=(const TautClassF& o) {
  for (int b = 0; b < kBasisSize; ++b) coef_[b] -= o.coef_[b];
  return *this;
}

TautClassF TautClassF::scaled(const Rational& k) const {
  TautClassF r;
  for (int b = 0; b < kBasisSize; ++b) r.coef_[b] = coef_[b] * k;
  return r;
}

const char* TautClassF::basis_name(Basis b) {
  switch (b) {
    case bF: return "F";
    case bG: return "g";
    case bG2: return "g^2";
    case bC: return "c";
    case bG3: return "g^3";
    case bGC: return "g*c";
    case bCx: return "Cx";
    case bO: return "o";
    default: return "?";
  }
}

namespace {

template <typename Coef, typename Name>
std::string graded_str(const Coef& coef, int n, Name name) {
  std::ostringstream os;
  bool first = true;
  for (int b = 0; b < n; ++b) {
    const Rational& k = coef[b];
    if (k.is_zero()) continue;
    os << (first ? (k.sign() < 0 ? "-" : "") : (k.sign() < 0 ? " - " : " + "));
    first = false;
    Rational a = k.abs();
    if (a != Rational(1)) os << a.str() << "*";
    os << name(b);
  }
  return first ? "0" : os.str();
}

}  // namespace

std::string TautClassF::str() const {
  return graded_str(coef_, kBasisSize,
                    [](int b) { return basis_name(static_cast<Basis>(b)); });
}

namespace {

// codim of each TautClassF basis slot
constexpr int kCodim[TautClassF::kBasisSize] = {0, 1, 2, 2, 3, 3, 3, 4};

// g^a c^b of weighted degree a+2b <= 4 resolved in the basis; degree-4
// monomials close onto [o], higher degrees vanish.
TautClassF gc_monomial(int a, int b) {
  using T = TautClassF;
  int d = a + 2 * b;
  if (d > 4) return T();
  switch (d) {
    case 0: return T::unit();
    case 1: return T::g();
    case 2: return b ? T::c() : T::basis(T::bG2);
    case 3: return b ? T::basis(T::bGC) : T::basis(T::bG3);
    default:
      if (a == 4) return T::o().scaled(108);
      if (a == 2) return T::o().scaled(45);
      return T::o().scaled(27);
  }
}

}  // namespace

TautClassF taut_mul(const TautClassF& u, const TautClassF& v) {
  using T = TautClassF;
  T out;
  for (int ub = 0; ub < T::kBasisSize; ++ub) {
    const Rational& cu = u.coef(static_cast<T::Basis>(ub));
    if (cu.is_zero()) continue;
    for (int vb = 0; vb < T::kBasisSize; ++vb) {
      const Rational& cv = v.coef(static_cast<T::Basis>(vb));
      if (cv.is_zero()) continue;
      Rational k = cu * cv;
      auto a = static_cast<T::Basis>(ub);
      auto b = static_cast<T::Basis>(vb);
      if (b == T::bF) std::swap(a, b);
      if (a == T::bF) {
        out += T::basis(b, k);
        continue;
      }
      if (a > b) std::swap(a, b);  // canonical order for lookup and messages
      if (b == T::bCx || b == T::bO) {
        // Only g * C_x is tabulated.
        if (b == T::bCx && a == T::bG) {
          out += T::o().scaled(k * 6);
          continue;
        }
        throw unspecified_product(std::string(T::basis_name(a)) + "*" + T::basis_name(b));
      }
      // both factors are g^i c^j monomials
      auto powers = [](T::Basis s) -> std::pair<int, int> {
        switch (s) {
          case T::bG: return {1, 0};
          case T::bG2: return {2, 0};
          case T::bC: return {0, 1};
          case T::bG3: return {3, 0};
          case T::bGC: return {1, 1};
          default: return {0, 0};
        }
      };
      auto [ga, ca] = powers(a);
      auto [gb, cb] = powers(b);
      out += gc_monomial(ga + gb, ca + cb).scaled(k);
    }
  }
  return out;
}

TautClassF sigma2_class() {
  return TautClassF::basis(TautClassF::bG2, 5) - TautClassF::c().scaled(5);
}

ClassX ClassX::unit() { return basis(bX); }
ClassX ClassX::h() { return basis(bH); }
ClassX ClassX::point() { return basis(bPt); }

ClassX ClassX::basis(Basis b, const Rational& k) {
  ClassX r;
  r.coef_[b] = k;
  return r;
}

ClassX ClassX::curve_symbol(const std::string& name, const Rational& k) {
  ClassX r;
  if (!k.is_zero()) r.curves_[name] = k;
  return r;
}

bool ClassX::is_zero() const {
  for (const auto& x : coef_)
    if (!x.is_zero()) return false;
  return curves_.empty();
}

ClassX ClassX::operator-() const { return scaled(-1); }

ClassX& ClassX::operator+=(const ClassX& o) {
  for (int b = 0; b < kBasisSize; ++b) coef_[b] += o.coef_[b];
  for (const auto& [n, k] : o.curves_) {
    auto [it, fresh] = curves_.emplace(n, k);
    if (!fresh) {
      it->second += k;
      if (it->second.is_zero()) curves_.erase(it);
    }
  }
  return *this;
}

ClassX& ClassX::operator-=(const ClassX& o) { return *this += o.scaled(-1); }

ClassX ClassX::scaled(const Rational& k) const {
  ClassX r;
  if (k.is_zero()) return r;
  for (int b = 0; b < kBasisSize; ++b) r.coef_[b] = coef_[b] * k;
  for (const auto& [n, c] : curves_) r.curves_.emplace(n, c * k);
  return r;
}

ClassX ClassX::mul_h() const {
  if (!curves_.empty()) throw error("h-multiple of a formal curve symbol");
  ClassX r;
  r.coef_[bH] = coef_[bX];
  r.coef_[bH2] = coef_[bH];
  r.coef_[bH3] = coef_[bH2];
  r.coef_[bPt] = coef_[bH3] * 3;  // h^4 = 3x
  // h * x lands below dimension zero and vanishes
  return r;
}

ClassX ClassX::mul_h_power(int e) const {
  if (e < 0) throw error("negative power of h");
  ClassX r = *this;
  for (int i = 0; i < e; ++i) r = r.mul_h();
  return r;
}

std::string ClassX::str() const {
  static const char* names[kBasisSize] = {"X", "h", "h^2", "h^3", "x"};
  std::string s = graded_str(coef_, kBasisSize, [](int b) { return names[b]; });
  for (const auto& [n, k] : curves_) {
    if (s == "0") s.clear();
    if (!s.empty()) s += k.sign() < 0 ? " - " : " + ";
    else if (k.sign() < 0) s += "-";
    Rational a = k.abs();
    if (a != Rational(1)) s += a.str() + "*";
    s += "[" + n + "]";
  }
  return s.empty() ? "0" : s;
}

ClassX psi(const TautClassF& u) {
  using T = TautClassF;
  for (int b : {T::bF, T::bC, T::bGC, T::bCx})
    if (!u.coef(static_cast<T::Basis>(b)).is_zero())
      throw error(std::string("psi undefined on ") + T::basis_name(static_cast<T::Basis>(b)));
  ClassX out;
  out += ClassX::unit().scaled(u.coef(T::bG) * 6);
  out += ClassX::h().scaled(u.coef(T::bG2) * 21);
  out += ClassX::basis(ClassX::bH2, u.coef(T::bG3) * 36);
  out += ClassX::basis(ClassX::bH3, u.coef(T::bO) / 3);
  return out;
}

TautClassF phi(const ClassX& v) {
  using T = TautClassF;
  if (!v.coef(ClassX::bX).is_zero()) throw error("phi undefined on [X]");
  if (!v.curve_symbols().empty()) throw error("phi undefined on formal curve symbols");
  TautClassF out;
  out += T::unit().scaled(v.coef(ClassX::bH));
  out += T::g().scaled(v.coef(ClassX::bH2));
  out += (T::basis(T::bG2) - T::c()).scaled(v.coef(ClassX::bH3));
  out += T::Cx().scaled(v.coef(ClassX::bPt));
  return out;
}

TautClassF I_star(const TautClassF& u) { return phi(psi(u)); }

TautClassF gamma_h_pull(const TautClassF& u) { return phi(psi(u).mul_h()); }

TautClassF gamma_h2_pull(const TautClassF& u) { return phi(psi(u).mul_h_power(2)); }

FormalZeroCycle FormalZeroCycle::o(const Rational& k) {
  FormalZeroCycle z;
  z.o_ = k;
  return z;
}

FormalZeroCycle FormalZeroCycle::point(const std::string& name, const Rational& k) {
  FormalZeroCycle z;
  z.add_point({name, false}, k);
  return z;
}

FormalZeroCycle FormalZeroCycle::phi_point(const std::string& name, const Rational& k) {
  FormalZeroCycle z;
  z.add_point({name, true}, k);
  return z;
}

void FormalZeroCycle::add_point(const PointSym& p, const Rational& k) {
  if (k.is_zero()) return;
  auto [it, fresh] = pts_.emplace(p, k);
  if (!fresh) {
    it->second += k;
    if (it->second.is_zero()) pts_.erase(it);
  }
}

Rational FormalZeroCycle::degree() const {
  Rational d = o_;
  for (const auto& [p, k] : pts_) d += k;
  return d;
}

FormalZeroCycle FormalZeroCycle::operator-() const { return scaled(-1); }

FormalZeroCycle& FormalZeroCycle::operator+=(const FormalZeroCycle& c) {
  o_ += c.o_;
  for (const auto& [p, k] : c.pts_) add_point(p, k);
  return *this;
}

FormalZeroCycle& FormalZeroCycle::operator-=(const FormalZeroCycle& c) {
  return *this += c.scaled(-1);
}

FormalZeroCycle FormalZeroCycle::scaled(const Rational& k) const {
  FormalZeroCycle r;
  if (k.is_zero()) return r;
  r.o_ = o_ * k;
  for (const auto& [p, c] : pts_) r.pts_.emplace(p, c * k);
  return r;
}

FormalZeroCycle FormalZeroCycle::phi_push() const {
  FormalZeroCycle r;
  r.o_ = o_;  // the distinguished cycle is a fixed point of the pushforward
  for (const auto& [p, k] : pts_) {
    if (p.phi_image) throw error("iterated phi image of " + p.str() + " is not modeled");
    r.add_point({p.name, true}, k);
  }
  return r;
}

std::string FormalZeroCycle::str() const {
  std::ostringstream os;
  bool first = true;
  auto emit = [&](const Rational& k, const std::string& sym) {
    if (k.is_zero()) return;
    os << (first ? (k.sign() < 0 ? "-" : "") : (k.sign() < 0 ? " - " : " + "));
    first = false;
    Rational a = k.abs();
    if (a != Rational(1)) os << a.str() << "*";
    os << sym;
  };
  emit(o_, "o");
  for (const auto& [p, k] : pts_) emit(k, p.str());
  return first ? "0" : os.str();
}

TriangleDecl TriangleDecl::distinct(const std::string& l1, const std::string& l2,
                                    const std::string& l3) {
  if (l1.empty() || l2.empty() || l3.empty()) throw error("triangle edge with empty name");
  if (l1 == l2 || l1 == l3 || l2 == l3)
    throw error("distinct triangle with repeated edge");
  return {Kind::distinct, l1, l2, l3};
}

TriangleDecl TriangleDecl::first_type(const std::string& l) {
  if (l.empty()) throw error("triangle edge with empty name");
  return {Kind::first_type, l, l, l};
}

TriangleDecl TriangleDecl::triple(const std::string& l) {
  if (l.empty()) throw error("triangle edge with empty name");
  return {Kind::triple, l, l, l};
}

FormalZeroCycle S_product(const TriangleDecl& t) {
  FormalZeroCycle r = FormalZeroCycle::o(6);
  switch (t.kind) {
    case TriangleDecl::Kind::distinct:
      r += FormalZeroCycle::point(t.l3);
      r -= FormalZeroCycle::point(t.l1);
      r -= FormalZeroCycle::point(t.l2);
      break;
    case TriangleDecl::Kind::first_type:
      r += FormalZeroCycle::phi_point(t.l1);
      r -= FormalZeroCycle::point(t.l1, 2);
      break;
    case TriangleDecl::Kind::triple:
      r -= FormalZeroCycle::point(t.l1);
      break;
  }
  return r;
}

}  // namespace fano::taut
