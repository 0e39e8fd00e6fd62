#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fano/rational.hpp"

namespace fano {

// Ordered list of (name, weight). Weight-0 variables are legal and act as
// formal parameters (e.g. the constant `a` carried through an identity).
class VarTable {
 public:
  struct Var {
    std::string name;
    int degree = 1;
    friend bool operator==(const Var&, const Var&) = default;
  };

  VarTable(std::initializer_list<Var> vars) : vars_(vars) { validate(); }
  explicit VarTable(std::vector<Var> vars) : vars_(std::move(vars)) { validate(); }

  std::size_t size() const { return vars_.size(); }
  const Var& at(std::size_t i) const { return vars_[i]; }
  int index_of(std::string_view name) const;

  friend bool operator==(const VarTable&, const VarTable&) = default;

 private:
  void validate() const;
  std::vector<Var> vars_;
};

using VarTablePtr = std::shared_ptr<const VarTable>;

// Multivariate commutative polynomial with exact rational coefficients,
// graded by the weighted total degree of its variable table. An optional
// truncation bound makes the ring behave like a Chow ring: every term of
// weighted degree above the bound is identically zero.
class GradedPoly {
 public:
  using Exponents = std::vector<int>;

  explicit GradedPoly(VarTablePtr table, std::optional<int> truncation = std::nullopt);

  static GradedPoly constant(VarTablePtr table, const Rational& c,
                             std::optional<int> truncation = std::nullopt);
  static GradedPoly variable(VarTablePtr table, std::string_view name,
                             std::optional<int> truncation = std::nullopt);
  static GradedPoly monomial(VarTablePtr table, Exponents exp, const Rational& c,
                             std::optional<int> truncation = std::nullopt);

  const VarTablePtr& table() const { return table_; }
  const std::optional<int>& truncation() const { return trunc_; }
  const std::map<Exponents, Rational>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_term() const;
  Rational coefficient(const Exponents& exp) const;
  int weighted_degree(const Exponents& exp) const;
  // Largest weighted degree among stored terms, -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;

  GradedPoly operator-() const;
  GradedPoly& operator+=(const GradedPoly& o);
  GradedPoly& operator-=(const GradedPoly& o);
  friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
  friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }

  GradedPoly scaled(const Rational& k) const;
  GradedPoly pow(int e) const;

  // Replaces one variable by an exact value; the variable stays in the table.
  GradedPoly substitute(std::string_view name, const Rational& value) const;

  friend bool operator==(const GradedPoly& a, const GradedPoly& b) {
    return *a.table_ == *b.table_ && a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  friend GradedPoly poly_mul(const GradedPoly&, const GradedPoly&);
  void add_term(const Exponents& exp, const Rational& c);
  void retruncate(std::optional<int> bound);

  VarTablePtr table_;
  std::optional<int> trunc_;
  std::map<Exponents, Rational> terms_;
};

// Commutative product; requires identical variable tables. The truncation
// bound of the result is the tighter of the operand bounds, and terms above
// it are discarded.
GradedPoly poly_mul(const GradedPoly& u, const GradedPoly& v);

inline GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) { return poly_mul(a, b); }

}  // namespace fano
