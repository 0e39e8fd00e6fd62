#include "fano/graded_poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace fano {

int VarTable::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i].name == name) return static_cast<int>(i);
  return -1;
}

void VarTable::validate() const {
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (v.name.empty()) throw error("variable with empty name");
    if (v.degree < 0) throw error("variable '" + v.name + "' with negative degree");
    if (!seen.insert(v.name).second) throw error("duplicate variable '" + v.name + "'");
  }
}

GradedPoly::GradedPoly(VarTablePtr table, std::optional<int> truncation)
    : table_(std::move(table)), trunc_(truncation) {
  if (!table_) throw error("polynomial without variable table");
}

GradedPoly GradedPoly::constant(VarTablePtr table, const Rational& c,
                                std::optional<int> truncation) {
  GradedPoly p(std::move(table), truncation);
  p.add_term(Exponents(p.table_->size(), 0), c);
  return p;
}

GradedPoly GradedPoly::variable(VarTablePtr table, std::string_view name,
                                std::optional<int> truncation) {
  GradedPoly p(std::move(table), truncation);
  int i = p.table_->index_of(name);
  if (i < 0) throw error("unknown variable '" + std::string(name) + "'");
  Exponents exp(p.table_->size(), 0);
  exp[static_cast<std::size_t>(i)] = 1;
  p.add_term(exp, 1);
  return p;
}

GradedPoly GradedPoly::monomial(VarTablePtr table, Exponents exp, const Rational& c,
                                std::optional<int> truncation) {
  GradedPoly p(std::move(table), truncation);
  if (exp.size() != p.table_->size()) throw error("exponent vector of wrong length");
  for (int e : exp)
    if (e < 0) throw error("negative exponent");
  p.add_term(exp, c);
  return p;
}

bool GradedPoly::is_constant() const {
  if (terms_.empty()) return true;
  if (terms_.size() > 1) return false;
  const auto& exp = terms_.begin()->first;
  return std::all_of(exp.begin(), exp.end(), [](int e) { return e == 0; });
}

Rational GradedPoly::constant_term() const {
  return coefficient(Exponents(table_->size(), 0));
}

Rational GradedPoly::coefficient(const Exponents& exp) const {
  auto it = terms_.find(exp);
  return it == terms_.end() ? Rational(0) : it->second;
}

int GradedPoly::weighted_degree(const Exponents& exp) const {
  int d = 0;
  for (std::size_t i = 0; i < exp.size(); ++i) d += exp[i] * table_->at(i).degree;
  return d;
}

int GradedPoly::total_degree() const {
  int d = -1;
  for (const auto& [exp, c] : terms_) d = std::max(d, weighted_degree(exp));
  return d;
}

bool GradedPoly::is_homogeneous() const {
  int d = -1;
  for (const auto& [exp, c] : terms_) {
    int w = weighted_degree(exp);
    if (d == -1) d = w;
    if (w != d) return false;
  }
  return true;
}

void GradedPoly::add_term(const Exponents& exp, const Rational& c) {
  if (c.is_zero()) return;
  if (trunc_ && weighted_degree(exp) > *trunc_) return;
  auto [it, fresh] = terms_.emplace(exp, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

namespace {

void require_same_table(const GradedPoly& a, const GradedPoly& b) {
  if (!(*a.table() == *b.table())) throw error("mismatched variable tables");
}

std::optional<int> merged_truncation(const GradedPoly& a, const GradedPoly& b) {
  if (a.truncation() && b.truncation()) return std::min(*a.truncation(), *b.truncation());
  return a.truncation() ? a.truncation() : b.truncation();
}

}  // namespace

GradedPoly GradedPoly::operator-() const {
  GradedPoly r(table_, trunc_);
  for (const auto& [exp, c] : terms_) r.terms_.emplace(exp, -c);
  return r;
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
  require_same_table(*this, o);
  retruncate(merged_truncation(*this, o));
  for (const auto& [exp, c] : o.terms_) add_term(exp, c);
  return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
  require_same_table(*this, o);
  retruncate(merged_truncation(*this, o));
  for (const auto& [exp, c] : o.terms_) add_term(exp, -c);
  return *this;
}

void GradedPoly::retruncate(std::optional<int> bound) {
  trunc_ = bound;
  if (!trunc_) return;
  for (auto it = terms_.begin(); it != terms_.end();)
    it = weighted_degree(it->first) > *trunc_ ? terms_.erase(it) : std::next(it);
}

GradedPoly GradedPoly::scaled(const Rational& k) const {
  GradedPoly r(table_, trunc_);
  if (k.is_zero()) return r;
  for (const auto& [exp, c] : terms_) r.terms_.emplace(exp, c * k);
  return r;
}

GradedPoly GradedPoly::pow(int e) const {
  if (e < 0) throw error("negative polynomial power");
  GradedPoly r = constant(table_, 1, trunc_);
  GradedPoly b = *this;
  while (e > 0) {
    if (e & 1) r = poly_mul(r, b);
    b = poly_mul(b, b);
    e >>= 1;
  }
  return r;
}

GradedPoly GradedPoly::substitute(std::string_view name, const Rational& value) const {
  int i = table_->index_of(name);
  if (i < 0) throw error("unknown variable '" + std::string(name) + "'");
  GradedPoly r(table_, trunc_);
  for (const auto& [exp, c] : terms_) {
    Exponents folded = exp;
    int e = folded[static_cast<std::size_t>(i)];
    folded[static_cast<std::size_t>(i)] = 0;
    r.add_term(folded, c * value.pow(e));
  }
  return r;
}

GradedPoly poly_mul(const GradedPoly& u, const GradedPoly& v) {
  require_same_table(u, v);
  GradedPoly r(u.table(), merged_truncation(u, v));
  for (const auto& [eu, cu] : u.terms()) {
    for (const auto& [ev, cv] : v.terms()) {
      GradedPoly::Exponents exp(eu.size());
      for (std::size_t i = 0; i < exp.size(); ++i) exp[i] = eu[i] + ev[i];
      r.add_term(exp, cu * cv);
    }
  }
  return r;
}

std::string GradedPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest degree first, then lexicographic, for stable readable output.
  std::vector<const std::pair<const Exponents, Rational>*> ordered;
  for (const auto& t : terms_) ordered.push_back(&t);
  std::stable_sort(ordered.begin(), ordered.end(), [&](auto* a, auto* b) {
    int da = weighted_degree(a->first), db = weighted_degree(b->first);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  for (auto* t : ordered) {
    const auto& [exp, c] = *t;
    Rational a = c.abs();
    os << (first ? (c.sign() < 0 ? "-" : "") : (c.sign() < 0 ? " - " : " + "));
    first = false;
    bool all_zero = std::all_of(exp.begin(), exp.end(), [](int e) { return e == 0; });
    bool unit = (a == Rational(1));
    if (!unit || all_zero) os << a.str();
    bool printed = !unit || all_zero;
    for (std::size_t i = 0; i < exp.size(); ++i) {
      if (exp[i] == 0) continue;
      if (printed) os << "*";
      os << table_->at(i).name;
      if (exp[i] > 1) os << "^" << exp[i];
      printed = true;
    }
  }
  return os.str();
}

}  // namespace fano
