#include "fano/exact_matrix.hpp"

#include <sstream>

namespace fano {

ExactMatrix ExactMatrix::identity(std::size_t n) {
  ExactMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ExactMatrix ExactMatrix::diagonal(const std::vector<Rational>& d) {
  ExactMatrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m.at(i, i) = d[i];
  return m;
}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  std::size_t r = rows.size();
  std::size_t c = r ? rows[0].size() : 0;
  ExactMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw error("ragged rows");
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

ExactMatrix ExactMatrix::operator-() const {
  ExactMatrix r = *this;
  for (auto& x : r.a_) x = -x;
  return r;
}

ExactMatrix& ExactMatrix::operator+=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw error("matrix shape mismatch in addition");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
  return *this;
}

ExactMatrix& ExactMatrix::operator-=(const ExactMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw error("matrix shape mismatch in subtraction");
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] -= o.a_[i];
  return *this;
}

ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b) {
  if (a.cols_ != b.rows_) throw error("matrix shape mismatch in product");
  ExactMatrix r(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) r.at(i, j) += aik * b.at(k, j);
    }
  return r;
}

ExactMatrix ExactMatrix::scaled(const Rational& k) const {
  ExactMatrix r = *this;
  for (auto& x : r.a_) x *= k;
  return r;
}

ExactMatrix ExactMatrix::transpose() const {
  ExactMatrix r(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

ExactMatrix ExactMatrix::pow(int e) const {
  if (!is_square()) throw error("power of a non-square matrix");
  if (e < 0) throw error("negative matrix power");
  ExactMatrix r = identity(rows_), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

bool ExactMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

void ExactMatrix::set_block(std::size_t i0, std::size_t j0, const ExactMatrix& m) {
  if (i0 + m.rows_ > rows_ || j0 + m.cols_ > cols_) throw error("block out of range");
  for (std::size_t i = 0; i < m.rows_; ++i)
    for (std::size_t j = 0; j < m.cols_; ++j) at(i0 + i, j0 + j) = m.at(i, j);
}

ExactMatrix ExactMatrix::block(std::size_t i0, std::size_t j0, std::size_t r,
                               std::size_t c) const {
  if (i0 + r > rows_ || j0 + c > cols_) throw error("block out of range");
  ExactMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = at(i0 + i, j0 + j);
  return m;
}

std::vector<Rational> ExactMatrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw error("vector length mismatch");
  std::vector<Rational> r(rows_, Rational(0));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (!at(i, j).is_zero()) r[i] += at(i, j) * v[j];
  return r;
}

namespace {

// Row echelon form in place; returns pivot columns.
std::vector<std::size_t> echelonize(std::vector<std::vector<Rational>>& m) {
  std::vector<std::size_t> pivots;
  std::size_t rows = m.size();
  std::size_t cols = rows ? m[0].size() : 0;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    Rational inv = Rational(1) / m[r][c];
    for (auto& x : m[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rational f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t ExactMatrix::rank() const {
  std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m[i][j] = at(i, j);
  return echelonize(m).size();
}

ExactMatrix ExactMatrix::kernel_basis() const {
  std::vector<std::vector<Rational>> m(rows_, std::vector<Rational>(cols_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m[i][j] = at(i, j);
  std::vector<std::size_t> pivots = echelonize(m);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols_; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  ExactMatrix k(cols_, free_cols.size());
  for (std::size_t fi = 0; fi < free_cols.size(); ++fi) {
    std::size_t f = free_cols[fi];
    k.at(f, fi) = 1;
    for (std::size_t pi = 0; pi < pivots.size(); ++pi) k.at(pivots[pi], fi) = -m[pi][f];
  }
  return k;
}

std::vector<Rational> ExactMatrix::column(std::size_t j) const {
  if (j >= cols_) throw error("column out of range");
  std::vector<Rational> v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = at(i, j);
  return v;
}

std::optional<std::vector<Rational>> solve_linear_system(const ExactMatrix& a,
                                                         const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw error("right-hand side length mismatch");
  std::vector<std::vector<Rational>> m(a.rows(), std::vector<Rational>(a.cols() + 1));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a.at(i, j);
    m[i][a.cols()] = b[i];
  }
  std::vector<std::size_t> pivots = echelonize(m);
  std::vector<Rational> x(a.cols(), Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == a.cols()) return std::nullopt;  // inconsistent row
    x[pivots[r]] = m[r][a.cols()];
  }
  return x;
}

VarTablePtr univariate_table() {
  static const VarTablePtr table = std::make_shared<VarTable>(VarTable{{"x", 1}});
  return table;
}

GradedPoly minimal_polynomial(const ExactMatrix& m) {
  if (!m.is_square()) throw error("minimal polynomial of a non-square matrix");
  std::size_t n = m.rows();
  VarTablePtr xt = univariate_table();
  if (n == 0) return GradedPoly::constant(xt, 1);

  // Flattened powers I, m, m^2, ...; echelon basis with bookkeeping of the
  // combination of original powers that produced each reduced row.
  std::vector<std::vector<Rational>> basis;       // reduced, leading 1
  std::vector<std::size_t> lead;                  // leading column of each basis row
  std::vector<std::vector<Rational>> combo;       // combo[i][k]: coefficient of m^k
  ExactMatrix p = ExactMatrix::identity(n);
  for (std::size_t k = 0;; ++k) {
    std::vector<Rational> v(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) v[i * n + j] = p.at(i, j);
    std::vector<Rational> c(k + 1, Rational(0));
    c[k] = 1;
    // reduce v against the basis
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational& f = v[lead[b]];
      if (f.is_zero()) continue;
      Rational fv = f;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= fv * basis[b][j];
      for (std::size_t j = 0; j < combo[b].size(); ++j) c[j] -= fv * combo[b][j];
    }
    std::size_t l = 0;
    while (l < v.size() && v[l].is_zero()) ++l;
    if (l == v.size()) {
      // m^k = -sum_{i<k} c[i] m^i  (after reduction c[k] is still 1)
      GradedPoly mp(xt);
      for (std::size_t i = 0; i <= k; ++i)
        mp += GradedPoly::monomial(xt, {static_cast<int>(i)}, c[i]);
      return mp;
    }
    Rational inv = Rational(1) / v[l];
    for (auto& x : v) x *= inv;
    for (auto& x : c) x *= inv;
    basis.push_back(std::move(v));
    lead.push_back(l);
    combo.push_back(std::move(c));
    p = p * m;
  }
}

ExactMatrix eval_poly_at_matrix(const GradedPoly& p, const ExactMatrix& m) {
  if (!m.is_square()) throw error("polynomial of a non-square matrix");
  if (p.table()->size() != 1) throw error("expected a univariate polynomial");
  ExactMatrix r(m.rows(), m.rows());
  for (const auto& [exp, c] : p.terms()) r += m.pow(exp[0]).scaled(c);
  return r;
}

std::string ExactMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? "; " : "");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? " " : "") << at(i, j);
  }
  os << "]";
  return os.str();
}

}  // namespace fano
