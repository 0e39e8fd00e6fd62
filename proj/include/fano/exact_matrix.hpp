#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fano/graded_poly.hpp"
#include "fano/rational.hpp"

namespace fano {

// Dense matrix over the rationals. Zero-sized dimensions are allowed so that
// empty model blocks compose without special cases.
class ExactMatrix {
 public:
  ExactMatrix() : rows_(0), cols_(0) {}
  ExactMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

  static ExactMatrix identity(std::size_t n);
  static ExactMatrix diagonal(const std::vector<Rational>& d);
  static ExactMatrix from_rows(const std::vector<std::vector<Rational>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  ExactMatrix operator-() const;
  ExactMatrix& operator+=(const ExactMatrix& o);
  ExactMatrix& operator-=(const ExactMatrix& o);
  friend ExactMatrix operator+(ExactMatrix a, const ExactMatrix& b) { return a += b; }
  friend ExactMatrix operator-(ExactMatrix a, const ExactMatrix& b) { return a -= b; }
  friend ExactMatrix operator*(const ExactMatrix& a, const ExactMatrix& b);

  ExactMatrix scaled(const Rational& k) const;
  ExactMatrix transpose() const;
  ExactMatrix pow(int e) const;

  bool is_zero() const;
  friend bool operator==(const ExactMatrix& a, const ExactMatrix& b) = default;

  void set_block(std::size_t i0, std::size_t j0, const ExactMatrix& m);
  ExactMatrix block(std::size_t i0, std::size_t j0, std::size_t r, std::size_t c) const;

  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  std::size_t rank() const;
  // Columns span the right kernel.
  ExactMatrix kernel_basis() const;
  std::vector<Rational> column(std::size_t j) const;

  std::string str() const;

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

// Monic least-degree annihilator, computed by an exact linear-dependence
// search over the powers of the matrix. Univariate in "x".
GradedPoly minimal_polynomial(const ExactMatrix& m);

// Evaluates a univariate polynomial at a square matrix.
ExactMatrix eval_poly_at_matrix(const GradedPoly& p, const ExactMatrix& m);

// The shared univariate table used by minimal_polynomial.
VarTablePtr univariate_table();

// Exact solution of A x = b when one exists.
std::optional<std::vector<Rational>> solve_linear_system(const ExactMatrix& a,
                                                         const std::vector<Rational>& b);

}  // namespace fano
