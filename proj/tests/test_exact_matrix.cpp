#include <random>

#include "doctest.h"
#include "fano/exact_matrix.hpp"

using fano::ExactMatrix;
using fano::GradedPoly;
using fano::minimal_polynomial;
using fano::Rational;

namespace {

GradedPoly from_roots(const std::vector<Rational>& roots) {
  auto t = fano::univariate_table();
  GradedPoly p = GradedPoly::constant(t, 1);
  GradedPoly x = GradedPoly::variable(t, "x");
  for (const auto& r : roots) p = p * (x - GradedPoly::constant(t, r));
  return p;
}

}  // namespace

TEST_CASE("matrix product and transpose") {
  ExactMatrix a = ExactMatrix::from_rows({{1, 2}, {3, 4}});
  ExactMatrix b = ExactMatrix::from_rows({{0, 1}, {1, 0}});
  CHECK(a * b == ExactMatrix::from_rows({{2, 1}, {4, 3}}));
  CHECK(a.transpose() == ExactMatrix::from_rows({{1, 3}, {2, 4}}));
  CHECK((a - a).is_zero());
}

TEST_CASE("rank and kernel") {
  ExactMatrix m = ExactMatrix::from_rows({{1, 2, 3}, {2, 4, 6}});
  CHECK(m.rank() == 1);
  ExactMatrix k = m.kernel_basis();
  CHECK(k.cols() == 2);
  CHECK((m * k).is_zero());

  ExactMatrix zero22(2, 2);
  CHECK(zero22.kernel_basis().cols() == 2);
  CHECK(ExactMatrix::identity(3).kernel_basis().cols() == 0);
}

TEST_CASE("minimal polynomial of the identity") {
  GradedPoly mp = minimal_polynomial(ExactMatrix::identity(3));
  CHECK(mp == from_roots({Rational(1)}));
}

TEST_CASE("minimal polynomial with distinct eigenvalues") {
  GradedPoly mp = minimal_polynomial(ExactMatrix::diagonal({Rational(4), Rational(-2)}));
  CHECK(mp == from_roots({Rational(4), Rational(-2)}));
}

TEST_CASE("minimal polynomial of diag(16,-8,4)") {
  GradedPoly mp =
      minimal_polynomial(ExactMatrix::diagonal({Rational(16), Rational(-8), Rational(4)}));
  CHECK(mp == from_roots({Rational(16), Rational(-8), Rational(4)}));
}

TEST_CASE("minimal polynomial ignores multiplicity in the diagonalizable case") {
  GradedPoly mp = minimal_polynomial(
      ExactMatrix::diagonal({Rational(5), Rational(5), Rational(5)}));
  CHECK(mp == from_roots({Rational(5)}));
}

TEST_CASE("minimal polynomial sees nilpotent structure") {
  ExactMatrix j(3, 3);  // single nilpotent Jordan block
  j.at(0, 1) = 1;
  j.at(1, 2) = 1;
  GradedPoly mp = minimal_polynomial(j);
  CHECK(mp == from_roots({Rational(0), Rational(0), Rational(0)}));
}

TEST_CASE("minimal polynomial annihilates the matrix") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int trial = 0; trial < 20; ++trial) {
    ExactMatrix m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = d(rng);
    GradedPoly mp = minimal_polynomial(m);
    CHECK(eval_poly_at_matrix(mp, m).is_zero());
    // monic
    int deg = mp.total_degree();
    CHECK(mp.coefficient({deg}) == Rational(1));
  }
}

TEST_CASE("non-square input is rejected") {
  CHECK_THROWS_AS(minimal_polynomial(ExactMatrix(2, 3)), fano::error);
}

TEST_CASE("zero-dimensional blocks compose") {
  ExactMatrix e(0, 3), f(3, 0);
  CHECK((e * f).rows() == 0);
  CHECK((f * e).cols() == 3);
  CHECK((f * e).is_zero());
}
