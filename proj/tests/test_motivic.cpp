#include <random>

#include "doctest.h"
#include "fano/motivic.hpp"

using namespace fano::motivic;
using fano::ExactMatrix;
using fano::GradedPoly;
using fano::NCPoly;
using fano::Rational;
using fano::corr::build_model;
using fano::corr::ChowModel;
using fano::corr::eigenprojectors;

namespace {

// Random matrix with 0/1 eigenvalues: upper triangular, so the defect
// p^2 - p is strictly upper triangular and nilpotent.
ExactMatrix random_preidempotent(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> diag(0, 1), upper(-2, 2);
  ExactMatrix p(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    p.at(i, i) = diag(rng);
    for (std::size_t j = i + 1; j < n; ++j) p.at(i, j) = upper(rng);
  }
  return p;
}

int defect_index(const ExactMatrix& p) {
  ExactMatrix f = p * p - p;
  if (f.is_zero()) return 1;
  ExactMatrix power = f;
  int k = 1;
  while (!power.is_zero()) {
    power = power * f;
    ++k;
  }
  return k;
}

int ceil_log2(int n) {
  int k = 0;
  while ((1 << k) < n) ++k;
  return k;
}

// q - p must lie in the ideal generated by the defect inside Q[p].
bool in_defect_ideal(const ExactMatrix& p, const ExactMatrix& q) {
  const std::size_t n = p.rows();
  ExactMatrix f = p * p - p;
  std::vector<ExactMatrix> gens;
  ExactMatrix pk = ExactMatrix::identity(n);
  for (std::size_t i = 0; i < 2 * n; ++i) {
    gens.push_back(f * pk);
    pk = pk * p;
  }
  ExactMatrix a(n * n, gens.size());
  for (std::size_t g = 0; g < gens.size(); ++g)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a.at(i * n + j, g) = gens[g].at(i, j);
  ExactMatrix d = q - p;
  std::vector<Rational> b(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) b[i * n + j] = d.at(i, j);
  return fano::solve_linear_system(a, b).has_value();
}

}  // namespace

TEST_CASE("lifting an idempotent is a no-op") {
  ExactMatrix p = ExactMatrix::from_rows({{1, 1}, {0, 0}});
  CHECK(p * p == p);
  LiftResult r = beilinson_lift(p);
  CHECK(r.q == p);
  CHECK(r.iterations == 0);
  CHECK(r.nilpotency_index == 1);
}

TEST_CASE("the lift correction squares the defect") {
  // With f = p^2 - p, the update p <- p + (1-2p) f has defect f^2 (4f - 3):
  // one step lands the defect in the square of the old ideal, which is what
  // drives the logarithmic convergence of the lift.
  auto t = std::make_shared<fano::VarTable>(fano::VarTable{{"p", 1}});
  GradedPoly p = GradedPoly::variable(t, "p");
  GradedPoly one = GradedPoly::constant(t, 1);
  GradedPoly f = p * p - p;
  GradedPoly next = p + (one - p.scaled(2)) * f;
  GradedPoly new_defect = next * next - next;
  CHECK(new_defect == f * f * (f.scaled(4) - one.scaled(3)));
}

TEST_CASE("lift of a randomized defective projector") {
  std::mt19937_64 rng(2024);
  int interesting = 0;
  for (int trial = 0; trial < 100; ++trial) {
    ExactMatrix p = random_preidempotent(6, rng);
    int index = defect_index(p);
    LiftResult r = beilinson_lift(p);
    CHECK((r.q * r.q) == r.q);
    CHECK(r.q * p == p * r.q);
    CHECK(r.nilpotency_index == index);
    CHECK(r.iterations <= (index <= 1 ? 1 : ceil_log2(index) + 1));
    CHECK(in_defect_ideal(p, r.q));
    if (index >= 4) ++interesting;
  }
  CHECK(interesting > 3);  // the sweep genuinely hits deep defects
}

TEST_CASE("non-nilpotent defects are rejected with a witness") {
  ExactMatrix p = ExactMatrix::diagonal({Rational(2), Rational(2)});
  CHECK_THROWS_AS(beilinson_lift(p), non_nilpotent_defect);
}

TEST_CASE("projector relations hold in the free algebra") {
  PiTrReport rep = verify_pi_tr_relations();
  CHECK(rep.all_ok);
  REQUIRE(rep.steps.size() == 5);
  CHECK(rep.steps[2].normal_form == "0");
  CHECK(rep.steps[3].normal_form == "0");
}

TEST_CASE("transpose dispatch over both representations") {
  auto a = motive_alphabet();
  NCPoly q = NCPoly::symbol(a, "q");
  MotiveAlgebraElem nc = q;
  CHECK(std::get<NCPoly>(transpose(nc)) == NCPoly::symbol(a, "qt"));
  MotiveAlgebraElem mat = ExactMatrix::from_rows({{1, 2}, {3, 4}});
  CHECK(std::get<ExactMatrix>(transpose(mat)) == ExactMatrix::from_rows({{1, 3}, {2, 4}}));
}

TEST_CASE("projector assembly on the block model") {
  ChowModel m = build_model({2, 1, 1, 1});
  CKDecomposition ck = assemble_ck(m);
  CHECK(ck.lift_iterations == 0);  // the model projector is already exact

  // the p-action is the identity on V_0^{-8} and zero on Q[o] and V_0^4
  const std::size_t dim0 = m.ch0_dim();
  ExactMatrix expect_p(dim0, dim0);
  for (int i = 0; i < m.ranks().a; ++i) expect_p.at(1 + static_cast<std::size_t>(i),
                                                    1 + static_cast<std::size_t>(i)) = 1;
  CHECK(ck.p_ch0 == expect_p);

  // five projectors, orthogonal, summing to the identity
  ExactMatrix sum(dim0, dim0);
  for (const auto& pi : ck.on_ch0) sum += pi;
  CHECK(sum == ExactMatrix::identity(dim0));
  CHECK(ck.on_ch0[3].is_zero());
  CHECK(ck.on_ch0[4].is_zero());

  // grade-by-grade agreement with the eigenprojectors
  auto e0 = eigenprojectors(m, 0);
  CHECK(ck.on_ch0[0] == e0[0]);
  CHECK(ck.on_ch0[1] == e0[1]);
  CHECK(ck.on_ch0[2] == e0[2]);
  auto e2 = eigenprojectors(m, 2);
  CHECK(ck.on_ch2hom[1] == e2[0]);
  CHECK(ck.on_ch2hom[2] == e2[1]);
}

TEST_CASE("the middle-projector kernel detects the V_2^4 block") {
  CHECK(murre_D_check(build_model({2, 0, 1, 1})));
  CHECK_FALSE(murre_D_check(build_model({2, 2, 1, 1})));
  // witness: pi4 restricted to CH2hom is nonzero exactly on B
  ChowModel bad = build_model({1, 2, 0, 0});
  CKDecomposition ck = assemble_ck(bad);
  CHECK_FALSE(ck.on_ch2hom[2].is_zero());
  CHECK(ck.on_ch2hom[2].rank() == 2);
}
