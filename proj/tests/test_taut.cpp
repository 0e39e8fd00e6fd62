#include <optional>
#include <vector>

#include "doctest.h"
#include "fano/taut.hpp"

using namespace fano::taut;
using fano::Rational;

namespace {
TautClassF g2() { return TautClassF::basis(TautClassF::bG2); }
TautClassF g3() { return TautClassF::basis(TautClassF::bG3); }
}  // namespace

TEST_CASE("degree-4 closures of the tautological ring") {
  CHECK(taut_mul(g2(), g2()) == TautClassF::o().scaled(108));
  CHECK(taut_mul(TautClassF::c(), TautClassF::c()) == TautClassF::o().scaled(27));
  CHECK(taut_mul(g2(), TautClassF::c()) == TautClassF::o().scaled(45));
  CHECK(taut_mul(TautClassF::g(), TautClassF::Cx()) == TautClassF::o().scaled(6));
  CHECK(taut_mul(TautClassF::g(), g3()) == TautClassF::o().scaled(108));
  CHECK(taut_mul(TautClassF::g(), TautClassF::basis(TautClassF::bGC)) ==
        TautClassF::o().scaled(45));
}

TEST_CASE("the unit acts as identity") {
  CHECK(taut_mul(TautClassF::unit(), TautClassF::c()) == TautClassF::c());
  CHECK(taut_mul(TautClassF::o(), TautClassF::unit()) == TautClassF::o());
}

TEST_CASE("products above the top degree vanish") {
  CHECK(taut_mul(g3(), g2()).is_zero());
  CHECK(taut_mul(g3(), g3()).is_zero());
  CHECK(taut_mul(TautClassF::c(), g3()).is_zero());
}

TEST_CASE("products outside the tables are rejected by name") {
  try {
    taut_mul(TautClassF::c(), TautClassF::Cx());
    FAIL("expected unspecified_product");
  } catch (const unspecified_product& e) {
    CHECK(std::string(e.what()).find("c*Cx") != std::string::npos);
  }
  CHECK_THROWS_AS(taut_mul(TautClassF::Cx(), TautClassF::Cx()), unspecified_product);
  CHECK_THROWS_AS(taut_mul(TautClassF::g(), TautClassF::o()), unspecified_product);
}

TEST_CASE("square of (1/3)(g^2 - c) is 5[o]") {
  TautClassF t = (g2() - TautClassF::c()).scaled(Rational(1, 3));
  CHECK(taut_mul(t, t) == TautClassF::o().scaled(5));
}

TEST_CASE("commutativity and associativity on tabulated triples") {
  std::vector<TautClassF> sample = {TautClassF::unit(), TautClassF::g(), g2(),
                                    TautClassF::c(), g2() - TautClassF::c()};
  auto try_mul = [](const TautClassF& u, const TautClassF& v) {
    try {
      return std::optional<TautClassF>(taut_mul(u, v));
    } catch (const unspecified_product&) {
      return std::optional<TautClassF>();
    }
  };
  for (const auto& a : sample)
    for (const auto& b : sample) {
      CHECK(taut_mul(a, b) == taut_mul(b, a));
      for (const auto& c : sample) {
        // associativity is promised only where every partial product is
        // tabulated; triples that wander out of the span are skipped
        auto ab = try_mul(a, b);
        std::optional<TautClassF> lhs = ab ? try_mul(*ab, c) : std::nullopt;
        auto bc = try_mul(b, c);
        std::optional<TautClassF> rhs = bc ? try_mul(a, *bc) : std::nullopt;
        if (lhs && rhs) CHECK(*lhs == *rhs);
      }
    }
}

TEST_CASE("second-type surface class and its intersections") {
  CHECK(sigma2_class() == TautClassF::basis(TautClassF::bG2, 5) - TautClassF::c().scaled(5));
  CHECK(taut_mul(sigma2_class(), g2()) == TautClassF::o().scaled(315));
  CHECK(taut_mul(sigma2_class(), TautClassF::c()) == TautClassF::o().scaled(90));
}

TEST_CASE("cylinder tables compose out of psi and phi") {
  TautClassF g = TautClassF::g();
  TautClassF o108 = TautClassF::o().scaled(108);  // g^4 resolved in the basis

  // psi
  CHECK(psi(g) == ClassX::unit().scaled(6));
  CHECK(psi(g2()) == ClassX::h().scaled(21));
  CHECK(psi(g3()) == ClassX::basis(ClassX::bH2, 36));
  CHECK(psi(o108) == ClassX::basis(ClassX::bH3, 36));
  CHECK(psi(TautClassF::o()) == ClassX::basis(ClassX::bH3, Rational(1, 3)));

  // I_* = phi . psi
  CHECK(I_star(g2()) == TautClassF::unit().scaled(21));
  CHECK(I_star(g3()) == TautClassF::g().scaled(36));
  CHECK(I_star(o108) == (g2() - TautClassF::c()).scaled(36));

  // Gamma_h pullbacks
  CHECK(gamma_h_pull(g) == TautClassF::unit().scaled(6));
  CHECK(gamma_h_pull(g2()) == TautClassF::g().scaled(21));
  CHECK(gamma_h_pull(g3()) == (g2() - TautClassF::c()).scaled(36));
  CHECK(gamma_h_pull(o108) == TautClassF::Cx().scaled(108));

  // Gamma_{h^2} pullbacks
  CHECK(gamma_h2_pull(g) == TautClassF::g().scaled(6));
  CHECK(gamma_h2_pull(g2()) == (g2() - TautClassF::c()).scaled(21));
  CHECK(gamma_h2_pull(g3()) == TautClassF::Cx().scaled(108));
  CHECK(gamma_h2_pull(o108).is_zero());
}

TEST_CASE("consistency of I_star on the distinguished cycle") {
  // I_*(108[o]) = 36(g^2 - c) = 108 * (1/3)(g^2 - c)
  TautClassF lhs = I_star(TautClassF::o().scaled(108));
  TautClassF rhs = (g2() - TautClassF::c()).scaled(Rational(1, 3)).scaled(108);
  CHECK(lhs == rhs);
}

TEST_CASE("psi and phi reject inputs outside their span") {
  CHECK_THROWS_AS(psi(TautClassF::c()), fano::error);
  CHECK_THROWS_AS(psi(TautClassF::Cx()), fano::error);
  CHECK_THROWS_AS(psi(TautClassF::unit()), fano::error);
  CHECK_THROWS_AS(phi(ClassX::unit()), fano::error);
  CHECK_THROWS_AS(phi(ClassX::curve_symbol("l")), fano::error);
}

TEST_CASE("class ring of the fourfold") {
  ClassX h = ClassX::h();
  CHECK(h.mul_h_power(3) == ClassX::point().scaled(3));  // h^4 = 3x
  CHECK(h.mul_h_power(4).is_zero());
  CHECK_THROWS_AS(ClassX::curve_symbol("l").mul_h(), fano::error);
}

TEST_CASE("formal zero cycles and the S-products") {
  FormalZeroCycle s12 = S_product(TriangleDecl::distinct("l1", "l2", "l3"));
  CHECK(s12 == FormalZeroCycle::o(6) + FormalZeroCycle::point("l3") -
                   FormalZeroCycle::point("l1") - FormalZeroCycle::point("l2"));
  CHECK(s12.degree() == Rational(5));

  FormalZeroCycle sq = S_product(TriangleDecl::first_type("l"));
  CHECK(sq == FormalZeroCycle::o(6) + FormalZeroCycle::phi_point("l") -
                  FormalZeroCycle::point("l", 2));
  CHECK(sq.degree() == Rational(5));

  FormalZeroCycle triple = S_product(TriangleDecl::triple("l"));
  CHECK(triple == FormalZeroCycle::o(6) - FormalZeroCycle::point("l"));
  CHECK(triple.degree() == Rational(5));

  CHECK_THROWS_AS(TriangleDecl::distinct("l", "l", "m"), fano::error);
}

TEST_CASE("phi pushforward on formal cycles") {
  FormalZeroCycle z = FormalZeroCycle::point("l") - FormalZeroCycle::o();
  FormalZeroCycle pushed = z.phi_push();
  CHECK(pushed == FormalZeroCycle::phi_point("l") - FormalZeroCycle::o());
  CHECK_THROWS_AS(pushed.phi_push(), fano::error);
}
