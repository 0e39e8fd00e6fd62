#include <algorithm>
#include <memory>
#include <random>

#include "doctest.h"
#include "fano/nc_poly.hpp"

using fano::Alphabet;
using fano::AlphabetPtr;
using fano::NCPoly;
using fano::Rational;
using fano::RewriteSystem;

namespace {

AlphabetPtr qqt() {
  static const AlphabetPtr a =
      std::make_shared<Alphabet>(std::vector<std::string>{"q", "qt"},
                                 std::vector<std::pair<std::string, std::string>>{{"q", "qt"}});
  return a;
}

// q^2 = q, (qt)^2 = qt, q*qt = 0
RewriteSystem projector_rules() {
  auto a = qqt();
  return RewriteSystem::make(a, {
      {{"q", "q"}, NCPoly::symbol(a, "q")},
      {{"qt", "qt"}, NCPoly::symbol(a, "qt")},
      {{"q", "qt"}, NCPoly(a)},
  });
}

NCPoly random_nc(const AlphabetPtr& a, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-3, 3), len(0, 3), sym(0, 1);
  NCPoly p(a);
  for (int k = 0; k < 3; ++k) {
    fano::Word w;
    int n = len(rng);
    for (int i = 0; i < n; ++i) w.push_back(sym(rng));
    p.add_term(w, coef(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("q qt collapses to zero") {
  auto a = qqt();
  NCPoly q = NCPoly::symbol(a, "q"), qt = NCPoly::symbol(a, "qt");
  CHECK(nc_normalize(q * qt, projector_rules()).is_zero());
}

TEST_CASE("idempotent rule") {
  auto a = qqt();
  NCPoly q = NCPoly::symbol(a, "q");
  auto rules = RewriteSystem::make(a, {{{"q", "q"}, q}});
  CHECK(nc_normalize(q * q, rules) == q);
}

TEST_CASE("projector combination is idempotent under the three relations") {
  // (qt - 1/2 qt q)^2 = qt - 1/2 qt q; the cross terms carry q*qt inside.
  auto a = qqt();
  NCPoly q = NCPoly::symbol(a, "q"), qt = NCPoly::symbol(a, "qt");
  NCPoly e = qt - (qt * q).scaled(Rational(1, 2));

  // oracle: direct 4-term expansion reduced by hand-rolled word collapsing
  // (independent of the rewrite engine): any word containing q,qt adjacent
  // dies; runs of equal symbols collapse.
  auto collapse = [&](const NCPoly& p) {
    NCPoly out(a);
    for (const auto& [w, c] : p.terms()) {
      fano::Word r;
      bool dead = false;
      for (int s : w) {
        if (!r.empty() && r.back() == s) continue;  // run collapses
        if (!r.empty() && a->name(r.back()) == "q" && a->name(s) == "qt") {
          dead = true;
          break;
        }
        r.push_back(s);
      }
      if (!dead) out.add_term(r, c);
    }
    return out;
  };
  NCPoly expect = collapse(e * e);
  CHECK(expect == e);  // frozen oracle value
  CHECK(nc_normalize(e * e, projector_rules()) == e);
}

TEST_CASE("involution is an anti-automorphism") {
  auto a = qqt();
  std::mt19937_64 rng(7);
  for (int i = 0; i < 60; ++i) {
    NCPoly p = random_nc(a, rng), q = random_nc(a, rng);
    CHECK((p * q).transpose() == q.transpose() * p.transpose());
    CHECK(p.transpose().transpose() == p);
  }
}

TEST_CASE("ring laws for noncommutative polynomials") {
  auto a = qqt();
  std::mt19937_64 rng(11);
  for (int i = 0; i < 40; ++i) {
    NCPoly p = random_nc(a, rng), q = random_nc(a, rng), r = random_nc(a, rng);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p + q) * r == p * r + q * r);
  }
}

TEST_CASE("normalization is idempotent and order-independent here") {
  auto a = qqt();
  std::mt19937_64 rng(13);
  auto rules = projector_rules();
  // all 6 orders of the three relations give the same normal form
  std::vector<std::vector<int>> orders = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                          {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  for (int i = 0; i < 30; ++i) {
    NCPoly p = random_nc(a, rng);
    NCPoly nf = nc_normalize(p, rules);
    CHECK(nc_normalize(nf, rules) == nf);
    for (const auto& ord : orders) {
      std::vector<fano::RewriteRule> permuted;
      for (int k : ord) permuted.push_back(rules.rules()[static_cast<std::size_t>(k)]);
      RewriteSystem sys(a, permuted);
      CHECK(nc_normalize(p, sys) == nf);
    }
  }
}

TEST_CASE("degree-increasing rules are rejected") {
  auto a = qqt();
  NCPoly q = NCPoly::symbol(a, "q");
  CHECK_THROWS_AS(RewriteSystem::make(a, {{{"q"}, q * q}}), fano::error);
}

TEST_CASE("cyclic rules trip the pass budget and name the term") {
  auto a = std::make_shared<Alphabet>(std::vector<std::string>{"u", "v"});
  NCPoly u = NCPoly::symbol(a, "u"), v = NCPoly::symbol(a, "v");
  auto rules = RewriteSystem::make(a, {{{"u", "v"}, v * u}, {{"v", "u"}, u * v}}, 50);
  try {
    nc_normalize(u * v, rules);
    FAIL("expected rewrite_limit_error");
  } catch (const fano::rewrite_limit_error& e) {
    CHECK(e.offending_term.find("u") != std::string::npos);
  }
}
