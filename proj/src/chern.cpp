#include "fano/chern.hpp"

#include "fano/taut.hpp"

namespace fano::chern {

using taut::TautClassF;

VarTablePtr chern_table() {
  static const VarTablePtr t = std::make_shared<VarTable>(
      VarTable{{"a", 0}, {"gt1", 1}, {"gt2", 1}, {"h", 1}});
  return t;
}

namespace {

GradedPoly v(const char* name) { return GradedPoly::variable(chern_table(), name); }
GradedPoly k(const Rational& c) { return GradedPoly::constant(chern_table(), c); }

// exponents in table order (a, gt1, gt2, h)
GradedPoly mono(int ea, int e1, int e2, int eh, const Rational& c) {
  return GradedPoly::monomial(chern_table(), {ea, e1, e2, eh}, c);
}

}  // namespace

ChernInput chern_input() {
  GradedPoly a = v("a"), gt1 = v("gt1"), gt2 = v("gt2"), h = v("h");
  ChernInput in{
      a * gt1 + h,
      gt1 + gt2 - h,
      k(6) * h * h + gt1 * gt1 + gt1 * gt2 + gt2 * gt2 - k(3) * h * (gt1 + gt2),
  };
  return in;
}

GradedPoly expand_c2_F() {
  ChernInput in = chern_input();
  return in.c1_nplus * in.c1_nplus - in.c1_nplus * in.c1_n + in.c2_n;
}

GradedPoly claimed_c2_F() {
  // (a^2-a+1) gt1^2 + (1-a) gt1 gt2 + gt2^2 + (3a-4) h gt1 - 4 h gt2 + 8 h^2
  GradedPoly p(chern_table());
  p += mono(2, 2, 0, 0, 1) + mono(1, 2, 0, 0, -1) + mono(0, 2, 0, 0, 1);
  p += mono(0, 1, 1, 0, 1) + mono(1, 1, 1, 0, -1);
  p += mono(0, 0, 2, 0, 1);
  p += mono(1, 1, 0, 1, 3) + mono(0, 1, 0, 1, -4);
  p += mono(0, 0, 1, 1, -4);
  p += mono(0, 0, 0, 2, 8);
  return p;
}

DeriveAResult derive_a() {
  using taut::gamma_h2_pull;
  using taut::gamma_h_pull;
  using taut::I_star;
  TautClassF g = TautClassF::g();
  TautClassF g2 = TautClassF::basis(TautClassF::bG2);
  TautClassF g3 = TautClassF::basis(TautClassF::bG3);

  auto pure = [](const TautClassF& t, TautClassF::Basis slot) {
    if (!(t == TautClassF::basis(slot, t.coef(slot))))
      throw error("cylinder table entry is not a pure multiple");
    return t.coef(slot);
  };
  // scalars of: I_*(g^2) on [F], I_*(g^3) on g, Gh^*(g) on [F],
  // Gh^*(g^2) on g, Gh2^*(g) on g
  DeriveAResult r{GradedPoly(chern_table()), 0,
                  {pure(I_star(g2), TautClassF::bF), pure(I_star(g3), TautClassF::bG),
                   pure(gamma_h_pull(g), TautClassF::bF),
                   pure(gamma_h_pull(g2), TautClassF::bG),
                   pure(gamma_h2_pull(g), TautClassF::bG)}};

  // pullback of g through the key identity, coefficient by coefficient:
  //   4 g + (1-a) g I_*(g^2) + I_*(g^3) + (3a-4) g Gh^*(g) - 4 Gh^*(g^2)
  //   + 8 Gh2^*(g)
  GradedPoly a = v("a"), one = k(1);
  r.coefficient = k(4) + (one - a) * k(r.table_entries[0]) + k(r.table_entries[1]) +
                  (k(3) * a - k(4)) * k(r.table_entries[2]) -
                  k(4) * k(r.table_entries[3]) + k(8) * k(r.table_entries[4]);
  // expect a polynomial c0 + c1*a; solve c0 + c1 a = 7
  Rational c0 = r.coefficient.coefficient({0, 0, 0, 0});
  Rational c1 = r.coefficient.coefficient({1, 0, 0, 0});
  if (c1.is_zero()) throw error("pullback coefficient does not depend on a");
  r.a = (Rational(7) - c0) / c1;
  return r;
}

GradedPoly incidence_polynomial(const Rational& a) {
  GradedPoly expansion = expand_c2_F().substitute("a", a);
  auto t = corr::corr_poly_table();
  GradedPoly out(t);
  // quadratic part in gt1, gt2 maps onto g1, g2
  out += GradedPoly::monomial(t, {2, 0, 0, 0}, expansion.coefficient({0, 2, 0, 0}));
  out += GradedPoly::monomial(t, {1, 1, 0, 0}, expansion.coefficient({0, 1, 1, 0}));
  out += GradedPoly::monomial(t, {0, 2, 0, 0}, expansion.coefficient({0, 0, 2, 0}));
  return out;
}

corr::CorrExpr key_identity(const Rational& a) {
  using corr::Atom;
  using corr::CorrExpr;
  GradedPoly expansion = expand_c2_F().substitute("a", a);
  auto t = corr::corr_poly_table();
  GradedPoly gh_factor(t);
  gh_factor += GradedPoly::monomial(t, {1, 0, 0, 0}, expansion.coefficient({0, 1, 0, 1}));
  gh_factor += GradedPoly::monomial(t, {0, 1, 0, 0}, expansion.coefficient({0, 0, 1, 1}));
  Rational h2_coef = expansion.coefficient({0, 0, 0, 2});
  return CorrExpr::sum({
      CorrExpr::scale(4, CorrExpr::atom(Atom::diagonal)),
      CorrExpr::poly_factor(incidence_polynomial(a), CorrExpr::atom(Atom::incidence)),
      CorrExpr::poly_factor(gh_factor, CorrExpr::atom(Atom::gamma_h)),
      CorrExpr::scale(h2_coef, CorrExpr::atom(Atom::gamma_h2)),
  });
}

KeyIdentityReport verify_key_identity(const corr::CharacterTable& table) {
  KeyIdentityReport rep;
  rep.expansion_matches = expand_c2_F() == claimed_c2_F();
  rep.delta_coefficient = table.phi_omega2;
  rep.delta_is_4 = rep.delta_coefficient == Rational(4);
  rep.gamma_h2_coefficient = expand_c2_F().coefficient({0, 0, 0, 2});
  rep.gamma_h2_is_8 = rep.gamma_h2_coefficient == Rational(8);
  return rep;
}

}  // namespace fano::chern
