#pragma once

#include <array>

#include "fano/corr.hpp"
#include "fano/graded_poly.hpp"

namespace fano::chern {

// Variable table of the bundle computation: the integer parameter a
// (weight 0) and the three weight-1 classes gt1, gt2, h.
VarTablePtr chern_table();

// First and second Chern classes feeding the excess-bundle expansion.
struct ChernInput {
  GradedPoly c1_nplus;  // a*gt1 + h
  GradedPoly c1_n;      // gt1 + gt2 - h
  GradedPoly c2_n;      // 6h^2 + gt1^2 + gt1*gt2 + gt2^2 - 3h(gt1 + gt2)
};

ChernInput chern_input();

// c1(N+)^2 - c1(N+) c1(N) + c2(N), fully expanded and symbolic in a.
GradedPoly expand_c2_F();

// The same polynomial assembled from its displayed coefficient list
// (a^2-a+1, 1-a, 1, 3a-4, -4, 8); equality with expand_c2_F is the check.
GradedPoly claimed_c2_F();

struct DeriveAResult {
  GradedPoly coefficient;                 // of g in the pullback, = 1 - 3a
  Rational a;                             // solved against the known value 7
  std::array<Rational, 5> table_entries;  // 21, 36, 6, 21, 6 from the cylinder tables
};

// Evaluates the pullback of g through the key identity using the cylinder
// tables, simplifies to (1-3a) g, and solves (1-3a) = 7.
DeriveAResult derive_a();

// The right-hand side of the key identity at a fixed parameter value:
// 4*D + ((a^2-a+1) g1^2 + (1-a) g1 g2 + g2^2)*I + ((3a-4) g1 - 4 g2)*Gh
// + 8*Gh2, with every coefficient read off from expand_c2_F.
corr::CorrExpr key_identity(const Rational& a);

// The quadratic incidence factor at a fixed parameter value, over the
// g1,g2,c1,c2 table.
GradedPoly incidence_polynomial(const Rational& a);

struct KeyIdentityReport {
  bool expansion_matches = false;   // expand_c2_F == claimed_c2_F, identically in a
  Rational delta_coefficient;      // 4, the character on the square of the form
  Rational gamma_h2_coefficient;   // 8
  bool delta_is_4 = false;
  bool gamma_h2_is_8 = false;
  bool all() const { return expansion_matches && delta_is_4 && gamma_h2_is_8; }
};

KeyIdentityReport verify_key_identity(const corr::CharacterTable& table = {});

}  // namespace fano::chern
