#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "fano/corr.hpp"
#include "fano/exact_matrix.hpp"
#include "fano/nc_poly.hpp"

namespace fano::motivic {

// Symbols of the projector algebra: the idempotent q and its transpose, the
// pre-idempotent p, the defect f = p^2 - p, the motive projector r, the
// transposed incidence and the middle linear section. Only q, qt carry a
// nontrivial transpose pairing.
AlphabetPtr motive_alphabet();

// Element of the projector algebra in either representation.
using MotiveAlgebraElem = std::variant<NCPoly, ExactMatrix>;
MotiveAlgebraElem transpose(const MotiveAlgebraElem& e);

struct non_nilpotent_defect : error {
  explicit non_nilpotent_defect(const std::string& witness)
      : error("defect p^2 - p is not nilpotent; witness: " + witness) {}
};

struct LiftResult {
  ExactMatrix q;
  int iterations = 0;
  int nilpotency_index = 1;  // smallest k with (p^2 - p)^k = 0
};

// Upgrades p with nilpotent defect to an exact idempotent by the iteration
// p <- p + (1 - 2p)(p^2 - p). Converges within ceil(log2(index)) + 1 steps;
// the result commutes with p and differs from it inside the defect ideal.
LiftResult beilinson_lift(const ExactMatrix& p);

struct RelationStep {
  std::string name;
  std::string normal_form;
  bool ok = false;
};

struct PiTrReport {
  std::vector<RelationStep> steps;
  bool all_ok = false;
};

// In the free algebra on {q, qt} modulo {q^2 = q, qt^2 = qt, q qt = 0},
// proves that pi2 = qt(1 - q/2) and pi6 = (1 - qt/2) q are orthogonal
// idempotents exchanged by the transpose. No matrix model is consulted.
PiTrReport verify_pi_tr_relations();

// Projector set {pi0, pi2, pi4, pi6, pi8} realized on a block model: on the
// full CH0 block they are orthogonal idempotents summing to the identity
// with images Q[o], V_0^{-8} and V_0^4; on CH2hom, pi2 projects onto A
// along B and pi4 onto B.
struct CKDecomposition {
  std::array<ExactMatrix, 5> on_ch0;     // indices 0..4 = pi0, pi2, pi4, pi6, pi8
  std::array<ExactMatrix, 5> on_ch2hom;
  ExactMatrix p_ch0;   // -1/6 r It G r, assembled from the model primitives
  ExactMatrix q_ch0;   // its Beilinson lift
  int lift_iterations = 0;
};

CKDecomposition assemble_ck(const corr::ChowModel& model);

// Whether the middle projector kills all of CH2hom, which by construction
// happens exactly when the V_2^4 block is trivial.
bool murre_D_check(const corr::ChowModel& model);

}  // namespace fano::motivic
