#include "fano/motivic.hpp"

#include <algorithm>
#include <cmath>

namespace fano::motivic {

AlphabetPtr motive_alphabet() {
  static const AlphabetPtr a = std::make_shared<Alphabet>(
      std::vector<std::string>{"q", "qt", "p", "f", "r", "It", "G"},
      std::vector<std::pair<std::string, std::string>>{{"q", "qt"}});
  return a;
}

MotiveAlgebraElem transpose(const MotiveAlgebraElem& e) {
  if (std::holds_alternative<NCPoly>(e)) return std::get<NCPoly>(e).transpose();
  return std::get<ExactMatrix>(e).transpose();
}

LiftResult beilinson_lift(const ExactMatrix& p) {
  if (!p.is_square()) throw error("lift of a non-square matrix");
  const std::size_t n = p.rows();
  ExactMatrix id = ExactMatrix::identity(n);
  ExactMatrix f = p * p - p;

  LiftResult out;
  if (!f.is_zero()) {
    ExactMatrix power = f;
    int index = 1;
    while (!power.is_zero()) {
      if (index > static_cast<int>(n)) {
        // a nonzero column of the stabilized power witnesses the failure
        std::string witness = "(p^2-p)^" + std::to_string(n) + " != 0";
        for (std::size_t j = 0; j < n; ++j)
          for (std::size_t i = 0; i < n; ++i)
            if (!power.at(i, j).is_zero()) {
              witness += ", e_" + std::to_string(j) + " maps to a nonzero vector";
              i = n;
              j = n - 1;
            }
        throw non_nilpotent_defect(witness);
      }
      power = power * f;
      ++index;
    }
    out.nilpotency_index = index;
  }

  ExactMatrix q = p;
  while (true) {
    ExactMatrix defect = q * q - q;
    if (defect.is_zero()) break;
    q = q + (id - q.scaled(2)) * defect;
    ++out.iterations;
  }
  int bound = out.nilpotency_index <= 1
                  ? 1
                  : static_cast<int>(std::ceil(std::log2(out.nilpotency_index))) + 1;
  if (out.iterations > bound) throw error("lift exceeded its iteration bound");
  if (!(q * p == p * q)) throw error("lift does not commute with its input");
  out.q = q;
  return out;
}

PiTrReport verify_pi_tr_relations() {
  auto a = motive_alphabet();
  NCPoly q = NCPoly::symbol(a, "q");
  NCPoly qt = NCPoly::symbol(a, "qt");
  NCPoly zero(a);
  RewriteSystem rules = RewriteSystem::make(
      a, {{{"q", "q"}, q}, {{"qt", "qt"}, qt}, {{"q", "qt"}, zero}});

  NCPoly pi2 = qt - (qt * q).scaled(Rational(1, 2));
  NCPoly pi6 = q - (qt * q).scaled(Rational(1, 2));

  PiTrReport rep;
  auto record = [&](const std::string& name, const NCPoly& value, const NCPoly& expect) {
    NCPoly nf = nc_normalize(value, rules);
    rep.steps.push_back({name, nf.str(), nf == expect});
  };
  record("pi2 is idempotent", pi2 * pi2, nc_normalize(pi2, rules));
  record("pi6 is idempotent", pi6 * pi6, nc_normalize(pi6, rules));
  record("pi2 pi6 = 0", pi2 * pi6, zero);
  record("pi6 pi2 = 0", pi6 * pi2, zero);
  // the involution exchanges the two projectors before any rewriting
  rep.steps.push_back({"tr(pi2) = pi6", pi2.transpose().str(), pi2.transpose() == pi6});
  rep.all_ok = std::all_of(rep.steps.begin(), rep.steps.end(),
                           [](const RelationStep& s) { return s.ok; });
  return rep;
}

CKDecomposition assemble_ck(const corr::ChowModel& model) {
  const std::size_t dim0 = model.ch0_dim();
  const std::size_t hom0 = model.ch0hom_dim();
  const std::size_t m = static_cast<std::size_t>(model.ranks().a);

  // r kills the distinguished line and fixes the homologically trivial part
  ExactMatrix r(dim0, dim0);
  for (std::size_t i = 0; i < hom0; ++i) r.at(1 + i, 1 + i) = 1;

  // pullback of -1/6 r It G r: on the trivial part, g^2 I_* = N_0
  ExactMatrix n0_full(dim0, dim0);
  n0_full.set_block(1, 1, model.g_shift_10() * model.g_shift_21() * model.i_push());
  ExactMatrix p = (r * n0_full * r).scaled(Rational(-1, 6));

  CKDecomposition ck;
  ck.p_ch0 = p;
  LiftResult lift = beilinson_lift(p);
  ck.q_ch0 = lift.q;
  ck.lift_iterations = lift.iterations;

  // degree projector onto Q[o]
  ExactMatrix pi0(dim0, dim0);
  pi0.at(0, 0) = 1;
  ExactMatrix pi2 = ck.q_ch0;
  ExactMatrix pi4 = ExactMatrix::identity(dim0) - pi0 - pi2;
  ck.on_ch0 = {pi0, pi2, pi4, ExactMatrix(dim0, dim0), ExactMatrix(dim0, dim0)};

  // on CH2hom the middle distribution follows the transposed projector
  const std::size_t dim2 = model.ch2hom_dim();
  ExactMatrix pi2_ch2 = model.n2().scaled(Rational(-1, 6));  // projector onto A
  ExactMatrix pi4_ch2 = ExactMatrix::identity(dim2) - pi2_ch2;  // onto B
  ck.on_ch2hom = {ExactMatrix(dim2, dim2), pi2_ch2, pi4_ch2, ExactMatrix(dim2, dim2),
                  ExactMatrix(dim2, dim2)};

  // structural guarantees on the CH0 block
  ExactMatrix sum(dim0, dim0);
  for (const auto& pi : ck.on_ch0) sum += pi;
  if (!(sum == ExactMatrix::identity(dim0)))
    throw error("projector set does not sum to the identity");
  for (std::size_t i = 0; i < ck.on_ch0.size(); ++i) {
    const ExactMatrix& a = ck.on_ch0[i];
    if (!(a * a == a)) throw error("projector is not idempotent");
    for (std::size_t j = 0; j < ck.on_ch0.size(); ++j)
      if (i != j && !(a * ck.on_ch0[j]).is_zero())
        throw error("projectors are not orthogonal");
  }
  // images: pi0 -> [o] line, pi2 -> V_0^{-8}, pi4 -> V_0^4
  ExactMatrix v08(dim0, dim0), v04(dim0, dim0);
  for (std::size_t i = 0; i < m; ++i) v08.at(1 + i, 1 + i) = 1;
  for (std::size_t i = 1 + m; i < dim0; ++i) v04.at(i, i) = 1;
  if (!(pi2 == v08)) throw error("middle projector image is not V_0^{-8}");
  if (!(pi4 == v04)) throw error("bottom projector image is not V_0^4");
  return ck;
}

bool murre_D_check(const corr::ChowModel& model) {
  CKDecomposition ck = assemble_ck(model);
  bool pi4_kills_ch2hom = ck.on_ch2hom[2].is_zero();
  bool b_trivial = model.ranks().b == 0;
  if (pi4_kills_ch2hom != b_trivial)
    throw error("middle-projector kernel disagrees with the V_2^4 block");
  return pi4_kills_ch2hom;
}

}  // namespace fano::motivic
