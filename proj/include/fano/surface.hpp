#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fano/error.hpp"

namespace fano::surface {

// Class in Pic(S) for S the blow-up of the plane at six points, written in
// the basis (L; E1..E6) with intersection form diag(1, -1^6):
//   <(l;e),(l';e')> = l*l' - sum e_i e_i'.
struct SurfaceClass {
  std::array<std::int64_t, 7> v{};

  friend SurfaceClass operator+(SurfaceClass a, const SurfaceClass& b) {
    for (std::size_t i = 0; i < 7; ++i) a.v[i] += b.v[i];
    return a;
  }
  friend SurfaceClass operator-(SurfaceClass a, const SurfaceClass& b) {
    for (std::size_t i = 0; i < 7; ++i) a.v[i] -= b.v[i];
    return a;
  }
  SurfaceClass scaled(std::int64_t k) const {
    SurfaceClass r = *this;
    for (auto& x : r.v) x *= k;
    return r;
  }
  friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;
  std::string str() const;
};

std::int64_t inner(const SurfaceClass& a, const SurfaceClass& b);

// H = (3; 1,...,1), the hyperplane section of the cubic surface.
SurfaceClass hyperplane_class();

// The 27 lines: 6 exceptional curves, 15 strict transforms of lines through
// two of the blown-up points, 6 strict transforms of conics through five.
struct LineLabel {
  enum class Kind { exc, join, conic };
  Kind kind = Kind::exc;
  int i = 1;  // 1-based
  int j = 0;  // join only, i < j

  static LineLabel exc(int i);
  static LineLabel join(int i, int j);
  static LineLabel conic(int i);

  friend auto operator<=>(const LineLabel&, const LineLabel&) = default;
  std::string str() const;  // "E1", "L12", "C3"
};

SurfaceClass class_of(const LineLabel& l);

// Canonical line order: E1..E6, L12..L56 (lexicographic), C1..C6.
const std::vector<LineLabel>& all_lines();
int line_index(const LineLabel& l);
std::optional<LineLabel> line_by_name(const std::string& name);

std::vector<std::pair<LineLabel, SurfaceClass>> enumerate_lines();

struct Triangle {
  std::array<LineLabel, 3> lines;  // sorted by canonical index
  friend bool operator==(const Triangle&, const Triangle&) = default;
  std::string str() const;
};

// All unordered line triples with class sum H and pairwise product 1.
const std::vector<Triangle>& all_triangles();
std::vector<Triangle> enumerate_triangles();

// Lines meeting both x and y. Distinct lines on the surface meet with
// multiplicity 0 or 1; anything else trips an internal check.
std::vector<LineLabel> secant_lines(const LineLabel& x, const LineLabel& y);

// Integer combination of triangles whose formal line-symbol sum equals
// 2x + 2y + (sum of secants of the pair).
struct PairDecomposition {
  LineLabel x, y;
  std::vector<LineLabel> secants;
  std::vector<std::pair<Triangle, std::int64_t>> entries;
  bool from_builtin_certificate = false;
  // Formal multiset over the 27 line symbols realized by the combination.
  std::array<std::int64_t, 27> symbol_sum() const;
  SurfaceClass lattice_sum() const;
};

// The classic 7-triangle signed combination for the pair (E1, E2):
// five triangles with coefficient +1 and two with coefficient -1.
const std::vector<std::pair<Triangle, std::int64_t>>& builtin_e1_e2_certificate();

// Requires <x,y> = 0. Checks the built-in certificate first, then falls back
// to a bounded depth-first search with |coefficient| <= bound.
PairDecomposition verify_pair_decomposition(const LineLabel& x, const LineLabel& y);

// The search itself, exposed for direct testing: solves
// sum_T lambda_T * chi(T) = target over the 45 triangles, |lambda_T| <= bound.
std::optional<std::vector<std::pair<int, std::int64_t>>> search_triangle_combination(
    const std::array<std::int64_t, 27>& target, std::int64_t bound = 2);

// Nine pairwise line-disjoint triangles covering all 27 lines; first
// exact-cover solution under the canonical ordering.
std::vector<Triangle> find_triangle_partition();

}  // namespace fano::surface
