#include "fano/surface.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <sstream>

#include "fano/exact_cover.hpp"

namespace fano::surface {

std::string SurfaceClass::str() const {
  std::ostringstream os;
  os << "(" << v[0] << ";";
  for (std::size_t i = 1; i < 7; ++i) os << (i > 1 ? "," : "") << v[i];
  os << ")";
  return os.str();
}

std::int64_t inner(const SurfaceClass& a, const SurfaceClass& b) {
  std::int64_t s = a.v[0] * b.v[0];
  for (std::size_t i = 1; i < 7; ++i) s -= a.v[i] * b.v[i];
  return s;
}

SurfaceClass hyperplane_class() {
  return SurfaceClass{{3, 1, 1, 1, 1, 1, 1}};
}

LineLabel LineLabel::exc(int i) {
  if (i < 1 || i > 6) throw error("exceptional index out of range");
  return {Kind::exc, i, 0};
}

LineLabel LineLabel::join(int i, int j) {
  if (i < 1 || j < 1 || i > 6 || j > 6 || i == j) throw error("join indices out of range");
  if (i > j) std::swap(i, j);
  return {Kind::join, i, j};
}

LineLabel LineLabel::conic(int i) {
  if (i < 1 || i > 6) throw error("conic index out of range");
  return {Kind::conic, i, 0};
}

std::string LineLabel::str() const {
  switch (kind) {
    case Kind::exc: return "E" + std::to_string(i);
    case Kind::join: return "L" + std::to_string(i) + std::to_string(j);
    case Kind::conic: return "C" + std::to_string(i);
  }
  return "?";
}

// E_i is the exceptional curve itself, so its E-coordinate is -1; joins and
// conics are strict transforms d*L - sum m_k E_k recorded as (d; m_1..m_6).
SurfaceClass class_of(const LineLabel& l) {
  SurfaceClass c{};
  switch (l.kind) {
    case LineLabel::Kind::exc:
      c.v[0] = 0;
      c.v[static_cast<std::size_t>(l.i)] = -1;
      break;
    case LineLabel::Kind::join:
      c.v[0] = 1;
      c.v[static_cast<std::size_t>(l.i)] = 1;
      c.v[static_cast<std::size_t>(l.j)] = 1;
      break;
    case LineLabel::Kind::conic:
      c.v[0] = 2;
      for (std::size_t k = 1; k < 7; ++k) c.v[k] = 1;
      c.v[static_cast<std::size_t>(l.i)] = 0;
      break;
  }
  return c;
}

const std::vector<LineLabel>& all_lines() {
  static const std::vector<LineLabel> lines = [] {
    std::vector<LineLabel> ls;
    for (int i = 1; i <= 6; ++i) ls.push_back(LineLabel::exc(i));
    for (int i = 1; i <= 6; ++i)
      for (int j = i + 1; j <= 6; ++j) ls.push_back(LineLabel::join(i, j));
    for (int i = 1; i <= 6; ++i) ls.push_back(LineLabel::conic(i));
    return ls;
  }();
  return lines;
}

int line_index(const LineLabel& l) {
  const auto& ls = all_lines();
  auto it = std::find(ls.begin(), ls.end(), l);
  if (it == ls.end()) throw error("unknown line " + l.str());
  return static_cast<int>(it - ls.begin());
}

std::optional<LineLabel> line_by_name(const std::string& name) {
  for (const auto& l : all_lines())
    if (l.str() == name) return l;
  return std::nullopt;
}

std::vector<std::pair<LineLabel, SurfaceClass>> enumerate_lines() {
  std::vector<std::pair<LineLabel, SurfaceClass>> out;
  for (const auto& l : all_lines()) out.emplace_back(l, class_of(l));
  return out;
}

std::string Triangle::str() const {
  return "(" + lines[0].str() + "," + lines[1].str() + "," + lines[2].str() + ")";
}

std::vector<Triangle> enumerate_triangles() {
  const auto& ls = all_lines();
  std::vector<SurfaceClass> cls;
  for (const auto& l : ls) cls.push_back(class_of(l));
  const SurfaceClass h = hyperplane_class();
  std::vector<Triangle> out;
  for (std::size_t a = 0; a < ls.size(); ++a)
    for (std::size_t b = a + 1; b < ls.size(); ++b) {
      if (inner(cls[a], cls[b]) != 1) continue;
      for (std::size_t c = b + 1; c < ls.size(); ++c) {
        if (inner(cls[a], cls[c]) != 1 || inner(cls[b], cls[c]) != 1) continue;
        if (cls[a] + cls[b] + cls[c] == h) out.push_back(Triangle{{ls[a], ls[b], ls[c]}});
      }
    }
  return out;
}

const std::vector<Triangle>& all_triangles() {
  static const std::vector<Triangle> tris = enumerate_triangles();
  return tris;
}

std::vector<LineLabel> secant_lines(const LineLabel& x, const LineLabel& y) {
  if (x == y) throw error("secant lines of a repeated line");
  const SurfaceClass cx = class_of(x), cy = class_of(y);
  std::vector<LineLabel> out;
  for (const auto& z : all_lines()) {
    if (z == x || z == y) continue;
    const SurfaceClass cz = class_of(z);
    std::int64_t px = inner(cz, cx), py = inner(cz, cy);
    if (px > 1 || py > 1) throw error("line pair with product > 1");
    if (px >= 1 && py >= 1) out.push_back(z);
  }
  return out;
}

std::array<std::int64_t, 27> PairDecomposition::symbol_sum() const {
  std::array<std::int64_t, 27> acc{};
  for (const auto& [t, k] : entries)
    for (const auto& l : t.lines) acc[static_cast<std::size_t>(line_index(l))] += k;
  return acc;
}

SurfaceClass PairDecomposition::lattice_sum() const {
  SurfaceClass acc{};
  for (const auto& [t, k] : entries)
    for (const auto& l : t.lines) acc = acc + class_of(l).scaled(k);
  return acc;
}

namespace {

Triangle triangle_of(const LineLabel& a, const LineLabel& b, const LineLabel& c) {
  std::array<LineLabel, 3> ls{a, b, c};
  std::sort(ls.begin(), ls.end(), [](const LineLabel& u, const LineLabel& v) {
    return line_index(u) < line_index(v);
  });
  Triangle t{ls};
  const auto& all = all_triangles();
  if (std::find(all.begin(), all.end(), t) == all.end())
    throw error("not a triangle: " + t.str());
  return t;
}

int triangle_pos(const Triangle& t) {
  const auto& all = all_triangles();
  auto it = std::find(all.begin(), all.end(), t);
  if (it == all.end()) throw error("unknown triangle " + t.str());
  return static_cast<int>(it - all.begin());
}

std::array<std::int64_t, 27> pair_target(const LineLabel& x, const LineLabel& y,
                                         const std::vector<LineLabel>& secants) {
  std::array<std::int64_t, 27> b{};
  b[static_cast<std::size_t>(line_index(x))] += 2;
  b[static_cast<std::size_t>(line_index(y))] += 2;
  for (const auto& s : secants) b[static_cast<std::size_t>(line_index(s))] += 1;
  return b;
}

}  // namespace

const std::vector<std::pair<Triangle, std::int64_t>>& builtin_e1_e2_certificate() {
  using L = LineLabel;
  static const std::vector<std::pair<Triangle, std::int64_t>> cert = {
      {triangle_of(L::exc(1), L::join(1, 3), L::conic(3)), 1},
      {triangle_of(L::exc(1), L::join(1, 4), L::conic(4)), 1},
      {triangle_of(L::exc(2), L::join(2, 5), L::conic(5)), 1},
      {triangle_of(L::exc(2), L::join(2, 6), L::conic(6)), 1},
      {triangle_of(L::join(1, 2), L::join(4, 6), L::join(3, 5)), 1},
      {triangle_of(L::join(1, 3), L::join(2, 5), L::join(4, 6)), -1},
      {triangle_of(L::join(1, 4), L::join(2, 6), L::join(3, 5)), -1},
  };
  return cert;
}

std::optional<std::vector<std::pair<int, std::int64_t>>> search_triangle_combination(
    const std::array<std::int64_t, 27>& target, std::int64_t bound) {
  const auto& tris = all_triangles();
  const int ntris = static_cast<int>(tris.size());

  std::vector<std::array<int, 3>> tri_lines(static_cast<std::size_t>(ntris));
  std::vector<std::vector<int>> tris_of_line(27);
  for (int t = 0; t < ntris; ++t) {
    for (int k = 0; k < 3; ++k) {
      int l = line_index(tris[static_cast<std::size_t>(t)].lines[static_cast<std::size_t>(k)]);
      tri_lines[static_cast<std::size_t>(t)][static_cast<std::size_t>(k)] = l;
      tris_of_line[static_cast<std::size_t>(l)].push_back(t);
    }
  }

  std::array<std::int64_t, 27> res = target;
  std::vector<std::optional<std::int64_t>> coeff(static_cast<std::size_t>(ntris));

  auto free_tris = [&](int line) {
    std::vector<int> f;
    for (int t : tris_of_line[static_cast<std::size_t>(line)])
      if (!coeff[static_cast<std::size_t>(t)]) f.push_back(t);
    return f;
  };
  auto feasible = [&] {
    for (int l = 0; l < 27; ++l) {
      if (res[static_cast<std::size_t>(l)] == 0) continue;
      std::int64_t cap = bound * static_cast<std::int64_t>(free_tris(l).size());
      if (std::abs(res[static_cast<std::size_t>(l)]) > cap) return false;
    }
    return true;
  };
  auto pick_line = [&]() -> int {
    int best = -1;
    std::size_t best_free = 99;
    for (int l = 0; l < 27; ++l) {
      if (res[static_cast<std::size_t>(l)] == 0) continue;
      std::size_t k = free_tris(l).size();
      if (k < best_free) {
        best = l;
        best_free = k;
      }
    }
    return best;
  };

  // Values tried smallest magnitude first so sparse combinations win.
  std::vector<std::int64_t> value_order;
  value_order.push_back(0);
  for (std::int64_t v = 1; v <= bound; ++v) {
    value_order.push_back(v);
    value_order.push_back(-v);
  }

  auto place = [&](int t, std::int64_t v) {
    coeff[static_cast<std::size_t>(t)] = v;
    for (int l : tri_lines[static_cast<std::size_t>(t)]) res[static_cast<std::size_t>(l)] -= v;
  };
  auto unplace = [&](int t, std::int64_t v) {
    coeff[static_cast<std::size_t>(t)].reset();
    for (int l : tri_lines[static_cast<std::size_t>(t)]) res[static_cast<std::size_t>(l)] += v;
  };

  // Branch on the most constrained line; assign all its free triangles so the
  // line's residual reaches zero, then recurse.
  std::function<bool()> rec = [&]() -> bool {
    int line = pick_line();
    if (line < 0) return true;
    std::vector<int> ft = free_tris(line);
    if (ft.empty()) return false;
    std::function<bool(std::size_t, std::int64_t)> assign = [&](std::size_t idx,
                                                                std::int64_t remaining) -> bool {
      if (idx + 1 == ft.size()) {
        if (std::abs(remaining) > bound) return false;
        place(ft[idx], remaining);
        if (feasible() && rec()) return true;
        unplace(ft[idx], remaining);
        return false;
      }
      for (std::int64_t v : value_order) {
        if (std::abs(remaining - v) > bound * static_cast<std::int64_t>(ft.size() - idx - 1))
          continue;
        place(ft[idx], v);
        if (feasible() && assign(idx + 1, remaining - v)) return true;
        unplace(ft[idx], v);
      }
      return false;
    };
    return assign(0, res[static_cast<std::size_t>(line)]);
  };

  if (!rec()) return std::nullopt;
  std::vector<std::pair<int, std::int64_t>> out;
  for (int t = 0; t < ntris; ++t)
    if (coeff[static_cast<std::size_t>(t)] && *coeff[static_cast<std::size_t>(t)] != 0)
      out.emplace_back(t, *coeff[static_cast<std::size_t>(t)]);
  return out;
}

PairDecomposition verify_pair_decomposition(const LineLabel& x, const LineLabel& y) {
  if (x == y) throw error("pair decomposition of a repeated line");
  if (inner(class_of(x), class_of(y)) != 0)
    throw error("pair decomposition requires a disjoint pair, got " + x.str() + "," + y.str());

  PairDecomposition d;
  d.x = x;
  d.y = y;
  d.secants = secant_lines(x, y);
  const auto target = pair_target(x, y, d.secants);

  // The known explicit certificate is tried before any search.
  d.entries = builtin_e1_e2_certificate();
  d.from_builtin_certificate = true;
  if (d.symbol_sum() == target) return d;

  d.entries.clear();
  d.from_builtin_certificate = false;
  auto found = search_triangle_combination(target);
  if (!found)
    throw error("no bounded triangle decomposition for pair " + x.str() + "," + y.str());
  const auto& tris = all_triangles();
  for (const auto& [t, k] : *found) d.entries.emplace_back(tris[static_cast<std::size_t>(t)], k);
  if (d.symbol_sum() != target) throw error("internal: certificate does not verify");
  return d;
}

std::vector<Triangle> find_triangle_partition() {
  const auto& tris = all_triangles();
  ExactCover cover(27);
  for (const auto& t : tris) {
    std::vector<std::size_t> cols;
    for (const auto& l : t.lines) cols.push_back(static_cast<std::size_t>(line_index(l)));
    cover.add_option(cols);
  }
  auto sol = cover.first_solution();
  if (!sol) throw error("internal: no triangle partition found");
  std::vector<Triangle> out;
  for (std::size_t opt : *sol) out.push_back(tris[opt]);
  return out;
}

}  // namespace fano::surface
