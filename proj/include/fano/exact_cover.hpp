#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace fano {

// Exact cover by dancing links. Options are lists of column ids; the solver
// returns the first solution under the fixed "fewest candidates, then lowest
// column id, then option order" branching, so results are deterministic.
class ExactCover {
 public:
  explicit ExactCover(std::size_t columns);

  std::size_t add_option(const std::vector<std::size_t>& cols);

  // Option indices of the first solution, sorted ascending.
  std::optional<std::vector<std::size_t>> first_solution();

 private:
  struct Node {
    std::size_t l, r, u, d;
    std::size_t col;     // column header index for data nodes
    std::size_t option;  // owning option id
  };

  void cover(std::size_t c);
  void uncover(std::size_t c);
  bool search(std::vector<std::size_t>& picked);

  std::size_t ncols_;
  std::vector<Node> nodes_;   // 0 = root, 1..ncols = column headers
  std::vector<std::size_t> size_;  // per-column count
  std::size_t noptions_ = 0;
};

}  // namespace fano
