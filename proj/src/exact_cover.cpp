#include "fano/exact_cover.hpp"

#include <algorithm>

#include "fano/error.hpp"

namespace fano {

ExactCover::ExactCover(std::size_t columns) : ncols_(columns), size_(columns + 1, 0) {
  nodes_.resize(columns + 1);
  for (std::size_t i = 0; i <= columns; ++i) {
    nodes_[i].l = (i == 0) ? columns : i - 1;
    nodes_[i].r = (i == columns) ? 0 : i + 1;
    nodes_[i].u = nodes_[i].d = i;
    nodes_[i].col = i;
  }
}

std::size_t ExactCover::add_option(const std::vector<std::size_t>& cols) {
  if (cols.empty()) throw error("empty option");
  std::size_t first = nodes_.size();
  for (std::size_t k = 0; k < cols.size(); ++k) {
    std::size_t c = cols[k];
    if (c >= ncols_) throw error("column out of range");
    std::size_t h = c + 1;  // header
    Node n{};
    std::size_t id = nodes_.size();
    n.col = h;
    n.option = noptions_;
    // vertical insert above header
    n.d = h;
    n.u = nodes_[h].u;
    nodes_[nodes_[h].u].d = id;
    nodes_[h].u = id;
    ++size_[h];
    // horizontal circular link within the option
    if (k == 0) {
      n.l = n.r = id;
    } else {
      n.l = id - 1;
      n.r = first;
      nodes_[first].l = id;
      nodes_[id - 1].r = id;
    }
    nodes_.push_back(n);
  }
  return noptions_++;
}

void ExactCover::cover(std::size_t c) {
  nodes_[nodes_[c].r].l = nodes_[c].l;
  nodes_[nodes_[c].l].r = nodes_[c].r;
  for (std::size_t i = nodes_[c].d; i != c; i = nodes_[i].d)
    for (std::size_t j = nodes_[i].r; j != i; j = nodes_[j].r) {
      nodes_[nodes_[j].d].u = nodes_[j].u;
      nodes_[nodes_[j].u].d = nodes_[j].d;
      --size_[nodes_[j].col];
    }
}

void ExactCover::uncover(std::size_t c) {
  for (std::size_t i = nodes_[c].u; i != c; i = nodes_[i].u)
    for (std::size_t j = nodes_[i].l; j != i; j = nodes_[j].l) {
      ++size_[nodes_[j].col];
      nodes_[nodes_[j].d].u = j;
      nodes_[nodes_[j].u].d = j;
    }
  nodes_[nodes_[c].r].l = c;
  nodes_[nodes_[c].l].r = c;
}

bool ExactCover::search(std::vector<std::size_t>& picked) {
  std::size_t c = nodes_[0].r;
  if (c == 0) return true;
  for (std::size_t h = c; h != 0; h = nodes_[h].r)
    if (size_[h] < size_[c]) c = h;
  if (size_[c] == 0) return false;
  cover(c);
  for (std::size_t i = nodes_[c].d; i != c; i = nodes_[i].d) {
    picked.push_back(nodes_[i].option);
    for (std::size_t j = nodes_[i].r; j != i; j = nodes_[j].r) cover(nodes_[j].col);
    if (search(picked)) return true;
    for (std::size_t j = nodes_[i].l; j != i; j = nodes_[j].l) uncover(nodes_[j].col);
    picked.pop_back();
  }
  uncover(c);
  return false;
}

std::optional<std::vector<std::size_t>> ExactCover::first_solution() {
  std::vector<std::size_t> picked;
  if (!search(picked)) return std::nullopt;
  std::sort(picked.begin(), picked.end());
  return picked;
}

}  // namespace fano
