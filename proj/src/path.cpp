#include "rumflow/path.hpp"

#include <bit>

#include "rumflow/errors.hpp"

namespace rumflow {

Path::Path(std::vector<Menu> nodes) : nodes_(std::move(nodes)) {
  int n = static_cast<int>(nodes_.size()) - 1;
  if (n < 1 || n > kMaxAlternatives)
    throw InputError("path must have n+1 nodes for a universe of n alternatives");
  if (nodes_[0] != Menu((uint32_t{1} << n) - 1))
    throw InputError("path must start at the full menu");
  for (int i = 0; i < n; ++i) {
    Menu cur = nodes_[i], next = nodes_[i + 1];
    if (!next.subset_of(cur) || next.size() != cur.size() - 1)
      throw InputError("path nodes must shrink by exactly one element per step");
  }
}

int Path::removed_at(int i) const {
  if (i < 0 || i >= universe_size()) throw std::domain_error("path step out of range");
  return std::countr_zero(nodes_[i].bits() ^ nodes_[i + 1].bits());
}

Path order_to_path(const LinearOrder& order) {
  std::vector<Menu> nodes;
  nodes.reserve(order.size() + 1);
  Menu cur((uint32_t{1} << order.size()) - 1);
  nodes.push_back(cur);
  for (int p = 0; p < order.size(); ++p) {
    cur = cur.without(order.at(p));
    nodes.push_back(cur);
  }
  return Path(std::move(nodes));
}

LinearOrder path_to_order(const Path& path) {
  std::vector<int> ranking;
  ranking.reserve(path.universe_size());
  for (int i = 0; i < path.universe_size(); ++i) ranking.push_back(path.removed_at(i));
  return LinearOrder(std::move(ranking));
}

}  // namespace rumflow
