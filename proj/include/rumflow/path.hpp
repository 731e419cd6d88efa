#pragma once

#include <vector>

#include "rumflow/linear_order.hpp"
#include "rumflow/universe.hpp"

namespace rumflow {

// A maximal chain in the subset lattice: X = A_0 ⊃ A_1 ⊃ ... ⊃ A_n = {} with
// exactly one element removed at each step. Paths are in bijection with
// linear orders: the element removed at step i is the order's i-th best.
class Path {
 public:
  // Throws InputError unless the node list is such a chain.
  explicit Path(std::vector<Menu> nodes);

  int universe_size() const { return static_cast<int>(nodes_.size()) - 1; }
  const std::vector<Menu>& nodes() const { return nodes_; }
  // A_i; |A_i| = n - i.
  Menu node(int i) const { return nodes_.at(i); }
  // The element dropped between A_i and A_{i+1}.
  int removed_at(int i) const;

  bool operator==(const Path&) const = default;

 private:
  std::vector<Menu> nodes_;
};

Path order_to_path(const LinearOrder& order);
LinearOrder path_to_order(const Path& path);

}  // namespace rumflow
