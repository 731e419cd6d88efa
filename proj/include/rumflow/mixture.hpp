#pragma once

#include <map>
#include <utility>
#include <vector>

#include "rumflow/linear_order.hpp"
#include "rumflow/rational.hpp"
#include "rumflow/universe.hpp"

namespace rumflow {

// A probability distribution over linear orders with exact rational weights.
// Canonicalized on construction: duplicate atoms are merged, zero weights are
// dropped, every stored weight is strictly positive, weights sum to exactly 1.
class Mixture {
 public:
  Mixture(Universe universe, const std::vector<std::pair<LinearOrder, Rational>>& atoms);

  const Universe& universe() const { return universe_; }
  int size() const { return universe_.size(); }
  // Atoms keyed by order, lexicographic (best-first ranking) iteration order.
  const std::map<LinearOrder, Rational>& atoms() const { return atoms_; }
  // 0 when the order carries no weight.
  Rational weight(const LinearOrder& order) const;
  // Orders with strictly positive weight, lexicographic.
  std::vector<LinearOrder> support() const;

  bool operator==(const Mixture& o) const;
  bool operator<(const Mixture& o) const;

 private:
  Universe universe_;
  std::map<LinearOrder, Rational> atoms_;
};

}  // namespace rumflow
