#pragma once

#include <vector>

#include "rumflow/universe.hpp"

namespace rumflow {

// A strict linear order over all n alternatives, stored best-first:
// ranking()[0] is the most preferred alternative's index.
class LinearOrder {
 public:
  // `ranking` must be a permutation of 0..n-1; throws InputError otherwise.
  explicit LinearOrder(std::vector<int> ranking);

  int size() const { return static_cast<int>(ranking_.size()); }
  const std::vector<int>& ranking() const { return ranking_; }
  // Alternative at rank position p (0 = best).
  int at(int p) const;
  // Rank position of alternative x (0 = best).
  int position(int x) const;
  // True when x is ranked strictly above y. prefers(x, x) is false.
  bool prefers(int x, int y) const { return position(x) < position(y); }

  // Lexicographic on the best-first ranking; used for canonical support order.
  bool operator<(const LinearOrder& o) const { return ranking_ < o.ranking_; }
  bool operator==(const LinearOrder& o) const = default;

 private:
  std::vector<int> ranking_;
  std::vector<int> position_;
};

// The order's most preferred alternative offered in `menu`.
// Throws std::domain_error when the menu is empty or not within range.
int best_in_menu(const LinearOrder& order, Menu menu);

// Weak upper contour set {y : y is ranked at or above x}; always contains x.
Menu upper_contour_set(const LinearOrder& order, int x);

// Renders "a>b>c" with labels best-first.
std::string format_order(const Universe& u, const LinearOrder& order);

}  // namespace rumflow
