#pragma once

#include <bit>
#include <stdexcept>
#include <vector>

#include "rumflow/universe.hpp"

namespace rumflow {

// Dense storage for one value per (menu, member) pair. Row `mask` holds
// popcount(mask) slots; the slot of x is its rank among the menu's set bits.
template <typename T>
class SubsetTable {
 public:
  explicit SubsetTable(int n) : n_(n), rows_(uint32_t{1} << n) {
    for (uint32_t m = 1; m < rows_.size(); ++m) rows_[m].resize(std::popcount(m));
  }

  int universe_size() const { return n_; }

  static int slot(Menu menu, int x) {
    return std::popcount(menu.bits() & ((uint32_t{1} << x) - 1));
  }

  T& at(Menu menu, int x) {
    check(menu, x);
    return rows_[menu.bits()][slot(menu, x)];
  }
  const T& at(Menu menu, int x) const {
    check(menu, x);
    return rows_[menu.bits()][slot(menu, x)];
  }

 private:
  void check(Menu menu, int x) const {
    if (menu.bits() >= rows_.size()) throw std::domain_error("menu outside the universe");
    if (x < 0 || x >= n_ || !menu.contains(x))
      throw std::domain_error("alternative not a member of the menu");
  }

  int n_;
  std::vector<std::vector<T>> rows_;
};

}  // namespace rumflow
