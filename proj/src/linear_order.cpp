#include "rumflow/linear_order.hpp"

#include <stdexcept>

#include "rumflow/errors.hpp"

namespace rumflow {

LinearOrder::LinearOrder(std::vector<int> ranking) : ranking_(std::move(ranking)) {
  int n = static_cast<int>(ranking_.size());
  if (n < 1 || n > kMaxAlternatives)
    throw InputError("order must rank between 1 and 16 alternatives");
  position_.assign(n, -1);
  for (int p = 0; p < n; ++p) {
    int x = ranking_[p];
    if (x < 0 || x >= n || position_[x] != -1)
      throw InputError("order ranking is not a permutation of 0..n-1");
    position_[x] = p;
  }
}

int LinearOrder::at(int p) const {
  if (p < 0 || p >= size()) throw std::domain_error("rank position out of range");
  return ranking_[p];
}

int LinearOrder::position(int x) const {
  if (x < 0 || x >= size()) throw std::domain_error("alternative index out of range");
  return position_[x];
}

int best_in_menu(const LinearOrder& order, Menu menu) {
  if (menu.empty()) throw std::domain_error("best_in_menu: empty menu");
  if (!menu.subset_of(Menu((uint32_t{1} << order.size()) - 1)))
    throw std::domain_error("best_in_menu: menu not within the order's universe");
  for (int x : order.ranking())
    if (menu.contains(x)) return x;
  throw std::domain_error("best_in_menu: unreachable");
}

Menu upper_contour_set(const LinearOrder& order, int x) {
  int p = order.position(x);
  Menu m;
  for (int i = 0; i <= p; ++i) m = m.with(order.at(i));
  return m;
}

std::string format_order(const Universe& u, const LinearOrder& order) {
  std::string out;
  for (int p = 0; p < order.size(); ++p) {
    if (p) out += ">";
    out += u.label(order.at(p));
  }
  return out;
}

}  // namespace rumflow
