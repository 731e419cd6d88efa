#include "rumflow/universe.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "rumflow/errors.hpp"

namespace rumflow {

bool menu_canonical_less(Menu a, Menu b) {
  if (a.size() != b.size()) return a.size() > b.size();
  return a.bits() < b.bits();
}

std::vector<Menu> canonical_menus(int n) {
  std::vector<Menu> menus;
  menus.reserve((size_t{1} << n) - 1);
  for (uint32_t bits = 1; bits < (uint32_t{1} << n); ++bits) menus.emplace_back(bits);
  std::sort(menus.begin(), menus.end(), menu_canonical_less);
  return menus;
}

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.empty() || labels_.size() > kMaxAlternatives)
    throw InputError("universe must have between 1 and 16 alternatives, got " +
                     std::to_string(labels_.size()));
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw InputError("alternative labels must be non-empty");
    if (!seen.insert(l).second) throw InputError("duplicate alternative label: " + l);
  }
}

const std::string& Universe::label(int x) const {
  if (x < 0 || x >= size()) throw std::domain_error("alternative index out of range");
  return labels_[x];
}

int Universe::find(const std::string& label) const {
  for (int i = 0; i < size(); ++i)
    if (labels_[i] == label) return i;
  return -1;
}

int Universe::index_of(const std::string& label) const {
  int i = find(label);
  if (i < 0) throw InputError("unknown alternative label: " + label);
  return i;
}

std::string format_menu(const Universe& u, Menu m) {
  std::string out = "{";
  bool first = true;
  for (int x : m) {
    if (!first) out += ",";
    out += u.label(x);
    first = false;
  }
  out += "}";
  return out;
}

}  // namespace rumflow
