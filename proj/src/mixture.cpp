#include "rumflow/mixture.hpp"

#include "rumflow/errors.hpp"

namespace rumflow {

Mixture::Mixture(Universe universe, const std::vector<std::pair<LinearOrder, Rational>>& atoms)
    : universe_(std::move(universe)) {
  Rational total = 0;
  for (const auto& [order, w] : atoms) {
    if (order.size() != universe_.size())
      throw InputError("mixture atom ranks a different number of alternatives than the universe");
    if (w < 0) throw InputError("mixture weights must be non-negative");
    if (w == 0) continue;
    atoms_[order] += w;
    total += w;
  }
  if (total != 1) throw InputError("mixture weights must sum to exactly 1, got " + to_string(total));
}

Rational Mixture::weight(const LinearOrder& order) const {
  auto it = atoms_.find(order);
  return it == atoms_.end() ? Rational(0) : it->second;
}

std::vector<LinearOrder> Mixture::support() const {
  std::vector<LinearOrder> out;
  out.reserve(atoms_.size());
  for (const auto& [order, w] : atoms_) out.push_back(order);
  return out;
}

bool Mixture::operator==(const Mixture& o) const {
  return universe_ == o.universe_ && atoms_ == o.atoms_;
}

bool Mixture::operator<(const Mixture& o) const { return atoms_ < o.atoms_; }

}  // namespace rumflow
