#include "rumflow/choice_system.hpp"

#include "rumflow/errors.hpp"

namespace rumflow {

ChoiceSystem::ChoiceSystem(Universe universe, SubsetTable<Rational> probs)
    : universe_(std::move(universe)), probs_(std::move(probs)) {
  if (probs_.universe_size() != universe_.size())
    throw InputError("choice probability table does not match the universe size");
  uint32_t full = universe_.full_menu().bits();
  for (uint32_t bits = 1; bits <= full; ++bits) {
    Menu menu(bits);
    Rational row = 0;
    for (int x : menu) {
      const Rational& p = probs_.at(menu, x);
      if (p < 0)
        throw InputError("negative choice probability at " + format_menu(universe_, menu));
      row += p;
    }
    if (row != 1)
      throw InputError("choice probabilities over " + format_menu(universe_, menu) +
                       " sum to " + to_string(row) + ", expected 1");
  }
}

const Rational& ChoiceSystem::prob(Menu menu, int x) const {
  if (menu.empty() || !universe_.contains_menu(menu))
    throw std::domain_error("menu must be a non-empty subset of the universe");
  return probs_.at(menu, x);
}

bool ChoiceSystem::operator==(const ChoiceSystem& o) const {
  if (!(universe_ == o.universe_)) return false;
  for (Menu menu : canonical_menus(size()))
    for (int x : menu)
      if (probs_.at(menu, x) != o.probs_.at(menu, x)) return false;
  return true;
}

ChoiceSystem induce_choice_system(const Mixture& mix) {
  int n = mix.size();
  SubsetTable<Rational> probs(n);
  for (const auto& [order, w] : mix.atoms()) {
    for (uint32_t bits = 1; bits < (uint32_t{1} << n); ++bits) {
      Menu menu(bits);
      probs.at(menu, best_in_menu(order, menu)) += w;
    }
  }
  return ChoiceSystem(mix.universe(), std::move(probs));
}

}  // namespace rumflow
