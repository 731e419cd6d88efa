#pragma once

#include "rumflow/mixture.hpp"
#include "rumflow/rational.hpp"
#include "rumflow/subset_table.hpp"
#include "rumflow/universe.hpp"

namespace rumflow {

// Complete-domain stochastic choice data: one probability P_A(x) for every
// x ∈ A for every non-empty menu A ⊆ X, each row summing to exactly 1.
class ChoiceSystem {
 public:
  // Validates completeness: all entries non-negative, every row sums to 1.
  ChoiceSystem(Universe universe, SubsetTable<Rational> probs);

  const Universe& universe() const { return universe_; }
  int size() const { return universe_.size(); }
  // P_menu(x). Throws std::domain_error when x ∉ menu or menu is empty.
  const Rational& prob(Menu menu, int x) const;

  bool operator==(const ChoiceSystem& o) const;

 private:
  Universe universe_;
  SubsetTable<Rational> probs_;
};

// P_A(x) = total weight of atoms whose best element of A is x.
ChoiceSystem induce_choice_system(const Mixture& mix);

}  // namespace rumflow
