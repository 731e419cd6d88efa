#pragma once

// Shared builders for the test binaries. String shorthands: single-letter
// labels, so "badc" means the order b > a > d > c over universe {a,b,c,d}.

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rumflow/choice_system.hpp"
#include "rumflow/flow_diagram.hpp"
#include "rumflow/linear_order.hpp"
#include "rumflow/mixture.hpp"
#include "rumflow/path.hpp"
#include "rumflow/universe.hpp"

namespace fixtures {

using namespace rumflow;

inline Universe letters(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return Universe(std::move(labels));
}

inline LinearOrder ord(const Universe& u, std::string_view letters_best_first) {
  std::vector<int> ranking;
  for (char c : letters_best_first) ranking.push_back(u.index_of(std::string(1, c)));
  return LinearOrder(std::move(ranking));
}

inline Menu menu_of(const Universe& u, std::string_view members) {
  Menu m;
  for (char c : members) m = m.with(u.index_of(std::string(1, c)));
  return m;
}

// The two distinct half-half mixtures that induce identical choice data on
// four alternatives.
inline Mixture fishburn_nu1() {
  Universe u = letters(4);
  return Mixture(u, {{ord(u, "abcd"), Rational(1, 2)}, {ord(u, "badc"), Rational(1, 2)}});
}

inline Mixture fishburn_nu2() {
  Universe u = letters(4);
  return Mixture(u, {{ord(u, "abdc"), Rational(1, 2)}, {ord(u, "bacd"), Rational(1, 2)}});
}

inline ChoiceSystem fishburn_system() { return induce_choice_system(fishburn_nu1()); }

inline Mixture point_mass(const Universe& u, const LinearOrder& order) {
  return Mixture(u, {{order, Rational(1)}});
}

// Uniform over all n! orders; n <= 5 in tests.
inline Mixture uniform_mixture(const Universe& u) {
  std::vector<int> perm;
  for (int i = 0; i < u.size(); ++i) perm.push_back(i);
  std::vector<std::pair<LinearOrder, Rational>> atoms;
  uint64_t fact = 1;
  for (int i = 2; i <= u.size(); ++i) fact *= static_cast<uint64_t>(i);
  do {
    atoms.emplace_back(LinearOrder(perm), Rational(1, fact));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return Mixture(u, atoms);
}

// Complete data on {a,b,c} with a negative polynomial: the full menu always
// yields a, yet {a,b} never does, so q(a, {a,b}) = 0 - 1 = -1.
inline ChoiceSystem violator_system() {
  Universe u = letters(3);
  SubsetTable<Rational> probs(3);
  auto set = [&](std::string_view menu, std::string_view member, int num, int den = 1) {
    probs.at(menu_of(u, menu), u.index_of(std::string(member))) = Rational(num, den);
  };
  set("abc", "a", 1);
  set("abc", "b", 0);
  set("abc", "c", 0);
  set("ab", "a", 0);
  set("ab", "b", 1);
  set("ac", "a", 1);
  set("ac", "c", 0);
  set("bc", "b", 1);
  set("bc", "c", 0);
  set("a", "a", 1);
  set("b", "b", 1);
  set("c", "c", 1);
  return ChoiceSystem(u, std::move(probs));
}

}  // namespace fixtures
