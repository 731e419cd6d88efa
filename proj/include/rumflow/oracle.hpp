#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rumflow/decomposition.hpp"
#include "rumflow/flow_diagram.hpp"
#include "rumflow/mixture.hpp"
#include "rumflow/path.hpp"
#include "rumflow/universe.hpp"

namespace rumflow {

// Brute-force reference implementations. They enumerate instead of deriving,
// so they refuse (CapError) rather than sample when the universe is too big:
// an oracle that samples is not an oracle.
inline constexpr int kAllPathsMaxUniverse = 6;
inline constexpr int kExhaustiveMaxUniverse = 5;

// All n! maximal chains, in lexicographic order of their orders. CapError
// when n > 6.
std::vector<Path> all_paths(const Universe& u);

// Literal quantifier scan: some i ≤ j in {1,...,n−1} with equal nodes on
// [i, j] and unequal nodes at i−1 and j+1. Throws std::domain_error when the
// paths live in different universes.
bool branching_by_definition(const Path& p, const Path& q);

struct ExhaustiveUniquenessResult {
  bool unique = false;
  // Some supported branching pair, when one exists.
  std::optional<std::pair<Path, Path>> pair_found;
};

// Scans every pair of supported paths against branching_by_definition.
// CapError when n > 5.
ExhaustiveUniquenessResult exhaustive_uniqueness(const FlowDiagram& diag);

// Deterministic seeded mixture: support size uniform in [1, min(n!, 8)],
// distinct orders, weights p/q with p, q uniform in [1, 120], normalized.
Mixture random_mixture(const Universe& u, uint64_t seed);

// Tries all k! support orderings against the raw single-crossing definition.
// CapError when the support is larger than 6.
bool single_crossing_brute_force(const Mixture& mix, const ExogenousOrder& exo);

}  // namespace rumflow
