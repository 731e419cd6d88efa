#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rumflow/flow_diagram.hpp"
#include "rumflow/identification.hpp"
#include "rumflow/mixture.hpp"
#include "rumflow/path.hpp"
#include "rumflow/rational.hpp"
#include "rumflow/subset_table.hpp"

namespace rumflow {

// Refusal bound on materializing the supported-path set for enumeration.
inline constexpr size_t kMaxEnumerationPaths = 40320;  // 8!

// Default bound on the number of path orderings tried by
// enumerate_representations.
inline constexpr uint64_t kDefaultOrderingCap = 5040;  // 7!

struct DecompositionStep {
  Path path;
  Rational flow;  // strictly positive
};

// Record of one greedy run: the chosen paths with their flows (summing to 1)
// and the residual edge weights after the last step (identically zero).
struct DecompositionTrace {
  std::vector<DecompositionStep> steps;
  SubsetTable<Rational> final_residual;
};

struct GreedyResult {
  Mixture representation;
  DecompositionTrace trace;
};

// Peels path flows off the diagram until nothing remains: each step picks the
// globally smallest strictly positive edge (canonical tie-break), completes a
// path through it via lexicographically smallest positive edges, and assigns
// the path its minimum edge weight. An optional seed path is peeled first
// with its own minimum edge weight. The result induces the diagram's system
// exactly. Throws std::domain_error on negative weights, conservation
// violations, or an unsupported seed.
GreedyResult greedy_representation(const FlowDiagram& diag,
                                   const std::optional<Path>& seed = std::nullopt);

// Two representations with provably different supports, built by reseeding
// the greedy decomposition with rho and with the tail-exchanged rho2 after
// relabeling the witness so the minimum-flow edge over rho ∪ rho_prime lies
// on both seeds. The first puts zero weight on rho2's order, the second at
// least that minimum. Throws std::domain_error on an inconsistent witness.
std::pair<Mixture, Mixture> alternative_representations(const FlowDiagram& diag,
                                                        const BranchingWitness& w);

// Candidate extreme points: runs the path-priority decomposition (each path
// in turn takes its maximum feasible flow) over orderings of the supported
// path set — all k! orderings when k! ≤ cap, else `cap` orderings drawn from
// a deterministic generator seeded with rng_seed. Deduplicated, canonically
// sorted. No completeness claim. Throws CapError when the supported path set
// itself is too large to materialize.
std::vector<Mixture> enumerate_representations(const FlowDiagram& diag,
                                               uint64_t cap = kDefaultOrderingCap,
                                               uint64_t rng_seed = 0);

// The order ▷ against which single-crossing is judged: at(0) ▷ at(1) ▷ ...
using ExogenousOrder = LinearOrder;

// Two support orders that cannot be sequenced: each must precede the other.
struct ScrumConflict {
  LinearOrder pi;
  LinearOrder pi_prime;
  // x ▷ y with pi ranking x above y but pi_prime not: pi_prime must precede pi.
  std::pair<int, int> pi_only;
  // x ▷ y with pi_prime ranking x above y but pi not: pi must precede pi_prime.
  std::pair<int, int> pi_prime_only;
};

struct ScrumResult {
  bool single_crossing = false;
  // Support sequenced so agreement with ▷ only ever grows; set iff single_crossing.
  std::optional<std::vector<LinearOrder>> ordering;
  std::optional<ScrumConflict> conflict;
};

// Whether the support can be ordered so that, for every x ▷ y, once an order
// ranks x above y every later order does too. Builds the must-precede
// relation over support atoms; a valid sequence exists iff it is acyclic
// (every cycle collapses to a mutual pair). The returned ordering is
// re-verified against the raw definition before being returned.
ScrumResult scrum_check(const Mixture& mix, const ExogenousOrder& exo);

}  // namespace rumflow
