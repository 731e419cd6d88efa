#pragma once

#include <array>
#include <optional>
#include <utility>

#include "rumflow/choice_system.hpp"
#include "rumflow/flow_diagram.hpp"
#include "rumflow/linear_order.hpp"
#include "rumflow/mixture.hpp"
#include "rumflow/path.hpp"

namespace rumflow {

// Directed edge from → from∖{removed} in a flow diagram.
struct FlowEdge {
  Menu from;
  int removed = 0;
  bool operator==(const FlowEdge&) const = default;
};

// Certificate of non-uniqueness: two supported paths rho, rho_prime that run
// together from merge_node down to split_node and disagree immediately above
// and below, plus the tail-exchanged pair rho2/rho3 built from them. The four
// paths cover the same nodes and edges, so mass can be rerouted between the
// two pairs without changing any choice probability.
struct BranchingWitness {
  Path rho;
  Path rho_prime;
  Path rho2;
  Path rho3;
  Menu merge_node;
  Menu split_node;
  std::array<FlowEdge, 2> in_edges;   // two positive edges into merge_node
  std::array<FlowEdge, 2> out_edges;  // two positive edges out of split_node
};

// Certificate of non-uniqueness read off a mixture's support: two support
// orders whose weak upper contour sets coincide at x and y but differ at z.
struct Theorem2Witness {
  LinearOrder pi;
  LinearOrder pi_prime;
  int x = 0;
  int y = 0;
  int z = 0;
};

// Searches the strictly-positive subgraph for a merge node (two or more
// positive in-edges) from which a split node (two or more positive out-edges)
// is reachable, possibly by an empty chain. Returns nothing iff no pair of
// supported branching paths exists. Requires a non-negative, flow-conserving
// diagram; throws std::domain_error otherwise.
std::optional<BranchingWitness> find_branching_pair(const FlowDiagram& diag);

struct UniquenessResult {
  bool unique = false;
  std::optional<BranchingWitness> witness;
};

// Whether the (rationalizable) system has exactly one representation.
// Throws NotRationalizableError when no representation exists at all.
UniquenessResult is_unique(const ChoiceSystem& sys);

struct Theorem2Result {
  bool unique = false;
  std::optional<Theorem2Witness> witness;
};

// Uniqueness test run directly on a mixture's support, without building the
// induced system. Scans support pairs lexicographically; for each coincidence
// level where the weak upper contour sets agree but the pivots differ, hunts
// for an alternative below the coincidence whose contour sets disagree.
Theorem2Result theorem2_check(const Mixture& mix);

struct SupportIdentificationResult {
  bool identified = false;
  // Two representations of the same system with provably different supports;
  // present exactly when not identified.
  std::optional<std::pair<Mixture, Mixture>> representations;
};

// Whether every rationalizing distribution shares one support; equivalent to
// uniqueness. Throws NotRationalizableError when nothing rationalizes.
SupportIdentificationResult support_identified(const ChoiceSystem& sys);

// The subsystem (Y, P): keeps exactly the menus A ⊆ Y with their original
// probabilities. Throws std::domain_error when Y is empty or out of range.
ChoiceSystem restrict_system(const ChoiceSystem& sys, Menu Y);

}  // namespace rumflow
