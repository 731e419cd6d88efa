#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "rumflow/choice_system.hpp"
#include "rumflow/mixture.hpp"
#include "rumflow/path.hpp"
#include "rumflow/rational.hpp"
#include "rumflow/subset_table.hpp"
#include "rumflow/universe.hpp"

namespace rumflow {

// The weighted lattice of all menus: one directed edge A → A∖{x} for every
// non-empty A ⊆ X and x ∈ A, weighted by the polynomial q(x, A). Holds every
// edge, including zero and negative ones; reduced views filter, not copy.
class FlowDiagram {
 public:
  FlowDiagram(Universe universe, SubsetTable<Rational> weights);

  const Universe& universe() const { return universe_; }
  int size() const { return universe_.size(); }
  // Weight q(x, from) on the edge from → from∖{x}. domain_error if x ∉ from.
  const Rational& weight(Menu from, int removed) const { return weights_.at(from, removed); }

  // Σ q(y, A∪{y}) over y ∉ A: total flow entering A from its covers.
  Rational inflow(Menu node) const;
  // Σ q(x, A) over x ∈ A: total flow leaving A.
  Rational outflow(Menu node) const;

 private:
  Universe universe_;
  SubsetTable<Rational> weights_;
};

struct BmViolation {
  int alternative = 0;
  Menu menu;
  Rational value;
};

// Data admits no positive representation; carries the certifying negative
// polynomial so callers can report it.
class NotRationalizableError : public std::runtime_error {
 public:
  NotRationalizableError(const std::string& what, BmViolation violation)
      : std::runtime_error(what), violation_(std::move(violation)) {}
  const BmViolation& violation() const { return violation_; }

 private:
  BmViolation violation_;
};

// q(x, A) by the top-down recursion q(x,A) = P_A(x) − Σ_{A' ⊋ A} q(x,A'),
// memoized over supersets of A. Throws std::domain_error when x ∉ A.
Rational bm_polynomial(const ChoiceSystem& sys, int x, Menu A);

// Same value by the direct alternating sum Σ_{A' ⊇ A} (−1)^{|A'∖A|} P_{A'}(x).
// Kept as an independent cross-check of the recursive form.
Rational bm_polynomial_mobius(const ChoiceSystem& sys, int x, Menu A);

// Total weight of atoms ranking all of X∖A above x and x above A∖{x}.
Rational contour_mass(const Mixture& mix, int x, Menu A);

// All n·2^(n−1) edge weights in one pass over menus of decreasing cardinality.
// Does not require rationalizability; weights may come out negative.
FlowDiagram build_flow_diagram(const ChoiceSystem& sys);

struct RationalizabilityResult {
  bool rationalizable = false;
  // First violation under the canonical scan (menu cardinality descending,
  // bit pattern ascending, alternatives by index); empty when rationalizable.
  std::optional<BmViolation> violation;
};

// Non-negativity of every q(x, A).
RationalizabilityResult is_rationalizable(const ChoiceSystem& sys);

// First negative edge of an already-built diagram under the canonical scan.
std::optional<BmViolation> first_negative(const FlowDiagram& diag);

// Inflow = outflow at every node other than X and ∅, and outflow(X) = 1.
bool is_conserving(const FlowDiagram& diag);

// True iff every edge along the path has strictly positive weight.
bool path_supported(const FlowDiagram& diag, const Path& path);

// Filtered view: strictly positive edges and the nodes they touch, both in
// canonical order (cardinality descending, bit pattern ascending; edges
// additionally by removed element). Weights stay in the parent diagram.
struct ReducedDiagram {
  std::vector<Menu> nodes;
  std::vector<std::pair<Menu, int>> edges;  // (source menu, removed element)
};

// Throws std::domain_error when any edge weight is negative.
ReducedDiagram reduced_diagram(const FlowDiagram& diag);

enum class DotStyle {
  kReduced,  // positive edges and their incident nodes only
  kFull,     // every node and every edge, zero weights included
};

// Graphviz rendering; nodes are brace-formatted menus, edge labels "p/q".
std::string to_dot(const FlowDiagram& diag, DotStyle style);

}  // namespace rumflow
