#include "rumflow/identification.hpp"

#include <algorithm>

#include "rumflow/decomposition.hpp"
#include "rumflow/errors.hpp"

namespace rumflow {

namespace {

void require_nonnegative_conserving(const FlowDiagram& diag, const char* who) {
  if (auto bad = first_negative(diag))
    throw std::domain_error(std::string(who) + ": negative edge weight " + to_string(bad->value) +
                            " out of " + format_menu(diag.universe(), bad->menu));
  if (!is_conserving(diag))
    throw std::domain_error(std::string(who) + ": diagram is not flow-conserving");
}

// Lexicographically smallest positive edge upward: parent A∪{y} chosen by
// smallest y. Extends until X; prepends nodes above `from`, excluding it.
std::vector<Menu> extend_up(const FlowDiagram& diag, Menu from) {
  Menu full = diag.universe().full_menu();
  std::vector<Menu> above;
  Menu cur = from;
  while (!(cur == full)) {
    int pick = -1;
    for (int y = 0; y < diag.size(); ++y) {
      if (cur.contains(y)) continue;
      if (diag.weight(cur.with(y), y) > 0) {
        pick = y;
        break;
      }
    }
    if (pick < 0) throw std::domain_error("positive flow vanished during upward extension");
    cur = cur.with(pick);
    above.push_back(cur);
  }
  std::reverse(above.begin(), above.end());
  return above;
}

// Lexicographically smallest positive edge downward; appends nodes strictly
// below `from`, ending at the empty menu.
std::vector<Menu> extend_down(const FlowDiagram& diag, Menu from) {
  std::vector<Menu> below;
  Menu cur = from;
  while (!cur.empty()) {
    int pick = -1;
    for (int x : cur) {
      if (diag.weight(cur, x) > 0) {
        pick = x;
        break;
      }
    }
    if (pick < 0) throw std::domain_error("positive flow vanished during downward extension");
    cur = cur.without(pick);
    below.push_back(cur);
  }
  return below;
}

// Full path X → ∅ running through top_entry, the merge→split chain, and the
// chosen split exit; top_entry ⊃ chain.front() by one element, so the in-edge
// is implicit in the node sequence.
Path splice_path(const FlowDiagram& diag, Menu top_entry, const std::vector<Menu>& chain,
                 int out_elem) {
  std::vector<Menu> nodes = extend_up(diag, top_entry);
  nodes.push_back(top_entry);
  nodes.insert(nodes.end(), chain.begin(), chain.end());
  Menu after_split = chain.back().without(out_elem);
  nodes.push_back(after_split);
  auto rest = extend_down(diag, after_split);
  nodes.insert(nodes.end(), rest.begin(), rest.end());
  return Path(std::move(nodes));
}

}  // namespace

std::optional<BranchingWitness> find_branching_pair(const FlowDiagram& diag) {
  require_nonnegative_conserving(diag, "find_branching_pair");
  int n = diag.size();
  uint32_t full = diag.universe().full_menu().bits();

  // Positive in/out degree per node; merge and split status is only defined
  // for proper non-empty subsets (Definition 5's index bounds).
  std::vector<int> out_deg(full + 1, 0), in_deg(full + 1, 0);
  for (uint32_t bits = 1; bits <= full; ++bits) {
    Menu A(bits);
    for (int x : A)
      if (diag.weight(A, x) > 0) {
        ++out_deg[bits];
        ++in_deg[A.without(x).bits()];
      }
  }
  auto is_merge = [&](uint32_t bits) { return bits != 0 && bits != full && in_deg[bits] >= 2; };
  auto is_split = [&](uint32_t bits) { return bits != 0 && bits != full && out_deg[bits] >= 2; };

  // reach[A]: a split node is reachable from A through strictly positive
  // edges (trivially, A itself). Children first, so ascending popcount.
  std::vector<char> reach(full + 1, 0);
  std::vector<uint32_t> order(full);
  for (uint32_t bits = 1; bits <= full; ++bits) order[bits - 1] = bits;
  std::sort(order.begin(), order.end(), [](uint32_t a, uint32_t b) {
    if (std::popcount(a) != std::popcount(b)) return std::popcount(a) < std::popcount(b);
    return a < b;
  });
  for (uint32_t bits : order) {
    if (is_split(bits)) {
      reach[bits] = 1;
      continue;
    }
    Menu A(bits);
    for (int x : A)
      if (diag.weight(A, x) > 0 && reach[A.without(x).bits()]) {
        reach[bits] = 1;
        break;
      }
  }

  // First merge node that reaches a split node, canonical scan order.
  Menu B;
  bool found = false;
  for (Menu candidate : canonical_menus(n)) {
    if (is_merge(candidate.bits()) && reach[candidate.bits()]) {
      B = candidate;
      found = true;
      break;
    }
  }
  if (!found) return std::nullopt;

  // Walk from B to the nearest split node through positive edges that keep a
  // split reachable; lexicographically smallest element at each step.
  std::vector<Menu> chain{B};
  Menu C = B;
  while (!is_split(C.bits())) {
    int pick = -1;
    for (int x : C)
      if (diag.weight(C, x) > 0 && reach[C.without(x).bits()]) {
        pick = x;
        break;
      }
    if (pick < 0) throw std::domain_error("split node unreachable despite marked reachability");
    C = C.without(pick);
    chain.push_back(C);
  }

  // Two smallest positive in-edges into B and out-edges from C.
  std::vector<int> ins, outs;
  for (int y = 0; y < n; ++y)
    if (!B.contains(y) && diag.weight(B.with(y), y) > 0) ins.push_back(y);
  for (int x : C)
    if (diag.weight(C, x) > 0) outs.push_back(x);
  // in_deg ≥ 2 and out_deg ≥ 2 guarantee both lists have two entries.
  int u1 = ins[0], u2 = ins[1];
  int s1 = outs[0], s2 = outs[1];

  Path rho = splice_path(diag, B.with(u1), chain, s1);
  Path rho_prime = splice_path(diag, B.with(u2), chain, s2);

  // Exchange tails below the split node.
  int j = n - C.size();
  std::vector<Menu> nodes2(rho.nodes().begin(), rho.nodes().begin() + j + 1);
  nodes2.insert(nodes2.end(), rho_prime.nodes().begin() + j + 1, rho_prime.nodes().end());
  std::vector<Menu> nodes3(rho_prime.nodes().begin(), rho_prime.nodes().begin() + j + 1);
  nodes3.insert(nodes3.end(), rho.nodes().begin() + j + 1, rho.nodes().end());

  return BranchingWitness{std::move(rho),
                          std::move(rho_prime),
                          Path(std::move(nodes2)),
                          Path(std::move(nodes3)),
                          B,
                          C,
                          {FlowEdge{B.with(u1), u1}, FlowEdge{B.with(u2), u2}},
                          {FlowEdge{C, s1}, FlowEdge{C, s2}}};
}

UniquenessResult is_unique(const ChoiceSystem& sys) {
  FlowDiagram diag = build_flow_diagram(sys);
  if (auto bad = first_negative(diag))
    throw NotRationalizableError(
        "system is not rationalizable: q(" + sys.universe().label(bad->alternative) + ", " +
            format_menu(sys.universe(), bad->menu) + ") = " + to_string(bad->value),
        *bad);
  auto witness = find_branching_pair(diag);
  bool unique = !witness.has_value();
  return UniquenessResult{unique, std::move(witness)};
}

Theorem2Result theorem2_check(const Mixture& mix) {
  int n = mix.size();
  std::vector<LinearOrder> support = mix.support();
  for (size_t a = 0; a + 1 < support.size(); ++a) {
    for (size_t b = a + 1; b < support.size(); ++b) {
      const LinearOrder& pi = support[a];
      const LinearOrder& pi_prime = support[b];
      // Coincidence level k: the top-k sets agree but the k-th picks differ.
      Menu top_pi, top_prime;
      for (int k = 1; k <= n - 1; ++k) {
        top_pi = top_pi.with(pi.at(k - 1));
        top_prime = top_prime.with(pi_prime.at(k - 1));
        if (!(top_pi == top_prime)) continue;
        int x = pi.at(k - 1), y = pi_prime.at(k - 1);
        if (x == y) continue;
        // Any z below the coincidence is automatically ranked under both x
        // and y by both orders; it only needs differing contour sets.
        for (int z = 0; z < n; ++z) {
          if (top_pi.contains(z)) continue;
          if (!(upper_contour_set(pi, z) == upper_contour_set(pi_prime, z)))
            return Theorem2Result{false, Theorem2Witness{pi, pi_prime, x, y, z}};
        }
      }
    }
  }
  return Theorem2Result{true, std::nullopt};
}

SupportIdentificationResult support_identified(const ChoiceSystem& sys) {
  UniquenessResult u = is_unique(sys);
  if (u.unique) return SupportIdentificationResult{true, std::nullopt};
  auto reps = alternative_representations(build_flow_diagram(sys), *u.witness);
  return SupportIdentificationResult{false, std::move(reps)};
}

ChoiceSystem restrict_system(const ChoiceSystem& sys, Menu Y) {
  if (Y.empty()) throw std::domain_error("restrict_system: empty restriction set");
  if (!sys.universe().contains_menu(Y))
    throw std::domain_error("restrict_system: restriction set outside the universe");
  std::vector<int> elems;
  std::vector<std::string> labels;
  for (int x : Y) {
    elems.push_back(x);
    labels.push_back(sys.universe().label(x));
  }
  int m = static_cast<int>(elems.size());
  SubsetTable<Rational> probs(m);
  for (uint32_t bits = 1; bits < (uint32_t{1} << m); ++bits) {
    Menu small(bits);
    Menu big;
    for (int i : small) big = big.with(elems[i]);
    for (int i : small) probs.at(small, i) = sys.prob(big, elems[i]);
  }
  return ChoiceSystem(Universe(std::move(labels)), std::move(probs));
}

}  // namespace rumflow
