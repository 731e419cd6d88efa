#include "rumflow/decomposition.hpp"

#include <algorithm>
#include <bitset>
#include <numeric>
#include <random>
#include <set>

#include "rumflow/errors.hpp"

namespace rumflow {

namespace {

constexpr size_t kMaxExoPairs = kMaxAlternatives * (kMaxAlternatives - 1) / 2;

SubsetTable<Rational> copy_weights(const FlowDiagram& diag) {
  SubsetTable<Rational> q(diag.size());
  for (Menu A : canonical_menus(diag.size()))
    for (int x : A) q.at(A, x) = diag.weight(A, x);
  return q;
}

void require_decomposable(const FlowDiagram& diag, const char* who) {
  if (auto bad = first_negative(diag))
    throw std::domain_error(std::string(who) + ": negative edge weight " + to_string(bad->value) +
                            " out of " + format_menu(diag.universe(), bad->menu));
  if (!is_conserving(diag))
    throw std::domain_error(std::string(who) + ": diagram is not flow-conserving");
}

Rational min_along(const SubsetTable<Rational>& q, const Path& p) {
  Rational m = q.at(p.node(0), p.removed_at(0));
  for (int t = 1; t < p.universe_size(); ++t) {
    const Rational& v = q.at(p.node(t), p.removed_at(t));
    if (v < m) m = v;
  }
  return m;
}

void subtract_along(SubsetTable<Rational>& q, const Path& p, const Rational& f) {
  for (int t = 0; t < p.universe_size(); ++t) q.at(p.node(t), p.removed_at(t)) -= f;
}

// Completes a path through the edge from → from∖{removed} in the residual,
// extending by lexicographically smallest positive edges both ways. The
// residual stays conserving between steps, so extension never gets stuck.
Path complete_path_through(const SubsetTable<Rational>& q, Menu full, Menu from, int removed) {
  std::vector<Menu> nodes;
  Menu cur = from;
  while (!(cur == full)) {
    int pick = -1;
    for (int y = 0; y < full.size(); ++y) {
      if (cur.contains(y)) continue;
      if (q.at(cur.with(y), y) > 0) {
        pick = y;
        break;
      }
    }
    if (pick < 0) throw std::domain_error("residual lost conservation during path completion");
    cur = cur.with(pick);
    nodes.push_back(cur);
  }
  std::reverse(nodes.begin(), nodes.end());
  nodes.push_back(from);
  cur = from.without(removed);
  nodes.push_back(cur);
  while (!cur.empty()) {
    int pick = -1;
    for (int x : cur) {
      if (q.at(cur, x) > 0) {
        pick = x;
        break;
      }
    }
    if (pick < 0) throw std::domain_error("residual lost conservation during path completion");
    cur = cur.without(pick);
    nodes.push_back(cur);
  }
  return Path(std::move(nodes));
}

bool residual_is_zero(const SubsetTable<Rational>& q, int n) {
  for (Menu A : canonical_menus(n))
    for (int x : A)
      if (q.at(A, x) != 0) return false;
  return true;
}

}  // namespace

GreedyResult greedy_representation(const FlowDiagram& diag, const std::optional<Path>& seed) {
  require_decomposable(diag, "greedy_representation");
  int n = diag.size();
  Menu full = diag.universe().full_menu();
  SubsetTable<Rational> residual = copy_weights(diag);
  std::vector<DecompositionStep> steps;
  std::vector<std::pair<LinearOrder, Rational>> atoms;

  if (seed) {
    if (seed->universe_size() != n)
      throw std::domain_error("greedy_representation: seed path does not match the universe");
    Rational r = min_along(residual, *seed);
    if (r <= 0) throw std::domain_error("greedy_representation: seed path is not supported");
    subtract_along(residual, *seed, r);
    atoms.emplace_back(path_to_order(*seed), r);
    steps.push_back(DecompositionStep{*seed, std::move(r)});
  }

  for (;;) {
    // Globally smallest strictly positive edge; canonical scan keeps the
    // first attaining edge on ties.
    bool found = false;
    Rational best;
    Menu best_menu;
    int best_elem = 0;
    for (Menu A : canonical_menus(n)) {
      for (int x : A) {
        const Rational& v = residual.at(A, x);
        if (v > 0 && (!found || v < best)) {
          found = true;
          best = v;
          best_menu = A;
          best_elem = x;
        }
      }
    }
    if (!found) break;

    Path p = complete_path_through(residual, full, best_menu, best_elem);
    Rational f = min_along(residual, p);  // equals `best`: every edge on p is ≥ the global minimum
    subtract_along(residual, p, f);
    atoms.emplace_back(path_to_order(p), f);
    steps.push_back(DecompositionStep{std::move(p), std::move(f)});
  }

  if (!residual_is_zero(residual, n))
    throw std::logic_error("greedy_representation: non-zero residual after termination");
  Mixture rep(diag.universe(), atoms);
  return GreedyResult{std::move(rep), DecompositionTrace{std::move(steps), std::move(residual)}};
}

namespace {

FlowEdge path_edge(const Path& p, int t) { return FlowEdge{p.node(t), p.removed_at(t)}; }

bool splice_equals(const Path& head, const Path& tail, int j, const Path& candidate) {
  for (int t = 0; t <= j; ++t)
    if (!(candidate.node(t) == head.node(t))) return false;
  for (int t = j + 1; t <= head.universe_size(); ++t)
    if (!(candidate.node(t) == tail.node(t))) return false;
  return true;
}

void validate_witness(const FlowDiagram& diag, const BranchingWitness& w, int i, int j) {
  int n = diag.size();
  auto fail = [](const std::string& msg) {
    throw std::domain_error("alternative_representations: " + msg);
  };
  if (w.rho.universe_size() != n || w.rho_prime.universe_size() != n ||
      w.rho2.universe_size() != n || w.rho3.universe_size() != n)
    fail("witness paths do not match the diagram's universe");
  if (i < 1 || j < i || j > n - 1) fail("merge/split levels violate the index bounds");
  if (!(w.rho.node(i) == w.merge_node) || !(w.rho_prime.node(i) == w.merge_node))
    fail("paths do not pass through the merge node");
  for (int t = i; t <= j; ++t)
    if (!(w.rho.node(t) == w.rho_prime.node(t))) fail("shared chain mismatch");
  if (!(w.rho.node(j) == w.split_node)) fail("paths do not pass through the split node");
  if (w.rho.node(i - 1) == w.rho_prime.node(i - 1)) fail("paths agree above the merge node");
  if (w.rho.node(j + 1) == w.rho_prime.node(j + 1)) fail("paths agree below the split node");
  if (!splice_equals(w.rho, w.rho_prime, j, w.rho2) ||
      !splice_equals(w.rho_prime, w.rho, j, w.rho3))
    fail("tail-exchanged paths are not the splices of rho and rho_prime");
  if (!path_supported(diag, w.rho) || !path_supported(diag, w.rho_prime) ||
      !path_supported(diag, w.rho2) || !path_supported(diag, w.rho3))
    fail("witness paths must all be supported");
  if (!(w.in_edges[0] == path_edge(w.rho, i - 1)) ||
      !(w.in_edges[1] == path_edge(w.rho_prime, i - 1)))
    fail("in-edges do not match the paths' entries into the merge node");
  if (!(w.out_edges[0] == path_edge(w.rho, j)) || !(w.out_edges[1] == path_edge(w.rho_prime, j)))
    fail("out-edges do not match the paths' exits from the split node");
}

}  // namespace

std::pair<Mixture, Mixture> alternative_representations(const FlowDiagram& diag,
                                                        const BranchingWitness& w) {
  require_decomposable(diag, "alternative_representations");
  int n = diag.size();
  int i = n - w.merge_node.size();
  int j = n - w.split_node.size();
  validate_witness(diag, w, i, j);

  auto weight_at = [&](const Path& p, int t) { return diag.weight(p.node(t), p.removed_at(t)); };
  Rational r = weight_at(w.rho, 0);
  for (int t = 1; t < n; ++t) r = std::min(r, weight_at(w.rho, t));
  for (int t = 0; t < n; ++t) r = std::min(r, weight_at(w.rho_prime, t));

  // Relabel so that some edge of weight r lies on both seed paths: the head
  // of rho and the shared chain sit on rho ∩ rho2 already; the other three
  // regions need a swap.
  const Path* seed1 = &w.rho;
  const Path* seed2 = &w.rho2;
  auto region_has_min = [&](const Path& p, int from, int to) {
    for (int t = from; t < to; ++t)
      if (weight_at(p, t) == r) return true;
    return false;
  };
  if (region_has_min(w.rho, 0, j)) {
    // keep labels
  } else if (region_has_min(w.rho, j, n)) {
    seed2 = &w.rho3;
  } else if (region_has_min(w.rho_prime, 0, i)) {
    seed1 = &w.rho_prime;
    seed2 = &w.rho3;
  } else {
    seed1 = &w.rho_prime;
    seed2 = &w.rho2;
  }

  Mixture nu1 = greedy_representation(diag, *seed1).representation;
  Mixture nu2 = greedy_representation(diag, *seed2).representation;
  return {std::move(nu1), std::move(nu2)};
}

std::vector<Mixture> enumerate_representations(const FlowDiagram& diag, uint64_t cap,
                                               uint64_t rng_seed) {
  require_decomposable(diag, "enumerate_representations");
  if (cap == 0) throw std::domain_error("enumerate_representations: cap must be at least 1");
  int n = diag.size();
  Menu full = diag.universe().full_menu();

  // Supported paths in lexicographic order of their orders (depth-first,
  // smallest element first).
  std::vector<Path> paths;
  std::vector<Menu> stack{full};
  auto dfs = [&](auto&& self, Menu cur) -> void {
    if (cur.empty()) {
      if (paths.size() >= kMaxEnumerationPaths)
        throw CapError("enumerate_representations: more than " +
                       std::to_string(kMaxEnumerationPaths) + " supported paths");
      paths.emplace_back(stack);
      return;
    }
    for (int x : cur) {
      if (diag.weight(cur, x) > 0) {
        stack.push_back(cur.without(x));
        self(self, cur.without(x));
        stack.pop_back();
      }
    }
  };
  dfs(dfs, full);
  const size_t k = paths.size();

  // All k! orderings fit under the cap?
  bool exhaustive = true;
  uint64_t fact = 1;
  for (uint64_t t = 2; t <= k; ++t) {
    if (fact > cap / t) {
      exhaustive = false;
      break;
    }
    fact *= t;
  }
  if (exhaustive) exhaustive = fact <= cap;

  std::set<Mixture> results;
  auto run_ordering = [&](const std::vector<size_t>& perm) {
    SubsetTable<Rational> residual = copy_weights(diag);
    std::vector<std::pair<LinearOrder, Rational>> atoms;
    bool assigned = true;
    while (assigned) {  // a single sweep provably drains the residual; the
      assigned = false;  // second confirms it
      for (size_t idx : perm) {
        Rational f = min_along(residual, paths[idx]);
        if (f > 0) {
          subtract_along(residual, paths[idx], f);
          atoms.emplace_back(path_to_order(paths[idx]), std::move(f));
          assigned = true;
        }
      }
    }
    if (!residual_is_zero(residual, n))
      throw std::logic_error("enumerate_representations: non-zero residual");
    results.insert(Mixture(diag.universe(), atoms));
  };

  std::vector<size_t> perm(k);
  std::iota(perm.begin(), perm.end(), size_t{0});
  if (exhaustive) {
    do {
      run_ordering(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    // Own bounded draws keep the sampled orderings identical across
    // platforms for a given seed.
    std::mt19937_64 rng(rng_seed);
    for (uint64_t t = 0; t < cap; ++t) {
      std::iota(perm.begin(), perm.end(), size_t{0});
      for (size_t idx = k - 1; idx > 0; --idx) {
        size_t pick = static_cast<size_t>(rng() % (idx + 1));
        std::swap(perm[idx], perm[pick]);
      }
      run_ordering(perm);
    }
  }
  return std::vector<Mixture>(results.begin(), results.end());
}

ScrumResult scrum_check(const Mixture& mix, const ExogenousOrder& exo) {
  int n = mix.size();
  if (exo.size() != n)
    throw std::domain_error("scrum_check: exogenous order must rank the mixture's universe");
  std::vector<LinearOrder> support = mix.support();
  const size_t k = support.size();

  // ▷-pairs (x, y) with x ▷ y, scanned by the exogenous ranking.
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(exo.at(a), exo.at(b));

  std::vector<std::bitset<kMaxExoPairs>> agree(k);
  for (size_t s = 0; s < k; ++s)
    for (size_t p = 0; p < pairs.size(); ++p)
      agree[s][p] = support[s].prefers(pairs[p].first, pairs[p].second);

  // π′ must precede π when π agrees with ▷ on some pair π′ does not; a cycle
  // in that relation always contains a mutual pair, so mutual pairs are the
  // whole acyclicity test.
  for (size_t a = 0; a + 1 < k; ++a) {
    for (size_t b = a + 1; b < k; ++b) {
      auto only_a = agree[a] & ~agree[b];
      auto only_b = agree[b] & ~agree[a];
      if (only_a.any() && only_b.any()) {
        size_t pa = 0, pb = 0;
        while (!only_a[pa]) ++pa;
        while (!only_b[pb]) ++pb;
        return ScrumResult{false, std::nullopt,
                           ScrumConflict{support[a], support[b], pairs[pa], pairs[pb]}};
      }
    }
  }

  // Agreement sets form a chain; ascending size is its unique topological
  // order. The index tie-break is unreachable (distinct orders have distinct
  // agreement sets) but keeps the sort total.
  std::vector<size_t> idx(k);
  std::iota(idx.begin(), idx.end(), size_t{0});
  std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
    if (agree[a].count() != agree[b].count()) return agree[a].count() < agree[b].count();
    return a < b;
  });
  std::vector<LinearOrder> ordering;
  ordering.reserve(k);
  for (size_t s : idx) ordering.push_back(support[s]);

  // The relation method is derived, not quoted; re-verify the output against
  // the raw definition so a derivation slip cannot return a wrong ordering.
  for (const auto& [x, y] : pairs)
    for (size_t a = 0; a < k; ++a)
      for (size_t b = a; b < k; ++b)
        if (ordering[a].prefers(x, y) && !ordering[b].prefers(x, y))
          throw std::logic_error("scrum_check: ordering failed post-hoc verification");

  return ScrumResult{true, std::move(ordering), std::nullopt};
}

}  // namespace rumflow
