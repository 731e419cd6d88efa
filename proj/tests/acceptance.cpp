// Acceptance gate: ten self-contained criteria, one pass/fail line each.
// Every arithmetic comparison is exact; stated runtime budgets are enforced
// as part of the criterion. Exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "rumflow/decomposition.hpp"
#include "rumflow/flow_diagram.hpp"
#include "rumflow/identification.hpp"
#include "rumflow/oracle.hpp"

using namespace rumflow;
using fixtures::letters;
using fixtures::menu_of;
using fixtures::ord;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome fail(std::string detail) { return {false, std::move(detail)}; }

// Instance sets reused across criteria. Regenerated on demand; generation is
// deterministic in the seeds.
std::vector<Mixture> criterion2_instances() {
  std::vector<Mixture> out;
  Universe u3 = letters(3);
  for (uint64_t seed = 1; seed <= 1000; ++seed) out.push_back(random_mixture(u3, seed));
  for (int n = 1; n <= 5; ++n) {
    Universe u = letters(n);
    for (const Path& p : all_paths(u)) out.push_back(fixtures::point_mass(u, path_to_order(p)));
  }
  return out;
}

std::vector<Mixture> criterion3_instances() {
  return {fixtures::uniform_mixture(letters(4)), fixtures::uniform_mixture(letters(5))};
}

std::vector<Mixture> criterion4_instances() {
  std::vector<Mixture> out;
  for (int n : {4, 5}) {
    Universe u = letters(n);
    for (uint64_t seed = 1; seed <= 1000; ++seed) out.push_back(random_mixture(u, seed));
  }
  return out;
}

Outcome criterion1() {
  ChoiceSystem s1 = induce_choice_system(fixtures::fishburn_nu1());
  ChoiceSystem s2 = induce_choice_system(fixtures::fishburn_nu2());
  if (!(s1 == s2)) return fail("the two half-half mixtures induce different systems");

  FlowDiagram diag = build_flow_diagram(s1);
  ReducedDiagram red = reduced_diagram(diag);
  if (red.edges.size() != 8)
    return fail("expected 8 positive edges, got " + std::to_string(red.edges.size()));
  for (const auto& [from, removed] : red.edges)
    if (diag.weight(from, removed) != Rational(1, 2))
      return fail("positive edge with weight " + to_string(diag.weight(from, removed)));

  UniquenessResult uniq = is_unique(s1);
  if (uniq.unique) return fail("reported unique");
  Universe u = s1.universe();
  if (!uniq.witness || uniq.witness->merge_node != menu_of(u, "cd") ||
      uniq.witness->split_node != menu_of(u, "cd"))
    return fail("witness does not merge and split at {c,d}");
  return {};
}

Outcome criterion2() {
  for (const Mixture& mix : criterion2_instances()) {
    ChoiceSystem sys = induce_choice_system(mix);
    if (!is_unique(sys).unique) return fail("is_unique returned non-unique");
    if (!theorem2_check(mix).unique) return fail("theorem2_check returned non-unique");
    if (!support_identified(sys).identified) return fail("support reported unidentified");
  }
  return {};
}

Outcome criterion3() {
  for (const Mixture& mix : criterion3_instances()) {
    int n = mix.size();
    ChoiceSystem sys = induce_choice_system(mix);
    FlowDiagram diag = build_flow_diagram(sys);
    for (Menu menu : canonical_menus(n))
      for (int x : menu)
        if (diag.weight(menu, x) <= 0)
          return fail("non-positive polynomial at n = " + std::to_string(n));
    if (is_unique(sys).unique)
      return fail("uniform mixture reported unique at n = " + std::to_string(n));
  }
  return {};
}

Outcome criterion4() {
  for (const Mixture& mix : criterion4_instances()) {
    ChoiceSystem sys = induce_choice_system(mix);
    bool unique = is_unique(sys).unique;
    if (theorem2_check(mix).unique != unique) return fail("theorem2_check disagrees");
    SupportIdentificationResult sup = support_identified(sys);
    if (sup.identified != unique) return fail("support_identified disagrees");
    if (unique) continue;

    if (!sup.representations) return fail("non-unique instance without a witness pair");
    const auto& [nu1, nu2] = *sup.representations;
    if (!(induce_choice_system(nu1) == sys) || !(induce_choice_system(nu2) == sys))
      return fail("witness representation induces a different system");
    if (nu1 == nu2) return fail("witness representations are equal");
    std::set<LinearOrder> sup1, sup2;
    for (const LinearOrder& o : nu1.support()) sup1.insert(o);
    for (const LinearOrder& o : nu2.support()) sup2.insert(o);
    if (sup1 == sup2) return fail("witness representations share a support");
  }
  return {};
}

Outcome criterion5() {
  std::vector<Mixture> instances = {fixtures::fishburn_nu1()};
  for (std::vector<Mixture> (*gen)() :
       {&criterion2_instances, &criterion3_instances, &criterion4_instances})
    for (Mixture& mix : gen()) instances.push_back(std::move(mix));

  for (const Mixture& mix : instances) {
    FlowDiagram diag = build_flow_diagram(induce_choice_system(mix));
    bool oracle = exhaustive_uniqueness(diag).unique;
    bool detector = !find_branching_pair(diag).has_value();
    if (oracle != detector) return fail("oracle and detector disagree");
  }
  return {};
}

Outcome criterion6() {
  for (const Mixture& mix : criterion4_instances()) {
    ChoiceSystem sys = induce_choice_system(mix);
    FlowDiagram diag = build_flow_diagram(sys);
    GreedyResult res = greedy_representation(diag);
    if (!(induce_choice_system(res.representation) == sys))
      return fail("greedy result induces a different system");
    int n = sys.size();
    for (Menu menu : canonical_menus(n))
      for (int x : menu)
        if (res.trace.final_residual.at(menu, x) != 0) return fail("non-zero final residual");

    for (const LinearOrder& o : mix.support()) {
      Path seed = order_to_path(o);
      Rational min_edge = diag.weight(seed.node(0), seed.removed_at(0));
      for (int i = 1; i < n; ++i) {
        const Rational& w = diag.weight(seed.node(i), seed.removed_at(i));
        if (w < min_edge) min_edge = w;
      }
      GreedyResult seeded = greedy_representation(diag, seed);
      if (seeded.representation.weight(o) < min_edge)
        return fail("seeded run gave the seed less than its minimum edge weight");
      if (!(induce_choice_system(seeded.representation) == sys))
        return fail("seeded greedy result induces a different system");
      bool residual_clean = true;
      for (Menu menu : canonical_menus(n))
        for (int x : menu)
          if (seeded.trace.final_residual.at(menu, x) != 0) residual_clean = false;
      if (!residual_clean) return fail("non-zero final residual on a seeded trace");
    }
  }
  return {};
}

Outcome criterion7() {
  FlowDiagram diag = build_flow_diagram(induce_choice_system(fixtures::fishburn_nu1()));
  Universe u = diag.universe();
  int supported = 0;
  for (const Path& p : all_paths(u))
    if (path_supported(diag, p)) ++supported;
  if (supported != 4) return fail(std::to_string(supported) + " supported paths, expected 4");

  std::vector<Mixture> reps = enumerate_representations(diag);
  if (reps.size() != 2) return fail("found " + std::to_string(reps.size()) + " representations");
  if (!(reps[0] == fixtures::fishburn_nu1() && reps[1] == fixtures::fishburn_nu2()))
    return fail("representations differ from the two known extreme points");
  return {};
}

Outcome criterion8() {
  Universe u = letters(4);
  Mixture nu1 = fixtures::fishburn_nu1();
  Mixture nu2 = fixtures::fishburn_nu2();
  if (!scrum_check(nu1, ord(u, "abcd")).single_crossing)
    return fail("first worked example not single-crossing");
  if (!scrum_check(nu2, ord(u, "abdc")).single_crossing)
    return fail("second worked example not single-crossing");
  if (scrum_check(nu2, ord(u, "abcd")).single_crossing)
    return fail("third worked example reported single-crossing");

  std::vector<int> identity = {0, 1, 2, 3};
  LinearOrder exo(identity);
  int collected = 0;
  for (uint64_t seed = 1; collected < 200; ++seed) {
    Mixture mix = random_mixture(u, seed);
    if (mix.support().size() > 6) continue;
    ++collected;
    if (scrum_check(mix, exo).single_crossing != single_crossing_brute_force(mix, exo))
      return fail("relation verdict disagrees with brute force at seed " + std::to_string(seed));
  }
  return {};
}

Outcome criterion9() {
  Universe u = letters(5);
  int broken = 0;
  uint64_t first_bad = 0;
  for (uint64_t seed = 1; seed <= 200; ++seed) {
    ChoiceSystem sys = induce_choice_system(random_mixture(u, seed));
    bool full_non_unique = !is_unique(sys).unique;
    bool some_restriction_non_unique = false;
    for (int drop = 0; drop < 5; ++drop)
      if (!is_unique(restrict_system(sys, u.full_menu().without(drop))).unique)
        some_restriction_non_unique = true;
    if (full_non_unique != some_restriction_non_unique) {
      if (broken == 0) first_bad = seed;
      ++broken;
    }
  }
  if (broken > 0)
    return fail("biconditional fails on " + std::to_string(broken) +
                " of 200 instances (first at seed " + std::to_string(first_bad) +
                ": full system unique, a 4-element restriction non-unique)");
  return {};
}

Outcome criterion10() {
  for (int n = 1; n <= 5; ++n) {
    Universe u = letters(n);
    for (uint64_t seed = 1; seed <= 100; ++seed) {
      Mixture mix = random_mixture(u, seed);
      ChoiceSystem sys = induce_choice_system(mix);
      for (Menu menu : canonical_menus(n)) {
        for (int x : menu) {
          Rational recursive = bm_polynomial(sys, x, menu);
          if (recursive != contour_mass(mix, x, menu))
            return fail("polynomial differs from contour mass");
          if (recursive != bm_polynomial_mobius(sys, x, menu))
            return fail("recursive and alternating-sum forms disagree");
        }
      }
    }
  }
  return {};
}

struct Criterion {
  int id;
  const char* name;
  double budget_seconds;  // 0 = no stated budget
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "half-half example: identical systems, 8 half-weight edges, merge/split {c,d}", 1.0,
       criterion1},
      {2, "1000 random n=3 mixtures and all point masses n<=5 are unique", 10.0, criterion2},
      {3, "uniform mixtures n=4,5: all polynomials positive, non-unique", 10.0, criterion3},
      {4, "1000 random mixtures per n=4,5: tests agree, witness pairs check out", 120.0,
       criterion4},
      {5, "exhaustive path-pair oracle equals the merge/split detector", 300.0, criterion5},
      {6, "greedy decomposition round-trips, seeded weights, zero residuals", 0.0, criterion6},
      {7, "enumeration returns exactly the two known extreme points", 1.0, criterion7},
      {8, "single-crossing examples and 200 brute-force comparisons", 0.0, criterion8},
      {9, "200 random n=5 systems: non-unique iff some 4-element restriction is", 0.0,
       criterion9},
      {10, "500 random mixtures: polynomials equal contour masses everywhere", 0.0, criterion10},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    auto start = std::chrono::steady_clock::now();
    Outcome outcome = c.run();
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_seconds > 0 && elapsed > c.budget_seconds) {
      outcome.pass = false;
      if (!outcome.detail.empty()) outcome.detail += "; ";
      outcome.detail += "exceeded " + std::to_string(c.budget_seconds) + "s budget";
    }
    if (!outcome.pass) ++failures;
    std::printf("[%s] criterion %d: %s (%.2fs)%s%s\n", outcome.pass ? "PASS" : "FAIL", c.id,
                c.name, elapsed, outcome.detail.empty() ? "" : ": ",
                outcome.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
