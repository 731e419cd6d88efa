#include "rumflow/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "rumflow/errors.hpp"

namespace rumflow {

std::vector<Path> all_paths(const Universe& u) {
  int n = u.size();
  if (n > kAllPathsMaxUniverse)
    throw CapError("all_paths: " + std::to_string(n) + " alternatives exceed the n <= " +
                   std::to_string(kAllPathsMaxUniverse) + " cap");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Path> out;
  do {
    out.push_back(order_to_path(LinearOrder(perm)));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

bool branching_by_definition(const Path& p, const Path& q) {
  int n = p.universe_size();
  if (q.universe_size() != n)
    throw std::domain_error("branching_by_definition: paths from different universes");
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i; j <= n - 1; ++j) {
      if (p.node(i - 1) == q.node(i - 1)) continue;
      if (p.node(j + 1) == q.node(j + 1)) continue;
      bool shared = true;
      for (int t = i; t <= j && shared; ++t) shared = p.node(t) == q.node(t);
      if (shared) return true;
    }
  }
  return false;
}

ExhaustiveUniquenessResult exhaustive_uniqueness(const FlowDiagram& diag) {
  int n = diag.size();
  if (n > kExhaustiveMaxUniverse)
    throw CapError("exhaustive_uniqueness: " + std::to_string(n) +
                   " alternatives exceed the n <= " + std::to_string(kExhaustiveMaxUniverse) +
                   " cap");
  std::vector<Path> supported;
  for (const Path& p : all_paths(diag.universe()))
    if (path_supported(diag, p)) supported.push_back(p);
  for (size_t a = 0; a + 1 < supported.size(); ++a)
    for (size_t b = a + 1; b < supported.size(); ++b)
      if (branching_by_definition(supported[a], supported[b]))
        return ExhaustiveUniquenessResult{false, std::make_pair(supported[a], supported[b])};
  return ExhaustiveUniquenessResult{true, std::nullopt};
}

Mixture random_mixture(const Universe& u, uint64_t seed) {
  int n = u.size();
  std::mt19937_64 rng(seed);
  auto draw = [&](uint64_t bound) { return rng() % bound; };  // own draw: stable across platforms

  uint64_t nfact = 1;
  for (int t = 2; t <= n; ++t) nfact *= static_cast<uint64_t>(t);
  uint64_t max_support = std::min<uint64_t>(nfact, 8);
  size_t support_size = static_cast<size_t>(1 + draw(max_support));

  std::set<std::vector<int>> orders;
  while (orders.size() < support_size) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int idx = n - 1; idx > 0; --idx) {
      int pick = static_cast<int>(draw(static_cast<uint64_t>(idx) + 1));
      std::swap(perm[idx], perm[pick]);
    }
    orders.insert(std::move(perm));
  }

  std::vector<std::pair<LinearOrder, Rational>> atoms;
  Rational total = 0;
  for (const auto& perm : orders) {
    uint64_t num = 1 + draw(120);  // sequenced separately: argument evaluation
    uint64_t den = 1 + draw(120);  // order must not affect the stream
    Rational w(num, den);
    total += w;
    atoms.emplace_back(LinearOrder(perm), std::move(w));
  }
  for (auto& [order, w] : atoms) w /= total;
  return Mixture(u, atoms);
}

bool single_crossing_brute_force(const Mixture& mix, const ExogenousOrder& exo) {
  int n = mix.size();
  if (exo.size() != n)
    throw std::domain_error("single_crossing_brute_force: exogenous order size mismatch");
  std::vector<LinearOrder> support = mix.support();
  if (support.size() > 6)
    throw CapError("single_crossing_brute_force: support larger than 6 orders");

  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(exo.at(a), exo.at(b));

  std::vector<size_t> perm(support.size());
  std::iota(perm.begin(), perm.end(), size_t{0});
  do {
    bool ok = true;
    for (const auto& [x, y] : pairs) {
      for (size_t a = 0; a < perm.size() && ok; ++a)
        for (size_t b = a; b < perm.size() && ok; ++b)
          if (support[perm[a]].prefers(x, y) && !support[perm[b]].prefers(x, y)) ok = false;
      if (!ok) break;
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace rumflow
