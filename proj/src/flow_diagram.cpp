#include "rumflow/flow_diagram.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "rumflow/errors.hpp"

namespace rumflow {

FlowDiagram::FlowDiagram(Universe universe, SubsetTable<Rational> weights)
    : universe_(std::move(universe)), weights_(std::move(weights)) {
  if (weights_.universe_size() != universe_.size())
    throw std::domain_error("edge weight table does not match the universe size");
}

Rational FlowDiagram::inflow(Menu node) const {
  Rational total = 0;
  for (int y = 0; y < size(); ++y)
    if (!node.contains(y)) total += weights_.at(node.with(y), y);
  return total;
}

Rational FlowDiagram::outflow(Menu node) const {
  Rational total = 0;
  for (int x : node) total += weights_.at(node, x);
  return total;
}

Rational bm_polynomial(const ChoiceSystem& sys, int x, Menu A) {
  if (!A.contains(x)) throw std::domain_error("bm_polynomial: alternative not in the menu");
  uint32_t full = sys.universe().full_menu().bits();
  if (!sys.universe().contains_menu(A))
    throw std::domain_error("bm_polynomial: menu outside the universe");
  uint32_t comp = full & ~A.bits();

  // Memoize over all supersets of A, largest first, so each value's proper
  // supersets are already present when it is computed.
  std::vector<uint32_t> supersets;
  for (uint32_t t = comp;; t = (t - 1) & comp) {
    supersets.push_back(A.bits() | t);
    if (t == 0) break;
  }
  std::sort(supersets.begin(), supersets.end(), [](uint32_t a, uint32_t b) {
    return menu_canonical_less(Menu(a), Menu(b));
  });

  std::map<uint32_t, Rational> memo;
  for (uint32_t s : supersets) {
    Rational val = sys.prob(Menu(s), x);
    uint32_t rest = full & ~s;
    for (uint32_t t = rest; t != 0; t = (t - 1) & rest) val -= memo.at(s | t);
    memo.emplace(s, std::move(val));
  }
  return memo.at(A.bits());
}

Rational bm_polynomial_mobius(const ChoiceSystem& sys, int x, Menu A) {
  if (!A.contains(x)) throw std::domain_error("bm_polynomial_mobius: alternative not in the menu");
  if (!sys.universe().contains_menu(A))
    throw std::domain_error("bm_polynomial_mobius: menu outside the universe");
  uint32_t comp = sys.universe().full_menu().bits() & ~A.bits();
  Rational total = 0;
  for (uint32_t t = comp;; t = (t - 1) & comp) {
    if (std::popcount(t) % 2 == 0)
      total += sys.prob(Menu(A.bits() | t), x);
    else
      total -= sys.prob(Menu(A.bits() | t), x);
    if (t == 0) break;
  }
  return total;
}

Rational contour_mass(const Mixture& mix, int x, Menu A) {
  if (!A.contains(x)) throw std::domain_error("contour_mass: alternative not in the menu");
  if (!mix.universe().contains_menu(A))
    throw std::domain_error("contour_mass: menu outside the universe");
  // π ranks X∖A above x and x above A∖{x} exactly when the weak upper
  // contour set of x under π is (X∖A) ∪ {x}.
  Menu target((mix.universe().full_menu().bits() & ~A.bits()) | (uint32_t{1} << x));
  Rational total = 0;
  for (const auto& [order, w] : mix.atoms())
    if (upper_contour_set(order, x) == target) total += w;
  return total;
}

FlowDiagram build_flow_diagram(const ChoiceSystem& sys) {
  int n = sys.size();
  uint32_t full = sys.universe().full_menu().bits();
  SubsetTable<Rational> q(n);
  // Menus of decreasing cardinality: every proper superset's value is final
  // before it is subtracted.
  for (Menu A : canonical_menus(n)) {
    uint32_t comp = full & ~A.bits();
    for (int x : A) {
      Rational val = sys.prob(A, x);
      for (uint32_t t = comp; t != 0; t = (t - 1) & comp) val -= q.at(Menu(A.bits() | t), x);
      q.at(A, x) = std::move(val);
    }
  }
  return FlowDiagram(sys.universe(), std::move(q));
}

std::optional<BmViolation> first_negative(const FlowDiagram& diag) {
  for (Menu A : canonical_menus(diag.size()))
    for (int x : A)
      if (diag.weight(A, x) < 0) return BmViolation{x, A, diag.weight(A, x)};
  return std::nullopt;
}

RationalizabilityResult is_rationalizable(const ChoiceSystem& sys) {
  auto violation = first_negative(build_flow_diagram(sys));
  return RationalizabilityResult{!violation.has_value(), std::move(violation)};
}

bool is_conserving(const FlowDiagram& diag) {
  Menu full = diag.universe().full_menu();
  if (diag.outflow(full) != 1) return false;
  for (uint32_t bits = 1; bits < full.bits(); ++bits) {
    Menu node(bits);
    if (diag.inflow(node) != diag.outflow(node)) return false;
  }
  return true;
}

bool path_supported(const FlowDiagram& diag, const Path& path) {
  if (path.universe_size() != diag.size())
    throw std::domain_error("path does not match the diagram's universe");
  for (int i = 0; i < path.universe_size(); ++i)
    if (diag.weight(path.node(i), path.removed_at(i)) <= 0) return false;
  return true;
}

ReducedDiagram reduced_diagram(const FlowDiagram& diag) {
  if (auto bad = first_negative(diag))
    throw std::domain_error("reduced diagram undefined: negative weight " +
                            to_string(bad->value) + " on edge out of " +
                            format_menu(diag.universe(), bad->menu));
  ReducedDiagram out;
  std::vector<Menu> touched;
  for (Menu A : canonical_menus(diag.size()))
    for (int x : A)
      if (diag.weight(A, x) > 0) {
        out.edges.emplace_back(A, x);
        touched.push_back(A);
        touched.push_back(A.without(x));
      }
  std::sort(touched.begin(), touched.end(), menu_canonical_less);
  touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
  out.nodes = std::move(touched);
  return out;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string dot_node(const Universe& u, Menu m) {
  return "\"" + dot_escape(format_menu(u, m)) + "\"";
}

}  // namespace

std::string to_dot(const FlowDiagram& diag, DotStyle style) {
  const Universe& u = diag.universe();
  std::vector<Menu> nodes;
  std::vector<std::pair<Menu, int>> edges;
  if (style == DotStyle::kReduced) {
    ReducedDiagram view = reduced_diagram(diag);
    nodes = std::move(view.nodes);
    edges = std::move(view.edges);
  } else {
    nodes = canonical_menus(diag.size());
    nodes.push_back(Menu(0));
    for (Menu A : canonical_menus(diag.size()))
      for (int x : A) edges.emplace_back(A, x);
  }

  std::string out = "digraph flow {\n  rankdir=TB;\n";
  for (Menu m : nodes) out += "  " + dot_node(u, m) + ";\n";
  for (const auto& [from, x] : edges)
    out += "  " + dot_node(u, from) + " -> " + dot_node(u, from.without(x)) +
           " [label=\"" + to_string(diag.weight(from, x)) + "\"];\n";
  out += "}\n";
  return out;
}

}  // namespace rumflow
