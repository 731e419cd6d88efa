#include "rumflow/json_io.hpp"

#include <algorithm>
#include <cctype>

#include "rumflow/errors.hpp"

namespace rumflow {

namespace {

using nlohmann::json;

bool all_digits(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](unsigned char c) { return std::isdigit(c) != 0; });
}

[[noreturn]] void bad_rational(const std::string& s) {
  throw InputError("not a valid rational: \"" + s + "\"");
}

// Integer from a digit string. Strips leading zeros first: the multiprecision
// string constructor would read them as an octal prefix.
Integer from_digits(const std::string& digits) {
  size_t first = digits.find_first_not_of('0');
  return first == std::string::npos ? Integer(0) : Integer(digits.substr(first));
}

const json& require_key(const json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string(where) + ": missing \"" + key + "\"");
  return j.at(key);
}

std::vector<std::string> string_array(const json& j, const char* where) {
  if (!j.is_array()) throw InputError(std::string(where) + ": expected an array of strings");
  std::vector<std::string> out;
  for (const auto& item : j) {
    if (!item.is_string()) throw InputError(std::string(where) + ": expected an array of strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

}  // namespace

Rational parse_rational(const std::string& s) {
  std::string body = s;
  bool negative = false;
  if (!body.empty() && body[0] == '-') {
    negative = true;
    body = body.substr(1);
  }
  if (body.empty()) bad_rational(s);

  Rational value;
  if (auto slash = body.find('/'); slash != std::string::npos) {
    std::string num = body.substr(0, slash), den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_rational(s);
    Integer d = from_digits(den);
    if (d == 0) throw InputError("zero denominator in rational: \"" + s + "\"");
    value = Rational(from_digits(num), d);
  } else if (auto dot = body.find('.'); dot != std::string::npos) {
    std::string whole = body.substr(0, dot), frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) bad_rational(s);
    Integer scale = 1;
    for (size_t i = 0; i < frac.size(); ++i) scale *= 10;
    value = Rational(from_digits(whole + frac), scale);
  } else {
    if (!all_digits(body)) bad_rational(s);
    value = Rational(from_digits(body));
  }
  return negative ? -value : value;
}

Rational rational_from_json(const nlohmann::json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<int64_t>());
  if (j.is_number_unsigned()) return Rational(j.get<uint64_t>());
  if (j.is_number_float())
    throw InputError("floating-point numbers are not accepted; write rationals as strings "
                     "like \"1/3\" or \"0.25\"");
  throw InputError("expected a rational (string \"p/q\" or integer), got " + j.dump());
}

LinearOrder order_from_json(const Universe& u, const nlohmann::json& j) {
  std::vector<int> ranking;
  for (const std::string& label : string_array(j, "order")) ranking.push_back(u.index_of(label));
  if (static_cast<int>(ranking.size()) != u.size())
    throw InputError("order must rank every alternative exactly once");
  return LinearOrder(std::move(ranking));
}

Mixture mixture_from_json(const nlohmann::json& j) {
  Universe u(string_array(require_key(j, "alternatives", "mixture"), "alternatives"));
  const json& atoms_json = require_key(j, "atoms", "mixture");
  if (!atoms_json.is_array()) throw InputError("mixture: \"atoms\" must be an array");
  std::vector<std::pair<LinearOrder, Rational>> atoms;
  for (const auto& atom : atoms_json) {
    LinearOrder order = order_from_json(u, require_key(atom, "order", "atom"));
    atoms.emplace_back(std::move(order), rational_from_json(require_key(atom, "weight", "atom")));
  }
  return Mixture(std::move(u), atoms);
}

nlohmann::json mixture_to_json(const Mixture& mix) {
  const Universe& u = mix.universe();
  json alternatives = json::array();
  for (int x = 0; x < u.size(); ++x) alternatives.push_back(u.label(x));
  json atoms = json::array();
  for (const auto& [order, w] : mix.atoms())
    atoms.push_back({{"order", order_to_json(u, order)}, {"weight", to_string(w)}});
  return json{{"alternatives", std::move(alternatives)}, {"atoms", std::move(atoms)}};
}

ChoiceSystem system_from_json(const nlohmann::json& j) {
  Universe u(string_array(require_key(j, "alternatives", "system"), "alternatives"));
  int n = u.size();
  const json& menus = require_key(j, "menus", "system");
  if (!menus.is_array()) throw InputError("system: \"menus\" must be an array");

  SubsetTable<Rational> probs(n);
  std::vector<bool> seen(size_t{1} << n, false);
  for (const auto& entry : menus) {
    Menu menu;
    std::vector<std::string> labels = string_array(require_key(entry, "menu", "menu entry"), "menu");
    for (const std::string& label : labels) {
      int x = u.index_of(label);
      if (menu.contains(x)) throw InputError("menu lists alternative twice: " + label);
      menu = menu.with(x);
    }
    if (menu.empty()) throw InputError("empty menu in system file");
    if (seen[menu.bits()])
      throw InputError("menu appears twice in system file: " + format_menu(u, menu));
    seen[menu.bits()] = true;

    const json& probs_json = require_key(entry, "probs", "menu entry");
    if (!probs_json.is_object()) throw InputError("\"probs\" must map labels to rationals");
    int filled = 0;
    for (const auto& [label, value] : probs_json.items()) {
      int x = u.index_of(label);
      if (!menu.contains(x))
        throw InputError("probability given for " + label + " outside menu " +
                         format_menu(u, menu));
      probs.at(menu, x) = rational_from_json(value);
      ++filled;
    }
    if (filled != menu.size())
      throw InputError("menu " + format_menu(u, menu) + " needs a probability for each member");
  }
  for (uint32_t bits = 1; bits < (uint32_t{1} << n); ++bits)
    if (!seen[bits]) throw InputError("system file is missing menu " + format_menu(u, Menu(bits)));
  return ChoiceSystem(std::move(u), std::move(probs));
}

nlohmann::json system_to_json(const ChoiceSystem& sys) {
  const Universe& u = sys.universe();
  int n = sys.size();
  json alternatives = json::array();
  for (int x = 0; x < n; ++x) alternatives.push_back(u.label(x));

  // File order: menus by ascending cardinality, then ascending bit pattern.
  std::vector<Menu> menus = canonical_menus(n);
  std::sort(menus.begin(), menus.end(), [](Menu a, Menu b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  });
  json entries = json::array();
  for (Menu menu : menus) {
    json probs = json::object();
    for (int x : menu) probs[u.label(x)] = to_string(sys.prob(menu, x));
    entries.push_back({{"menu", menu_to_json(u, menu)}, {"probs", std::move(probs)}});
  }
  return json{{"alternatives", std::move(alternatives)}, {"menus", std::move(entries)}};
}

nlohmann::json menu_to_json(const Universe& u, Menu m) {
  json out = json::array();
  for (int x : m) out.push_back(u.label(x));
  return out;
}

nlohmann::json order_to_json(const Universe& u, const LinearOrder& order) {
  json out = json::array();
  for (int p = 0; p < order.size(); ++p) out.push_back(u.label(order.at(p)));
  return out;
}

nlohmann::json violation_to_json(const Universe& u, const BmViolation& v) {
  return json{{"alternative", u.label(v.alternative)},
              {"menu", menu_to_json(u, v.menu)},
              {"value", to_string(v.value)}};
}

nlohmann::json branching_witness_to_json(const Universe& u, const BranchingWitness& w) {
  return json{{"rho", order_to_json(u, path_to_order(w.rho))},
              {"rho_prime", order_to_json(u, path_to_order(w.rho_prime))},
              {"rho2", order_to_json(u, path_to_order(w.rho2))},
              {"rho3", order_to_json(u, path_to_order(w.rho3))},
              {"merge_node", menu_to_json(u, w.merge_node)},
              {"split_node", menu_to_json(u, w.split_node)}};
}

nlohmann::json theorem2_witness_to_json(const Universe& u, const Theorem2Witness& w) {
  return json{{"pi", order_to_json(u, w.pi)},
              {"pi_prime", order_to_json(u, w.pi_prime)},
              {"x", u.label(w.x)},
              {"y", u.label(w.y)},
              {"z", u.label(w.z)}};
}

nlohmann::json trace_to_json(const Universe& u, const DecompositionTrace& trace) {
  json steps = json::array();
  for (const auto& step : trace.steps)
    steps.push_back({{"order", order_to_json(u, path_to_order(step.path))},
                     {"flow", to_string(step.flow)}});
  return steps;
}

nlohmann::json scrum_result_to_json(const Universe& u, const ScrumResult& result) {
  if (result.single_crossing) {
    json ordering = json::array();
    for (const LinearOrder& order : *result.ordering) ordering.push_back(order_to_json(u, order));
    return json{{"single_crossing", true}, {"ordering", std::move(ordering)}};
  }
  const ScrumConflict& c = *result.conflict;
  json conflict{{"pi", order_to_json(u, c.pi)},
                {"pi_prime", order_to_json(u, c.pi_prime)},
                {"pi_only", json::array({u.label(c.pi_only.first), u.label(c.pi_only.second)})},
                {"pi_prime_only",
                 json::array({u.label(c.pi_prime_only.first), u.label(c.pi_prime_only.second)})}};
  return json{{"single_crossing", false}, {"conflict", std::move(conflict)}};
}

}  // namespace rumflow
