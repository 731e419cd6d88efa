// rumflow: exact tests for stochastic choice data.
//
// Reads mixture / choice-system JSON, runs the rationalizability, uniqueness
// and decomposition machinery, and writes canonical JSON verdicts.
// Exit codes: 0 computed (verdicts of any polarity), 2 malformed input,
// 3 not rationalizable where a representation is required, 4 cap refusal.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "rumflow/choice_system.hpp"
#include "rumflow/decomposition.hpp"
#include "rumflow/errors.hpp"
#include "rumflow/flow_diagram.hpp"
#include "rumflow/identification.hpp"
#include "rumflow/json_io.hpp"
#include "rumflow/mixture.hpp"
#include "rumflow/oracle.hpp"

namespace {

using nlohmann::json;
using namespace rumflow;

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 2;
constexpr int kExitNotRationalizable = 3;
constexpr int kExitCapExceeded = 4;

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json load_json(const std::string& path) {
  try {
    return json::parse(read_all(path));
  } catch (const json::exception& e) {
    throw InputError("invalid JSON in " + path + ": " + e.what());
  }
}

void write_all(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << content;
}

void emit(const std::string& out_path, const json& payload) {
  write_all(out_path, payload.dump(2) + "\n");
}

LinearOrder parse_order_flag(const Universe& u, const std::string& csv) {
  std::vector<int> ranking;
  std::string item;
  std::istringstream stream(csv);
  while (std::getline(stream, item, ',')) ranking.push_back(u.index_of(item));
  if (static_cast<int>(ranking.size()) != u.size())
    throw InputError("order flag must list every alternative exactly once: " + csv);
  return LinearOrder(std::move(ranking));
}

// Commands that require a representation to exist map the failure to exit 3,
// still emitting a machine-readable verdict.
template <typename F>
int guarded_by_rationalizability(const Universe& u, const std::string& out_path, F&& body) {
  try {
    return body();
  } catch (const NotRationalizableError& e) {
    emit(out_path, json{{"error", "not_rationalizable"},
                        {"violation", violation_to_json(u, e.violation())}});
    std::cerr << e.what() << "\n";
    return kExitNotRationalizable;
  }
}

void require_representable(const ChoiceSystem& sys, const FlowDiagram& diag) {
  if (auto bad = first_negative(diag))
    throw NotRationalizableError(
        "system is not rationalizable: q(" + sys.universe().label(bad->alternative) + ", " +
            format_menu(sys.universe(), bad->menu) + ") = " + to_string(bad->value),
        *bad);
}

int cmd_induce(const std::string& dist_path, const std::string& out_path) {
  Mixture mix = mixture_from_json(load_json(dist_path));
  emit(out_path, system_to_json(induce_choice_system(mix)));
  std::cerr << "induced choice probabilities over " << mix.size() << " alternatives from "
            << mix.atoms().size() << " atoms\n";
  return kExitOk;
}

int cmd_check(const std::string& sys_path, const std::string& out_path) {
  ChoiceSystem sys = system_from_json(load_json(sys_path));
  RationalizabilityResult result = is_rationalizable(sys);
  json payload{{"rationalizable", result.rationalizable}};
  if (result.violation)
    payload["violation"] = violation_to_json(sys.universe(), *result.violation);
  emit(out_path, payload);
  if (result.rationalizable) {
    std::cerr << "rationalizable\n";
    return kExitOk;
  }
  std::cerr << "not rationalizable: q(" << sys.universe().label(result.violation->alternative)
            << ", " << format_menu(sys.universe(), result.violation->menu)
            << ") = " << to_string(result.violation->value) << "\n";
  return kExitNotRationalizable;
}

int cmd_unique(const std::string& sys_path, const std::string& out_path, bool use_oracle) {
  ChoiceSystem sys = system_from_json(load_json(sys_path));
  return guarded_by_rationalizability(sys.universe(), out_path, [&] {
    if (use_oracle) {
      FlowDiagram diag = build_flow_diagram(sys);
      require_representable(sys, diag);
      ExhaustiveUniquenessResult result = exhaustive_uniqueness(diag);
      json payload{{"unique", result.unique}, {"method", "exhaustive"}};
      if (result.pair_found)
        payload["pair"] = json::array(
            {order_to_json(sys.universe(), path_to_order(result.pair_found->first)),
             order_to_json(sys.universe(), path_to_order(result.pair_found->second))});
      emit(out_path, payload);
      std::cerr << (result.unique ? "unique (exhaustive)\n" : "non-unique (exhaustive)\n");
      return kExitOk;
    }
    UniquenessResult result = is_unique(sys);
    json payload{{"unique", result.unique}};
    if (result.witness)
      payload["witness"] = branching_witness_to_json(sys.universe(), *result.witness);
    emit(out_path, payload);
    std::cerr << (result.unique ? "unique representation\n"
                                : "multiple representations exist\n");
    return kExitOk;
  });
}

int cmd_theorem2(const std::string& dist_path, const std::string& out_path) {
  Mixture mix = mixture_from_json(load_json(dist_path));
  Theorem2Result result = theorem2_check(mix);
  json payload{{"unique", result.unique}};
  if (result.witness)
    payload["witness"] = theorem2_witness_to_json(mix.universe(), *result.witness);
  emit(out_path, payload);
  std::cerr << (result.unique ? "unique representation\n" : "multiple representations exist\n");
  return kExitOk;
}

int cmd_support(const std::string& sys_path, const std::string& out_path) {
  ChoiceSystem sys = system_from_json(load_json(sys_path));
  return guarded_by_rationalizability(sys.universe(), out_path, [&] {
    SupportIdentificationResult result = support_identified(sys);
    json payload{{"identified", result.identified}};
    if (result.representations)
      payload["representations"] = json::array({mixture_to_json(result.representations->first),
                                                mixture_to_json(result.representations->second)});
    emit(out_path, payload);
    std::cerr << (result.identified ? "support identified\n"
                                    : "representations with different supports exist\n");
    return kExitOk;
  });
}

int cmd_represent(const std::string& sys_path, const std::string& out_path,
                  const std::string& seed_csv, bool with_trace) {
  ChoiceSystem sys = system_from_json(load_json(sys_path));
  return guarded_by_rationalizability(sys.universe(), out_path, [&] {
    FlowDiagram diag = build_flow_diagram(sys);
    require_representable(sys, diag);
    std::optional<Path> seed;
    if (!seed_csv.empty()) seed = order_to_path(parse_order_flag(sys.universe(), seed_csv));
    GreedyResult result = greedy_representation(diag, seed);
    if (with_trace)
      emit(out_path, json{{"representation", mixture_to_json(result.representation)},
                          {"trace", trace_to_json(sys.universe(), result.trace)}});
    else
      emit(out_path, mixture_to_json(result.representation));
    std::cerr << "decomposed into " << result.representation.atoms().size() << " atoms over "
              << result.trace.steps.size() << " steps\n";
    return kExitOk;
  });
}

int cmd_alternatives(const std::string& sys_path, const std::string& out_path) {
  ChoiceSystem sys = system_from_json(load_json(sys_path));
  return guarded_by_rationalizability(sys.universe(), out_path, [&] {
    UniquenessResult result = is_unique(sys);
    if (result.unique) {
      emit(out_path, json{{"unique", true}});
      std::cerr << "representation is unique; no alternative pair exists\n";
      return kExitOk;
    }
    auto [nu1, nu2] = alternative_representations(build_flow_diagram(sys), *result.witness);
    emit(out_path,
         json{{"unique", false},
              {"representations", json::array({mixture_to_json(nu1), mixture_to_json(nu2)})}});
    std::cerr << "built two representations with different supports\n";
    return kExitOk;
  });
}

int cmd_extreme(const std::string& sys_path, const std::string& out_path, uint64_t cap,
                uint64_t rng_seed) {
  ChoiceSystem sys = system_from_json(load_json(sys_path));
  return guarded_by_rationalizability(sys.universe(), out_path, [&] {
    FlowDiagram diag = build_flow_diagram(sys);
    require_representable(sys, diag);
    std::vector<Mixture> reps = enumerate_representations(diag, cap, rng_seed);
    json list = json::array();
    for (const Mixture& m : reps) list.push_back(mixture_to_json(m));
    emit(out_path, json{{"count", reps.size()}, {"representations", std::move(list)}});
    std::cerr << "found " << reps.size() << " distinct representations\n";
    return kExitOk;
  });
}

int cmd_scrum(const std::string& dist_path, const std::string& out_path,
              const std::string& order_csv, bool use_oracle) {
  Mixture mix = mixture_from_json(load_json(dist_path));
  ExogenousOrder exo = parse_order_flag(mix.universe(), order_csv);
  if (use_oracle) {
    bool ok = single_crossing_brute_force(mix, exo);
    emit(out_path, json{{"single_crossing", ok}, {"method", "brute-force"}});
    std::cerr << (ok ? "single-crossing (brute-force)\n" : "not single-crossing (brute-force)\n");
    return kExitOk;
  }
  ScrumResult result = scrum_check(mix, exo);
  emit(out_path, scrum_result_to_json(mix.universe(), result));
  std::cerr << (result.single_crossing ? "support admits a single-crossing ordering\n"
                                       : "no single-crossing ordering exists\n");
  return kExitOk;
}

int cmd_dot(const std::string& sys_path, const std::string& out_path, bool reduced) {
  ChoiceSystem sys = system_from_json(load_json(sys_path));
  return guarded_by_rationalizability(sys.universe(), out_path, [&] {
    FlowDiagram diag = build_flow_diagram(sys);
    if (reduced) require_representable(sys, diag);
    write_all(out_path, to_dot(diag, reduced ? DotStyle::kReduced : DotStyle::kFull));
    std::cerr << "wrote " << (reduced ? "reduced" : "full") << " diagram\n";
    return kExitOk;
  });
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact rationalizability, uniqueness and decomposition tests "
               "for stochastic choice data"};
  app.require_subcommand(1);

  std::string dist_path, sys_path, out_path = "-";
  std::string seed_csv, order_csv;
  bool with_trace = false, reduced = false, use_oracle = false;
  uint64_t cap = kDefaultOrderingCap, rng_seed = 0;

  auto add_out = [&](CLI::App* cmd) {
    cmd->add_option("-o,--output", out_path, "output file, \"-\" for stdout");
  };
  auto add_dist = [&](CLI::App* cmd) {
    cmd->add_option("--dist", dist_path, "mixture JSON file, \"-\" for stdin")->required();
  };
  auto add_system = [&](CLI::App* cmd) {
    cmd->add_option("--system", sys_path, "choice-system JSON file, \"-\" for stdin")->required();
  };

  CLI::App* induce = app.add_subcommand("induce", "choice probabilities induced by a mixture");
  add_dist(induce);
  add_out(induce);

  CLI::App* check = app.add_subcommand("check", "test rationalizability (non-negative polynomials)");
  add_system(check);
  add_out(check);

  CLI::App* unique = app.add_subcommand("unique", "test uniqueness of the representation");
  add_system(unique);
  add_out(unique);
  unique->add_flag("--oracle", use_oracle, "exhaustive path-pair scan (n <= 5)")->group("");

  CLI::App* theorem2 = app.add_subcommand("theorem2", "uniqueness test on a mixture's support");
  add_dist(theorem2);
  add_out(theorem2);

  CLI::App* support = app.add_subcommand("support", "test whether the support is identified");
  add_system(support);
  add_out(support);

  CLI::App* represent = app.add_subcommand("represent", "greedy decomposition into a mixture");
  add_system(represent);
  add_out(represent);
  represent->add_option("--seed-order", seed_csv, "comma-separated labels, best first");
  represent->add_flag("--trace", with_trace, "include the step-by-step trace");

  CLI::App* alternatives =
      app.add_subcommand("alternatives", "two representations with different supports");
  add_system(alternatives);
  add_out(alternatives);

  CLI::App* extreme = app.add_subcommand("extreme", "candidate extreme-point representations");
  add_system(extreme);
  add_out(extreme);
  extreme->add_option("--cap", cap, "max path orderings tried")->check(CLI::PositiveNumber);
  extreme->add_option("--rng-seed", rng_seed, "seed when sampling orderings");

  CLI::App* scrum = app.add_subcommand("scrum", "single-crossing check against an exogenous order");
  add_dist(scrum);
  add_out(scrum);
  scrum->add_option("--order", order_csv, "exogenous order, comma-separated labels")->required();
  scrum->add_flag("--oracle", use_oracle, "try all support orderings (support <= 6)")->group("");

  CLI::App* dot = app.add_subcommand("dot", "Graphviz export of the flow diagram");
  add_system(dot);
  add_out(dot);
  dot->add_flag("--reduced", reduced, "positive edges and their nodes only");

  try {
    app.parse(argc, argv);
    if (app.got_subcommand(induce)) return cmd_induce(dist_path, out_path);
    if (app.got_subcommand(check)) return cmd_check(sys_path, out_path);
    if (app.got_subcommand(unique)) return cmd_unique(sys_path, out_path, use_oracle);
    if (app.got_subcommand(theorem2)) return cmd_theorem2(dist_path, out_path);
    if (app.got_subcommand(support)) return cmd_support(sys_path, out_path);
    if (app.got_subcommand(represent)) return cmd_represent(sys_path, out_path, seed_csv, with_trace);
    if (app.got_subcommand(alternatives)) return cmd_alternatives(sys_path, out_path);
    if (app.got_subcommand(extreme)) return cmd_extreme(sys_path, out_path, cap, rng_seed);
    if (app.got_subcommand(scrum)) return cmd_scrum(dist_path, out_path, order_csv, use_oracle);
    if (app.got_subcommand(dot)) return cmd_dot(sys_path, out_path, reduced);
    return kExitBadInput;
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const CapError& e) {
    std::cerr << "refused: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
}
