#pragma once

#include <string>

#include "json.hpp"
#include "rumflow/choice_system.hpp"
#include "rumflow/decomposition.hpp"
#include "rumflow/flow_diagram.hpp"
#include "rumflow/identification.hpp"
#include "rumflow/mixture.hpp"
#include "rumflow/rational.hpp"
#include "rumflow/universe.hpp"

namespace rumflow {

// Exact-rational text forms: "p/q", an integer "n", or a decimal "d.dd"
// (converted with its power-of-ten denominator). Throws InputError on
// anything else, including a zero denominator.
Rational parse_rational(const std::string& s);

// Accepts the string forms above plus integral JSON numbers. JSON floats are
// rejected: a binary double carries no declared denominator.
Rational rational_from_json(const nlohmann::json& j);

// Schema: {"alternatives": [...], "atoms": [{"order": [...], "weight": "p/q"}]}
Mixture mixture_from_json(const nlohmann::json& j);
nlohmann::json mixture_to_json(const Mixture& mix);

// Schema: {"alternatives": [...], "menus": [{"menu": [...], "probs": {...}}]}
// with every non-empty menu appearing exactly once.
ChoiceSystem system_from_json(const nlohmann::json& j);
nlohmann::json system_to_json(const ChoiceSystem& sys);

// Label-array renderings used inside witness and trace payloads.
nlohmann::json menu_to_json(const Universe& u, Menu m);
nlohmann::json order_to_json(const Universe& u, const LinearOrder& order);
LinearOrder order_from_json(const Universe& u, const nlohmann::json& j);

nlohmann::json violation_to_json(const Universe& u, const BmViolation& v);
nlohmann::json branching_witness_to_json(const Universe& u, const BranchingWitness& w);
nlohmann::json theorem2_witness_to_json(const Universe& u, const Theorem2Witness& w);
nlohmann::json trace_to_json(const Universe& u, const DecompositionTrace& trace);
nlohmann::json scrum_result_to_json(const Universe& u, const ScrumResult& result);

}  // namespace rumflow
