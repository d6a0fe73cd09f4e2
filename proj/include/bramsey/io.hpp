#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "bramsey/bigraph.hpp"
#include "bramsey/constructions.hpp"
#include "bramsey/cycles.hpp"
#include "bramsey/search.hpp"

namespace bramsey {

/// Raised on malformed input; the message names the offending field.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Graph files carry {"left", "right", "edges"} with edges sorted
// lexicographically and duplicate-free; "rows_hex" (one lowercase hex mask
// per left vertex, bit j = right vertex j) is the compact alternative.
// Readers accept either form; a file carrying both must be self-consistent.
nlohmann::json graph_to_json(const BipartiteGraph& g, bool compact = false);
BipartiteGraph graph_from_json(const nlohmann::json& j);

nlohmann::json witness_to_json(const CycleWitness& w);
CycleWitness witness_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const ConstructionReport& r, bool compact = false);
ConstructionReport report_from_json(const nlohmann::json& j);

nlohmann::json outcome_to_json(const RamseyQuery& q, const SearchOutcome& o,
                               bool compact = false);

std::string verdict_name(Verdict v);

}  // namespace bramsey
