#pragma once

#include <string>

#include "json.hpp"

#include "edgering/betti.hpp"
#include "edgering/budgets.hpp"
#include "edgering/classify.hpp"
#include "edgering/family_certificates.hpp"
#include "edgering/graph.hpp"
#include "edgering/numeric.hpp"
#include "edgering/polytope.hpp"

namespace edgering {

using nlohmann::json;

// Integers stay JSON numbers while they fit a double exactly; anything
// larger becomes a decimal string so output is lossless and byte-stable.
json int_json(const Int& x);
json rat_json(const Rat& x);  // canonical "p/q" string

json graph_json(const SimpleGraph& g);
json betti_json(const BettiTable& table);
json witness_json(const Witness& w);
json classification_json(const ClassificationReport& rep);
json scan_json(const ScanReport& rep);

// Command-level report builders (computation + assertions + serialization).
json analyze_report(const SimpleGraph& g, const Budgets& budgets);
json betti_report(const SimpleGraph& g, int j_max, const Budgets& budgets);
json lemma_report(const FamilySpec& spec, const Budgets& budgets);

// Human-readable view of any report; a pure formatting layer.
std::string render_table(const json& j);

}  // namespace edgering
