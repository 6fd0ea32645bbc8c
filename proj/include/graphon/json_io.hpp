#pragma once

#include <string>

#include <json.hpp>

#include "graphon/cospectral.hpp"
#include "graphon/cut_norm.hpp"
#include "graphon/densities.hpp"
#include "graphon/sampling.hpp"
#include "graphon/simple_graph.hpp"
#include "graphon/spectral.hpp"
#include "graphon/step_graphon.hpp"

namespace graphon {

// Field order in emitted documents follows insertion order.
using json = nlohmann::ordered_json;

json to_json(const StepGraphon& w);
StepGraphon step_graphon_from_json(const json& j);

json to_json(const SimpleGraph& g);
SimpleGraph simple_graph_from_json(const json& j);

// Whitespace edge-list format: header line "n <k>", one "a b" pair per line,
// 0-indexed vertices.
SimpleGraph simple_graph_from_text(const std::string& text);
std::string simple_graph_to_text(const SimpleGraph& g);

json to_json(const Spectrum& s);
Spectrum spectrum_from_json(const json& j);

json to_json(const Intertwiner& t);
Intertwiner intertwiner_from_json(const json& j);

json to_json(const CycleProfile& p);
CycleProfile cycle_profile_from_json(const json& j);

json to_json(const CutNormCertificate& c);
CutNormCertificate certificate_from_json(const json& j);

json to_json(const DiscriminationReport& r);
DiscriminationReport discrimination_from_json(const json& j);

json to_json(const ConvergenceReport& r);
ConvergenceReport convergence_from_json(const json& j);

json to_json(const Theorem42Report& r);
Theorem42Report theorem42_from_json(const json& j);

StepGraphon load_step_graphon(const std::string& path);

// Accepts either the JSON object form or edge-list text, sniffed by the
// first non-whitespace byte.
SimpleGraph load_simple_graph(const std::string& path);

} // namespace graphon
