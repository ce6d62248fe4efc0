#pragma once

#include "json.hpp"

#include "asymcolor/graph.hpp"
#include "asymcolor/oracle.hpp"
#include "asymcolor/planar_maps.hpp"
#include "asymcolor/special_graphs.hpp"
#include "asymcolor/symmetry.hpp"
#include "asymcolor/synthesizer.hpp"

namespace asymcolor::report {

using Json = nlohmann::ordered_json;

Json graph_json(const Graph& g);
Json coloring_json(const Graph& g, const EdgeColoring& c);
Json rotation_json(const Graph& g, const RotationSystem& r);
Json automorphism_json(const Graph& g, const Automorphism& a);
Json witness_json(const Graph& g, const Witness& w);
Json certificate_json(const Graph& g, const Certificate& c);
Json verification_json(const Graph& g, const VerificationReport& r);
Json exception_json(const ExceptionReason& r);
Json synthesis_json(const Graph& g, const SynthesisResult& r);
Json cross_check_json(const CrossCheckReport& r);

/// Reads the "coloring" array of a report back into a coloring of g.
EdgeColoring coloring_from_json(const Json& doc, const Graph& g);

/// Pretty-printed, trailing newline.
std::string dump(const Json& doc);

}  // namespace asymcolor::report
