#pragma once

#include <chrono>
#include <optional>
#include <string>

#include "json.hpp"

#include "drb/bondage.hpp"
#include "drb/drdf.hpp"
#include "drb/graph.hpp"
#include "drb/reduction.hpp"
#include "drb/solver.hpp"

namespace drb {

using json = nlohmann::ordered_json;

constexpr const char* kToolName = "drb";
constexpr const char* kToolVersion = "0.1.0";

json graph_summary(const Graph& g);
json edges_json(const EdgeSet& s);
json bound_report_json(const BoundReport& rep);
json reduction_report_json(const ReductionReport& rep);

/// Envelope every CLI command emits: tool/version/command/input/result plus
/// a timing object callers may strip for comparisons.
json run_report(const std::string& command, json input, json result, double elapsed_ms);

/// Deterministic check-suite builders. Each returns
///   {"name": ..., "pass": bool, ...}
/// and is byte-stable for a fixed scope across thread counts.
namespace checks {

json gamma_family_tables();                         // paths 1..15, cycles 3..14
json bondage_family_tables(int threads);            // paths, cycles, cliques, wheels
json multipartite_values(int threads);              // named multipartite instances
json multipartite_stretch(int threads, std::chrono::milliseconds budget);
json multipartite_otherwise_audit(int threads);     // the lightly-justified case
json noones_equivalence(int max_n, int threads);    // {0,1,2,3} vs {0,2,3} minima
json classifier_agreement(int max_n, int threads);  // small-gamma classification
json bound_audit(int max_n, int cert_max_n, int threads);
json tree_census(int max_n, int threads);
json reduction_satisfiable(int threads);            // the 26-vertex instance
json reduction_certificates(int threads);           // the 44-vertex instance
json reduction_unsatisfiable(int threads, std::chrono::milliseconds budget);
json graph6_roundtrip(int max_n, int threads);
json normalization_properties(int max_n, int threads);
json deletion_monotonicity(int max_n, int threads);
json dominating_vertex_rule(int max_n, int threads);
json planar_family_audit(int threads);

}  // namespace checks

}  // namespace drb
