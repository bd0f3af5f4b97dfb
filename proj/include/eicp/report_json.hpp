#pragma once

#include <json.hpp>

#include "eicp/graph.hpp"
#include "eicp/rlcm.hpp"

namespace eicp {

/// Machine-readable solve report. Field set and names are a stable external
/// contract; eta is -1 while unsolved (timeout) and time_ms is the only
/// run-dependent field.
inline nlohmann::ordered_json solve_report_json(const SolveReport& r, const Graph& g) {
    nlohmann::ordered_json j;
    j["eta"] = r.eta;
    j["k"] = r.k;
    nlohmann::ordered_json witness = nlohmann::ordered_json::array();
    for (const Edge& e : r.witness)
        witness.push_back({g.label(e.u), g.label(e.v)});
    j["witness"] = witness;
    j["lb"] = r.lb;
    j["ub"] = r.ub;
    j["status"] = r.status == SolveStatus::Solved ? "solved" : "timeout";
    j["time_ms"] = r.wall_time_ms;
    j["reduction"] = {{"vertices_removed", r.reduction.vertices_removed},
                      {"edges_removed", r.reduction.edges_removed}};
    j["nodes"] = r.total_nodes;
    j["cuts"] = r.cuts;
    j["seed"] = r.seed;
    return j;
}

} // namespace eicp
