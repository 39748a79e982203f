#pragma once

#include <map>
#include <vector>

#include "netpred/error_model.hpp"
#include "netpred/framework.hpp"

namespace netpred {

// Soft-capacitated facility location via the copy-vertex transformation:
// each v gains a pendant copy v' holding the facility (bridge edge costs
// f_v / beta_v). All costs in the transformed instance are scaled by
// cost_scale so the bridge division is exact.
struct CapacitatedReduction {
    WeightedGraph transformed;
    std::vector<VertexId> copy_of;      // original vertex -> its copy
    std::vector<VertexId> original_of;  // copy -> original, -1 for originals
    std::vector<int> capacities;        // per original vertex
    Cost cost_scale = 1;
};

CapacitatedReduction capacitate_reduce(const WeightedGraph& g);

struct CapacitatedPlayback {
    std::map<VertexId, int> copies_opened;  // original vertex -> copies
    Cost opening_cost = 0;                  // transformed scale
    Cost connection_cost = 0;
    Cost total = 0;
};

// Replays a transformed run's actions on the capacitated instance; the
// resulting cost never exceeds the transformed run's cost.
CapacitatedPlayback capacitate_playback(const CapacitatedReduction& red, const RunReport& run);

// Priority Steiner forest: b parallel framework instances, instance j on the
// subgraph G_j with the priority-j slice of the prediction.
struct PriorityRunReport {
    std::vector<RunReport> per_class;          // index = priority - 1
    std::vector<ParetoFrontier> class_errors;  // per-class (delta_j, D_j) frontiers
    Cost cost_sum = 0;    // per-class totals summed (an edge may count per class)
    Cost cost_dedup = 0;  // union of bought elements, each costed once
};

PriorityRunReport priority_run(const WeightedGraph& g, const RequestSequence& R,
                               const PredictionSet& rhat, int b, const FrameworkConfig& base_cfg);

std::string priority_report_to_json_text(const PriorityRunReport& rep);

}  // namespace netpred
