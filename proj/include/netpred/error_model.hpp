#pragma once

#include <string>
#include <utility>
#include <vector>

#include "netpred/graph.hpp"
#include "netpred/requests.hpp"

namespace netpred {

// Matching cost of two same-kind requests, always measured in the original
// graph (no overlay). Terminal pairs of different priorities never match
// (kInfCost); same-priority pairs are measured in the subgraph G_j of their
// common priority.
Cost pair_matching_cost(ProblemKind kind, const Request& a, const Request& b,
                        const WeightedGraph& g);

// A (delta, D) error with its witness matching.
struct OutlierError {
    int delta = 0;
    Cost matching_cost = 0;
    std::vector<int> matched_requests;                // indices into R
    std::vector<int> matched_predictions;             // indices into Rhat
    std::vector<std::pair<int, int>> matching;        // (request idx, prediction idx)
};

struct ParetoPoint {
    int delta = 0;
    Cost min_matching_cost = 0;
    int k = 0;  // witness matching size
    OutlierError witness;
};

struct ParetoFrontier {
    std::vector<ParetoPoint> points;  // delta ascending, D strictly decreasing
};

// full pairwise matching-cost matrix (rows = R, cols = Rhat)
std::vector<std::vector<Cost>> matching_cost_matrix(const RequestSequence& R,
                                                    const PredictionSet& Rhat,
                                                    const WeightedGraph& g, ProblemKind kind);

ParetoFrontier pareto_frontier(const RequestSequence& R, const PredictionSet& Rhat,
                               const WeightedGraph& g, ProblemKind kind);

std::string frontier_to_csv(const ParetoFrontier& f);

}  // namespace netpred
