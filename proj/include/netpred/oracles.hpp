#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "netpred/error_model.hpp"
#include "netpred/graph.hpp"
#include "netpred/requests.hpp"

namespace netpred {

// Brute-force optimum solvers for the invariant suites. Deliberately simple
// and kept implementation-independent from the approximate/online code: all
// distances here come from a Floyd-Warshall closure, not the engines'
// Dijkstra.
struct OracleBudget {
    int max_terminals = 12;       // Dreyfus-Wagner
    int max_edges_subset = 16;    // Steiner forest enumeration
    int max_facilities = 15;      // full facility-subset enumeration
    int max_vertices = 256;       // all-pairs closure
    long long max_combinations = 4'000'000;
};

class OracleRefusal : public std::runtime_error {
  public:
    explicit OracleRefusal(const std::string& what) : std::runtime_error(what) {}
};

struct SteinerTreeResult {
    Cost cost = 0;
    std::vector<EdgeId> edges;
};

// Dreyfus-Wagner over all terminal subsets: solve(mask) is the exact optimum
// connecting {terminals in mask} with the root. Shared by exact Steiner tree
// and the prize-collecting comparisons, which need every subset anyway.
class SteinerTreeOracle {
  public:
    SteinerTreeOracle(const WeightedGraph& g, std::vector<VertexId> distinct_terminals,
                      VertexId root, const OracleBudget& budget = {});

    int terminal_count() const { return static_cast<int>(terms_.size()); }
    const std::vector<VertexId>& terminals() const { return terms_; }
    Cost cost(unsigned mask) const;
    std::vector<EdgeId> tree_edges(unsigned mask) const;

  private:
    const WeightedGraph* g_;
    std::vector<VertexId> terms_;
    VertexId root_;
    std::vector<std::vector<Cost>> dist_;
    std::vector<std::vector<EdgeId>> hop_edge_;
    std::vector<std::vector<Cost>> dp_;        // closed
    std::vector<std::vector<Cost>> dp_merge_;  // before metric closure
    void append_path(VertexId u, VertexId v, std::vector<EdgeId>& out) const;
    void reconstruct(unsigned mask, VertexId v, std::vector<EdgeId>& out) const;
};

SteinerTreeResult exact_steiner_tree(const WeightedGraph& g, const std::vector<VertexId>& terminals,
                                     VertexId root, const OracleBudget& budget = {});

// Exhaustive edge-subset table for Steiner forest style questions.
struct ForestEnumeration {
    std::vector<Cost> cost;               // per edge mask
    std::vector<unsigned> satisfied;      // per edge mask, bitmask over pairs
    int pair_count = 0;
};
ForestEnumeration enumerate_forests(const WeightedGraph& g,
                                    const std::vector<std::pair<VertexId, VertexId>>& pairs,
                                    const std::vector<int>& priorities,
                                    const OracleBudget& budget = {});

SteinerTreeResult exact_steiner_forest(const WeightedGraph& g,
                                       const std::vector<std::pair<VertexId, VertexId>>& pairs,
                                       const OracleBudget& budget = {});

struct FacilityLocationResult {
    Cost cost = 0;
    Cost opening_cost = 0;
    Cost connection_cost = 0;
    std::vector<VertexId> open;
};
FacilityLocationResult exact_facility_location(const WeightedGraph& g,
                                               const std::vector<VertexId>& clients,
                                               const OracleBudget& budget = {});

Cost exact_capacitated_fl(const WeightedGraph& g, const std::vector<VertexId>& clients,
                          const OracleBudget& budget = {});

ParetoFrontier exact_matching_frontier(const RequestSequence& R, const PredictionSet& Rhat,
                                       const WeightedGraph& g, ProblemKind kind);

// Optimum of the full request set for any of the three problems; the OPT in
// every ratio and bound check.
Cost exact_opt(const WeightedGraph& g, const RequestSequence& R, ProblemKind kind, VertexId root,
               const OracleBudget& budget = {});

// Minimum element cost of a solution leaving at most `u` requests
// unsatisfied (the S* of the Partial guarantee), by exhaustive enumeration.
Cost exact_min_cost_with_unsat_at_most(const WeightedGraph& g, const RequestSequence& reqs,
                                       ProblemKind kind, VertexId root, int u,
                                       const OracleBudget& budget = {});

// the same for every u in [0, |reqs|] from one enumeration pass
std::vector<Cost> exact_min_cost_unsat_profile(const WeightedGraph& g, const RequestSequence& reqs,
                                               ProblemKind kind, VertexId root,
                                               const OracleBudget& budget = {});

}  // namespace netpred
