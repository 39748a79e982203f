#pragma once

#include <functional>
#include <string>
#include <vector>

#include "netpred/engines.hpp"
#include "netpred/error_model.hpp"
#include "netpred/framework.hpp"

namespace netpred {

// Adaptive adversaries inspect the algorithm's current purchases between
// requests; this adapter covers bare engines and framework runners alike.
struct AlgorithmUnderTest {
    std::function<Cost(const Request&)> serve;  // returns the actual cost of the call
    std::function<bool(EdgeId)> owns_edge;
    std::function<bool(VertexId)> has_open_facility;
};

AlgorithmUnderTest adapt(OnlineEngine& engine);
AlgorithmUnderTest adapt(FrameworkRunner& runner);

// ---------------------------------------------------------------------------
// Imase-Waxman diamond construction: depth i has 4^i edges and a request
// schedule of 2^i adaptive terminals.
// ---------------------------------------------------------------------------

struct DiamondAbstractEdge {
    VertexId u = 0, v = 0;
    VertexId m1 = -1, m2 = -1;  // midpoints of the next level
    int child[4] = {-1, -1, -1, -1};
};

struct DiamondInstance {
    WeightedGraph graph;  // edges are the deepest level only
    std::vector<std::vector<DiamondAbstractEdge>> levels;
    VertexId root = 0;
    VertexId terminal = 1;
    int depth = 0;
    Cost base_cost = 1;  // cost of the level-0 edge; also the certified OPT
};

DiamondInstance build_diamond(int depth);

struct DiamondTranscript {
    RequestSequence requests;
    Cost alg_cost = 0;
    Cost opt_cost = 0;  // certified via the witness path and d(root, terminal)
    double ratio = 1.0;
    std::vector<EdgeId> witness_path;
};

DiamondTranscript diamond_adversary(const DiamondInstance& inst, AlgorithmUnderTest alg);

// ---------------------------------------------------------------------------
// (n, k, d1, d2)-adversaries: emitted prediction and request multisets have
// |Rhat| = n, |R| = k, |Rhat \ R| = d1, |R \ Rhat| = d2.
// ---------------------------------------------------------------------------

enum class NkVariant { delta2, delta1 };

struct FotakisLbInstance;

struct NkDeltaInstance {
    WeightedGraph graph;
    VertexId root = 0;
    ProblemKind kind = ProblemKind::steiner_tree;
    PredictionSet predictions;
    RequestSequence prefix;        // fixed requests before the adaptive core
    RequestSequence tail;          // fixed padding after the core
    DiamondInstance core;  // adaptive part (ST); embedded first, ids shared
    bool has_core = false;
    // FL variant: adaptive tree phases, truncated to the unpredicted budget
    std::vector<std::vector<VertexId>> fl_children;
    std::vector<int> fl_phase_sizes;
    int fl_core_requests = 0;
    int n = 0, k = 0, d1 = 0, d2 = 0;
    int padded_vertices = 0;
};

NkDeltaInstance nk_delta_adversary(int n, int k, int d1, int d2, ProblemKind kind,
                                   NkVariant variant);

struct NkDeltaTranscript {
    RequestSequence requests;
    Cost alg_cost = 0;
    Cost opt_cost = 0;  // certified core bound (0 when no core)
};

NkDeltaTranscript play_nk_delta(const NkDeltaInstance& inst, AlgorithmUnderTest alg);

// ---------------------------------------------------------------------------
// Facility-location lower-bound tree: phases of m^(i-1) colocated clients
// walking down the subtree the algorithm left facility-free.
// ---------------------------------------------------------------------------

struct FotakisLbInstance {
    WeightedGraph graph;
    VertexId root = 0;
    int m = 2;
    Cost f = 0;  // nominal opening scale; facility costs are f - 1
    std::vector<std::vector<VertexId>> children;
    std::vector<int> phase_sizes;
};

FotakisLbInstance build_fotakis_lb(int m);

struct FotakisLbTranscript {
    RequestSequence requests;
    std::vector<VertexId> phase_nodes;
    std::vector<int> last_of_phase;  // arrival index of each phase's last request
    Cost actual_total = 0;
    Cost alpha_total = 0;
    std::vector<ChargeRecord> trace;
    bool facility_per_phase = false;  // opened exactly at each phase's last request
};

FotakisLbTranscript fotakis_lb_run(const FotakisLbInstance& inst, FotakisEngine& engine);

// ---------------------------------------------------------------------------
// Online metric matching on a star: the naive greedy matcher pays 2k while
// the offline optimum pays 2, and the prediction error is (2, 0).
// ---------------------------------------------------------------------------

struct MatchingLbTranscript {
    WeightedGraph graph;
    int k = 0;
    Cost alg_cost = 0;
    Cost opt_cost = 0;
    RequestSequence reds;       // realized red points, arrival order
    PredictionSet predictions;  // one red predicted on every blue point
    std::vector<std::pair<int, int>> matches;  // (red index, blue vertex)
};

MatchingLbTranscript matching_lb_run(int k);

std::string transcript_to_csv(const RequestSequence& requests, const std::vector<Cost>& step_costs,
                               const std::vector<std::string>& actions = {});

}  // namespace netpred
