#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "netpred/graph.hpp"
#include "netpred/requests.hpp"

namespace netpred {

// Uniform prize-collecting penalty as a dyadic rational (num / den). The
// Partial subroutine scans penalties 2^i where i may be negative, so den is
// a power of two. num == kInfCost means "must satisfy".
struct Penalty {
    Cost num = 0;
    Cost den = 1;

    bool infinite() const { return num == kInfCost; }
    static Penalty from_exponent(int i) {
        Penalty p;
        if (i >= 0) {
            p.num = Cost(1) << i;
            p.den = 1;
        } else {
            p.num = 1;
            p.den = Cost(1) << (-i);
        }
        return p;
    }
};

struct PenaltyInstance {
    const WeightedGraph* graph = nullptr;
    RequestSequence requests;
    Penalty penalty;
    ProblemKind kind = ProblemKind::steiner_tree;
    VertexId root = 0;       // rooted Steiner tree only
    int priority_floor = 1;  // Steiner forest within one priority class
};

struct PCSolution {
    std::vector<EdgeId> edges;
    std::vector<VertexId> facilities;
    std::vector<char> satisfied;  // per request
    Cost element_cost = 0;
    int unsatisfied = 0;
    Cost declared_gamma = 1;
};

// objective * penalty.den, exact in integers
Cost pc_objective_scaled(const PCSolution& s, const Penalty& x);

PCSolution pc_steiner_tree(const PenaltyInstance& inst);       // gamma = 2 (GW moats)
PCSolution pc_steiner_forest(const PenaltyInstance& inst);     // gamma = 3
PCSolution pc_facility_location(const PenaltyInstance& inst);  // gamma = 3
PCSolution pc_exact(const PenaltyInstance& inst);              // gamma = 1, enumeration

// A solver bound to one (graph, request set); repeated penalty levels reuse
// the preprocessing (the exact solver keeps its subset tables).
class PcSolver {
  public:
    virtual ~PcSolver() = default;
    virtual PCSolution solve(const Penalty& x) = 0;
    virtual Cost gamma() const = 0;
    virtual std::string name() const = 0;
};

// name: "primal-dual" (default approximations) or "exact"
std::unique_ptr<PcSolver> make_pc_solver(const std::string& name, const WeightedGraph& g,
                                         const RequestSequence& requests, ProblemKind kind,
                                         VertexId root, int priority_floor = 1,
                                         std::optional<Cost> gamma_override = std::nullopt);

}  // namespace netpred
