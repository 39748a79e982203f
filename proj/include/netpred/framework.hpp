#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "netpred/engines.hpp"
#include "netpred/prize_collecting.hpp"

namespace netpred {

struct PartialResult {
    std::vector<EdgeId> edges;
    std::vector<VertexId> facilities;
    int unsatisfied_count = 0;
    int chosen_branch = 0;  // 0 = empty result, 1 = S1, 2 = S2
    int penalty_exponent = 0;
    Cost element_cost = 0;  // original costs
};

struct PartialScanBounds {
    int i_min = 0;
    int i_max = 1;
};

// penalty-exponent range that provably brackets the first qualifying i
PartialScanBounds partial_scan_bounds(const WeightedGraph& g, int prediction_count);

// The Partial subroutine bound to one (graph, prediction set, PC solver).
// PC evaluations are cached per penalty exponent; they are pure and shared
// across every u and every major iteration of a run.
class PartialOracle {
  public:
    PartialOracle(const WeightedGraph& g, PredictionSet rhat, PcSolver& pc, Cost gamma);
    PartialResult partial(int u);
    int prediction_count() const { return static_cast<int>(rhat_.size()); }
    Cost gamma() const { return gamma_; }
    const PCSolution& pc_at_exponent(int i);

  private:
    const WeightedGraph* g_;
    PredictionSet rhat_;
    PcSolver* pc_;
    Cost gamma_;
    PartialScanBounds bounds_;
    std::map<int, PCSolution> cache_;
};

struct MajorIterationRecord {
    int iteration = 0;  // 1-based count of requests served when it fired
    Cost b_hat_before = 0;
    Cost b_hat_after = 0;
    int u = 0;
    Cost partial_cost_full = 0;  // c(returned elements)
    Cost partial_cost_paid = 0;  // newly added elements only
    int partial_unsatisfied = 0;
    int penalty_exponent = 0;
    int chosen_branch = 0;
    bool restarted = false;
    int phase_after = 0;
};

struct RunReport {
    ProblemKind kind = ProblemKind::steiner_tree;
    Cost gamma = 1;
    bool framework = false;
    Cost engine_charged = 0;  // final B
    Cost engine_actual = 0;
    Cost partial_paid = 0;
    Cost b_hat = 0;
    std::vector<Cost> phase_charged;  // index = phase id (0 before first major)
    std::vector<Cost> phase_actual;
    std::vector<MajorIterationRecord> majors;
    std::vector<ChargeRecord> trace;
    std::vector<EdgeId> edges_bought;        // final S (edges)
    std::vector<VertexId> facilities_bought; // final S (facilities)

    Cost total_cost() const { return add_cost(engine_actual, partial_paid); }
};

struct FrameworkConfig {
    ProblemKind kind = ProblemKind::steiner_tree;
    VertexId root = 0;
    int priority_floor = 1;
    std::string pc_solver = "primal-dual";  // or "exact"
    std::optional<Cost> gamma_override;
    bool use_predictions = true;
};

// Stepwise runner so adaptive adversaries can look at the bought solution
// between requests.
class FrameworkRunner {
  public:
    FrameworkRunner(const WeightedGraph& g, PredictionSet rhat, FrameworkConfig cfg);
    ~FrameworkRunner();

    const ChargeRecord& step(const Request& r);
    RunReport report() const;

    const std::vector<char>& bought_edges() const { return s_edges_; }
    const std::vector<char>& bought_facilities() const { return s_facilities_; }
    const OnlineEngine& engine() const { return *engine_; }
    Cost gamma() const { return gamma_; }

  private:
    const WeightedGraph* g_;
    PredictionSet rhat_;
    FrameworkConfig cfg_;
    Cost gamma_ = 1;
    std::unique_ptr<PcSolver> pc_;
    std::unique_ptr<PartialOracle> oracle_;
    EngineFactory factory_;
    std::unique_ptr<OnlineEngine> engine_;
    std::vector<char> s_edges_;       // S, by edge id
    std::vector<char> s_facilities_;  // S, by vertex id
    RunReport rep_;
    Cost b_ = 0, b_hat_ = 0;
    int iteration_ = 0;
    int phase_ = 0;

    void restart_engine();
    void major_iteration();
};

RunReport run_with_predictions(const WeightedGraph& g, const RequestSequence& R,
                               const PredictionSet& rhat, const FrameworkConfig& cfg);
RunReport run_engine_only(const WeightedGraph& g, const RequestSequence& R,
                          const FrameworkConfig& cfg);

// structural invariants of a finished run's doubling bookkeeping
struct RunChecks {
    bool telescoping_ok = true;      // every anchor: sum of early phases <= last full phase
    bool partial_budget_ok = true;   // cumulative partial cost <= 6*gamma*B_hat at every major
    bool doubling_ok = true;         // B_hat at least doubles between majors
    bool phase_identity_ok = true;   // phase charged == B_hat differences
};
RunChecks check_run(const RunReport& rep);

std::string run_report_to_json_text(const RunReport& rep);
std::string trace_to_csv(const RunReport& rep);

}  // namespace netpred
