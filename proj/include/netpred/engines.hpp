#pragma once

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "netpred/graph.hpp"
#include "netpred/requests.hpp"

namespace netpred {

struct ChargeRecord {
    int arrival_index = -1;
    Cost charged = 0;  // what the framework budget sees (alpha for FL)
    Cost actual = 0;   // money spent in this call
    std::vector<EdgeId> bought_edges;
    std::vector<VertexId> opened_facilities;
    VertexId connected_to = -1;      // FL: facility serving this client
    VertexId request_vertex = -1;    // FL: where the client arrived
};

// Uniform engine contract: accept one request, augment the solution, report
// the per-request charged cost. Charged == actual for the network engines;
// the facility-location engine charges the amortized cost instead.
class OnlineEngine {
  public:
    virtual ~OnlineEngine() = default;
    virtual ProblemKind kind() const = 0;
    virtual Cost serve(const Request& r) = 0;

    const std::vector<ChargeRecord>& log() const { return log_; }
    Cost total_charged() const;
    Cost total_actual() const;

  protected:
    std::vector<ChargeRecord> log_;
};

// sum of per-request charged costs over a subset of served arrival indices
Cost engine_total_charged(const OnlineEngine& engine, const std::vector<int>& arrival_indices);

// Greedy online Steiner tree: connect each terminal to the nearest previous
// terminal (or the root) by a shortest path under the overlay.
class SteinerTreeGreedyEngine : public OnlineEngine {
  public:
    SteinerTreeGreedyEngine(const WeightedGraph& g, ZeroCostOverlay overlay, VertexId root);
    ProblemKind kind() const override { return ProblemKind::steiner_tree; }
    Cost serve(const Request& r) override;
    const std::vector<EdgeId>& solution_edges() const { return solution_; }

  private:
    const WeightedGraph* g_;
    ZeroCostOverlay overlay_;
    VertexId root_;
    std::vector<VertexId> terminals_;
    std::vector<EdgeId> solution_;
};

// Berman-Coulston online Steiner forest with per-level disjoint balls and
// acyclic meta-graphs.
class BermanCoulstonEngine : public OnlineEngine {
  public:
    struct Level {
        std::vector<VertexId> ball_centers;             // D_j
        std::vector<std::pair<int, int>> meta_edges;    // M_j (ball indices)
        int iterations = 0;                             // n_j
    };

    BermanCoulstonEngine(const WeightedGraph& g, ZeroCostOverlay overlay, int priority_floor = 1);
    ProblemKind kind() const override { return ProblemKind::steiner_forest; }
    Cost serve(const Request& r) override;

    const std::map<int, Level>& levels() const { return levels_; }
    const std::vector<EdgeId>& solution_edges() const { return solution_; }
    bool meta_acyclic() const;   // every M_j acyclic
    bool balls_disjoint() const; // open balls within each level pairwise disjoint

  private:
    const WeightedGraph* g_;
    ZeroCostOverlay base_overlay_;  // phase overlay, ball geometry lives here
    ZeroCostOverlay work_overlay_;  // base plus own bought edges F
    int floor_;
    std::map<int, Level> levels_;
    std::vector<EdgeId> solution_;

    void buy_path(const PathResult& p, ChargeRecord& rec);
    bool ball_intersects_level(int level, const std::vector<Cost>& dist_from_center,
                               int* hit) const;
};

// Fotakis' potential-based online facility location. serve() returns the
// amortized cost alpha(r); the actual cost is in the log.
class FotakisEngine : public OnlineEngine {
  public:
    FotakisEngine(const WeightedGraph& g, ZeroCostOverlay overlay);
    ProblemKind kind() const override { return ProblemKind::facility_location; }
    Cost serve(const Request& r) override;

    Cost effective_facility_cost(VertexId v) const;
    const std::vector<Cost>& potentials() const { return p_; }
    const std::vector<VertexId>& open_facilities() const { return open_list_; }
    bool potentials_stable() const;  // p(v) <= f_v for every candidate

  private:
    const WeightedGraph* g_;
    ZeroCostOverlay overlay_;
    std::unique_ptr<DistanceCache> cache_;
    std::vector<VertexId> candidates_;
    std::vector<Cost> p_;
    std::vector<char> open_;
    std::vector<VertexId> open_list_;
    std::vector<VertexId> live_clients_;
    std::vector<Cost> nearest_open_;  // d(F, client) per live client

    void open_facility(VertexId w);
    void compute_new_potentials();
};

using EngineFactory =
    std::function<std::unique_ptr<OnlineEngine>(const WeightedGraph&, const ZeroCostOverlay&)>;

EngineFactory make_engine_factory(ProblemKind kind, VertexId root, int priority_floor = 1);

}  // namespace netpred
