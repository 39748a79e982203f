#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netpred/cost.hpp"

namespace netpred {

using VertexId = int;
using EdgeId = int;

struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    Cost cost = 0;
    int priority = 1;

    VertexId other(VertexId w) const { return w == u ? v : u; }
};

// Undirected multigraph with scaled-integer edge costs, optional edge
// priorities and optional per-vertex facility data. Facility cost kInfCost
// means "not a facility candidate" (also how the capacitated reduction
// disables the original vertices).
class WeightedGraph {
  public:
    WeightedGraph() = default;
    explicit WeightedGraph(int vertex_count) : n_(vertex_count), adj_(vertex_count) {}

    EdgeId add_edge(VertexId u, VertexId v, Cost cost, int priority = 1);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<EdgeId>& incident(VertexId v) const { return adj_[v]; }

    bool has_facilities() const { return !facility_costs_.empty(); }
    void set_facility_cost(VertexId v, Cost f);
    Cost facility_cost(VertexId v) const {
        return facility_costs_.empty() ? kInfCost : facility_costs_[v];
    }

    bool has_capacities() const { return !capacities_.empty(); }
    void set_capacity(VertexId v, int beta);
    int capacity(VertexId v) const { return capacities_.empty() ? 0 : capacities_[v]; }

    int max_priority() const { return max_priority_; }
    std::int64_t scale_denominator() const { return scale_denominator_; }
    void set_scale_denominator(std::int64_t d) { scale_denominator_ = d; }

    Cost total_edge_cost() const;
    Cost total_finite_facility_cost() const;
    // smallest positive cost among edges and finite facility costs; 0 if none
    Cost min_positive_element_cost() const;

    // JSON instance files; round trips are byte-exact.
    static WeightedGraph load_file(const std::string& path);
    void save_file(const std::string& path) const;
    static WeightedGraph from_json_text(const std::string& text);
    std::string to_json_text() const;

    // every vertex reachable from root (at priority floor 1); used to reject
    // broken instances before a rooted run
    bool connected_from(VertexId root) const;

  private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> adj_;
    std::vector<Cost> facility_costs_;  // empty or size n_
    std::vector<int> capacities_;       // empty or size n_
    std::int64_t scale_denominator_ = 1;
    int max_priority_ = 1;
};

// Zero-cost overlay: the framework's bought element set S. Edges in the
// overlay cost 0 for shortest paths; facilities in the overlay cost 0 and
// start open in a restarted facility-location engine.
class ZeroCostOverlay {
  public:
    ZeroCostOverlay() = default;
    explicit ZeroCostOverlay(const WeightedGraph& g)
        : edge_zeroed_(g.edge_count(), 0), facility_zeroed_(g.vertex_count(), 0) {}

    void zero_edge(EdgeId e) {
        if (!edge_zeroed_[e]) {
            edge_zeroed_[e] = 1;
            ++edge_count_;
        }
    }
    void zero_facility(VertexId v) {
        if (!facility_zeroed_[v]) {
            facility_zeroed_[v] = 1;
            ++facility_count_;
        }
    }
    bool edge_is_zero(EdgeId e) const { return !edge_zeroed_.empty() && edge_zeroed_[e]; }
    bool facility_is_zero(VertexId v) const {
        return !facility_zeroed_.empty() && facility_zeroed_[v];
    }
    int zeroed_edge_count() const { return edge_count_; }
    int zeroed_facility_count() const { return facility_count_; }
    bool empty() const { return edge_count_ == 0 && facility_count_ == 0; }

  private:
    std::vector<std::uint8_t> edge_zeroed_;
    std::vector<std::uint8_t> facility_zeroed_;
    int edge_count_ = 0;
    int facility_count_ = 0;
};

struct PathResult {
    Cost cost = kInfCost;
    std::vector<EdgeId> edges;  // empty when disconnected or u == v
};

// Metric view of a graph under an optional overlay and a priority floor
// (edges with priority < floor are excluded: the per-class subgraphs).
class Metric {
  public:
    explicit Metric(const WeightedGraph& g, const ZeroCostOverlay* overlay = nullptr,
                    int priority_floor = 1)
        : g_(&g), overlay_(overlay), floor_(priority_floor) {}

    const WeightedGraph& graph() const { return *g_; }
    int priority_floor() const { return floor_; }

    Cost edge_cost(EdgeId e) const {
        return overlay_ && overlay_->edge_is_zero(e) ? 0 : g_->edge(e).cost;
    }
    bool edge_usable(EdgeId e) const { return g_->edge(e).priority >= floor_; }

    // single-source shortest paths; parent_edge[v] = edge used to reach v
    void dijkstra(VertexId src, std::vector<Cost>& dist, std::vector<EdgeId>* parent_edge = nullptr) const;

    std::vector<Cost> distances_from(VertexId src) const;
    Cost distance(VertexId u, VertexId v) const;
    PathResult shortest_path(VertexId u, VertexId v) const;
    std::vector<std::vector<Cost>> distance_matrix(const std::vector<VertexId>& points) const;

    // open balls: true iff d(c1,c2) < r1 + r2 (strict)
    bool ball_intersects(VertexId c1, Cost r1, VertexId c2, Cost r2) const;

  private:
    const WeightedGraph* g_;
    const ZeroCostOverlay* overlay_;
    int floor_;
};

// Memoized single-source distance tables over a fixed metric. One cache is
// owned by one engine/solver; not thread-shared.
class DistanceCache {
  public:
    explicit DistanceCache(const Metric& m) : metric_(m) {}
    const std::vector<Cost>& from(VertexId src);
    const Metric& metric() const { return metric_; }

  private:
    Metric metric_;
    std::vector<std::vector<Cost>> table_;
    std::vector<std::uint8_t> have_;
};

}  // namespace netpred
