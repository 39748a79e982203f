#include "netpred/graph.hpp"

#include <algorithm>
#include <fstream>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace netpred {

using ordered_json = nlohmann::ordered_json;

EdgeId WeightedGraph::add_edge(VertexId u, VertexId v, Cost cost, int priority) {
    if (u < 0 || u >= n_ || v < 0 || v >= n_) throw std::invalid_argument("edge endpoint out of range");
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    if (cost < 0) throw std::invalid_argument("negative edge cost");
    if (priority < 1) throw std::invalid_argument("edge priority must be >= 1");
    EdgeId id = static_cast<EdgeId>(edges_.size());
    edges_.push_back(Edge{u, v, cost, priority});
    if (static_cast<int>(adj_.size()) < n_) adj_.resize(n_);
    adj_[u].push_back(id);
    adj_[v].push_back(id);
    max_priority_ = std::max(max_priority_, priority);
    return id;
}

void WeightedGraph::set_facility_cost(VertexId v, Cost f) {
    if (v < 0 || v >= n_) throw std::invalid_argument("facility vertex out of range");
    if (f < 0) throw std::invalid_argument("negative facility cost");
    if (facility_costs_.empty()) facility_costs_.assign(n_, kInfCost);
    facility_costs_[v] = f;
}

void WeightedGraph::set_capacity(VertexId v, int beta) {
    if (v < 0 || v >= n_) throw std::invalid_argument("capacity vertex out of range");
    if (beta < 1) throw std::invalid_argument("capacity must be >= 1");
    if (capacities_.empty()) capacities_.assign(n_, 0);
    capacities_[v] = beta;
}

Cost WeightedGraph::total_edge_cost() const {
    Cost s = 0;
    for (const Edge& e : edges_) s = add_cost(s, e.cost);
    return s;
}

Cost WeightedGraph::total_finite_facility_cost() const {
    Cost s = 0;
    for (Cost f : facility_costs_)
        if (!is_inf(f)) s = add_cost(s, f);
    return s;
}

Cost WeightedGraph::min_positive_element_cost() const {
    Cost best = kInfCost;
    for (const Edge& e : edges_)
        if (e.cost > 0) best = std::min(best, e.cost);
    for (Cost f : facility_costs_)
        if (f > 0 && !is_inf(f)) best = std::min(best, f);
    return is_inf(best) ? 0 : best;
}

bool WeightedGraph::connected_from(VertexId root) const {
    if (root < 0 || root >= n_) return false;
    std::vector<char> seen(n_, 0);
    std::vector<VertexId> stack{root};
    seen[root] = 1;
    int count = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        if (static_cast<int>(adj_.size()) <= v) continue;
        for (EdgeId e : adj_[v]) {
            VertexId w = edges_[e].other(v);
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
        }
    }
    return count == n_;
}

std::string WeightedGraph::to_json_text() const {
    ordered_json j;
    j["vertices"] = n_;
    ordered_json edges = ordered_json::array();
    for (const Edge& e : edges_) edges.push_back({e.u, e.v, e.cost, e.priority});
    j["edges"] = std::move(edges);
    if (!facility_costs_.empty()) {
        ordered_json fc = ordered_json::array();
        for (VertexId v = 0; v < n_; ++v)
            if (!is_inf(facility_costs_[v])) fc.push_back({v, facility_costs_[v]});
        j["facility_costs"] = std::move(fc);
    }
    if (!capacities_.empty()) {
        ordered_json cp = ordered_json::array();
        for (VertexId v = 0; v < n_; ++v)
            if (capacities_[v] > 0) cp.push_back({v, capacities_[v]});
        j["capacities"] = std::move(cp);
    }
    j["scale_denominator"] = scale_denominator_;
    return j.dump(2) + "\n";
}

WeightedGraph WeightedGraph::from_json_text(const std::string& text) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const std::exception& ex) {
        throw std::invalid_argument(std::string("instance parse error: ") + ex.what());
    }
    WeightedGraph g(j.at("vertices").get<int>());
    g.adj_.resize(g.n_);
    for (const auto& row : j.at("edges")) {
        if (!row.is_array() || row.size() != 4)
            throw std::invalid_argument("edge rows must be [u,v,cost,priority]");
        g.add_edge(row[0].get<VertexId>(), row[1].get<VertexId>(), row[2].get<Cost>(),
                   row[3].get<int>());
    }
    if (j.contains("facility_costs"))
        for (const auto& row : j["facility_costs"])
            g.set_facility_cost(row[0].get<VertexId>(), row[1].get<Cost>());
    if (j.contains("capacities"))
        for (const auto& row : j["capacities"]) g.set_capacity(row[0].get<VertexId>(), row[1].get<int>());
    if (j.contains("scale_denominator")) g.scale_denominator_ = j["scale_denominator"].get<std::int64_t>();
    if (g.scale_denominator_ < 1) throw std::invalid_argument("scale_denominator must be >= 1");
    return g;
}

WeightedGraph WeightedGraph::load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open instance file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str());
}

void WeightedGraph::save_file(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write instance file: " + path);
    out << to_json_text();
}

void Metric::dijkstra(VertexId src, std::vector<Cost>& dist, std::vector<EdgeId>* parent_edge) const {
    const int n = g_->vertex_count();
    dist.assign(n, kInfCost);
    if (parent_edge) parent_edge->assign(n, -1);
    if (src < 0 || src >= n) throw std::invalid_argument("unknown vertex id");
    dist[src] = 0;
    using Item = std::pair<Cost, VertexId>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
    heap.push({0, src});
    while (!heap.empty()) {
        auto [d, v] = heap.top();
        heap.pop();
        if (d != dist[v]) continue;
        for (EdgeId e : g_->incident(v)) {
            if (!edge_usable(e)) continue;
            Cost nd = add_cost(d, edge_cost(e));
            VertexId w = g_->edge(e).other(v);
            if (nd < dist[w]) {
                dist[w] = nd;
                if (parent_edge) (*parent_edge)[w] = e;
                heap.push({nd, w});
            }
        }
    }
}

std::vector<Cost> Metric::distances_from(VertexId src) const {
    std::vector<Cost> dist;
    dijkstra(src, dist);
    return dist;
}

Cost Metric::distance(VertexId u, VertexId v) const {
    if (v < 0 || v >= g_->vertex_count()) throw std::invalid_argument("unknown vertex id");
    if (u == v) {
        if (u < 0 || u >= g_->vertex_count()) throw std::invalid_argument("unknown vertex id");
        return 0;
    }
    return distances_from(u)[v];
}

PathResult Metric::shortest_path(VertexId u, VertexId v) const {
    if (v < 0 || v >= g_->vertex_count()) throw std::invalid_argument("unknown vertex id");
    std::vector<Cost> dist;
    std::vector<EdgeId> parent;
    dijkstra(u, dist, &parent);
    PathResult r;
    r.cost = dist[v];
    if (is_inf(r.cost)) return r;
    VertexId w = v;
    while (w != u) {
        EdgeId e = parent[w];
        r.edges.push_back(e);
        w = g_->edge(e).other(w);
    }
    std::reverse(r.edges.begin(), r.edges.end());
    return r;
}

std::vector<std::vector<Cost>> Metric::distance_matrix(const std::vector<VertexId>& points) const {
    if (points.empty()) throw std::invalid_argument("distance_matrix needs at least one point");
    std::vector<std::vector<Cost>> m(points.size(), std::vector<Cost>(points.size(), 0));
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<Cost> d = distances_from(points[i]);
        for (std::size_t k = 0; k < points.size(); ++k) m[i][k] = d[points[k]];
    }
    return m;
}

bool Metric::ball_intersects(VertexId c1, Cost r1, VertexId c2, Cost r2) const {
    if (r1 < 0 || r2 < 0) throw std::invalid_argument("ball radius must be nonnegative");
    Cost d = distance(c1, c2);
    if (is_inf(d)) return false;
    return d < add_cost(r1, r2);
}

const std::vector<Cost>& DistanceCache::from(VertexId src) {
    const int n = metric_.graph().vertex_count();
    if (table_.empty()) {
        table_.resize(n);
        have_.assign(n, 0);
    }
    if (!have_[src]) {
        table_[src] = metric_.distances_from(src);
        have_[src] = 1;
    }
    return table_[src];
}

}  // namespace netpred
