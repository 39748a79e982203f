#include "netpred/engines.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace netpred {

namespace {

struct Dsu {
    std::vector<int> parent;
    explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

}  // namespace

Cost OnlineEngine::total_charged() const {
    Cost s = 0;
    for (const ChargeRecord& r : log_) s = add_cost(s, r.charged);
    return s;
}

Cost OnlineEngine::total_actual() const {
    Cost s = 0;
    for (const ChargeRecord& r : log_) s = add_cost(s, r.actual);
    return s;
}

Cost engine_total_charged(const OnlineEngine& engine, const std::vector<int>& arrival_indices) {
    Cost s = 0;
    for (int idx : arrival_indices) {
        bool found = false;
        for (const ChargeRecord& r : engine.log())
            if (r.arrival_index == idx) {
                s = add_cost(s, r.charged);
                found = true;
                break;
            }
        if (!found) throw std::invalid_argument("subset refers to an unserved request");
    }
    return s;
}

// ---------------------------------------------------------------------------

SteinerTreeGreedyEngine::SteinerTreeGreedyEngine(const WeightedGraph& g, ZeroCostOverlay overlay,
                                                 VertexId root)
    : g_(&g), overlay_(std::move(overlay)), root_(root) {
    if (root < 0 || root >= g.vertex_count()) throw std::invalid_argument("root out of range");
}

Cost SteinerTreeGreedyEngine::serve(const Request& r) {
    Metric m(*g_, &overlay_);
    std::vector<Cost> dist;
    std::vector<EdgeId> parent;
    m.dijkstra(r.a, dist, &parent);

    VertexId best = root_;
    Cost best_d = dist[root_];
    for (VertexId t : terminals_)
        if (dist[t] < best_d || (dist[t] == best_d && t < best)) {
            best = t;
            best_d = dist[t];
        }
    if (is_inf(best_d)) throw std::runtime_error("terminal disconnected from the root");

    ChargeRecord rec;
    rec.arrival_index = r.arrival_index;
    rec.charged = rec.actual = best_d;
    for (VertexId w = best; w != r.a;) {
        EdgeId e = parent[w];
        rec.bought_edges.push_back(e);
        solution_.push_back(e);
        w = g_->edge(e).other(w);
    }
    terminals_.push_back(r.a);
    Cost charged = rec.charged;
    log_.push_back(std::move(rec));
    return charged;
}

// ---------------------------------------------------------------------------

BermanCoulstonEngine::BermanCoulstonEngine(const WeightedGraph& g, ZeroCostOverlay overlay,
                                           int priority_floor)
    : g_(&g), base_overlay_(overlay), work_overlay_(std::move(overlay)), floor_(priority_floor) {}

void BermanCoulstonEngine::buy_path(const PathResult& p, ChargeRecord& rec) {
    for (EdgeId e : p.edges) {
        rec.bought_edges.push_back(e);
        solution_.push_back(e);
        work_overlay_.zero_edge(e);
    }
}

bool BermanCoulstonEngine::ball_intersects_level(int level, const std::vector<Cost>& dist_from_center,
                                                 int* hit) const {
    auto it = levels_.find(level);
    if (it == levels_.end()) return false;
    // same-level balls have radius 2^(level-2); open balls intersect iff
    // 4*d < 2^(level+1)
    const __int128 bound = __int128(1) << (level + 1);
    int found = -1;
    for (int i = 0; i < static_cast<int>(it->second.ball_centers.size()); ++i) {
        VertexId c = it->second.ball_centers[i];
        Cost d = dist_from_center[c];
        if (is_inf(d)) continue;
        if (__int128(d) * 4 < bound) {
            // pick the intersecting ball with the smallest center id
            if (found == -1 || c < it->second.ball_centers[found]) found = i;
        }
    }
    if (found >= 0) {
        if (hit) *hit = found;
        return true;
    }
    return false;
}

Cost BermanCoulstonEngine::serve(const Request& r) {
    Metric work(*g_, &work_overlay_, floor_);
    PathResult p = work.shortest_path(r.a, r.b);
    if (is_inf(p.cost)) throw std::runtime_error("terminal pair disconnected at its priority");

    ChargeRecord rec;
    rec.arrival_index = r.arrival_index;
    buy_path(p, rec);
    Cost charged = p.cost;

    if (p.cost > 0) {  // zero-cost connections skip all ball bookkeeping
        int level = floor_log2(p.cost);
        Level& lv = levels_[level];
        ++lv.iterations;

        Metric ball_metric(*g_, &base_overlay_, floor_);
        std::vector<Cost> from_s = ball_metric.distances_from(r.a);
        std::vector<Cost> from_t = ball_metric.distances_from(r.b);

        int hit_s = -1, hit_t = -1;
        bool s_hits = ball_intersects_level(level, from_s, &hit_s);
        bool t_hits = ball_intersects_level(level, from_t, &hit_t);
        if (!s_hits) {
            lv.ball_centers.push_back(r.a);
        } else if (!t_hits) {
            lv.ball_centers.push_back(r.b);
        } else {
            VertexId a1 = lv.ball_centers[hit_s];
            VertexId a2 = lv.ball_centers[hit_t];
            // sequential purchases: the second connector sees the first one free
            PathResult p1 = work.shortest_path(a1, r.a);
            buy_path(p1, rec);
            PathResult p2 = work.shortest_path(a2, r.b);
            buy_path(p2, rec);
            charged = add_cost(charged, add_cost(p1.cost, p2.cost));
            lv.meta_edges.push_back({hit_s, hit_t});
        }
    }

    rec.charged = rec.actual = charged;
    log_.push_back(std::move(rec));
    return charged;
}

bool BermanCoulstonEngine::meta_acyclic() const {
    for (const auto& [level, lv] : levels_) {
        Dsu dsu(static_cast<int>(lv.ball_centers.size()));
        for (auto [a, b] : lv.meta_edges) {
            if (a == b) return false;
            if (!dsu.unite(a, b)) return false;
        }
    }
    return true;
}

bool BermanCoulstonEngine::balls_disjoint() const {
    Metric ball_metric(*g_, &base_overlay_, floor_);
    for (const auto& [level, lv] : levels_) {
        const __int128 bound = __int128(1) << (level + 1);
        for (std::size_t i = 0; i < lv.ball_centers.size(); ++i) {
            std::vector<Cost> d = ball_metric.distances_from(lv.ball_centers[i]);
            for (std::size_t j = i + 1; j < lv.ball_centers.size(); ++j) {
                Cost dij = d[lv.ball_centers[j]];
                if (!is_inf(dij) && __int128(dij) * 4 < bound) return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------

FotakisEngine::FotakisEngine(const WeightedGraph& g, ZeroCostOverlay overlay)
    : g_(&g), overlay_(std::move(overlay)) {
    if (!g.has_facilities())
        throw std::invalid_argument("facility-location engine needs facility costs");
    cache_ = std::make_unique<DistanceCache>(Metric(g));  // FL never zero-costs edges
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!is_inf(effective_facility_cost(v))) candidates_.push_back(v);
    p_.assign(g.vertex_count(), 0);
    open_.assign(g.vertex_count(), 0);
    // facilities bought by the framework are already open at cost zero
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (overlay_.facility_is_zero(v)) open_facility(v);
}

Cost FotakisEngine::effective_facility_cost(VertexId v) const {
    return overlay_.facility_is_zero(v) ? 0 : g_->facility_cost(v);
}

void FotakisEngine::open_facility(VertexId w) {
    if (open_[w]) return;
    open_[w] = 1;
    open_list_.push_back(w);
    for (std::size_t i = 0; i < live_clients_.size(); ++i)
        nearest_open_[i] = std::min(nearest_open_[i], cache_->from(live_clients_[i])[w]);
}

void FotakisEngine::compute_new_potentials() {
    std::fill(p_.begin(), p_.end(), 0);
    for (std::size_t i = 0; i < live_clients_.size(); ++i) {
        const std::vector<Cost>& d = cache_->from(live_clients_[i]);
        for (VertexId v : candidates_) p_[v] = add_cost(p_[v], pos_sub(nearest_open_[i], d[v]));
    }
}

Cost FotakisEngine::serve(const Request& r) {
    const std::vector<Cost>& dr = cache_->from(r.a);
    Cost d_before = kInfCost;
    for (VertexId v : open_list_) d_before = std::min(d_before, dr[v]);

    // amortized cost from p and F before any update
    Cost residual = kInfCost;
    for (VertexId v : candidates_) {
        if (is_inf(dr[v])) continue;
        Cost t = add_cost(pos_sub(effective_facility_cost(v), p_[v]), dr[v]);
        residual = std::min(residual, t);
    }
    Cost alpha_half = std::min(d_before, residual);
    if (is_inf(alpha_half)) throw std::runtime_error("client cannot reach any facility");
    Cost alpha = mul_cost(alpha_half, 2);

    ChargeRecord rec;
    rec.arrival_index = r.arrival_index;
    Cost opened_cost = 0;

    if (is_inf(d_before)) {
        // no reachable open facility (first client, or a fresh component):
        // open the facility minimizing f_v + d(v, r)
        VertexId w = -1;
        Cost best = kInfCost;
        for (VertexId v : candidates_) {
            if (is_inf(dr[v])) continue;
            Cost t = add_cost(effective_facility_cost(v), dr[v]);
            if (t < best) {
                best = t;
                w = v;
            }
        }
        if (w < 0) throw std::runtime_error("client cannot reach any facility");
        live_clients_.push_back(r.a);
        nearest_open_.push_back(kInfCost);
        opened_cost = effective_facility_cost(w);
        rec.opened_facilities.push_back(w);
        open_facility(w);
        compute_new_potentials();
    } else {
        live_clients_.push_back(r.a);
        nearest_open_.push_back(d_before);
        for (VertexId v : candidates_) p_[v] = add_cost(p_[v], pos_sub(d_before, dr[v]));
        VertexId w = candidates_.empty() ? -1 : candidates_[0];
        for (VertexId v : candidates_)
            if (p_[v] - effective_facility_cost(v) > p_[w] - effective_facility_cost(w)) w = v;
        if (w >= 0 && p_[w] > effective_facility_cost(w)) {
            opened_cost = effective_facility_cost(w);
            rec.opened_facilities.push_back(w);
            open_facility(w);
            compute_new_potentials();
        }
    }

    Cost conn = kInfCost;
    VertexId target = -1;
    for (VertexId v : open_list_)
        if (dr[v] < conn || (dr[v] == conn && v < target)) {
            conn = dr[v];
            target = v;
        }
    rec.connected_to = target;
    rec.request_vertex = r.a;
    rec.actual = add_cost(opened_cost, conn);
    rec.charged = alpha;
    log_.push_back(std::move(rec));
    return alpha;
}

bool FotakisEngine::potentials_stable() const {
    for (VertexId v : candidates_)
        if (p_[v] > effective_facility_cost(v)) return false;
    return true;
}

// ---------------------------------------------------------------------------

EngineFactory make_engine_factory(ProblemKind kind, VertexId root, int priority_floor) {
    switch (kind) {
        case ProblemKind::steiner_tree:
            return [root](const WeightedGraph& g, const ZeroCostOverlay& ov) {
                return std::unique_ptr<OnlineEngine>(new SteinerTreeGreedyEngine(g, ov, root));
            };
        case ProblemKind::steiner_forest:
            return [priority_floor](const WeightedGraph& g, const ZeroCostOverlay& ov) {
                return std::unique_ptr<OnlineEngine>(new BermanCoulstonEngine(g, ov, priority_floor));
            };
        case ProblemKind::facility_location:
            return [](const WeightedGraph& g, const ZeroCostOverlay& ov) {
                return std::unique_ptr<OnlineEngine>(new FotakisEngine(g, ov));
            };
    }
    throw std::logic_error("unreachable");
}

}  // namespace netpred
