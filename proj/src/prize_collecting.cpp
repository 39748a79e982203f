#include "netpred/prize_collecting.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "netpred/oracles.hpp"

namespace netpred {

namespace {

// Event simulation runs in long double. Inputs are integers and dyadic
// penalties, so event times are dyadic too; the guarantees do not depend on
// tie order in any case. All reported costs are recomputed in int64.
using Time = long double;
const Time kNoEvent = 1e300L;

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

Cost sum_edge_costs(const WeightedGraph& g, const std::vector<EdgeId>& edges) {
    Cost s = 0;
    for (EdgeId e : edges) s = add_cost(s, g.edge(e).cost);
    return s;
}

// ---------------------------------------------------------------------------
// Goemans-Williamson moat growth for rooted prize-collecting Steiner tree,
// followed by strong pruning on the root component.
// ---------------------------------------------------------------------------

PCSolution gw_steiner_tree(const PenaltyInstance& inst) {
    const WeightedGraph& g = *inst.graph;
    const int n = g.vertex_count();
    const Time x = inst.penalty.infinite() ? kNoEvent : Time(inst.penalty.num) / Time(inst.penalty.den);

    std::vector<Time> budget(n, 0);  // penalty mass per vertex
    std::vector<int> mult(n, 0);
    for (const Request& r : inst.requests) {
        ++mult[r.a];
        budget[r.a] = inst.penalty.infinite() ? kNoEvent : budget[r.a] + x;
    }
    if (inst.penalty.infinite()) {
        Metric m(g);
        std::vector<Cost> dr = m.distances_from(inst.root);
        for (const Request& r : inst.requests)
            if (is_inf(dr[r.a]))
                throw std::invalid_argument("infinite penalty with unreachable terminal");
    }

    Dsu dsu(n);
    std::vector<Time> pot(n, 0);      // accumulated moat growth around each vertex
    std::vector<Time> deficit(n, 0);  // per component root: remaining penalty
    std::vector<char> active(n, 0), has_root(n, 0);
    for (int v = 0; v < n; ++v) {
        deficit[v] = budget[v];
        has_root[v] = (v == inst.root);
        active[v] = !has_root[v] && deficit[v] > 0;
    }

    std::vector<EdgeId> tentative;
    while (true) {
        bool any_active = false;
        for (int v = 0; v < n; ++v)
            if (dsu.find(v) == v && active[v]) any_active = true;
        if (!any_active) break;

        // next edge event
        Time best_edge_t = kNoEvent;
        EdgeId best_edge = -1;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            if (ed.priority < inst.priority_floor) continue;
            int cu = dsu.find(ed.u), cv = dsu.find(ed.v);
            if (cu == cv) continue;
            int sides = (active[cu] ? 1 : 0) + (active[cv] ? 1 : 0);
            if (sides == 0) continue;
            Time slack = Time(ed.cost) - pot[ed.u] - pot[ed.v];
            Time t = slack <= 0 ? 0 : slack / sides;
            if (t < best_edge_t) {
                best_edge_t = t;
                best_edge = e;
            }
        }
        // next penalty exhaustion
        Time best_pen_t = kNoEvent;
        int best_comp = -1;
        for (int v = 0; v < n; ++v)
            if (dsu.find(v) == v && active[v] && deficit[v] < best_pen_t) {
                best_pen_t = deficit[v];
                best_comp = v;
            }

        Time step = std::min(best_edge_t, best_pen_t);
        if (step >= kNoEvent) break;  // nothing can happen (disconnected, infinite budgets)
        for (int v = 0; v < n; ++v)
            if (active[dsu.find(v)]) pot[v] += step;
        for (int v = 0; v < n; ++v)
            if (dsu.find(v) == v && active[v]) deficit[v] -= step;

        if (best_edge_t <= best_pen_t) {
            const Edge& ed = g.edge(best_edge);
            int cu = dsu.find(ed.u), cv = dsu.find(ed.v);
            tentative.push_back(best_edge);
            dsu.unite(cu, cv);
            int c = dsu.find(cu);
            bool root_in = has_root[cu] || has_root[cv];
            Time d = (root_in ? 0 : deficit[cu] + deficit[cv]);
            has_root[c] = root_in;
            deficit[c] = d;
            active[c] = !root_in && d > 0;
        } else {
            active[dsu.find(best_comp)] = 0;
        }
    }

    // strong pruning on the root component of the tentative forest
    int root_comp = dsu.find(inst.root);
    std::vector<std::vector<std::pair<VertexId, EdgeId>>> tree(n);
    for (EdgeId e : tentative) {
        const Edge& ed = g.edge(e);
        if (dsu.find(ed.u) != root_comp) continue;
        tree[ed.u].push_back({ed.v, e});
        tree[ed.v].push_back({ed.u, e});
    }
    std::vector<EdgeId> kept_edges;
    // benefit of keeping the subtree under v; a child edge is kept only when
    // the subtree behind it is worth strictly more than the edge, and a
    // dropped child discards everything it tentatively kept
    std::vector<char> visited(n, 0);
    auto prune = [&](auto&& self, VertexId v) -> Time {
        visited[v] = 1;
        Time benefit = inst.penalty.infinite() ? (mult[v] > 0 ? kNoEvent : 0)
                                               : Time(mult[v]) * x;
        for (auto [w, e] : tree[v]) {
            if (visited[w]) continue;
            std::size_t mark = kept_edges.size();
            Time sub = self(self, w);
            if (sub > Time(g.edge(e).cost)) {
                benefit += std::min(sub - Time(g.edge(e).cost), kNoEvent);
                kept_edges.push_back(e);
            } else {
                kept_edges.resize(mark);
            }
        }
        return std::min(benefit, kNoEvent);
    };
    prune(prune, inst.root);

    // vertex is satisfied when connected to the root by kept edges
    Dsu kept(n);
    for (EdgeId e : kept_edges) kept.unite(g.edge(e).u, g.edge(e).v);
    PCSolution sol;
    sol.declared_gamma = 2;
    std::sort(kept_edges.begin(), kept_edges.end());
    sol.edges = kept_edges;
    sol.element_cost = sum_edge_costs(g, kept_edges);
    for (const Request& r : inst.requests) {
        bool sat = kept.find(r.a) == kept.find(inst.root);
        sol.satisfied.push_back(sat);
        if (!sat) ++sol.unsatisfied;
    }
    return sol;
}

// ---------------------------------------------------------------------------
// Primal-dual prize-collecting Steiner forest (moats with per-pair penalty
// budgets, reverse-delete), declared gamma 3.
// ---------------------------------------------------------------------------

PCSolution pd_steiner_forest(const PenaltyInstance& inst) {
    const WeightedGraph& g = *inst.graph;
    const int n = g.vertex_count();
    const int np = static_cast<int>(inst.requests.size());
    const Time x = inst.penalty.infinite() ? kNoEvent : Time(inst.penalty.num) / Time(inst.penalty.den);

    if (inst.penalty.infinite()) {
        for (const Request& r : inst.requests) {
            Metric m(g, nullptr, inst.priority_floor);
            if (is_inf(m.distance(r.a, r.b)))
                throw std::invalid_argument("infinite penalty with unconnectable pair");
        }
    }

    Dsu dsu(n);
    std::vector<Time> pot(n, 0);
    std::vector<Time> spent(np, 0);
    std::vector<char> abandoned(np, 0);
    std::vector<EdgeId> tentative;

    auto pair_live = [&](int p) {
        return !abandoned[p] && dsu.find(inst.requests[p].a) != dsu.find(inst.requests[p].b);
    };

    while (true) {
        // a component is active while it separates some live pair
        std::vector<char> active(n, 0);
        bool any = false;
        for (int p = 0; p < np; ++p)
            if (pair_live(p)) {
                active[dsu.find(inst.requests[p].a)] = 1;
                active[dsu.find(inst.requests[p].b)] = 1;
                any = true;
            }
        if (!any) break;

        Time best_edge_t = kNoEvent;
        EdgeId best_edge = -1;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            if (ed.priority < inst.priority_floor) continue;
            int cu = dsu.find(ed.u), cv = dsu.find(ed.v);
            if (cu == cv) continue;
            int sides = (active[cu] ? 1 : 0) + (active[cv] ? 1 : 0);
            if (sides == 0) continue;
            Time slack = Time(ed.cost) - pot[ed.u] - pot[ed.v];
            Time t = slack <= 0 ? 0 : slack / sides;
            if (t < best_edge_t) {
                best_edge_t = t;
                best_edge = e;
            }
        }
        Time best_pen_t = kNoEvent;
        int best_pair = -1;
        if (!inst.penalty.infinite())
            for (int p = 0; p < np; ++p) {
                if (!pair_live(p)) continue;
                int rate = (active[dsu.find(inst.requests[p].a)] ? 1 : 0) +
                           (active[dsu.find(inst.requests[p].b)] ? 1 : 0);
                if (rate == 0) continue;
                Time t = (x - spent[p]) / rate;
                if (t < best_pen_t) {
                    best_pen_t = t;
                    best_pair = p;
                }
            }

        Time step = std::min(best_edge_t, best_pen_t);
        if (step >= kNoEvent) break;
        for (int v = 0; v < n; ++v)
            if (active[dsu.find(v)]) pot[v] += step;
        for (int p = 0; p < np; ++p)
            if (pair_live(p)) {
                int rate = (active[dsu.find(inst.requests[p].a)] ? 1 : 0) +
                           (active[dsu.find(inst.requests[p].b)] ? 1 : 0);
                spent[p] += step * rate;
            }

        if (best_edge_t <= best_pen_t) {
            tentative.push_back(best_edge);
            dsu.unite(g.edge(best_edge).u, g.edge(best_edge).v);
        } else {
            abandoned[best_pair] = 1;
        }
    }

    // reverse delete, keeping every non-abandoned pair connected
    std::vector<char> in_forest(g.edge_count(), 0);
    for (EdgeId e : tentative) in_forest[e] = 1;
    auto connects_committed = [&]() {
        Dsu d(n);
        for (EdgeId e = 0; e < g.edge_count(); ++e)
            if (in_forest[e]) d.unite(g.edge(e).u, g.edge(e).v);
        for (int p = 0; p < np; ++p)
            if (!abandoned[p] && d.find(inst.requests[p].a) != d.find(inst.requests[p].b))
                return false;
        return true;
    };
    for (auto it = tentative.rbegin(); it != tentative.rend(); ++it) {
        in_forest[*it] = 0;
        if (!connects_committed()) in_forest[*it] = 1;
    }

    PCSolution sol;
    sol.declared_gamma = 3;
    Dsu fin(n);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (in_forest[e]) {
            sol.edges.push_back(e);
            fin.unite(g.edge(e).u, g.edge(e).v);
        }
    sol.element_cost = sum_edge_costs(g, sol.edges);
    for (const Request& r : inst.requests) {
        bool sat = fin.find(r.a) == fin.find(r.b);
        sol.satisfied.push_back(sat);
        if (!sat) ++sol.unsatisfied;
    }
    return sol;
}

// ---------------------------------------------------------------------------
// Jain-Vazirani style primal-dual facility location with penalty caps,
// declared gamma 3.
// ---------------------------------------------------------------------------

PCSolution jv_facility_location(const PenaltyInstance& inst) {
    const WeightedGraph& g = *inst.graph;
    if (!g.has_facilities()) throw std::invalid_argument("facility costs missing");
    const int nc = static_cast<int>(inst.requests.size());
    const Time x = inst.penalty.infinite() ? kNoEvent : Time(inst.penalty.num) / Time(inst.penalty.den);

    std::vector<VertexId> cand;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!is_inf(g.facility_cost(v))) cand.push_back(v);
    const int nf = static_cast<int>(cand.size());

    Metric metric(g);
    std::map<VertexId, std::vector<Cost>> dist_rows;
    for (const Request& r : inst.requests)
        if (!dist_rows.count(r.a)) dist_rows[r.a] = metric.distances_from(r.a);
    auto dcf = [&](int c, int f) { return dist_rows[inst.requests[c].a][cand[f]]; };

    if (inst.penalty.infinite()) {
        for (int c = 0; c < nc; ++c) {
            bool reach = false;
            for (int f = 0; f < nf; ++f)
                if (!is_inf(dcf(c, f))) reach = true;
            if (!reach) throw std::invalid_argument("infinite penalty with unreachable client");
        }
    }

    std::vector<Time> alpha(nc, 0);
    std::vector<char> frozen(nc, 0), abandon(nc, 0);
    std::vector<char> open(nf, 0);
    std::vector<int> open_order;

    auto facility_state = [&](int f, Time& contrib, int& rate) {
        contrib = 0;
        rate = 0;
        for (int c = 0; c < nc; ++c) {
            Cost d = dcf(c, f);
            if (is_inf(d)) continue;
            Time over = alpha[c] - Time(d);
            if (over > 0) contrib += over;
            if (!frozen[c] && alpha[c] >= Time(d)) ++rate;
        }
    };

    int active_count = nc;
    while (active_count > 0) {
        Time step = kNoEvent;
        int ev_client = -1, ev_fac = -1, kind = -1;  // 0 connect, 1 abandon, 2 open, 3 crossing
        for (int c = 0; c < nc; ++c) {
            if (frozen[c]) continue;
            for (int f = 0; f < nf; ++f) {
                Cost d = dcf(c, f);
                if (is_inf(d)) continue;
                Time t = Time(d) - alpha[c];
                int k = open[f] ? 0 : 3;
                // a crossing only matters while it is strictly ahead; at the
                // boundary the client already counts toward the rate
                if (k == 3 && t <= 0) continue;
                if (t < 0) t = 0;
                if (t < step || (t == step && k < kind)) {
                    step = t;
                    kind = k;
                    ev_client = c;
                    ev_fac = f;
                }
            }
            if (!inst.penalty.infinite()) {
                Time t = x - alpha[c];
                if (t < 0) t = 0;
                if (t < step || (t == step && 1 < kind)) {
                    step = t;
                    kind = 1;
                    ev_client = c;
                    ev_fac = -1;
                }
            }
        }
        for (int f = 0; f < nf; ++f) {
            if (open[f]) continue;
            Time contrib;
            int rate;
            facility_state(f, contrib, rate);
            if (rate == 0) continue;
            Time t = (Time(g.facility_cost(cand[f])) - contrib) / rate;
            if (t < 0) t = 0;
            if (t < step || (t == step && 2 < kind)) {
                step = t;
                kind = 2;
                ev_client = -1;
                ev_fac = f;
            }
        }
        if (step >= kNoEvent) break;  // no facility reachable and infinite penalty

        for (int c = 0; c < nc; ++c)
            if (!frozen[c]) alpha[c] += step;


        if (kind == 0) {
            frozen[ev_client] = 1;
        } else if (kind == 1) {
            frozen[ev_client] = 1;
            abandon[ev_client] = 1;
        } else if (kind == 2) {
            open[ev_fac] = 1;
            open_order.push_back(ev_fac);
            for (int c = 0; c < nc; ++c)
                if (!frozen[c] && alpha[c] >= Time(dcf(c, ev_fac))) frozen[c] = 1;
        }
        // kind 3 only changes rates
        active_count = 0;
        for (int c = 0; c < nc; ++c)
            if (!frozen[c]) ++active_count;
    }

    // conflict pruning: facilities sharing a positive contributor conflict;
    // keep a greedy independent set in opening order
    std::vector<int> chosen;
    std::vector<char> blocked(nf, 0);
    for (int f : open_order) {
        if (blocked[f]) continue;
        chosen.push_back(f);
        for (int f2 : open_order) {
            if (blocked[f2] || f2 == f) continue;
            for (int c = 0; c < nc; ++c) {
                Cost d1 = dcf(c, f), d2 = dcf(c, f2);
                if (!is_inf(d1) && !is_inf(d2) && alpha[c] > Time(d1) && alpha[c] > Time(d2)) {
                    blocked[f2] = 1;
                    break;
                }
            }
        }
    }
    std::sort(chosen.begin(), chosen.end());

    PCSolution sol;
    sol.declared_gamma = 3;
    for (int f : chosen) sol.facilities.push_back(cand[f]);
    for (VertexId v : sol.facilities) sol.element_cost = add_cost(sol.element_cost, g.facility_cost(v));
    for (int c = 0; c < nc; ++c) {
        bool sat = !abandon[c] && !chosen.empty();
        sol.satisfied.push_back(sat);
        if (!sat) {
            ++sol.unsatisfied;
            continue;
        }
        // a facility-location solution is priced with its connections
        Cost d = kInfCost;
        for (int f : chosen) d = std::min(d, dcf(c, f));
        sol.element_cost = add_cost(sol.element_cost, d);
    }
    return sol;
}

// ---------------------------------------------------------------------------
// Exact solver by enumeration, with cached subset tables per bound instance.
// ---------------------------------------------------------------------------

class ExactPcSolver : public PcSolver {
  public:
    ExactPcSolver(const WeightedGraph& g, RequestSequence reqs, ProblemKind kind, VertexId root,
                  int floor)
        : g_(&g), reqs_(std::move(reqs)), kind_(kind), root_(root), floor_(floor) {
        switch (kind_) {
            case ProblemKind::steiner_tree: {
                std::map<VertexId, int> mult;
                for (const Request& r : reqs_)
                    if (r.a != root_) ++mult[r.a];
                for (auto& [v, c] : mult) {
                    distinct_.push_back(v);
                    counts_.push_back(c);
                }
                oracle_.emplace(g, distinct_, root_);
                break;
            }
            case ProblemKind::steiner_forest: {
                std::vector<std::pair<VertexId, VertexId>> pairs;
                std::vector<int> prios;
                for (const Request& r : reqs_) {
                    pairs.push_back({r.a, r.b});
                    prios.push_back(std::max(r.priority, floor_));
                }
                forest_ = enumerate_forests(g, pairs, prios);
                break;
            }
            case ProblemKind::facility_location: {
                if (!g.has_facilities()) throw std::invalid_argument("facility costs missing");
                for (VertexId v = 0; v < g.vertex_count(); ++v)
                    if (!is_inf(g.facility_cost(v))) cand_.push_back(v);
                if (static_cast<int>(cand_.size()) > 15)
                    throw OracleRefusal("exact pc facility location handles at most 15 candidates");
                Metric m(g);
                for (const Request& r : reqs_) {
                    if (!dist_.count(r.a)) dist_[r.a] = m.distances_from(r.a);
                }
                break;
            }
        }
    }

    Cost gamma() const override { return 1; }
    std::string name() const override { return "exact"; }

    PCSolution solve(const Penalty& x) override {
        switch (kind_) {
            case ProblemKind::steiner_tree: return solve_st(x);
            case ProblemKind::steiner_forest: return solve_sf(x);
            case ProblemKind::facility_location: return solve_fl(x);
        }
        throw std::logic_error("unreachable");
    }

  private:
    const WeightedGraph* g_;
    RequestSequence reqs_;
    ProblemKind kind_;
    VertexId root_;
    int floor_;
    std::vector<VertexId> distinct_;
    std::vector<int> counts_;
    std::optional<SteinerTreeOracle> oracle_;
    ForestEnumeration forest_;
    std::vector<VertexId> cand_;
    std::map<VertexId, std::vector<Cost>> dist_;

    // compare c * den + num * unsat without overflow
    static bool better(Cost cost_a, long long unsat_a, Cost cost_b, long long unsat_b,
                       const Penalty& x) {
        __int128 a = __int128(cost_a) * x.den + __int128(x.infinite() ? 0 : x.num) * unsat_a;
        __int128 b = __int128(cost_b) * x.den + __int128(x.infinite() ? 0 : x.num) * unsat_b;
        if (x.infinite()) {
            if (unsat_a != unsat_b) return unsat_a < unsat_b;
            return cost_a < cost_b;
        }
        return a < b;
    }

    PCSolution solve_st(const Penalty& x) {
        const unsigned masks = distinct_.empty() ? 1 : (1u << distinct_.size());
        unsigned best_mask = 0;
        Cost best_cost = 0;
        long long best_unsat = 0;
        for (const Request& r : reqs_)
            if (r.a != root_) ++best_unsat;  // mask 0 satisfies only root requests
        for (unsigned mask = 1; mask < masks; ++mask) {
            Cost c = oracle_->cost(mask);
            if (is_inf(c)) continue;
            long long unsat = 0;
            for (std::size_t i = 0; i < distinct_.size(); ++i)
                if (!(mask & (1u << i))) unsat += counts_[i];
            if (better(c, unsat, best_cost, best_unsat, x)) {
                best_mask = mask;
                best_cost = c;
                best_unsat = unsat;
            }
        }
        PCSolution sol;
        sol.edges = best_mask ? oracle_->tree_edges(best_mask) : std::vector<EdgeId>{};
        sol.element_cost = best_cost;
        std::set<VertexId> in;
        for (std::size_t i = 0; i < distinct_.size(); ++i)
            if (best_mask & (1u << i)) in.insert(distinct_[i]);
        for (const Request& r : reqs_) {
            bool sat = r.a == root_ || in.count(r.a);
            sol.satisfied.push_back(sat);
            if (!sat) ++sol.unsatisfied;
        }
        return sol;
    }

    PCSolution solve_sf(const Penalty& x) {
        unsigned best_mask = 0;
        Cost best_cost = forest_.cost[0];
        long long best_unsat = forest_.pair_count - std::popcount(forest_.satisfied[0]);
        for (unsigned mask = 1; mask < forest_.cost.size(); ++mask) {
            long long unsat = forest_.pair_count - std::popcount(forest_.satisfied[mask]);
            if (better(forest_.cost[mask], unsat, best_cost, best_unsat, x)) {
                best_mask = mask;
                best_cost = forest_.cost[mask];
                best_unsat = unsat;
            }
        }
        PCSolution sol;
        for (int e = 0; e < g_->edge_count(); ++e)
            if (best_mask & (1u << e)) sol.edges.push_back(e);
        sol.element_cost = best_cost;
        for (int p = 0; p < forest_.pair_count; ++p) {
            bool sat = forest_.satisfied[best_mask] & (1u << p);
            sol.satisfied.push_back(sat);
            if (!sat) ++sol.unsatisfied;
        }
        return sol;
    }

    PCSolution solve_fl(const Penalty& x) {
        const int nc = static_cast<int>(reqs_.size());
        std::vector<VertexId> best_open;
        Cost best_cost = 0;
        long long best_unsat = nc;
        const unsigned masks = 1u << cand_.size();
        for (unsigned mask = 1; mask < masks; ++mask) {
            Cost oc = 0, cc = 0;
            long long unsat = 0;
            for (std::size_t i = 0; i < cand_.size(); ++i)
                if (mask & (1u << i)) oc = add_cost(oc, g_->facility_cost(cand_[i]));
            for (const Request& r : reqs_) {
                Cost d = kInfCost;
                for (std::size_t i = 0; i < cand_.size(); ++i)
                    if (mask & (1u << i)) d = std::min(d, dist_[r.a][cand_[i]]);
                // serve only when strictly cheaper than the penalty
                bool serve = !is_inf(d) && (x.infinite() || __int128(d) * x.den < __int128(x.num));
                if (serve)
                    cc = add_cost(cc, d);
                else
                    ++unsat;
            }
            if (better(add_cost(oc, cc), unsat, best_cost, best_unsat, x)) {
                best_cost = add_cost(oc, cc);
                best_unsat = unsat;
                best_open.clear();
                for (std::size_t i = 0; i < cand_.size(); ++i)
                    if (mask & (1u << i)) best_open.push_back(cand_[i]);
            }
        }
        PCSolution sol;
        sol.facilities = best_open;
        sol.element_cost = best_cost;
        for (const Request& r : reqs_) {
            Cost d = kInfCost;
            for (VertexId v : best_open) d = std::min(d, dist_[r.a][v]);
            bool sat = !best_open.empty() && !is_inf(d) &&
                       (x.infinite() || __int128(d) * x.den < __int128(x.num));
            sol.satisfied.push_back(sat);
            if (!sat) ++sol.unsatisfied;
        }
        return sol;
    }
};

class PrimalDualSolver : public PcSolver {
  public:
    PrimalDualSolver(const WeightedGraph& g, RequestSequence reqs, ProblemKind kind, VertexId root,
                     int floor, std::optional<Cost> gamma_override)
        : inst_{&g, std::move(reqs), Penalty{}, kind, root, floor} {
        gamma_ = gamma_override.value_or(kind == ProblemKind::steiner_tree ? 2 : 3);
    }
    Cost gamma() const override { return gamma_; }
    std::string name() const override { return "primal-dual"; }
    PCSolution solve(const Penalty& x) override {
        PenaltyInstance inst = inst_;
        inst.penalty = x;
        PCSolution sol;
        switch (inst.kind) {
            case ProblemKind::steiner_tree: sol = gw_steiner_tree(inst); break;
            case ProblemKind::steiner_forest: sol = pd_steiner_forest(inst); break;
            case ProblemKind::facility_location: sol = jv_facility_location(inst); break;
        }
        sol.declared_gamma = gamma_;
        return sol;
    }

  private:
    PenaltyInstance inst_;
    Cost gamma_;
};

}  // namespace

Cost pc_objective_scaled(const PCSolution& s, const Penalty& x) {
    if (x.infinite()) return s.unsatisfied == 0 ? mul_cost(s.element_cost, x.den) : kInfCost;
    return add_cost(mul_cost(s.element_cost, x.den), mul_cost(x.num, s.unsatisfied));
}

PCSolution pc_steiner_tree(const PenaltyInstance& inst) { return gw_steiner_tree(inst); }
PCSolution pc_steiner_forest(const PenaltyInstance& inst) { return pd_steiner_forest(inst); }
PCSolution pc_facility_location(const PenaltyInstance& inst) { return jv_facility_location(inst); }

PCSolution pc_exact(const PenaltyInstance& inst) {
    ExactPcSolver solver(*inst.graph, inst.requests, inst.kind, inst.root, inst.priority_floor);
    return solver.solve(inst.penalty);
}

std::unique_ptr<PcSolver> make_pc_solver(const std::string& name, const WeightedGraph& g,
                                         const RequestSequence& requests, ProblemKind kind,
                                         VertexId root, int priority_floor,
                                         std::optional<Cost> gamma_override) {
    if (name == "exact") return std::make_unique<ExactPcSolver>(g, requests, kind, root, priority_floor);
    if (name == "primal-dual")
        return std::make_unique<PrimalDualSolver>(g, requests, kind, root, priority_floor,
                                                  gamma_override);
    throw std::invalid_argument("unknown prize-collecting solver: " + name);
}

}  // namespace netpred
