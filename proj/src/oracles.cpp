#include "netpred/oracles.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>

#include "netpred/matching.hpp"

namespace netpred {

namespace {

struct Apsp {
    std::vector<std::vector<Cost>> dist;
    std::vector<std::vector<EdgeId>> hop;  // first edge on a shortest path
};

Apsp all_pairs(const WeightedGraph& g, const OracleBudget& budget) {
    const int n = g.vertex_count();
    if (n > budget.max_vertices) throw OracleRefusal("graph exceeds oracle vertex budget");
    Apsp a;
    a.dist.assign(n, std::vector<Cost>(n, kInfCost));
    a.hop.assign(n, std::vector<EdgeId>(n, -1));
    for (int v = 0; v < n; ++v) a.dist[v][v] = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (ed.cost < a.dist[ed.u][ed.v]) {
            a.dist[ed.u][ed.v] = a.dist[ed.v][ed.u] = ed.cost;
            a.hop[ed.u][ed.v] = a.hop[ed.v][ed.u] = e;
        }
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i) {
            if (is_inf(a.dist[i][k])) continue;
            for (int j = 0; j < n; ++j) {
                if (is_inf(a.dist[k][j])) continue;
                Cost via = a.dist[i][k] + a.dist[k][j];
                if (via < a.dist[i][j]) {
                    a.dist[i][j] = via;
                    a.hop[i][j] = a.hop[i][k];
                }
            }
        }
    return a;
}

struct DsuSmall {
    std::vector<int> parent;
    explicit DsuSmall(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

long long combinations(int n, int k) {
    long long c = 1;
    for (int i = 0; i < k; ++i) {
        c = c * (n - i) / (i + 1);
        if (c > (1LL << 40)) return c;
    }
    return c;
}

std::vector<VertexId> facility_candidates(const WeightedGraph& g) {
    std::vector<VertexId> cands;
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (!is_inf(g.facility_cost(v))) cands.push_back(v);
    return cands;
}

// enumerate subsets of `cands` of size <= max_size, calling fn(subset)
template <typename Fn>
void for_each_subset_up_to(const std::vector<VertexId>& cands, int max_size, Fn&& fn) {
    std::vector<VertexId> cur;
    // plain recursion, deterministic lexicographic order
    auto rec = [&](auto&& self, std::size_t from) -> void {
        fn(cur);
        if (static_cast<int>(cur.size()) == max_size) return;
        for (std::size_t i = from; i < cands.size(); ++i) {
            cur.push_back(cands[i]);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
}

}  // namespace

SteinerTreeOracle::SteinerTreeOracle(const WeightedGraph& g, std::vector<VertexId> distinct_terminals,
                                     VertexId root, const OracleBudget& budget)
    : g_(&g), terms_(std::move(distinct_terminals)), root_(root) {
    if (static_cast<int>(terms_.size()) > budget.max_terminals)
        throw OracleRefusal("terminal count exceeds oracle budget of " +
                            std::to_string(budget.max_terminals));
    Apsp a = all_pairs(g, budget);
    dist_ = std::move(a.dist);
    hop_edge_ = std::move(a.hop);

    const int t = static_cast<int>(terms_.size());
    const int n = g.vertex_count();
    const unsigned full = t == 0 ? 0 : (1u << t) - 1;
    dp_.assign(full + 1, std::vector<Cost>(n, kInfCost));
    dp_merge_.assign(full + 1, std::vector<Cost>(n, kInfCost));
    if (t == 0) return;

    for (int i = 0; i < t; ++i) dp_merge_[1u << i][terms_[i]] = 0;
    for (unsigned mask = 1; mask <= full; ++mask) {
        if ((mask & (mask - 1)) != 0) {
            // merge two sub-trees at v; fix the lowest bit on one side
            unsigned low = mask & (0u - mask);
            for (int v = 0; v < n; ++v) {
                Cost best = kInfCost;
                for (unsigned sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
                    if (!(sub & low)) continue;
                    if (sub == mask) continue;
                    Cost c1 = dp_[sub][v], c2 = dp_[mask ^ sub][v];
                    if (is_inf(c1) || is_inf(c2)) continue;
                    best = std::min(best, c1 + c2);
                }
                dp_merge_[mask][v] = best;
            }
        }
        // metric closure: one min-plus pass with exact distances
        for (int v = 0; v < n; ++v) {
            Cost best = dp_merge_[mask][v];
            for (int u = 0; u < n; ++u) {
                if (is_inf(dp_merge_[mask][u]) || is_inf(dist_[u][v])) continue;
                best = std::min(best, dp_merge_[mask][u] + dist_[u][v]);
            }
            dp_[mask][v] = best;
        }
    }
}

Cost SteinerTreeOracle::cost(unsigned mask) const {
    if (mask == 0) return 0;
    return dp_[mask][root_];
}

void SteinerTreeOracle::append_path(VertexId u, VertexId v, std::vector<EdgeId>& out) const {
    while (u != v) {
        EdgeId e = hop_edge_[u][v];
        out.push_back(e);
        u = g_->edge(e).other(u);
    }
}

void SteinerTreeOracle::reconstruct(unsigned mask, VertexId v, std::vector<EdgeId>& out) const {
    // undo the closure step first
    if (dp_[mask][v] != dp_merge_[mask][v]) {
        for (int u = 0; u < g_->vertex_count(); ++u) {
            if (is_inf(dp_merge_[mask][u]) || is_inf(dist_[u][v])) continue;
            if (dp_merge_[mask][u] + dist_[u][v] == dp_[mask][v]) {
                append_path(v, u, out);
                reconstruct(mask, u, out);
                return;
            }
        }
        throw std::logic_error("steiner oracle reconstruction failed");
    }
    if ((mask & (mask - 1)) == 0) return;  // singleton at its own terminal
    unsigned low = mask & (0u - mask);
    for (unsigned sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
        if (!(sub & low) || sub == mask) continue;
        if (!is_inf(dp_[sub][v]) && !is_inf(dp_[mask ^ sub][v]) &&
            dp_[sub][v] + dp_[mask ^ sub][v] == dp_merge_[mask][v]) {
            reconstruct(sub, v, out);
            reconstruct(mask ^ sub, v, out);
            return;
        }
    }
    throw std::logic_error("steiner oracle reconstruction failed");
}

std::vector<EdgeId> SteinerTreeOracle::tree_edges(unsigned mask) const {
    std::vector<EdgeId> out;
    if (mask == 0 || is_inf(dp_[mask][root_])) return out;
    reconstruct(mask, root_, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SteinerTreeResult exact_steiner_tree(const WeightedGraph& g, const std::vector<VertexId>& terminals,
                                     VertexId root, const OracleBudget& budget) {
    std::vector<VertexId> distinct;
    for (VertexId t : terminals)
        if (t != root && std::find(distinct.begin(), distinct.end(), t) == distinct.end())
            distinct.push_back(t);
    SteinerTreeOracle oracle(g, distinct, root, budget);
    unsigned full = distinct.empty() ? 0 : (1u << distinct.size()) - 1;
    SteinerTreeResult r;
    r.cost = oracle.cost(full);
    r.edges = oracle.tree_edges(full);
    return r;
}

ForestEnumeration enumerate_forests(const WeightedGraph& g,
                                    const std::vector<std::pair<VertexId, VertexId>>& pairs,
                                    const std::vector<int>& priorities,
                                    const OracleBudget& budget) {
    const int m = g.edge_count();
    if (m > budget.max_edges_subset)
        throw OracleRefusal("edge count exceeds oracle budget of " +
                            std::to_string(budget.max_edges_subset));
    if (pairs.size() > 31) throw OracleRefusal("too many pairs for forest enumeration");
    ForestEnumeration fe;
    fe.pair_count = static_cast<int>(pairs.size());
    const unsigned masks = 1u << m;
    fe.cost.assign(masks, 0);
    fe.satisfied.assign(masks, 0);
    for (unsigned mask = 0; mask < masks; ++mask) {
        Cost c = 0;
        for (int e = 0; e < m; ++e)
            if (mask & (1u << e)) c += g.edge(e).cost;
        fe.cost[mask] = c;
        unsigned sat = 0;
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            DsuSmall d2(g.vertex_count());
            for (int e = 0; e < m; ++e)
                if ((mask & (1u << e)) && g.edge(e).priority >= priorities[p])
                    d2.unite(g.edge(e).u, g.edge(e).v);
            if (d2.find(pairs[p].first) == d2.find(pairs[p].second)) sat |= 1u << p;
        }
        fe.satisfied[mask] = sat;
    }
    return fe;
}

SteinerTreeResult exact_steiner_forest(const WeightedGraph& g,
                                       const std::vector<std::pair<VertexId, VertexId>>& pairs,
                                       const OracleBudget& budget) {
    std::vector<int> priorities(pairs.size(), 1);
    ForestEnumeration fe = enumerate_forests(g, pairs, priorities, budget);
    const unsigned want = pairs.empty() ? 0 : (1u << pairs.size()) - 1;
    SteinerTreeResult r;
    r.cost = kInfCost;
    unsigned best_mask = 0;
    for (unsigned mask = 0; mask < fe.cost.size(); ++mask)
        if (fe.satisfied[mask] == want && fe.cost[mask] < r.cost) {
            r.cost = fe.cost[mask];
            best_mask = mask;
        }
    if (!is_inf(r.cost))
        for (int e = 0; e < g.edge_count(); ++e)
            if (best_mask & (1u << e)) r.edges.push_back(e);
    return r;
}

FacilityLocationResult exact_facility_location(const WeightedGraph& g,
                                               const std::vector<VertexId>& clients,
                                               const OracleBudget& budget) {
    if (!g.has_facilities()) throw std::invalid_argument("graph has no facility costs");
    std::vector<VertexId> cands = facility_candidates(g);
    std::set<VertexId> distinct(clients.begin(), clients.end());
    int cap = static_cast<int>(std::min<std::size_t>(cands.size(), distinct.size()));
    if (static_cast<int>(cands.size()) > budget.max_facilities &&
        combinations(static_cast<int>(cands.size()), cap) > budget.max_combinations)
        throw OracleRefusal("facility candidates exceed oracle budget");

    // one closure row per distinct client vertex
    Apsp a = all_pairs(g, budget);
    FacilityLocationResult best;
    best.cost = kInfCost;
    for_each_subset_up_to(cands, cap, [&](const std::vector<VertexId>& open) {
        if (open.empty() && !clients.empty()) return;
        Cost oc = 0;
        for (VertexId v : open) oc = add_cost(oc, g.facility_cost(v));
        Cost cc = 0;
        for (VertexId c : clients) {
            Cost d = kInfCost;
            for (VertexId v : open) d = std::min(d, a.dist[c][v]);
            cc = add_cost(cc, d);
        }
        Cost total = add_cost(oc, cc);
        if (total < best.cost) {
            best.cost = total;
            best.opening_cost = oc;
            best.connection_cost = cc;
            best.open = open;
        }
    });
    if (clients.empty()) best = FacilityLocationResult{};
    return best;
}

Cost exact_capacitated_fl(const WeightedGraph& g, const std::vector<VertexId>& clients,
                          const OracleBudget& budget) {
    if (!g.has_facilities() || !g.has_capacities())
        throw std::invalid_argument("graph lacks facility costs or capacities");
    std::vector<VertexId> cands = facility_candidates(g);
    const int nc = static_cast<int>(clients.size());
    if (nc == 0) return 0;

    std::vector<int> max_mult(cands.size());
    long long combos = 1;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        int beta = g.capacity(cands[i]);
        if (beta < 1) throw std::invalid_argument("capacities must be >= 1");
        max_mult[i] = (nc + beta - 1) / beta;
        combos *= max_mult[i] + 1;
        if (combos > budget.max_combinations)
            throw OracleRefusal("capacitated multiplicity space exceeds oracle budget");
    }

    Apsp a = all_pairs(g, budget);
    Cost best = kInfCost;
    std::vector<int> mult(cands.size(), 0);
    auto rec = [&](auto&& self, std::size_t i, Cost open_cost, int slots) -> void {
        if (i == cands.size()) {
            if (slots < nc) return;
            // transportation: clients x slots assignment
            std::vector<std::vector<Cost>> cm(nc);
            for (int c = 0; c < nc; ++c) {
                for (std::size_t f = 0; f < cands.size(); ++f) {
                    int s = std::min(mult[f] * g.capacity(cands[f]), nc);
                    for (int t = 0; t < s; ++t) cm[c].push_back(a.dist[clients[c]][cands[f]]);
                }
            }
            if (cm[0].empty()) return;
            Cost assign = min_cost_matchings(cm).cost_for_size[nc];
            if (!is_inf(assign)) best = std::min(best, add_cost(open_cost, assign));
            return;
        }
        for (int k = 0; k <= max_mult[i]; ++k) {
            mult[i] = k;
            Cost oc = add_cost(open_cost, mul_cost(g.facility_cost(cands[i]), k));
            if (oc < best)
                self(self, i + 1, oc, slots + std::min(k * g.capacity(cands[i]), nc));
            mult[i] = 0;
        }
    };
    rec(rec, 0, 0, 0);
    return best;
}

ParetoFrontier exact_matching_frontier(const RequestSequence& R, const PredictionSet& Rhat,
                                       const WeightedGraph& g, ProblemKind kind) {
    if (R.size() > 6 || Rhat.size() > 6) throw OracleRefusal("matching frontier oracle handles up to 6x6");
    std::vector<std::vector<Cost>> cost = matching_cost_matrix(R, Rhat, g, kind);
    const int nr = static_cast<int>(R.size()), np = static_cast<int>(Rhat.size());
    const int kmax = std::min(nr, np);

    std::vector<Cost> best(kmax + 1, kInfCost);
    std::vector<std::vector<std::pair<int, int>>> witness(kmax + 1);
    best[0] = 0;
    std::vector<std::pair<int, int>> cur;
    auto rec = [&](auto&& self, int row, unsigned used, Cost acc) -> void {
        int k = static_cast<int>(cur.size());
        if (acc < best[k] || (acc == best[k] && cur < witness[k])) {
            best[k] = acc;
            witness[k] = cur;
        }
        if (row == nr) return;
        self(self, row + 1, used, acc);  // leave this request unmatched
        for (int j = 0; j < np; ++j) {
            if ((used & (1u << j)) || is_inf(cost[row][j])) continue;
            cur.push_back({row, j});
            self(self, row + 1, used | (1u << j), acc + cost[row][j]);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0u, 0);

    ParetoFrontier f;
    Cost last = kInfCost;
    for (int k = kmax; k >= 0; --k) {
        if (is_inf(best[k])) continue;
        if (!f.points.empty() && best[k] >= last) continue;
        ParetoPoint p;
        p.k = k;
        p.delta = nr + np - 2 * k;
        p.min_matching_cost = best[k];
        p.witness.delta = p.delta;
        p.witness.matching_cost = best[k];
        p.witness.matching = witness[k];
        for (auto [i, j] : witness[k]) {
            p.witness.matched_requests.push_back(i);
            p.witness.matched_predictions.push_back(j);
        }
        last = best[k];
        f.points.push_back(std::move(p));
    }
    return f;
}

Cost exact_opt(const WeightedGraph& g, const RequestSequence& R, ProblemKind kind, VertexId root,
               const OracleBudget& budget) {
    switch (kind) {
        case ProblemKind::steiner_tree: {
            std::vector<VertexId> terms;
            for (const Request& r : R) terms.push_back(r.a);
            return exact_steiner_tree(g, terms, root, budget).cost;
        }
        case ProblemKind::steiner_forest: {
            std::vector<std::pair<VertexId, VertexId>> pairs;
            std::vector<int> prios;
            for (const Request& r : R) {
                pairs.push_back({r.a, r.b});
                prios.push_back(r.priority);
            }
            ForestEnumeration fe = enumerate_forests(g, pairs, prios, budget);
            unsigned want = pairs.empty() ? 0 : (1u << pairs.size()) - 1;
            Cost best = kInfCost;
            for (unsigned mask = 0; mask < fe.cost.size(); ++mask)
                if (fe.satisfied[mask] == want) best = std::min(best, fe.cost[mask]);
            return best;
        }
        case ProblemKind::facility_location: {
            std::vector<VertexId> clients;
            for (const Request& r : R) clients.push_back(r.a);
            return exact_facility_location(g, clients, budget).cost;
        }
    }
    return kInfCost;
}

std::vector<Cost> exact_min_cost_unsat_profile(const WeightedGraph& g, const RequestSequence& reqs,
                                               ProblemKind kind, VertexId root,
                                               const OracleBudget& budget) {
    const int n = static_cast<int>(reqs.size());
    // best[q] = min cost satisfying at least q requests; profile[u] = best[n-u]
    std::vector<Cost> best(n + 1, kInfCost);
    best[0] = 0;
    auto consider = [&](Cost cost, int sat) {
        sat = std::min(sat, n);
        if (cost < best[sat]) best[sat] = cost;
    };
    switch (kind) {
        case ProblemKind::steiner_tree: {
            std::map<VertexId, int> mult;
            for (const Request& r : reqs)
                if (r.a != root) ++mult[r.a];
            int at_root = n;
            for (auto& [v, c] : mult) at_root -= c;
            std::vector<VertexId> distinct;
            std::vector<int> counts;
            for (auto& [v, c] : mult) {
                distinct.push_back(v);
                counts.push_back(c);
            }
            SteinerTreeOracle oracle(g, distinct, root, budget);
            const unsigned masks = distinct.empty() ? 1 : 1u << distinct.size();
            for (unsigned mask = 0; mask < masks; ++mask) {
                Cost c = oracle.cost(mask);
                if (is_inf(c)) continue;
                int sat = at_root;
                for (std::size_t i = 0; i < distinct.size(); ++i)
                    if (mask & (1u << i)) sat += counts[i];
                consider(c, sat);
            }
            break;
        }
        case ProblemKind::steiner_forest: {
            std::vector<std::pair<VertexId, VertexId>> pairs;
            std::vector<int> prios;
            for (const Request& r : reqs) {
                pairs.push_back({r.a, r.b});
                prios.push_back(r.priority);
            }
            ForestEnumeration fe = enumerate_forests(g, pairs, prios, budget);
            for (unsigned mask = 0; mask < fe.cost.size(); ++mask)
                consider(fe.cost[mask], std::popcount(fe.satisfied[mask]));
            break;
        }
        case ProblemKind::facility_location: {
            std::vector<VertexId> cands = facility_candidates(g);
            if (static_cast<int>(cands.size()) > budget.max_facilities)
                throw OracleRefusal("facility candidates exceed oracle budget");
            Apsp a = all_pairs(g, budget);
            for_each_subset_up_to(cands, static_cast<int>(cands.size()),
                                  [&](const std::vector<VertexId>& open) {
                                      if (open.empty()) return;
                                      Cost oc = 0;
                                      for (VertexId v : open) oc = add_cost(oc, g.facility_cost(v));
                                      std::vector<Cost> ds;
                                      for (const Request& r : reqs) {
                                          Cost d = kInfCost;
                                          for (VertexId v : open) d = std::min(d, a.dist[r.a][v]);
                                          ds.push_back(d);
                                      }
                                      std::sort(ds.begin(), ds.end());
                                      Cost acc = oc;
                                      consider(acc, 0);
                                      for (int q = 1; q <= n; ++q) {
                                          if (is_inf(ds[q - 1])) break;
                                          acc = add_cost(acc, ds[q - 1]);
                                          consider(acc, q);
                                      }
                                  });
            break;
        }
    }
    // satisfying more never costs less; fold down so best[q] is monotone
    for (int q = n - 1; q >= 0; --q) best[q] = std::min(best[q], best[q + 1]);
    std::vector<Cost> profile(n + 1, kInfCost);
    for (int u = 0; u <= n; ++u) profile[u] = best[n - u];
    return profile;
}

Cost exact_min_cost_with_unsat_at_most(const WeightedGraph& g, const RequestSequence& reqs,
                                       ProblemKind kind, VertexId root, int u,
                                       const OracleBudget& budget) {
    const int n = static_cast<int>(reqs.size());
    const int need = std::max(0, n - u);
    if (need == 0) return 0;
    switch (kind) {
        case ProblemKind::steiner_tree: {
            // group by vertex; a vertex in the tree satisfies all its copies
            std::map<VertexId, int> mult;
            for (const Request& r : reqs)
                if (r.a != root) ++mult[r.a];
            int at_root = n - std::accumulate(mult.begin(), mult.end(), 0,
                                              [](int s, auto& kv) { return s + kv.second; });
            std::vector<VertexId> distinct;
            std::vector<int> counts;
            for (auto& [v, c] : mult) {
                distinct.push_back(v);
                counts.push_back(c);
            }
            SteinerTreeOracle oracle(g, distinct, root, budget);
            Cost best = kInfCost;
            const unsigned masks = distinct.empty() ? 1 : 1u << distinct.size();
            for (unsigned mask = 0; mask < masks; ++mask) {
                int sat = at_root;
                for (std::size_t i = 0; i < distinct.size(); ++i)
                    if (mask & (1u << i)) sat += counts[i];
                if (sat < need) continue;
                Cost c = oracle.cost(mask);
                if (!is_inf(c)) best = std::min(best, c);
            }
            return best;
        }
        case ProblemKind::steiner_forest: {
            std::vector<std::pair<VertexId, VertexId>> pairs;
            std::vector<int> prios;
            for (const Request& r : reqs) {
                pairs.push_back({r.a, r.b});
                prios.push_back(r.priority);
            }
            ForestEnumeration fe = enumerate_forests(g, pairs, prios, budget);
            Cost best = kInfCost;
            for (unsigned mask = 0; mask < fe.cost.size(); ++mask)
                if (std::popcount(fe.satisfied[mask]) >= need) best = std::min(best, fe.cost[mask]);
            return best;
        }
        case ProblemKind::facility_location: {
            std::vector<VertexId> cands = facility_candidates(g);
            if (static_cast<int>(cands.size()) > budget.max_facilities)
                throw OracleRefusal("facility candidates exceed oracle budget");
            Apsp a = all_pairs(g, budget);
            Cost best = kInfCost;
            for_each_subset_up_to(cands, static_cast<int>(cands.size()),
                                  [&](const std::vector<VertexId>& open) {
                                      if (open.empty()) return;
                                      Cost oc = 0;
                                      for (VertexId v : open) oc = add_cost(oc, g.facility_cost(v));
                                      std::vector<Cost> ds;
                                      for (const Request& r : reqs) {
                                          Cost d = kInfCost;
                                          for (VertexId v : open) d = std::min(d, a.dist[r.a][v]);
                                          ds.push_back(d);
                                      }
                                      std::sort(ds.begin(), ds.end());
                                      Cost total = oc;
                                      for (int i = 0; i < need; ++i) total = add_cost(total, ds[i]);
                                      best = std::min(best, total);
                                  });
            return best;
        }
    }
    return kInfCost;
}

}  // namespace netpred
