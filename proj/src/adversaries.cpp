#include "netpred/adversaries.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

#include "netpred/matching.hpp"

namespace netpred {

AlgorithmUnderTest adapt(OnlineEngine& engine) {
    AlgorithmUnderTest a;
    a.serve = [&engine](const Request& r) {
        engine.serve(r);
        return engine.log().back().actual;
    };
    a.owns_edge = [&engine](EdgeId e) {
        for (const ChargeRecord& rec : engine.log())
            for (EdgeId b : rec.bought_edges)
                if (b == e) return true;
        return false;
    };
    a.has_open_facility = [&engine](VertexId v) {
        for (const ChargeRecord& rec : engine.log())
            for (VertexId w : rec.opened_facilities)
                if (w == v) return true;
        return false;
    };
    return a;
}

AlgorithmUnderTest adapt(FrameworkRunner& runner) {
    AlgorithmUnderTest a;
    a.serve = [&runner](const Request& r) { return runner.step(r).actual; };
    a.owns_edge = [&runner](EdgeId e) { return runner.bought_edges()[e] != 0; };
    a.has_open_facility = [&runner](VertexId v) { return runner.bought_facilities()[v] != 0; };
    return a;
}

// ---------------------------------------------------------------------------

DiamondInstance build_diamond(int depth) {
    if (depth < 0 || depth > 8) throw std::invalid_argument("diamond depth out of range [0, 8]");
    DiamondInstance inst;
    inst.depth = depth;
    inst.base_cost = Cost(1) << depth;

    int vertex_count = 2;
    inst.levels.resize(depth + 1);
    inst.levels[0].push_back(DiamondAbstractEdge{0, 1});
    for (int j = 1; j <= depth; ++j) {
        for (DiamondAbstractEdge& parent : inst.levels[j - 1]) {
            parent.m1 = vertex_count++;
            parent.m2 = vertex_count++;
            int base = static_cast<int>(inst.levels[j].size());
            parent.child[0] = base;
            parent.child[1] = base + 1;
            parent.child[2] = base + 2;
            parent.child[3] = base + 3;
            inst.levels[j].push_back(DiamondAbstractEdge{parent.u, parent.m1});
            inst.levels[j].push_back(DiamondAbstractEdge{parent.m1, parent.v});
            inst.levels[j].push_back(DiamondAbstractEdge{parent.u, parent.m2});
            inst.levels[j].push_back(DiamondAbstractEdge{parent.m2, parent.v});
        }
    }
    WeightedGraph g(vertex_count);
    // deepest edges cost base / 2^depth = 1
    for (const DiamondAbstractEdge& e : inst.levels[depth]) g.add_edge(e.u, e.v, 1, 1);
    inst.graph = std::move(g);
    return inst;
}

namespace {

// final-graph edges beneath an abstract edge
void collect_descendants(const DiamondInstance& inst, int level, int idx,
                         std::vector<EdgeId>& out) {
    if (level == inst.depth) {
        out.push_back(idx);
        return;
    }
    const DiamondAbstractEdge& e = inst.levels[level][idx];
    for (int c = 0; c < 4; ++c) collect_descendants(inst, level + 1, e.child[c], out);
}

bool subtree_touched(const DiamondInstance& inst, int level, int idx,
                     const AlgorithmUnderTest& alg) {
    std::vector<EdgeId> ds;
    collect_descendants(inst, level, idx, ds);
    for (EdgeId e : ds)
        if (alg.owns_edge(e)) return true;
    return false;
}

}  // namespace

DiamondTranscript diamond_adversary(const DiamondInstance& inst, AlgorithmUnderTest alg) {
    DiamondTranscript t;
    int arrival = 0;
    auto release = [&](VertexId v) {
        Request r = Request::terminal(v);
        r.arrival_index = arrival++;
        t.requests.push_back(r);
        t.alg_cost = add_cost(t.alg_cost, alg.serve(r));
    };

    release(inst.terminal);
    std::vector<std::pair<int, int>> path{{0, 0}};  // (level, index) abstract edges
    for (int j = 1; j <= inst.depth; ++j) {
        std::vector<std::pair<int, int>> next;
        for (auto [lvl, idx] : path) {
            const DiamondAbstractEdge& e = inst.levels[lvl][idx];
            // request the midpoint whose branch the algorithm has not used
            bool used1 = subtree_touched(inst, lvl + 1, e.child[0], alg) ||
                         subtree_touched(inst, lvl + 1, e.child[1], alg);
            bool used2 = subtree_touched(inst, lvl + 1, e.child[2], alg) ||
                         subtree_touched(inst, lvl + 1, e.child[3], alg);
            bool pick_first = !used1 ? true : (used2 ? true : false);
            VertexId mid = pick_first ? e.m1 : e.m2;
            int c0 = pick_first ? 0 : 2;
            release(mid);
            next.push_back({lvl + 1, e.child[c0]});
            next.push_back({lvl + 1, e.child[c0 + 1]});
        }
        path = std::move(next);
    }

    for (auto [lvl, idx] : path) t.witness_path.push_back(idx);
    Cost witness_cost = 0;
    for (EdgeId e : t.witness_path) witness_cost = add_cost(witness_cost, inst.graph.edge(e).cost);
    Metric m(inst.graph);
    Cost d = m.distance(inst.root, inst.terminal);
    if (witness_cost != inst.base_cost || d != inst.base_cost)
        throw std::logic_error("diamond witness path is not tight");
    t.opt_cost = inst.base_cost;  // any tree must reach the far terminal, and
                                  // the witness path covers every request
    t.ratio = double(t.alg_cost) / double(t.opt_cost);
    return t;
}

// ---------------------------------------------------------------------------

namespace {

int isqrt_floor(int x) {
    int r = static_cast<int>(std::sqrt(double(x)));
    while ((r + 1) * (r + 1) <= x) ++r;
    while (r * r > x) --r;
    return r;
}

int floor_log2_int(int x) { return x <= 1 ? 0 : floor_log2(Cost(x)); }

}  // namespace

NkDeltaInstance nk_delta_adversary(int n, int k, int d1, int d2, ProblemKind kind,
                                   NkVariant variant) {
    if (kind == ProblemKind::steiner_forest)
        throw std::invalid_argument("nk-delta adversaries cover steiner-tree and facility-location");
    if ((n + k - d1 - d2) % 2 != 0)
        throw std::invalid_argument("parameter parity violated: n + k - d1 - d2 must be even");
    int ell = (n + k - d1 - d2) / 2;
    if (ell < 0) throw std::invalid_argument("violated: n + k - d1 - d2 >= 0");
    if (n - d1 != k - d2)
        throw std::invalid_argument("violated: n - d1 == k - d2 (matched counts must agree)");
    if (ell > n || ell > k) throw std::invalid_argument("violated: l <= min(n, k)");

    if (kind == ProblemKind::facility_location) {
        // predictions and free requests sit on isolated zero-cost facilities;
        // the d2 unpredicted requests replay a lower-bound tree (adaptively,
        // truncated to the budget), any leftovers pad on unpredicted nodes
        NkDeltaInstance inst;
        inst.kind = kind;
        inst.n = n;
        inst.k = k;
        inst.d1 = d1;
        inst.d2 = d2;
        int m = 2;
        for (int cand = 3; cand <= 4; ++cand) {
            long long total = 0, sz = 1;
            for (int i = 0; i <= cand; ++i) {
                total += sz;
                sz *= cand;
            }
            if (total <= d2) m = cand;
        }
        FotakisLbInstance lb = build_fotakis_lb(m);
        int tree_n = d2 > 0 ? lb.graph.vertex_count() : 0;
        int core_budget = 0;
        if (d2 > 0) {
            inst.fl_children = lb.children;
            long long released = 0;
            for (int sz : lb.phase_sizes) {
                int take = static_cast<int>(std::min<long long>(sz, d2 - released));
                if (take <= 0) break;
                inst.fl_phase_sizes.push_back(take);
                released += take;
            }
            core_budget = static_cast<int>(released);
        }
        inst.fl_core_requests = core_budget;
        int unpred_pad = d2 - core_budget;
        int pad = n + unpred_pad;
        WeightedGraph g(tree_n + pad);
        if (d2 > 0) {
            for (const Edge& e : lb.graph.edges()) g.add_edge(e.u, e.v, e.cost, e.priority);
            for (VertexId v = 0; v < tree_n; ++v) g.set_facility_cost(v, lb.graph.facility_cost(v));
        }
        for (int i = 0; i < pad; ++i) g.set_facility_cost(tree_n + i, 0);
        inst.padded_vertices = pad;
        for (int i = 0; i < n; ++i) inst.predictions.push_back(Request::client(tree_n + i));
        for (int i = 0; i < ell; ++i) inst.prefix.push_back(Request::client(tree_n + i));
        for (int i = 0; i < unpred_pad; ++i) inst.tail.push_back(Request::client(tree_n + n + i));
        inst.graph = std::move(g);
        return inst;
    }

    NkDeltaInstance inst;
    inst.kind = ProblemKind::steiner_tree;
    inst.n = n;
    inst.k = k;
    inst.d1 = d1;
    inst.d2 = d2;

    if (variant == NkVariant::delta2) {
        int depth = d2 > 0 ? floor_log2_int(d2) : 0;
        int core_requests = d2 > 0 ? (1 << depth) : 0;
        DiamondInstance core;
        int core_vertices = 1;  // just the root when no game is embedded
        if (d2 > 0) {
            core = build_diamond(depth);
            core_vertices = core.graph.vertex_count();
        }
        int copies = n + (d2 - core_requests);  // predicted + unpredicted padding
        WeightedGraph g(core_vertices + copies);
        if (d2 > 0)
            for (const Edge& e : core.graph.edges()) g.add_edge(e.u, e.v, e.cost, e.priority);
        for (int i = 0; i < copies; ++i) g.add_edge(0, core_vertices + i, 0, 1);
        inst.padded_vertices = copies;
        for (int i = 0; i < n; ++i)
            inst.predictions.push_back(Request::terminal(core_vertices + i));
        for (int i = 0; i < ell; ++i) inst.prefix.push_back(Request::terminal(core_vertices + i));
        for (int i = 0; i < d2 - core_requests; ++i)
            inst.tail.push_back(Request::terminal(core_vertices + n + i));
        inst.has_core = d2 > 0;
        if (inst.has_core) inst.core = std::move(core);
        inst.graph = std::move(g);
        return inst;
    }

    // delta1 variant: the prediction covers the whole embedded game
    int mm = std::min(ell, isqrt_floor(std::max(0, n - ell)));
    int depth = mm > 0 ? floor_log2_int(mm) : 0;
    int core_requests = mm > 0 ? (1 << depth) : 0;
    DiamondInstance core;
    int core_vertices = 1;
    if (mm > 0) {
        core = build_diamond(depth);
        core_vertices = core.graph.vertex_count();
    }
    int gm_nodes = mm * mm + mm;  // padded size of the embedded instance
    if (gm_nodes > n) throw std::invalid_argument("violated: m^2 + m <= n");
    int gm_pad = gm_nodes - core_vertices;  // predicted copies inside G_m
    if (gm_pad < 0) gm_pad = 0;
    int plain_pred = n - core_vertices - gm_pad;  // predicted copies outside G_m
    if (plain_pred < ell - mm)
        throw std::invalid_argument("violated: n - (m^2 + m) >= l - m");
    int copies = gm_pad + plain_pred + d2;
    WeightedGraph g(core_vertices + copies);
    if (mm > 0)
        for (const Edge& e : core.graph.edges()) g.add_edge(e.u, e.v, e.cost, e.priority);
    for (int i = 0; i < copies; ++i) g.add_edge(0, core_vertices + i, 0, 1);
    inst.padded_vertices = copies;
    // predictions: every core vertex, the G_m padding, then the plain copies
    for (int v = 0; v < core_vertices; ++v) inst.predictions.push_back(Request::terminal(v));
    for (int i = 0; i < gm_pad + plain_pred; ++i)
        inst.predictions.push_back(Request::terminal(core_vertices + i));
    // requests: d2 unpredicted copies, then l - m predicted copies, then the
    // game (2^depth adaptive requests, padded to m on predicted copies)
    for (int i = 0; i < d2; ++i)
        inst.prefix.push_back(Request::terminal(core_vertices + gm_pad + plain_pred + i));
    for (int i = 0; i < ell - mm; ++i)
        inst.prefix.push_back(Request::terminal(core_vertices + gm_pad + i));
    for (int i = 0; i < mm - core_requests; ++i)
        inst.tail.push_back(Request::terminal(core_vertices + i));  // predicted G_m padding
    inst.has_core = mm > 0;
    if (inst.has_core) inst.core = std::move(core);
    inst.graph = std::move(g);
    return inst;
}

NkDeltaTranscript play_nk_delta(const NkDeltaInstance& inst, AlgorithmUnderTest alg) {
    NkDeltaTranscript t;
    int arrival = 0;
    auto release = [&](Request r) {
        r.arrival_index = arrival++;
        t.requests.push_back(r);
        t.alg_cost = add_cost(t.alg_cost, alg.serve(r));
    };
    for (const Request& r : inst.prefix) release(r);

    if (inst.has_core && inst.kind == ProblemKind::steiner_tree) {
        // replay the diamond game inside the instance; the core's vertex and
        // edge ids are the instance's own (the core is embedded first)
        AlgorithmUnderTest wrapped;
        wrapped.serve = [&](const Request& r) {
            Request mapped = r;
            mapped.arrival_index = arrival++;
            t.requests.push_back(mapped);
            Cost c = alg.serve(mapped);
            t.alg_cost = add_cost(t.alg_cost, c);
            return c;
        };
        wrapped.owns_edge = alg.owns_edge;
        wrapped.has_open_facility = alg.has_open_facility;
        DiamondTranscript core_t = diamond_adversary(inst.core, wrapped);
        t.opt_cost = core_t.opt_cost;
    }
    if (inst.kind == ProblemKind::facility_location && inst.fl_core_requests > 0) {
        // adaptive walk down the lower-bound tree, phases truncated to d2
        VertexId v = 0;
        for (std::size_t phase = 0; phase < inst.fl_phase_sizes.size(); ++phase) {
            for (int j = 0; j < inst.fl_phase_sizes[phase]; ++j) release(Request::client(v));
            if (inst.fl_children[v].empty()) break;
            VertexId pick = inst.fl_children[v][0];
            for (VertexId c : inst.fl_children[v]) {
                std::vector<VertexId> stack{c};
                bool open_inside = false;
                while (!stack.empty()) {
                    VertexId x = stack.back();
                    stack.pop_back();
                    if (alg.has_open_facility(x)) open_inside = true;
                    for (VertexId ch : inst.fl_children[x]) stack.push_back(ch);
                }
                if (!open_inside) {
                    pick = c;
                    break;
                }
            }
            v = pick;
        }
    }
    for (const Request& r : inst.tail) release(r);
    return t;
}

// ---------------------------------------------------------------------------

FotakisLbInstance build_fotakis_lb(int m) {
    if (m < 2 || m > 5) throw std::invalid_argument("fotakis lower bound supports m in [2, 5]");
    FotakisLbInstance inst;
    inst.m = m;
    Cost f = 1;
    for (int i = 0; i <= m; ++i) f = mul_cost(f, m);  // m^(m+1)
    inst.f = f;

    // full binary tree of height m, level-l edges cost f / m^l
    int total = (1 << (m + 1)) - 1;
    WeightedGraph g(total);
    inst.children.assign(total, {});
    int next = 1;
    std::vector<std::pair<VertexId, int>> frontier{{0, 0}};  // (vertex, depth)
    std::vector<std::pair<VertexId, int>> all{{0, 0}};
    while (!frontier.empty()) {
        std::vector<std::pair<VertexId, int>> nf;
        for (auto [v, d] : frontier) {
            if (d == m) continue;
            Cost w = f;
            for (int l = 0; l <= d; ++l) w /= m;  // f / m^(d+1)
            for (int c = 0; c < 2; ++c) {
                VertexId child = next++;
                g.add_edge(v, child, w, 1);
                inst.children[v].push_back(child);
                nf.push_back({child, d + 1});
                all.push_back({child, d + 1});
            }
        }
        frontier = std::move(nf);
    }
    // opening the facility must trigger exactly on the last request of each
    // phase under the strict potential test, hence cost f - 1
    for (VertexId v = 0; v < total; ++v) g.set_facility_cost(v, f - 1);
    inst.graph = std::move(g);

    int sz = 1;
    for (int i = 1; i <= m + 1; ++i) {
        inst.phase_sizes.push_back(sz);
        sz *= m;
    }
    return inst;
}

FotakisLbTranscript fotakis_lb_run(const FotakisLbInstance& inst, FotakisEngine& engine) {
    FotakisLbTranscript t;
    int arrival = 0;
    VertexId v = inst.root;
    t.facility_per_phase = true;

    auto open_at = [&engine](VertexId w) {
        for (VertexId o : engine.open_facilities())
            if (o == w) return true;
        return false;
    };
    auto subtree_has_open = [&](VertexId sub) {
        std::vector<VertexId> stack{sub};
        while (!stack.empty()) {
            VertexId x = stack.back();
            stack.pop_back();
            if (open_at(x)) return true;
            for (VertexId c : inst.children[x]) stack.push_back(c);
        }
        return false;
    };

    for (std::size_t phase = 0; phase < inst.phase_sizes.size(); ++phase) {
        t.phase_nodes.push_back(v);
        for (int j = 0; j < inst.phase_sizes[phase]; ++j) {
            Request r = Request::client(v);
            r.arrival_index = arrival++;
            t.requests.push_back(r);
            engine.serve(r);
            const ChargeRecord& rec = engine.log().back();
            t.trace.push_back(rec);
            t.actual_total = add_cost(t.actual_total, rec.actual);
            t.alpha_total = add_cost(t.alpha_total, rec.charged);
            bool last = (j == inst.phase_sizes[phase] - 1);
            bool opened_here = !rec.opened_facilities.empty();
            if (opened_here != last ||
                (opened_here && rec.opened_facilities[0] != v))
                t.facility_per_phase = false;
        }
        t.last_of_phase.push_back(arrival - 1);
        if (inst.children[v].empty()) break;  // deepest phase reached
        // descend into the child subtree the algorithm left facility-free
        VertexId pick = inst.children[v][0];
        bool found = false;
        for (VertexId c : inst.children[v])
            if (!subtree_has_open(c)) {
                pick = c;
                found = true;
                break;
            }
        if (!found) pick = inst.children[v][0];
        v = pick;
    }
    return t;
}

// ---------------------------------------------------------------------------

MatchingLbTranscript matching_lb_run(int k) {
    if (k < 2) throw std::invalid_argument("matching lower bound needs k >= 2");
    MatchingLbTranscript t;
    t.k = k;
    // star: center 0, tips 1..k+1, unit spokes; blue points on tips 1..k
    WeightedGraph g(k + 2);
    for (int i = 1; i <= k + 1; ++i) g.add_edge(0, i, 1, 1);
    Metric metric(g);

    std::vector<char> matched(k + 1, 0);  // blue tips 1..k
    auto greedy_match = [&](VertexId red) {
        std::vector<Cost> d = metric.distances_from(red);
        VertexId best = -1;
        for (VertexId b = 1; b <= k; ++b) {
            if (matched[b]) continue;
            if (best == -1 || d[b] < d[best]) best = b;
        }
        matched[best] = 1;
        t.alg_cost = add_cost(t.alg_cost, d[best]);
        return best;
    };

    for (int b = 1; b <= k; ++b) t.predictions.push_back(Request::terminal(b));
    VertexId red = k + 1;  // first red point on the empty spoke
    for (int i = 0; i < k; ++i) {
        Request r = Request::terminal(red);
        r.arrival_index = i;
        t.reds.push_back(r);
        VertexId b = greedy_match(red);
        t.matches.push_back({i, b});
        red = b;  // adversary reacts to the algorithm's choice
    }

    // offline optimum: min-cost perfect matching of the realized reds
    std::vector<std::vector<Cost>> costs(k, std::vector<Cost>(k));
    for (int i = 0; i < k; ++i) {
        std::vector<Cost> d = metric.distances_from(t.reds[i].a);
        for (int b = 1; b <= k; ++b) costs[i][b - 1] = d[b];
    }
    t.opt_cost = min_cost_matchings(costs).cost_for_size[k];
    t.graph = std::move(g);
    return t;
}

std::string transcript_to_csv(const RequestSequence& requests, const std::vector<Cost>& step_costs,
                               const std::vector<std::string>& actions) {
    std::ostringstream out;
    out << "step,request,algorithm_action,cumulative_cost\n";
    Cost cum = 0;
    for (std::size_t i = 0; i < requests.size(); ++i) {
        Cost c = i < step_costs.size() ? step_costs[i] : 0;
        cum = add_cost(cum, c);
        out << i << ",";
        const Request& r = requests[i];
        if (r.kind == ProblemKind::steiner_forest)
            out << "pair(" << r.a << ";" << r.b << ")";
        else
            out << "v" << r.a;
        out << ",";
        if (i < actions.size())
            out << actions[i];
        else
            out << "pay " << c;
        out << "," << cum << "\n";
    }
    return out.str();
}

}  // namespace netpred
