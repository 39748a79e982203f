#include "netpred/verify.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

#include "netpred/adversaries.hpp"
#include "netpred/error_model.hpp"
#include "netpred/framework.hpp"
#include "netpred/generators.hpp"
#include "netpred/oracles.hpp"
#include "netpred/perturb.hpp"
#include "netpred/reductions.hpp"

namespace netpred {

namespace {

std::string fmtc(Cost c) { return is_inf(c) ? std::string("inf") : std::to_string(c); }

CheckResult ok(const std::string& name, const std::string& detail = "") {
    return CheckResult{name, true, detail};
}
CheckResult fail(const std::string& name, const std::string& detail) {
    return CheckResult{name, false, detail};
}

// --------------------------- graph-core -----------------------------------

std::vector<CheckResult> suite_graph_core() {
    std::vector<CheckResult> out;

    {  // triangle inequality under overlays and priority floors
        bool pass = true;
        std::string detail;
        for (std::uint64_t seed = 1; seed <= 6 && pass; ++seed) {
            GeneratedInstance gi = gen_small_random(ProblemKind::steiner_tree, seed);
            ZeroCostOverlay ov(gi.graph);
            Rng rng(seed * 77);
            for (int e = 0; e < gi.graph.edge_count(); ++e)
                if (rng.chance(0.3)) ov.zero_edge(e);
            Metric m(gi.graph, &ov);
            const int n = gi.graph.vertex_count();
            std::vector<std::vector<Cost>> d(n);
            for (int v = 0; v < n; ++v) d[v] = m.distances_from(v);
            for (int u = 0; u < n && pass; ++u)
                for (int v = 0; v < n && pass; ++v)
                    for (int w = 0; w < n && pass; ++w)
                        if (!is_inf(d[u][v]) && !is_inf(d[v][w]) && d[u][w] > d[u][v] + d[v][w]) {
                            pass = false;
                            detail = "triangle violated";
                        }
        }
        out.push_back(pass ? ok("triangle-inequality") : fail("triangle-inequality", "violated"));
    }

    {  // overlay growth never increases distances; floor growth never decreases
        bool pass = true;
        for (std::uint64_t seed = 10; seed <= 14 && pass; ++seed) {
            GeneratedInstance gi = gen_small_random(ProblemKind::steiner_tree, seed);
            ZeroCostOverlay small(gi.graph), big(gi.graph);
            Rng rng(seed);
            for (int e = 0; e < gi.graph.edge_count(); ++e) {
                bool z = rng.chance(0.25);
                if (z) {
                    small.zero_edge(e);
                    big.zero_edge(e);
                } else if (rng.chance(0.25)) {
                    big.zero_edge(e);
                }
            }
            Metric ms(gi.graph, &small), mb(gi.graph, &big);
            for (int v = 0; v < gi.graph.vertex_count() && pass; ++v) {
                std::vector<Cost> ds = ms.distances_from(v), db = mb.distances_from(v);
                for (int w = 0; w < gi.graph.vertex_count(); ++w)
                    if (db[w] > ds[w]) pass = false;
            }
        }
        out.push_back(pass ? ok("overlay-monotonicity") : fail("overlay-monotonicity", "violated"));
    }

    {
        bool pass = true;
        WeightedGraph g(4);
        g.add_edge(0, 1, 3, 1);
        g.add_edge(1, 2, 2, 2);
        g.add_edge(0, 2, 9, 1);
        g.add_edge(2, 3, 1, 3);
        for (int f = 1; f < 3 && pass; ++f) {
            Metric lo(g, nullptr, f), hi(g, nullptr, f + 1);
            for (int v = 0; v < 4 && pass; ++v) {
                std::vector<Cost> dl = lo.distances_from(v), dh = hi.distances_from(v);
                for (int w = 0; w < 4; ++w)
                    if (dh[w] < dl[w]) pass = false;
            }
        }
        out.push_back(pass ? ok("priority-floor-monotonicity")
                           : fail("priority-floor-monotonicity", "violated"));
    }

    {  // Dijkstra agrees with an independent all-pairs closure
        bool pass = true;
        for (std::uint64_t seed = 20; seed <= 26 && pass; ++seed) {
            GeneratedInstance gi = gen_small_random(ProblemKind::steiner_tree, seed);
            const WeightedGraph& g = gi.graph;
            const int n = g.vertex_count();
            std::vector<std::vector<Cost>> fw(n, std::vector<Cost>(n, kInfCost));
            for (int v = 0; v < n; ++v) fw[v][v] = 0;
            for (const Edge& e : g.edges()) {
                fw[e.u][e.v] = std::min(fw[e.u][e.v], e.cost);
                fw[e.v][e.u] = fw[e.u][e.v];
            }
            for (int k = 0; k < n; ++k)
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        if (!is_inf(fw[i][k]) && !is_inf(fw[k][j]))
                            fw[i][j] = std::min(fw[i][j], fw[i][k] + fw[k][j]);
            Metric m(g);
            for (int v = 0; v < n && pass; ++v) {
                std::vector<Cost> d = m.distances_from(v);
                for (int w = 0; w < n; ++w)
                    if (d[w] != fw[v][w]) pass = false;
            }
        }
        out.push_back(pass ? ok("shortest-path-vs-apsp") : fail("shortest-path-vs-apsp", "mismatch"));
    }

    {  // instance file round trip is byte exact
        GeneratedInstance gi = gen_random(ProblemKind::facility_location, 9, 4, 42);
        gi.graph.set_capacity(0, 2);
        std::string a = gi.graph.to_json_text();
        std::string b = WeightedGraph::from_json_text(a).to_json_text();
        out.push_back(a == b ? ok("instance-roundtrip-bytes")
                             : fail("instance-roundtrip-bytes", "bytes differ"));
    }
    return out;
}

// --------------------------- error model ----------------------------------

std::vector<CheckResult> suite_error_model() {
    std::vector<CheckResult> out;
    bool identity = true, monotone = true, equiv = true;
    std::string det;
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        ProblemKind kind = seed % 3 == 0   ? ProblemKind::facility_location
                           : seed % 3 == 1 ? ProblemKind::steiner_tree
                                           : ProblemKind::steiner_forest;
        GeneratedInstance gi = gen_small_random(kind, seed);
        RequestSequence R(gi.requests.begin(),
                          gi.requests.begin() + std::min<std::size_t>(gi.requests.size(), 4));
        Perturbation p;
        p.drop_rate = 0.3;
        p.add_rate = 0.4;
        p.displacement_radius = 3;
        p.seed = seed;
        PredictionSet rhat = perturb_requests(gi.graph, R, p);
        while (rhat.size() > 4) rhat.pop_back();
        ParetoFrontier f = pareto_frontier(R, rhat, gi.graph, kind);
        const int total = static_cast<int>(R.size() + rhat.size());
        Cost prev = kInfCost;
        for (const ParetoPoint& pt : f.points) {
            if (pt.delta + 2 * pt.k != total) identity = false;
            if (pt.min_matching_cost >= prev) monotone = false;
            prev = pt.min_matching_cost;
            if (static_cast<int>(pt.witness.matching.size()) != pt.k) identity = false;
        }
        ParetoFrontier fe = exact_matching_frontier(R, rhat, gi.graph, kind);
        if (f.points.size() != fe.points.size()) {
            equiv = false;
            det = "size mismatch seed " + std::to_string(seed);
        } else {
            for (std::size_t i = 0; i < f.points.size(); ++i)
                if (f.points[i].delta != fe.points[i].delta ||
                    f.points[i].min_matching_cost != fe.points[i].min_matching_cost)
                    equiv = false;
        }
    }
    out.push_back(identity ? ok("frontier-delta-identity") : fail("frontier-delta-identity", ""));
    out.push_back(monotone ? ok("frontier-strictly-decreasing")
                           : fail("frontier-strictly-decreasing", ""));
    out.push_back(equiv ? ok("frontier-exhaustive-equivalence")
                        : fail("frontier-exhaustive-equivalence", det));
    return out;
}

// --------------------------- engines ---------------------------------------

std::vector<int> subset_from_mask(unsigned mask, const RequestSequence& reqs) {
    std::vector<int> idx;
    for (std::size_t i = 0; i < reqs.size(); ++i)
        if (mask & (1u << i)) idx.push_back(reqs[i].arrival_index);
    return idx;
}

std::vector<CheckResult> suite_engines() {
    std::vector<CheckResult> out;

    {  // greedy Steiner tree subset bound with the measured constant
        bool pass = true;
        double worst = 0;
        for (std::uint64_t seed = 1; seed <= 8 && pass; ++seed) {
            GeneratedInstance gi = gen_small_random(ProblemKind::steiner_tree, seed);
            SteinerTreeGreedyEngine eng(gi.graph, ZeroCostOverlay(gi.graph), gi.root);
            for (const Request& r : gi.requests) eng.serve(r);
            Cost opt = exact_opt(gi.graph, gi.requests, ProblemKind::steiner_tree, gi.root);
            if (opt == 0) continue;
            const unsigned masks = 1u << gi.requests.size();
            for (unsigned m = 1; m < masks; ++m) {
                std::vector<int> sub = subset_from_mask(m, gi.requests);
                Cost charged = engine_total_charged(eng, sub);
                double bound = (std::log2(double(sub.size())) + 2.0) * double(opt);
                worst = std::max(worst, double(charged) / bound);
            }
        }
        // the measured constant on this family stays around 1
        std::ostringstream d;
        d << "measured C = " << std::fixed << std::setprecision(3) << worst;
        out.push_back(worst <= 2.0 ? ok("st-greedy-subset-competitive", d.str())
                                   : fail("st-greedy-subset-competitive", d.str()));
    }

    {  // Berman-Coulston structure: disjoint balls, acyclic meta graphs, counting
        bool pass = true;
        std::string det;
        for (std::uint64_t seed = 1; seed <= 10 && pass; ++seed) {
            GeneratedInstance gi = gen_small_random(ProblemKind::steiner_forest, seed);
            BermanCoulstonEngine eng(gi.graph, ZeroCostOverlay(gi.graph));
            for (const Request& r : gi.requests) {
                eng.serve(r);
                if (!eng.balls_disjoint() || !eng.meta_acyclic()) {
                    pass = false;
                    det = "structure broke mid-run, seed " + std::to_string(seed);
                    break;
                }
            }
            for (const auto& [j, lv] : eng.levels())
                if (lv.iterations > 2 * static_cast<int>(lv.ball_centers.size())) {
                    pass = false;
                    det = "n_j > 2|D_j| at level " + std::to_string(j);
                }
        }
        out.push_back(pass ? ok("bc-balls-and-meta-structure") : fail("bc-balls-and-meta-structure", det));
    }

    {  // Berman-Coulston dual lower bound: |D_j| * 2^(j-2) <= OPT
        bool pass = true;
        std::string det;
        for (std::uint64_t seed = 30; seed <= 40 && pass; ++seed) {
            GeneratedInstance gi = gen_small_random(ProblemKind::steiner_forest, seed);
            if (gi.graph.edge_count() > 16) continue;
            BermanCoulstonEngine eng(gi.graph, ZeroCostOverlay(gi.graph));
            for (const Request& r : gi.requests) eng.serve(r);
            Cost opt = exact_opt(gi.graph, gi.requests, ProblemKind::steiner_forest, 0);
            for (const auto& [j, lv] : eng.levels()) {
                __int128 lhs = __int128(lv.ball_centers.size()) * (__int128(1) << j);
                if (lhs > __int128(4) * opt) {
                    pass = false;
                    det = "level " + std::to_string(j) + " seed " + std::to_string(seed);
                }
            }
        }
        out.push_back(pass ? ok("bc-dual-lower-bound") : fail("bc-dual-lower-bound", det));
    }

    {  // facility location: potential stability and amortization
        bool stable = true, amortized = true;
        for (std::uint64_t seed = 1; seed <= 12; ++seed) {
            GeneratedInstance gi = gen_small_random(ProblemKind::facility_location, seed);
            FotakisEngine eng(gi.graph, ZeroCostOverlay(gi.graph));
            Cost alpha_sum = 0, actual_sum = 0;
            for (const Request& r : gi.requests) {
                alpha_sum = add_cost(alpha_sum, eng.serve(r));
                actual_sum = add_cost(actual_sum, eng.log().back().actual);
                if (!eng.potentials_stable()) stable = false;
                if (alpha_sum < actual_sum) amortized = false;
            }
        }
        out.push_back(stable ? ok("fl-potential-stability") : fail("fl-potential-stability", ""));
        out.push_back(amortized ? ok("fl-amortization") : fail("fl-amortization", ""));
    }

    {  // facility location amortized subset bound (explicit constants)
        bool pass = true;
        std::string det;
        for (std::uint64_t seed = 50; seed <= 58 && pass; ++seed) {
            GeneratedInstance gi = gen_small_random(ProblemKind::facility_location, seed);
            std::vector<VertexId> clients;
            for (const Request& r : gi.requests) clients.push_back(r.a);
            FacilityLocationResult opt;
            try {
                opt = exact_facility_location(gi.graph, clients);
            } catch (const OracleRefusal&) {
                continue;
            }
            if (is_inf(opt.cost)) continue;
            FotakisEngine eng(gi.graph, ZeroCostOverlay(gi.graph));
            for (const Request& r : gi.requests) eng.serve(r);
            const unsigned masks = 1u << gi.requests.size();
            for (unsigned m = 1; m < masks && pass; ++m) {
                std::vector<int> sub = subset_from_mask(m, gi.requests);
                Cost a = engine_total_charged(eng, sub);
                double lg = std::log2(double(sub.size())) + 1.0;
                double rhs = 2.0 * lg * double(opt.opening_cost) + 4.0 * lg * double(opt.connection_cost);
                if (double(a) > rhs + 1e-9) {
                    pass = false;
                    det = "seed " + std::to_string(seed) + " subset size " +
                          std::to_string(sub.size());
                }
            }
        }
        out.push_back(pass ? ok("fl-amortized-subset-bound") : fail("fl-amortized-subset-bound", det));
    }

    {  // Appendix-style witness: actual cost is not subset-competitive, alpha is
        FotakisLbInstance lb = build_fotakis_lb(4);
        FotakisEngine eng(lb.graph, ZeroCostOverlay(lb.graph));
        FotakisLbTranscript t = fotakis_lb_run(lb, eng);
        std::vector<VertexId> clients;
        for (const Request& r : t.requests) clients.push_back(r.a);
        Cost opt = exact_facility_location(lb.graph, clients).cost;
        Cost actual_sub = 0, alpha_sub = 0;
        for (int idx : t.last_of_phase) {
            actual_sub = add_cost(actual_sub, t.trace[idx].actual);
            alpha_sub = add_cost(alpha_sub, t.trace[idx].charged);
        }
        double rp = double(t.last_of_phase.size());
        bool pass = t.facility_per_phase &&
                    double(actual_sub) >= rp / 4.0 * double(opt) &&
                    double(alpha_sub) <= 8.0 * std::log2(rp) * double(opt);
        std::ostringstream d;
        d << "actual(R')/OPT = " << std::setprecision(3) << double(actual_sub) / double(opt)
          << ", alpha(R')/OPT = " << double(alpha_sub) / double(opt);
        out.push_back(pass ? ok("fl-actual-cost-not-subset-competitive", d.str())
                           : fail("fl-actual-cost-not-subset-competitive", d.str()));
    }
    return out;
}

// --------------------------- prize collecting ------------------------------

std::vector<CheckResult> suite_prize_collecting() {
    std::vector<CheckResult> out;
    bool consistent = true, certified = true, monotone = true;
    std::string det;
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        ProblemKind kind = seed % 3 == 0   ? ProblemKind::facility_location
                           : seed % 3 == 1 ? ProblemKind::steiner_tree
                                           : ProblemKind::steiner_forest;
        GeneratedInstance gi = gen_small_random(kind, seed);
        if (kind == ProblemKind::steiner_forest && gi.graph.edge_count() > 16) continue;
        PenaltyInstance inst;
        inst.graph = &gi.graph;
        inst.requests = gi.requests;
        inst.kind = kind;
        inst.root = gi.root;
        Rng rng(seed * 1331);
        inst.penalty = Penalty{rng.uniform(0, 24), 2};

        PCSolution approx;
        Cost gamma = kind == ProblemKind::steiner_tree ? 2 : 3;
        switch (kind) {
            case ProblemKind::steiner_tree: approx = pc_steiner_tree(inst); break;
            case ProblemKind::steiner_forest: approx = pc_steiner_forest(inst); break;
            case ProblemKind::facility_location: approx = pc_facility_location(inst); break;
        }
        // objective self-consistency (facility solutions include connections)
        Cost recompute = 0;
        for (EdgeId e : approx.edges) recompute = add_cost(recompute, gi.graph.edge(e).cost);
        for (VertexId v : approx.facilities)
            recompute = add_cost(recompute, gi.graph.facility_cost(v));
        if (kind == ProblemKind::facility_location && !approx.facilities.empty()) {
            Metric m(gi.graph);
            for (std::size_t i = 0; i < approx.satisfied.size(); ++i) {
                if (!approx.satisfied[i]) continue;
                std::vector<Cost> row = m.distances_from(gi.requests[i].a);
                Cost d = kInfCost;
                for (VertexId v : approx.facilities) d = std::min(d, row[v]);
                recompute = add_cost(recompute, d);
            }
        }
        int unsat = 0;
        for (char s : approx.satisfied)
            if (!s) ++unsat;
        if (recompute != approx.element_cost || unsat != approx.unsatisfied) consistent = false;

        PCSolution exact = pc_exact(inst);
        __int128 lhs = __int128(pc_objective_scaled(approx, inst.penalty));
        __int128 rhs = __int128(gamma) * pc_objective_scaled(exact, inst.penalty);
        if (lhs > rhs) {
            certified = false;
            det = to_string(kind) + " seed " + std::to_string(seed);
        }

        // exact solver: raising the penalty never increases |unsatisfied|
        int prev_unsat = static_cast<int>(inst.requests.size()) + 1;
        for (int i = -2; i <= 6; ++i) {
            PenaltyInstance pi = inst;
            pi.penalty = Penalty::from_exponent(i);
            PCSolution s = pc_exact(pi);
            if (s.unsatisfied > prev_unsat) monotone = false;
            prev_unsat = s.unsatisfied;
        }
    }
    out.push_back(consistent ? ok("pc-objective-self-consistency")
                             : fail("pc-objective-self-consistency", ""));
    out.push_back(certified ? ok("pc-gamma-certification") : fail("pc-gamma-certification", det));
    out.push_back(monotone ? ok("pc-exact-penalty-monotone") : fail("pc-exact-penalty-monotone", ""));
    return out;
}

// --------------------------- framework -------------------------------------

std::vector<CheckResult> suite_framework() {
    std::vector<CheckResult> out;

    {  // Partial bi-criteria, both guarantees, against the enumerated optimum
        bool pass = true;
        std::string det;
        for (std::uint64_t seed = 1; seed <= 15 && pass; ++seed) {
            ProblemKind kind = seed % 3 == 0   ? ProblemKind::facility_location
                               : seed % 3 == 1 ? ProblemKind::steiner_tree
                                               : ProblemKind::steiner_forest;
            GeneratedInstance gi = gen_small_random(kind, seed);
            if (kind == ProblemKind::steiner_forest && gi.graph.edge_count() > 16) continue;
            auto pc = make_pc_solver("primal-dual", gi.graph, gi.requests, kind, gi.root);
            Cost gamma = pc->gamma();
            PartialOracle oracle(gi.graph, gi.requests, *pc, gamma);
            const int n = oracle.prediction_count();
            for (int u = 0; u <= n && pass; ++u) {
                PartialResult pr = oracle.partial(u);
                if (mul_cost(gamma, u) < n && pr.unsatisfied_count > 2 * gamma * u) {
                    pass = false;
                    det = "unsat bound, seed " + std::to_string(seed);
                }
                Cost sstar =
                    exact_min_cost_with_unsat_at_most(gi.graph, gi.requests, kind, gi.root, u);
                if (!is_inf(sstar) && __int128(pr.element_cost) > __int128(3) * gamma * sstar) {
                    pass = false;
                    det = "cost bound, seed " + std::to_string(seed);
                }
            }
        }
        out.push_back(pass ? ok("partial-bicriteria") : fail("partial-bicriteria", det));
    }

    {  // scan bounds on the worked examples
        WeightedGraph g1(2);
        g1.add_edge(0, 1, 8, 1);
        PartialScanBounds b1 = partial_scan_bounds(g1, 1);
        WeightedGraph g2(4);
        for (int i = 0; i < 3; ++i) g2.add_edge(0, i + 1, 1, 1);
        PartialScanBounds b2 = partial_scan_bounds(g2, 3);
        WeightedGraph g3(3);
        g3.add_edge(0, 1, 0, 1);
        g3.add_edge(1, 2, 0, 1);
        PartialScanBounds b3 = partial_scan_bounds(g3, 2);
        bool pass = b1.i_min == 2 && b1.i_max == 4 && b2.i_min == -2 && b3.i_min == 0 &&
                    b3.i_max == 1;
        out.push_back(pass ? ok("partial-scan-bounds") : fail("partial-scan-bounds", "examples"));
    }

    {  // run structure: telescoping, budget, doubling, phase identity
        bool pass = true;
        std::string det;
        for (std::uint64_t seed = 1; seed <= 12 && pass; ++seed) {
            ProblemKind kind = seed % 3 == 0   ? ProblemKind::facility_location
                               : seed % 3 == 1 ? ProblemKind::steiner_tree
                                               : ProblemKind::steiner_forest;
            GeneratedInstance gi = gen_small_random(kind, seed);
            if (kind == ProblemKind::steiner_forest && gi.graph.edge_count() > 16) continue;
            Perturbation p;
            p.displacement_radius = 2;
            p.seed = seed;
            PredictionSet rhat = perturb_requests(gi.graph, gi.requests, p);
            FrameworkConfig cfg;
            cfg.kind = kind;
            cfg.root = gi.root;
            RunReport rep = run_with_predictions(gi.graph, gi.requests, rhat, cfg);
            RunChecks rc = check_run(rep);
            if (!rc.telescoping_ok || !rc.partial_budget_ok || !rc.doubling_ok ||
                !rc.phase_identity_ok) {
                pass = false;
                det = to_string(kind) + " seed " + std::to_string(seed);
            }
        }
        out.push_back(pass ? ok("framework-run-structure") : fail("framework-run-structure", det));
    }

    {  // B-hat bound at the frontier-defined major iteration
        bool pass = true;
        std::string det;
        for (std::uint64_t seed = 1; seed <= 10 && pass; ++seed) {
            GeneratedInstance gi = gen_small_random(ProblemKind::steiner_tree, seed);
            Perturbation p;
            p.displacement_radius = 2;
            p.drop_rate = 0.2;
            p.seed = seed + 5;
            PredictionSet rhat = perturb_requests(gi.graph, gi.requests, p);
            FrameworkConfig cfg;
            cfg.kind = ProblemKind::steiner_tree;
            cfg.root = gi.root;
            RunReport rep = run_with_predictions(gi.graph, gi.requests, rhat, cfg);
            Cost opt = exact_opt(gi.graph, gi.requests, cfg.kind, gi.root);
            ParetoFrontier f = pareto_frontier(gi.requests, rhat, gi.graph, cfg.kind);
            for (const ParetoPoint& pt : f.points) {
                int threshold = static_cast<int>(rhat.size()) - pt.k;
                for (const MajorIterationRecord& mi : rep.majors)
                    if (mi.u <= threshold) {
                        if (mi.b_hat_before > add_cost(opt, pt.min_matching_cost)) {
                            pass = false;
                            det = "seed " + std::to_string(seed) + " delta " +
                                  std::to_string(pt.delta);
                        }
                        break;
                    }
            }
        }
        out.push_back(pass ? ok("framework-bhat-bound") : fail("framework-bhat-bound", det));
    }

    {  // empty prediction degenerates to the bare engine, exactly
        bool pass = true;
        for (std::uint64_t seed = 1; seed <= 9 && pass; ++seed) {
            ProblemKind kind = seed % 3 == 0   ? ProblemKind::facility_location
                               : seed % 3 == 1 ? ProblemKind::steiner_tree
                                               : ProblemKind::steiner_forest;
            GeneratedInstance gi = gen_small_random(kind, seed);
            FrameworkConfig cfg;
            cfg.kind = kind;
            cfg.root = gi.root;
            RunReport fw = run_with_predictions(gi.graph, gi.requests, {}, cfg);
            RunReport eo = run_engine_only(gi.graph, gi.requests, cfg);
            if (fw.total_cost() != eo.total_cost() || fw.engine_charged != eo.engine_charged)
                pass = false;
        }
        out.push_back(pass ? ok("prediction-free-equivalence")
                           : fail("prediction-free-equivalence", "totals differ"));
    }
    return out;
}

// --------------------------- reductions ------------------------------------

GeneratedInstance small_capacitated(std::uint64_t seed) {
    GeneratedInstance gi = gen_small_random(ProblemKind::facility_location, seed);
    Rng rng(seed * 17);
    for (VertexId v = 0; v < gi.graph.vertex_count(); ++v)
        if (!is_inf(gi.graph.facility_cost(v))) gi.graph.set_capacity(v, rng.uniform(1, 3));
    return gi;
}

std::vector<CheckResult> suite_reductions() {
    std::vector<CheckResult> out;

    {  // pendant copies keep original distances
        bool pass = true;
        for (std::uint64_t seed = 1; seed <= 6 && pass; ++seed) {
            GeneratedInstance gi = small_capacitated(seed);
            CapacitatedReduction red = capacitate_reduce(gi.graph);
            Metric orig(gi.graph), trans(red.transformed);
            for (int u = 0; u < gi.graph.vertex_count() && pass; ++u) {
                std::vector<Cost> d0 = orig.distances_from(u), d1 = trans.distances_from(u);
                for (int v = 0; v < gi.graph.vertex_count(); ++v)
                    if (d1[v] != mul_cost(d0[v], red.cost_scale)) pass = false;
            }
        }
        out.push_back(pass ? ok("capacitated-distance-preserved")
                           : fail("capacitated-distance-preserved", ""));
    }

    {  // OPT' <= 2 OPT on enumerable instances
        bool pass = true;
        std::string det;
        for (std::uint64_t seed = 1; seed <= 12 && pass; ++seed) {
            GeneratedInstance gi = small_capacitated(seed);
            CapacitatedReduction red = capacitate_reduce(gi.graph);
            std::vector<VertexId> clients;
            for (const Request& r : gi.requests) clients.push_back(r.a);
            Cost opt = exact_capacitated_fl(gi.graph, clients);
            Cost opt_prime = exact_facility_location(red.transformed, clients).cost;
            if (__int128(opt_prime) > __int128(2) * mul_cost(opt, red.cost_scale)) {
                pass = false;
                det = "seed " + std::to_string(seed);
            }
        }
        out.push_back(pass ? ok("capacitated-opt-within-2x") : fail("capacitated-opt-within-2x", det));
    }

    {  // playback never exceeds the transformed run
        bool pass = true;
        for (std::uint64_t seed = 1; seed <= 10 && pass; ++seed) {
            GeneratedInstance gi = small_capacitated(seed);
            CapacitatedReduction red = capacitate_reduce(gi.graph);
            FrameworkConfig cfg;
            cfg.kind = ProblemKind::facility_location;
            Perturbation p;
            p.displacement_radius = 2;
            p.seed = seed;
            PredictionSet rhat = perturb_requests(red.transformed, gi.requests, p);
            RunReport rep = run_with_predictions(red.transformed, gi.requests, rhat, cfg);
            CapacitatedPlayback pb = capacitate_playback(red, rep);
            if (pb.total > rep.total_cost()) pass = false;
        }
        out.push_back(pass ? ok("capacitated-playback-dominated")
                           : fail("capacitated-playback-dominated", ""));
    }

    {  // priority split partitions requests and predictions losslessly
        WeightedGraph g(6);
        g.add_edge(0, 1, 2, 1);
        g.add_edge(1, 2, 3, 2);
        g.add_edge(2, 3, 1, 2);
        g.add_edge(3, 4, 2, 1);
        g.add_edge(0, 5, 4, 2);
        g.add_edge(5, 3, 2, 2);
        RequestSequence R;
        R.push_back(Request::pair(0, 3, 1));
        R.push_back(Request::pair(1, 3, 2));
        R.push_back(Request::pair(2, 5, 2));
        for (std::size_t i = 0; i < R.size(); ++i) R[i].arrival_index = static_cast<int>(i);
        PredictionSet rhat{Request::pair(0, 3, 1), Request::pair(1, 2, 2)};
        FrameworkConfig cfg;
        cfg.kind = ProblemKind::steiner_forest;
        PriorityRunReport pr = priority_run(g, R, rhat, 2, cfg);
        std::size_t total = 0;
        for (const RunReport& rep : pr.per_class) total += rep.trace.size();
        bool pass = total == R.size() && pr.per_class.size() == 2 &&
                    pr.cost_dedup <= pr.cost_sum;
        out.push_back(pass ? ok("priority-split-lossless") : fail("priority-split-lossless", ""));
    }
    return out;
}

// --------------------------- adversaries -----------------------------------

std::vector<CheckResult> suite_adversaries() {
    std::vector<CheckResult> out;

    {  // structural counts: 4^i edges, 2^i requests
        bool pass = true;
        for (int i = 0; i <= 4 && pass; ++i) {
            DiamondInstance d = build_diamond(i);
            if (d.graph.edge_count() != (1 << (2 * i))) pass = false;
            SteinerTreeGreedyEngine eng(d.graph, ZeroCostOverlay(d.graph), d.root);
            DiamondTranscript t = diamond_adversary(d, adapt(eng));
            if (static_cast<int>(t.requests.size()) != (1 << i)) pass = false;
            if (i >= 1 && d.graph.vertex_count() > (1 << (2 * i))) pass = false;
        }
        out.push_back(pass ? ok("diamond-structural-counts") : fail("diamond-structural-counts", ""));
    }

    {  // greedy ratio grows strictly with depth
        bool pass = true;
        double prev = 0;
        std::ostringstream d;
        for (int i = 1; i <= 4; ++i) {
            DiamondInstance inst = build_diamond(i);
            SteinerTreeGreedyEngine eng(inst.graph, ZeroCostOverlay(inst.graph), inst.root);
            DiamondTranscript t = diamond_adversary(inst, adapt(eng));
            d << " i" << i << "=" << std::setprecision(3) << t.ratio;
            if (t.ratio <= prev) pass = false;
            prev = t.ratio;
        }
        out.push_back(pass ? ok("diamond-greedy-ratio-growth", d.str())
                           : fail("diamond-greedy-ratio-growth", d.str()));
    }

    {  // emitted cardinalities across a parameter grid
        bool pass = true;
        std::string det;
        for (int n = 2; n <= 10 && pass; n += 2)
            for (int d1 = 0; d1 <= n && pass; d1 += 2)
                for (int d2 = 0; d2 <= 6 && pass; d2 += 3) {
                    int k = (n - d1) + d2;
                    for (NkVariant variant : {NkVariant::delta2, NkVariant::delta1}) {
                        NkDeltaInstance inst;
                        try {
                            inst = nk_delta_adversary(n, k, d1, d2, ProblemKind::steiner_tree,
                                                      variant);
                        } catch (const std::invalid_argument&) {
                            continue;  // parameter combination rejected by its named constraint
                        }
                        SteinerTreeGreedyEngine eng(inst.graph, ZeroCostOverlay(inst.graph), 0);
                        NkDeltaTranscript t = play_nk_delta(inst, adapt(eng));
                        std::multiset<std::pair<VertexId, VertexId>> rs, ps;
                        for (const Request& r : t.requests) rs.insert({r.a, r.b});
                        for (const Request& r : inst.predictions) ps.insert({r.a, r.b});
                        int matched = 0;
                        for (auto& pr : ps)
                            if (rs.count(pr)) ++matched;  // colocated predictions are distinct vertices
                        if (static_cast<int>(inst.predictions.size()) != n ||
                            static_cast<int>(t.requests.size()) != k ||
                            static_cast<int>(inst.predictions.size()) - matched != d1 ||
                            static_cast<int>(t.requests.size()) - matched != d2) {
                            pass = false;
                            det = "n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                  " d1=" + std::to_string(d1) + " d2=" + std::to_string(d2);
                        }
                    }
                }
        out.push_back(pass ? ok("nk-delta-cardinalities") : fail("nk-delta-cardinalities", det));
    }

    {  // the tree adversary opens one facility per phase, at its last request
        FotakisLbInstance lb = build_fotakis_lb(2);
        FotakisEngine eng(lb.graph, ZeroCostOverlay(lb.graph));
        FotakisLbTranscript t = fotakis_lb_run(lb, eng);
        bool pass = t.facility_per_phase && t.alpha_total >= t.actual_total;
        out.push_back(pass ? ok("fotakis-lb-phase-pattern") : fail("fotakis-lb-phase-pattern", ""));
    }

    {  // matching: greedy pays 2k, optimum pays 2, and the error is (2, 0)
        bool pass = true;
        std::string det;
        for (int k : {2, 4, 8}) {
            MatchingLbTranscript t = matching_lb_run(k);
            ParetoFrontier f =
                pareto_frontier(t.reds, t.predictions, t.graph, ProblemKind::steiner_tree);
            bool has20 = false;
            for (const ParetoPoint& p : f.points)
                if (p.delta == 2 && p.min_matching_cost == 0) has20 = true;
            if (t.alg_cost != 2 * k || t.opt_cost != 2 || !has20) {
                pass = false;
                det = "k=" + std::to_string(k) + " alg=" + fmtc(t.alg_cost) +
                      " opt=" + fmtc(t.opt_cost);
            }
        }
        out.push_back(pass ? ok("matching-lb-game") : fail("matching-lb-game", det));
    }
    return out;
}

// --------------------------- oracles ---------------------------------------

std::vector<CheckResult> suite_oracles() {
    std::vector<CheckResult> out;

    {  // capacitated oracle with slack capacity equals the uncapacitated one
        bool pass = true;
        for (std::uint64_t seed = 1; seed <= 10 && pass; ++seed) {
            GeneratedInstance gi = gen_small_random(ProblemKind::facility_location, seed);
            std::vector<VertexId> clients;
            for (const Request& r : gi.requests) clients.push_back(r.a);
            for (VertexId v = 0; v < gi.graph.vertex_count(); ++v)
                if (!is_inf(gi.graph.facility_cost(v)))
                    gi.graph.set_capacity(v, static_cast<int>(clients.size()) + 1);
            Cost a = exact_capacitated_fl(gi.graph, clients);
            Cost b = exact_facility_location(gi.graph, clients).cost;
            if (a != b) pass = false;
        }
        out.push_back(pass ? ok("capacitated-oracle-uncapacitated-limit")
                           : fail("capacitated-oracle-uncapacitated-limit", ""));
    }

    {  // oracle value lower-bounds every online/approximate solution
        bool pass = true;
        for (std::uint64_t seed = 1; seed <= 12 && pass; ++seed) {
            ProblemKind kind = seed % 2 ? ProblemKind::steiner_tree : ProblemKind::facility_location;
            GeneratedInstance gi = gen_small_random(kind, seed);
            Cost opt = exact_opt(gi.graph, gi.requests, kind, gi.root);
            FrameworkConfig cfg;
            cfg.kind = kind;
            cfg.root = gi.root;
            RunReport rep = run_engine_only(gi.graph, gi.requests, cfg);
            if (rep.engine_actual < opt) pass = false;
        }
        out.push_back(pass ? ok("oracle-is-lower-bound") : fail("oracle-is-lower-bound", ""));
    }
    return out;
}

}  // namespace

const std::vector<Suite>& verify_registry() {
    static const std::vector<Suite> suites = {
        {"graph-core", suite_graph_core},       {"error-model", suite_error_model},
        {"engines", suite_engines},             {"prize-collecting", suite_prize_collecting},
        {"framework", suite_framework},         {"reductions", suite_reductions},
        {"adversaries", suite_adversaries},     {"oracles", suite_oracles},
    };
    return suites;
}

int registry_check_count() {
    int n = 0;
    for (const Suite& s : verify_registry()) n += static_cast<int>(s.run().size());
    return n;
}

int run_verify(const std::string& suite_name, std::ostream& out) {
    int failures = 0;
    bool matched = false;
    for (const Suite& s : verify_registry()) {
        if (suite_name != "all" && suite_name != s.name) continue;
        matched = true;
        std::vector<CheckResult> results = s.run();
        for (const CheckResult& r : results) {
            out << (r.pass ? "PASS" : "FAIL") << "  " << s.name << "/" << r.name;
            if (!r.detail.empty()) out << "  (" << r.detail << ")";
            out << "\n";
            if (!r.pass) ++failures;
        }
    }
    if (!matched) {
        out << "unknown suite: " << suite_name << "\n";
        return 1;
    }
    return failures;
}

}  // namespace netpred
