#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numeric>

#include "netpred/engines.hpp"
#include "netpred/generators.hpp"
#include "netpred/oracles.hpp"

using namespace netpred;

TEST_CASE("greedy steiner tree charges the distance to the nearest terminal") {
    WeightedGraph g(4);
    g.add_edge(0, 1, 3, 1);
    g.add_edge(1, 2, 1, 1);
    g.add_edge(0, 3, 10, 1);
    SteinerTreeGreedyEngine eng(g, ZeroCostOverlay(g), 0);
    Request r1 = Request::terminal(1);
    r1.arrival_index = 0;
    CHECK(eng.serve(r1) == 3);  // only the root is available
    Request r2 = Request::terminal(1);
    r2.arrival_index = 1;
    CHECK(eng.serve(r2) == 0);  // colocated with a previous terminal
    Request r3 = Request::terminal(2);
    r3.arrival_index = 2;
    CHECK(eng.serve(r3) == 1);  // nearest previous terminal, not the root
}

TEST_CASE("greedy on the unit star matches the exact optimum") {
    GeneratedInstance gi = gen_star(3, ProblemKind::steiner_tree);
    SteinerTreeGreedyEngine eng(gi.graph, ZeroCostOverlay(gi.graph), 0);
    for (const Request& r : gi.requests) CHECK(eng.serve(r) == 1);
    Cost opt = exact_opt(gi.graph, gi.requests, ProblemKind::steiner_tree, 0);
    CHECK(opt == 3);
    CHECK(eng.total_charged() == opt);
}

TEST_CASE("greedy respects the zero-cost overlay") {
    WeightedGraph g(3);
    EdgeId e01 = g.add_edge(0, 1, 5, 1);
    g.add_edge(1, 2, 5, 1);
    ZeroCostOverlay ov(g);
    ov.zero_edge(e01);
    SteinerTreeGreedyEngine eng(g, ov, 0);
    Request r = Request::terminal(1);
    r.arrival_index = 0;
    CHECK(eng.serve(r) == 0);
}

TEST_CASE("disconnected terminal raises an infeasible-instance error") {
    WeightedGraph g(3);
    g.add_edge(0, 1, 1, 1);
    SteinerTreeGreedyEngine eng(g, ZeroCostOverlay(g), 0);
    Request r = Request::terminal(2);
    CHECK_THROWS_AS(eng.serve(r), std::runtime_error);
}

TEST_CASE("berman-coulston: free pairs skip ball bookkeeping") {
    WeightedGraph g(2);
    EdgeId e = g.add_edge(0, 1, 8, 1);
    ZeroCostOverlay ov(g);
    ov.zero_edge(e);
    BermanCoulstonEngine eng(g, ov);
    Request r = Request::pair(0, 1);
    r.arrival_index = 0;
    CHECK(eng.serve(r) == 0);
    CHECK(eng.levels().empty());
}

TEST_CASE("berman-coulston: distance-8 pair creates one level-3 ball") {
    WeightedGraph g(2);
    g.add_edge(0, 1, 8, 1);
    BermanCoulstonEngine eng(g, ZeroCostOverlay(g));
    Request r = Request::pair(0, 1);
    r.arrival_index = 0;
    CHECK(eng.serve(r) == 8);
    REQUIRE(eng.levels().count(3) == 1);
    CHECK(eng.levels().at(3).ball_centers.size() == 1);
    CHECK(eng.levels().at(3).iterations == 1);

    // an identical pair costs nothing once the path is owned
    Request r2 = Request::pair(0, 1);
    r2.arrival_index = 1;
    CHECK(eng.serve(r2) == 0);
    CHECK(eng.levels().at(3).ball_centers.size() == 1);
}

TEST_CASE("berman-coulston meta edge: both endpoint balls hit existing balls") {
    // two unit path segments [0..8] and [9..17] plus a cost-9 connector; the
    // third pair rides the owned segments so its level lands on 3 again
    WeightedGraph g(18);
    for (int i = 0; i < 8; ++i) g.add_edge(i, i + 1, 1, 1);
    for (int i = 9; i < 17; ++i) g.add_edge(i, i + 1, 1, 1);
    g.add_edge(4, 13, 9, 1);
    BermanCoulstonEngine eng(g, ZeroCostOverlay(g));

    Request p1 = Request::pair(0, 8);
    p1.arrival_index = 0;
    CHECK(eng.serve(p1) == 8);  // ball at 0, level 3
    Request p2 = Request::pair(9, 17);
    p2.arrival_index = 1;
    CHECK(eng.serve(p2) == 8);  // ball at 9, level 3
    REQUIRE(eng.levels().count(3) == 1);
    CHECK(eng.levels().at(3).ball_centers == std::vector<VertexId>{0, 9});

    // (2, 11): the free segments bring the path cost to 9, and both
    // endpoint balls intersect the existing ones -> meta edge, connectors free
    Request p3 = Request::pair(2, 11);
    p3.arrival_index = 2;
    CHECK(eng.serve(p3) == 9);
    const auto& lv = eng.levels().at(3);
    CHECK(lv.ball_centers.size() == 2);
    REQUIRE(lv.meta_edges.size() == 1);
    CHECK(lv.meta_edges[0] == std::pair<int, int>{0, 1});
    CHECK(lv.iterations == 3);
    CHECK(eng.meta_acyclic());
    CHECK(eng.balls_disjoint());
    // counting bound is tight here: n_3 = 3 <= 2 * |D_3| = 4
    CHECK(lv.iterations <= 2 * static_cast<int>(lv.ball_centers.size()));
}

TEST_CASE("fotakis potentials equal a from-scratch recomputation") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        GeneratedInstance gi = gen_small_random(ProblemKind::facility_location, seed * 41);
        FotakisEngine eng(gi.graph, ZeroCostOverlay(gi.graph));
        Metric m(gi.graph);
        std::vector<Request> served;
        for (const Request& r : gi.requests) {
            eng.serve(r);
            served.push_back(r);
            // after ComputeNewPotentials iterations the table must match
            // sum over live clients of (d(F, r) - d(v, r))+ exactly
            if (eng.log().back().opened_facilities.empty()) continue;
            for (VertexId v = 0; v < gi.graph.vertex_count(); ++v) {
                if (is_inf(eng.effective_facility_cost(v))) continue;
                Cost expect = 0;
                for (const Request& q : served) {
                    std::vector<Cost> dq = m.distances_from(q.a);
                    Cost dF = kInfCost;
                    for (VertexId f : eng.open_facilities()) dF = std::min(dF, dq[f]);
                    expect = add_cost(expect, pos_sub(dF, dq[v]));
                }
                CHECK(eng.potentials()[v] == expect);
            }
        }
    }
}

TEST_CASE("berman-coulston invariants on random runs") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        GeneratedInstance gi = gen_small_random(ProblemKind::steiner_forest, seed);
        BermanCoulstonEngine eng(gi.graph, ZeroCostOverlay(gi.graph));
        for (const Request& r : gi.requests) {
            eng.serve(r);
            CHECK(eng.balls_disjoint());
            CHECK(eng.meta_acyclic());
        }
        for (const auto& [j, lv] : eng.levels())
            CHECK(lv.iterations <= 2 * static_cast<int>(lv.ball_centers.size()));
    }
}

TEST_CASE("berman-coulston under a priority floor uses only the class subgraph") {
    WeightedGraph g(3);
    g.add_edge(0, 1, 1, 1);  // below the floor
    g.add_edge(0, 1, 5, 2);
    g.add_edge(1, 2, 3, 2);
    BermanCoulstonEngine eng(g, ZeroCostOverlay(g), 2);
    Request r = Request::pair(0, 2, 2);
    r.arrival_index = 0;
    CHECK(eng.serve(r) == 8);  // the cheap priority-1 edge is invisible

    BermanCoulstonEngine eng3(g, ZeroCostOverlay(g), 3);
    Request r3 = Request::pair(0, 2, 3);
    r3.arrival_index = 0;
    CHECK_THROWS_AS(eng3.serve(r3), std::runtime_error);
}

TEST_CASE("fotakis: client colocated with an already-open facility is free") {
    WeightedGraph g(2);
    g.add_edge(0, 1, 4, 1);
    g.set_facility_cost(0, 9);
    ZeroCostOverlay ov(g);
    ov.zero_facility(0);  // bought by the framework: open at cost zero
    FotakisEngine eng(g, ov);
    Request r = Request::client(0);
    r.arrival_index = 0;
    CHECK(eng.serve(r) == 0);
    CHECK(eng.log().back().actual == 0);
}

TEST_CASE("fotakis first-client trace from the contract") {
    // client at distance 1 from the unique facility of cost 0.5 (scaled x2)
    WeightedGraph g(2);
    g.add_edge(0, 1, 2, 1);
    g.set_facility_cost(0, 1);
    FotakisEngine eng(g, ZeroCostOverlay(g));
    Request r = Request::client(1);
    r.arrival_index = 0;
    Cost alpha = eng.serve(r);
    CHECK(alpha == 6);                       // 2 * (f - 0 + d) = 2 * 3
    CHECK(eng.log().back().actual == 3);     // open 1 + connect 2
    CHECK(alpha >= eng.log().back().actual);
    CHECK(eng.open_facilities().size() == 1);
}

TEST_CASE("fotakis potential stability and amortization on random runs") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        GeneratedInstance gi = gen_small_random(ProblemKind::facility_location, seed);
        FotakisEngine eng(gi.graph, ZeroCostOverlay(gi.graph));
        Cost alpha = 0, actual = 0;
        for (const Request& r : gi.requests) {
            alpha = add_cost(alpha, eng.serve(r));
            actual = add_cost(actual, eng.log().back().actual);
            CHECK(eng.potentials_stable());
            CHECK(alpha >= actual);
        }
    }
}

TEST_CASE("engine contract: served requests are feasible and charges only grow") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        for (ProblemKind kind : {ProblemKind::steiner_tree, ProblemKind::steiner_forest}) {
            GeneratedInstance gi = gen_small_random(kind, seed * 3);
            ZeroCostOverlay ov(gi.graph);
            Rng rng(seed);
            for (int e = 0; e < gi.graph.edge_count(); ++e)
                if (rng.chance(0.2)) ov.zero_edge(e);
            EngineFactory factory = make_engine_factory(kind, gi.root);
            std::unique_ptr<OnlineEngine> eng = factory(gi.graph, ov);

            std::vector<char> owned(gi.graph.edge_count(), 0);
            for (int e = 0; e < gi.graph.edge_count(); ++e)
                if (ov.edge_is_zero(e)) owned[e] = 1;
            Cost prev_total = 0;
            for (const Request& r : gi.requests) {
                eng->serve(r);
                for (EdgeId e : eng->log().back().bought_edges) owned[e] = 1;
                CHECK(eng->total_charged() >= prev_total);
                prev_total = eng->total_charged();
                // feasibility: the request is connected in solution + overlay
                std::vector<int> parent(gi.graph.vertex_count());
                std::iota(parent.begin(), parent.end(), 0);
                auto find = [&](auto&& self, int x) -> int {
                    return parent[x] == x ? x : parent[x] = self(self, parent[x]);
                };
                for (int e = 0; e < gi.graph.edge_count(); ++e)
                    if (owned[e])
                        parent[find(find, gi.graph.edge(e).u)] = find(find, gi.graph.edge(e).v);
                VertexId want = kind == ProblemKind::steiner_tree ? gi.root : r.b;
                CHECK(find(find, r.a) == find(find, want));
            }
        }
    }
}

TEST_CASE("charged-cost log answers subset queries") {
    GeneratedInstance gi = gen_small_random(ProblemKind::steiner_tree, 5);
    SteinerTreeGreedyEngine eng(gi.graph, ZeroCostOverlay(gi.graph), gi.root);
    for (const Request& r : gi.requests) eng.serve(r);
    CHECK(engine_total_charged(eng, {}) == 0);
    std::vector<int> all;
    for (const Request& r : gi.requests) all.push_back(r.arrival_index);
    CHECK(engine_total_charged(eng, all) == eng.total_charged());
    // replaying a scattered subset from the log
    Rng rng(99);
    std::vector<int> sub;
    Cost expect = 0;
    for (std::size_t i = 0; i < gi.requests.size(); ++i)
        if (rng.chance(0.5)) {
            sub.push_back(gi.requests[i].arrival_index);
            expect = add_cost(expect, eng.log()[i].charged);
        }
    CHECK(engine_total_charged(eng, sub) == expect);
}

TEST_CASE("greedy charge on any subset stays within the subset bound") {
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        GeneratedInstance gi = gen_small_random(ProblemKind::steiner_tree, seed);
        SteinerTreeGreedyEngine eng(gi.graph, ZeroCostOverlay(gi.graph), gi.root);
        for (const Request& r : gi.requests) eng.serve(r);
        Cost opt = exact_opt(gi.graph, gi.requests, ProblemKind::steiner_tree, gi.root);
        if (opt == 0) continue;
        const unsigned masks = 1u << gi.requests.size();
        for (unsigned m = 1; m < masks; ++m) {
            std::vector<int> sub;
            for (std::size_t i = 0; i < gi.requests.size(); ++i)
                if (m & (1u << i)) sub.push_back(gi.requests[i].arrival_index);
            double bound = 2.0 * (std::log2(double(sub.size())) + 2.0) * double(opt);
            CHECK(double(engine_total_charged(eng, sub)) <= bound);
        }
    }
}
