#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "netpred/generators.hpp"
#include "netpred/graph.hpp"

using namespace netpred;

namespace {

// brute force over all simple paths, independent of Dijkstra
Cost brute_force_distance(const WeightedGraph& g, const ZeroCostOverlay* ov, VertexId from,
                          VertexId to) {
    Cost best = kInfCost;
    std::vector<char> used(g.vertex_count(), 0);
    auto dfs = [&](auto&& self, VertexId v, Cost acc) -> void {
        if (v == to) {
            best = std::min(best, acc);
            return;
        }
        used[v] = 1;
        for (EdgeId e : g.incident(v)) {
            VertexId w = g.edge(e).other(v);
            if (used[w]) continue;
            Cost c = ov && ov->edge_is_zero(e) ? 0 : g.edge(e).cost;
            self(self, w, acc + c);
        }
        used[v] = 0;
    };
    dfs(dfs, from, 0);
    return best;
}

}  // namespace

TEST_CASE("shortest path on a single edge, with and without overlay") {
    WeightedGraph g(2);
    EdgeId e = g.add_edge(0, 1, 5, 1);
    Metric m(g);
    PathResult p = m.shortest_path(0, 1);
    CHECK(p.cost == 5);
    REQUIRE(p.edges.size() == 1);
    CHECK(p.edges[0] == e);

    ZeroCostOverlay ov(g);
    ov.zero_edge(e);
    Metric mz(g, &ov);
    PathResult pz = mz.shortest_path(0, 1);
    CHECK(pz.cost == 0);
    REQUIRE(pz.edges.size() == 1);
    CHECK(pz.edges[0] == e);
}

TEST_CASE("four-cycle picks the two unit edges over the heavy one") {
    WeightedGraph g(4);
    g.add_edge(0, 1, 1, 1);
    g.add_edge(1, 2, 1, 1);
    g.add_edge(2, 3, 1, 1);
    g.add_edge(3, 0, 10, 1);
    Metric m(g);
    Cost expected = brute_force_distance(g, nullptr, 0, 2);
    CHECK(expected == 2);
    CHECK(m.distance(0, 2) == expected);
}

TEST_CASE("unknown vertices are rejected") {
    WeightedGraph g(2);
    g.add_edge(0, 1, 1, 1);
    Metric m(g);
    CHECK_THROWS_AS(m.distance(0, 7), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 0, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 1, -1, 1), std::invalid_argument);
}

TEST_CASE("open ball intersection is strict") {
    WeightedGraph g(3);
    g.add_edge(0, 1, 2, 1);
    g.add_edge(1, 2, 1, 1);
    Metric m(g);
    CHECK_FALSE(m.ball_intersects(0, 1, 2, 2));  // d = 3, 3 < 1+2 is false
    CHECK_FALSE(m.ball_intersects(0, 0, 0, 0));  // radius-0 open balls never meet
    WeightedGraph h(3);
    h.add_edge(0, 1, 2, 1);
    h.add_edge(1, 2, 2, 1);
    Metric mh(h);
    CHECK(mh.ball_intersects(0, 3, 2, 2));  // d = 4 < 5
}

TEST_CASE("distance matrix basics and triangle shortcut") {
    WeightedGraph g1(1);
    Metric m1(g1);
    CHECK(m1.distance_matrix({0}) == std::vector<std::vector<Cost>>{{0}});

    WeightedGraph g2(2);
    g2.add_edge(0, 1, 7, 1);
    Metric m2(g2);
    auto d2 = m2.distance_matrix({0, 1});
    CHECK(d2[0][1] == 7);
    CHECK(d2[1][0] == 7);
    CHECK(d2[0][0] == 0);

    WeightedGraph g3(3);
    g3.add_edge(0, 1, 1, 1);
    g3.add_edge(1, 2, 2, 1);
    g3.add_edge(0, 2, 4, 1);
    Metric m3(g3);
    CHECK(m3.distance(0, 2) == brute_force_distance(g3, nullptr, 0, 2));
    CHECK(m3.distance(0, 2) == 3);
}

TEST_CASE("dijkstra agrees with the brute force on random graphs with overlays") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        GeneratedInstance gi = gen_small_random(ProblemKind::steiner_tree, seed);
        ZeroCostOverlay ov(gi.graph);
        Rng rng(seed * 31);
        for (int e = 0; e < gi.graph.edge_count(); ++e)
            if (rng.chance(0.25)) ov.zero_edge(e);
        Metric m(gi.graph, &ov);
        for (int u = 0; u < gi.graph.vertex_count(); ++u) {
            std::vector<Cost> d = m.distances_from(u);
            for (int v = 0; v < gi.graph.vertex_count(); ++v)
                CHECK(d[v] == brute_force_distance(gi.graph, &ov, u, v));
        }
    }
}

TEST_CASE("priority floors only remove edges") {
    WeightedGraph g(4);
    g.add_edge(0, 1, 1, 2);
    g.add_edge(1, 2, 1, 1);
    g.add_edge(0, 2, 5, 3);
    g.add_edge(2, 3, 1, 2);
    Metric all(g, nullptr, 1), mid(g, nullptr, 2), top(g, nullptr, 3);
    CHECK(all.distance(0, 2) == 2);
    CHECK(mid.distance(0, 2) == 5);  // the unit middle edge is below the floor
    CHECK(top.distance(0, 3) == kInfCost);
    for (int u = 0; u < 4; ++u)
        for (int v = 0; v < 4; ++v) {
            CHECK(all.distance(u, v) <= mid.distance(u, v));
            CHECK(mid.distance(u, v) <= top.distance(u, v));
        }
}

TEST_CASE("instance json round trip is byte exact") {
    GeneratedInstance gi = gen_random(ProblemKind::facility_location, 11, 5, 7);
    gi.graph.set_capacity(2, 3);
    std::string text = gi.graph.to_json_text();
    WeightedGraph back = WeightedGraph::from_json_text(text);
    CHECK(back.to_json_text() == text);
    CHECK(back.vertex_count() == gi.graph.vertex_count());
    CHECK(back.edge_count() == gi.graph.edge_count());
    CHECK(back.scale_denominator() == gi.graph.scale_denominator());
}

TEST_CASE("parallel edges are kept and used") {
    WeightedGraph g(2);
    g.add_edge(0, 1, 9, 1);
    g.add_edge(0, 1, 4, 1);
    Metric m(g);
    CHECK(g.edge_count() == 2);
    CHECK(m.distance(0, 1) == 4);
}

TEST_CASE("connectivity check from a root") {
    WeightedGraph g(3);
    g.add_edge(0, 1, 1, 1);
    CHECK_FALSE(g.connected_from(0));
    g.add_edge(1, 2, 1, 1);
    CHECK(g.connected_from(0));
}
