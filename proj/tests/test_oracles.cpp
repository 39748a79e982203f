#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>
#include <set>

#include "netpred/generators.hpp"
#include "netpred/oracles.hpp"

using namespace netpred;

namespace {

// reference Steiner tree: try every vertex subset as internal nodes and MST
// over the induced metric closure would be wrong in general, so use edge
// subsets; only used on graphs with few edges
Cost brute_force_steiner_tree(const WeightedGraph& g, const std::vector<VertexId>& terminals,
                              VertexId root) {
    const int m = g.edge_count();
    REQUIRE(m <= 14);
    Cost best = kInfCost;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        Cost c = 0;
        std::vector<int> parent(g.vertex_count());
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](auto&& self, int x) -> int {
            return parent[x] == x ? x : parent[x] = self(self, parent[x]);
        };
        for (int e = 0; e < m; ++e)
            if (mask & (1u << e)) {
                c += g.edge(e).cost;
                parent[find(find, g.edge(e).u)] = find(find, g.edge(e).v);
            }
        bool okall = true;
        for (VertexId t : terminals)
            if (find(find, t) != find(find, root)) okall = false;
        if (okall) best = std::min(best, c);
    }
    return best;
}

}  // namespace

TEST_CASE("steiner tree oracle: path graph endpoints take the whole path") {
    GeneratedInstance gi = gen_path(5, ProblemKind::steiner_tree);
    SteinerTreeResult r = exact_steiner_tree(gi.graph, {5}, 0);
    CHECK(r.cost == 5);
    CHECK(r.edges.size() == 5);
}

TEST_CASE("steiner tree oracle matches the edge-subset brute force") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        GeneratedInstance gi = gen_small_random(ProblemKind::steiner_tree, seed);
        if (gi.graph.edge_count() > 14) continue;
        std::vector<VertexId> terms;
        for (const Request& r : gi.requests) terms.push_back(r.a);
        SteinerTreeResult got = exact_steiner_tree(gi.graph, terms, gi.root);
        CHECK(got.cost == brute_force_steiner_tree(gi.graph, terms, gi.root));
        // the reported edge set must actually connect and cost what it claims
        Cost c = 0;
        for (EdgeId e : got.edges) c += gi.graph.edge(e).cost;
        CHECK(c == got.cost);
    }
}

TEST_CASE("steiner tree oracle refuses over-budget inputs") {
    WeightedGraph g(20);
    for (int i = 1; i < 20; ++i) g.add_edge(0, i, 1, 1);
    std::vector<VertexId> terms;
    for (int i = 1; i <= 13; ++i) terms.push_back(i);
    CHECK_THROWS_AS(exact_steiner_tree(g, terms, 0), OracleRefusal);
}

TEST_CASE("steiner forest oracle on a two-pair instance") {
    WeightedGraph g(4);
    g.add_edge(0, 1, 2, 1);
    g.add_edge(1, 2, 2, 1);
    g.add_edge(2, 3, 2, 1);
    g.add_edge(0, 3, 9, 1);
    SteinerTreeResult r = exact_steiner_forest(g, {{0, 1}, {2, 3}});
    CHECK(r.cost == 4);
    CHECK(r.edges.size() == 2);
}

TEST_CASE("facility location oracle: colocated cheapest facility") {
    WeightedGraph g(3);
    g.add_edge(0, 1, 5, 1);
    g.add_edge(1, 2, 5, 1);
    g.set_facility_cost(0, 2);
    g.set_facility_cost(2, 50);
    FacilityLocationResult r = exact_facility_location(g, {0});
    CHECK(r.cost == 2);
    REQUIRE(r.open.size() == 1);
    CHECK(r.open[0] == 0);
    CHECK(r.opening_cost == 2);
    CHECK(r.connection_cost == 0);
}

TEST_CASE("capacitated oracle equals uncapacitated when capacity is slack") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        GeneratedInstance gi = gen_small_random(ProblemKind::facility_location, seed);
        std::vector<VertexId> clients;
        for (const Request& r : gi.requests) clients.push_back(r.a);
        for (VertexId v = 0; v < gi.graph.vertex_count(); ++v)
            if (!is_inf(gi.graph.facility_cost(v)))
                gi.graph.set_capacity(v, static_cast<int>(clients.size()) + 1);
        CHECK(exact_capacitated_fl(gi.graph, clients) ==
              exact_facility_location(gi.graph, clients).cost);
    }
}

TEST_CASE("capacitated oracle forces extra copies under tight capacity") {
    WeightedGraph g(2);
    g.add_edge(0, 1, 1, 1);
    g.set_facility_cost(0, 10);
    g.set_capacity(0, 1);
    // three clients, one slot per copy: three copies
    CHECK(exact_capacitated_fl(g, {0, 0, 0}) == 30);
    g.set_capacity(0, 3);
    CHECK(exact_capacitated_fl(g, {0, 0, 0}) == 10);
}

TEST_CASE("matching frontier oracle refuses sets beyond six") {
    WeightedGraph g(8);
    for (int i = 1; i < 8; ++i) g.add_edge(0, i, 1, 1);
    RequestSequence R;
    for (int i = 0; i < 7; ++i) {
        Request r = Request::terminal(i);
        r.arrival_index = i;
        R.push_back(r);
    }
    CHECK_THROWS_AS(exact_matching_frontier(R, {}, g, ProblemKind::steiner_tree), OracleRefusal);
}

TEST_CASE("unsat profile equals the single-u oracle everywhere") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        ProblemKind kind = seed % 3 == 0   ? ProblemKind::facility_location
                           : seed % 3 == 1 ? ProblemKind::steiner_tree
                                           : ProblemKind::steiner_forest;
        GeneratedInstance gi = gen_small_random(kind, seed * 71);
        if (kind == ProblemKind::steiner_forest && gi.graph.edge_count() > 16) continue;
        std::vector<Cost> profile =
            exact_min_cost_unsat_profile(gi.graph, gi.requests, kind, gi.root);
        for (int u = 0; u <= static_cast<int>(gi.requests.size()); ++u)
            CHECK(profile[u] ==
                  exact_min_cost_with_unsat_at_most(gi.graph, gi.requests, kind, gi.root, u));
    }
}

TEST_CASE("min cost with bounded unsatisfied count") {
    GeneratedInstance gi = gen_star(3, ProblemKind::steiner_tree);
    // star with unit spokes: satisfying q terminals costs exactly q
    for (int u = 0; u <= 3; ++u)
        CHECK(exact_min_cost_with_unsat_at_most(gi.graph, gi.requests, ProblemKind::steiner_tree,
                                                0, u) == 3 - u);
}
