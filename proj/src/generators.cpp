#include "netpred/generators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace netpred {

namespace {

Cost l1(int x1, int y1, int x2, int y2) { return std::abs(x1 - x2) + std::abs(y1 - y2); }

Request make_request(ProblemKind kind, Rng& rng, int vertices) {
    switch (kind) {
        case ProblemKind::steiner_tree: return Request::terminal(rng.uniform(0, vertices - 1));
        case ProblemKind::facility_location: return Request::client(rng.uniform(0, vertices - 1));
        case ProblemKind::steiner_forest: {
            int s = rng.uniform(0, vertices - 1);
            int t = rng.uniform(0, vertices - 1);
            while (t == s) t = rng.uniform(0, vertices - 1);
            return Request::pair(s, t);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace

GeneratedInstance gen_random(ProblemKind kind, int vertices, int requests, std::uint64_t seed) {
    if (vertices < 2) throw std::invalid_argument("need at least two vertices");
    Rng rng(seed);
    std::vector<int> xs(vertices), ys(vertices);
    for (int v = 0; v < vertices; ++v) {
        xs[v] = rng.uniform(0, 100);
        ys[v] = rng.uniform(0, 100);
    }
    WeightedGraph g(vertices);
    for (int v = 1; v < vertices; ++v) {  // random spanning tree keeps it connected
        int parent = rng.uniform(0, v - 1);
        g.add_edge(parent, v, l1(xs[parent], ys[parent], xs[v], ys[v]) + 1, 1);
    }
    int extra = vertices + vertices / 2;
    for (int i = 0; i < extra; ++i) {
        int u = rng.uniform(0, vertices - 1);
        int v = rng.uniform(0, vertices - 1);
        if (u == v) continue;
        g.add_edge(u, v, l1(xs[u], ys[u], xs[v], ys[v]) + 1, 1);
    }
    if (kind == ProblemKind::facility_location) {
        int facilities = std::max(2, vertices / 3);
        for (int i = 0; i < facilities; ++i)
            g.set_facility_cost(rng.uniform(0, vertices - 1), rng.uniform(5, 120));
    }
    GeneratedInstance inst;
    inst.kind = kind;
    inst.root = 0;
    for (int i = 0; i < requests; ++i) {
        Request r = make_request(kind, rng, vertices);
        r.arrival_index = i;
        inst.requests.push_back(r);
    }
    inst.graph = std::move(g);
    return inst;
}

GeneratedInstance gen_small_random(ProblemKind kind, std::uint64_t seed) {
    Rng rng(seed);
    const int vertices = rng.uniform(4, 8);
    WeightedGraph g(vertices);
    for (int v = 1; v < vertices; ++v)
        g.add_edge(rng.uniform(0, v - 1), v, rng.uniform(1, 12), 1);
    int extra = rng.uniform(1, 4);
    for (int i = 0; i < extra && g.edge_count() < 14; ++i) {
        int u = rng.uniform(0, vertices - 1), v = rng.uniform(0, vertices - 1);
        if (u != v) g.add_edge(u, v, rng.uniform(1, 12), 1);
    }
    if (kind == ProblemKind::facility_location) {
        int facilities = rng.uniform(2, 4);
        for (int i = 0; i < facilities; ++i)
            g.set_facility_cost(rng.uniform(0, vertices - 1), rng.uniform(1, 15));
    }
    GeneratedInstance inst;
    inst.kind = kind;
    inst.root = 0;
    int requests = rng.uniform(2, 6);
    for (int i = 0; i < requests; ++i) {
        Request r = make_request(kind, rng, vertices);
        r.arrival_index = i;
        inst.requests.push_back(r);
    }
    inst.graph = std::move(g);
    return inst;
}

GeneratedInstance gen_star(int spokes, ProblemKind kind) {
    if (spokes < 1) throw std::invalid_argument("star needs at least one spoke");
    WeightedGraph g(spokes + 1);
    for (int i = 1; i <= spokes; ++i) g.add_edge(0, i, 1, 1);
    if (kind == ProblemKind::facility_location) g.set_facility_cost(0, 1);
    GeneratedInstance inst;
    inst.kind = kind;
    inst.root = 0;
    for (int i = 1; i <= spokes; ++i) {
        Request r = kind == ProblemKind::facility_location ? Request::client(i)
                    : kind == ProblemKind::steiner_tree    ? Request::terminal(i)
                                                           : Request::pair(0, i);
        r.arrival_index = i - 1;
        inst.requests.push_back(r);
    }
    inst.graph = std::move(g);
    return inst;
}

GeneratedInstance gen_path(int length, ProblemKind kind) {
    if (length < 1) throw std::invalid_argument("path needs at least one edge");
    WeightedGraph g(length + 1);
    for (int i = 0; i < length; ++i) g.add_edge(i, i + 1, 1, 1);
    if (kind == ProblemKind::facility_location) g.set_facility_cost(0, 1);
    GeneratedInstance inst;
    inst.kind = kind;
    inst.root = 0;
    Request r = kind == ProblemKind::facility_location ? Request::client(length)
                : kind == ProblemKind::steiner_tree    ? Request::terminal(length)
                                                       : Request::pair(0, length);
    r.arrival_index = 0;
    inst.requests.push_back(r);
    inst.graph = std::move(g);
    return inst;
}

GeneratedInstance gen_star_composite(int requests) {
    if (requests < 2 || (requests & (requests - 1)) != 0)
        throw std::invalid_argument("star-composite size must be a power of two >= 2");
    // path 0..n with unit edges; terminal i sits on a unit spoke at position i
    const int n = requests;
    WeightedGraph g(2 * n + 1);
    for (int i = 0; i < n; ++i) g.add_edge(i, i + 1, 1, 1);
    for (int i = 1; i <= n; ++i) g.add_edge(i, n + i, 1, 1);  // spoke tip n+i at position i

    GeneratedInstance inst;
    inst.kind = ProblemKind::steiner_tree;
    inst.root = 0;
    // bisection arrival order over positions 1..n
    std::vector<int> order{n};
    for (int stride = n / 2; stride >= 1; stride /= 2)
        for (int p = stride; p < n; p += 2 * stride) order.push_back(p);
    int idx = 0;
    for (int p : order) {
        Request r = Request::terminal(n + p);
        r.arrival_index = idx++;
        inst.requests.push_back(r);
    }
    inst.graph = std::move(g);
    return inst;
}

}  // namespace netpred
