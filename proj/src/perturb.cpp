#include "netpred/perturb.hpp"

#include "netpred/generators.hpp"

namespace netpred {

namespace {

VertexId displace(const WeightedGraph& g, VertexId v, Cost radius, int priority, Rng& rng) {
    if (radius <= 0) return v;
    Metric m(g, nullptr, priority);
    std::vector<Cost> d = m.distances_from(v);
    std::vector<VertexId> ball;
    for (VertexId w = 0; w < g.vertex_count(); ++w)
        if (!is_inf(d[w]) && d[w] <= radius) ball.push_back(w);
    return ball[rng.uniform(0, static_cast<int>(ball.size()) - 1)];
}

}  // namespace

PredictionSet perturb_requests(const WeightedGraph& g, const RequestSequence& reqs,
                               const Perturbation& p) {
    Rng rng(p.seed);
    PredictionSet out;
    for (const Request& r : reqs) {
        if (p.drop_rate > 0 && rng.chance(p.drop_rate)) continue;
        Request q = r;
        q.arrival_index = -1;
        if (p.displacement_radius > 0) {
            q.a = displace(g, q.a, p.displacement_radius, q.priority, rng);
            if (q.kind == ProblemKind::steiner_forest)
                q.b = displace(g, q.b, p.displacement_radius, q.priority, rng);
            else
                q.b = q.a;
        }
        out.push_back(q);
    }
    for (const Request& r : reqs) {
        if (!(p.add_rate > 0) || !rng.chance(p.add_rate)) continue;
        Request q = r;
        q.arrival_index = -1;
        q.a = rng.uniform(0, g.vertex_count() - 1);
        q.b = q.kind == ProblemKind::steiner_forest ? rng.uniform(0, g.vertex_count() - 1) : q.a;
        if (q.kind == ProblemKind::steiner_forest && q.b == q.a)
            q.b = (q.a + 1) % g.vertex_count();
        out.push_back(q);
    }
    return out;
}

}  // namespace netpred
