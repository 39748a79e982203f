#include "netpred/error_model.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "netpred/matching.hpp"

namespace netpred {

namespace {

// distance rows are from the first pair's endpoints; min over orientations
Cost pair_cost_from_dists(const Request& b, const std::vector<Cost>& from_s,
                          const std::vector<Cost>& from_t) {
    Cost o1 = add_cost(from_s[b.a], from_t[b.b]);
    Cost o2 = add_cost(from_s[b.b], from_t[b.a]);
    return std::min(o1, o2);
}

}  // namespace

Cost pair_matching_cost(ProblemKind kind, const Request& a, const Request& b,
                        const WeightedGraph& g) {
    if (a.kind != b.kind) throw std::invalid_argument("cannot match requests of different kinds");
    if (kind == ProblemKind::steiner_forest) {
        if (a.priority != b.priority) return kInfCost;  // forbidden, not just expensive
        Metric m(g, nullptr, a.priority);
        std::vector<Cost> from_s = m.distances_from(a.a);
        std::vector<Cost> from_t = m.distances_from(a.b);
        return pair_cost_from_dists(b, from_s, from_t);
    }
    Metric m(g);
    return m.distance(a.a, b.a);
}

std::vector<std::vector<Cost>> matching_cost_matrix(const RequestSequence& R,
                                                    const PredictionSet& Rhat,
                                                    const WeightedGraph& g, ProblemKind kind) {
    std::vector<std::vector<Cost>> m(R.size(), std::vector<Cost>(Rhat.size(), kInfCost));
    if (R.empty() || Rhat.empty()) return m;

    if (kind != ProblemKind::steiner_forest) {
        // one Dijkstra per distinct request vertex
        Metric metric(g);
        std::map<VertexId, std::vector<Cost>> dists;
        for (const Request& r : R)
            if (!dists.count(r.a)) dists[r.a] = metric.distances_from(r.a);
        for (std::size_t i = 0; i < R.size(); ++i)
            for (std::size_t j = 0; j < Rhat.size(); ++j) m[i][j] = dists[R[i].a][Rhat[j].a];
        return m;
    }

    // terminal pairs: distances live in the G_j of each priority class
    std::map<std::pair<int, VertexId>, std::vector<Cost>> dists;
    auto lookup = [&](int priority, VertexId v) -> const std::vector<Cost>& {
        auto key = std::make_pair(priority, v);
        auto it = dists.find(key);
        if (it == dists.end()) {
            Metric metric(g, nullptr, priority);
            it = dists.emplace(key, metric.distances_from(v)).first;
        }
        return it->second;
    };
    for (std::size_t i = 0; i < R.size(); ++i)
        for (std::size_t j = 0; j < Rhat.size(); ++j) {
            if (R[i].priority != Rhat[j].priority) continue;
            const auto& from_s = lookup(R[i].priority, R[i].a);
            const auto& from_t = lookup(R[i].priority, R[i].b);
            m[i][j] = pair_cost_from_dists(Rhat[j], from_s, from_t);
        }
    return m;
}

ParetoFrontier pareto_frontier(const RequestSequence& R, const PredictionSet& Rhat,
                               const WeightedGraph& g, ProblemKind kind) {
    for (const Request& r : R)
        if (r.kind != kind) throw std::invalid_argument("request kind mismatch");
    for (const Request& r : Rhat)
        if (r.kind != kind) throw std::invalid_argument("prediction kind mismatch");

    const int total = static_cast<int>(R.size() + Rhat.size());
    std::vector<std::vector<Cost>> costs = matching_cost_matrix(R, Rhat, g, kind);
    MatchingTable table = min_cost_matchings(costs);
    const bool small = R.size() * Rhat.size() <= 100;

    ParetoFrontier f;
    Cost last_d = kInfCost;
    const int kmax = static_cast<int>(std::min(R.size(), Rhat.size()));
    for (int k = kmax; k >= 0; --k) {
        Cost d = table.cost_for_size[k];
        if (is_inf(d)) continue;  // no finite pairing of this size
        if (!f.points.empty() && d >= last_d) continue;  // dominated
        ParetoPoint p;
        p.k = k;
        p.delta = total - 2 * k;
        p.min_matching_cost = d;
        std::vector<std::pair<int, int>> pairing =
            small && k > 0 ? lex_min_cost_pairing(costs, k, d) : table.pairing_for_size[k];
        p.witness.delta = p.delta;
        p.witness.matching_cost = d;
        p.witness.matching = pairing;
        for (auto [i, j] : pairing) {
            p.witness.matched_requests.push_back(i);
            p.witness.matched_predictions.push_back(j);
        }
        last_d = d;
        f.points.push_back(std::move(p));
    }
    return f;
}

std::string frontier_to_csv(const ParetoFrontier& f) {
    std::ostringstream out;
    out << "delta,D,k\n";
    for (const ParetoPoint& p : f.points)
        out << p.delta << "," << p.min_matching_cost << "," << p.k << "\n";
    return out.str();
}

}  // namespace netpred
