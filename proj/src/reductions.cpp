#include "netpred/reductions.hpp"

#include <numeric>
#include <set>
#include <stdexcept>

#include "json.hpp"

namespace netpred {

namespace {

Cost lcm_cost(Cost a, Cost b) {
    Cost g = std::gcd(a, b);
    return mul_cost(a / g, b);
}

}  // namespace

CapacitatedReduction capacitate_reduce(const WeightedGraph& g) {
    if (!g.has_facilities() || !g.has_capacities())
        throw std::invalid_argument("capacitated reduction needs facility costs and capacities");
    const int n = g.vertex_count();
    for (VertexId v = 0; v < n; ++v)
        if (!is_inf(g.facility_cost(v)) && g.capacity(v) < 1)
            throw std::invalid_argument("facility with zero capacity");

    // scale so that every bridge cost f_v / beta_v is integral
    Cost scale = 1;
    for (VertexId v = 0; v < n; ++v) {
        Cost f = g.facility_cost(v);
        if (is_inf(f)) continue;
        Cost beta = g.capacity(v);
        Cost need = beta / std::gcd(f == 0 ? beta : f, beta);
        scale = lcm_cost(scale, need == 0 ? 1 : need);
    }

    CapacitatedReduction red;
    red.cost_scale = scale;
    red.copy_of.assign(n, -1);
    red.capacities.assign(n, 0);
    WeightedGraph t(2 * n);
    t.set_scale_denominator(mul_cost(g.scale_denominator(), scale));
    for (const Edge& e : g.edges()) t.add_edge(e.u, e.v, mul_cost(e.cost, scale), e.priority);
    red.original_of.assign(2 * n, -1);
    for (VertexId v = 0; v < n; ++v) {
        Cost f = g.facility_cost(v);
        if (is_inf(f)) continue;
        VertexId copy = n + v;
        red.copy_of[v] = copy;
        red.original_of[copy] = v;
        red.capacities[v] = g.capacity(v);
        Cost fs = mul_cost(f, scale);
        t.add_edge(v, copy, fs / g.capacity(v), 1);  // exact by the scale choice
        t.set_facility_cost(copy, fs);               // originals stay non-candidates
    }
    red.transformed = std::move(t);
    return red;
}

CapacitatedPlayback capacitate_playback(const CapacitatedReduction& red, const RunReport& run) {
    CapacitatedPlayback pb;
    const WeightedGraph& t = red.transformed;

    // distances between original vertices are unchanged by the pendant
    // copies, so connection costs can be read off the transformed graph
    Metric m(t);
    std::map<VertexId, std::vector<Cost>> rows;
    std::map<VertexId, int> assigned;

    auto open_copy = [&](VertexId orig) {
        ++pb.copies_opened[orig];
        pb.opening_cost = add_cost(pb.opening_cost, t.facility_cost(red.copy_of[orig]));
    };
    std::set<VertexId> opened_in_prime;
    auto on_open = [&](VertexId vprime) {
        if (opened_in_prime.count(vprime)) return;
        opened_in_prime.insert(vprime);
        VertexId orig = red.original_of[vprime];
        if (orig < 0) throw std::logic_error("transformed run opened a non-copy facility");
        if (pb.copies_opened[orig] == 0) open_copy(orig);
    };

    // the trace is in arrival order; engine openings and Partial purchases
    // both appear as opened facilities on some record
    for (const ChargeRecord& rec : run.trace) {
        for (VertexId v : rec.opened_facilities) on_open(v);
        if (rec.connected_to >= 0) {
            VertexId orig = red.original_of[rec.connected_to];
            if (orig < 0) throw std::logic_error("client connected to a non-copy facility");
            if (pb.copies_opened[orig] == 0) open_copy(orig);
            if (!rows.count(rec.request_vertex))
                rows[rec.request_vertex] = m.distances_from(rec.request_vertex);
            pb.connection_cost = add_cost(pb.connection_cost, rows[rec.request_vertex][orig]);
            ++assigned[orig];
            if (assigned[orig] > pb.copies_opened[orig] * red.capacities[orig]) open_copy(orig);
        }
    }
    pb.total = add_cost(pb.opening_cost, pb.connection_cost);
    return pb;
}

PriorityRunReport priority_run(const WeightedGraph& g, const RequestSequence& R,
                               const PredictionSet& rhat, int b, const FrameworkConfig& base_cfg) {
    for (const Request& r : R)
        if (r.priority < 1 || r.priority > b)
            throw std::invalid_argument("request priority outside [1..b]");
    for (const Request& r : rhat)
        if (r.priority < 1 || r.priority > b)
            throw std::invalid_argument("prediction priority outside [1..b]");
    // feasibility in each G_j
    for (const Request& r : R) {
        Metric m(g, nullptr, r.priority);
        if (is_inf(m.distance(r.a, r.b)))
            throw std::invalid_argument("terminal pair disconnected at its priority class");
    }

    PriorityRunReport out;
    std::vector<char> union_edges(g.edge_count(), 0);
    for (int j = 1; j <= b; ++j) {
        RequestSequence rj;
        PredictionSet pj;
        for (const Request& r : R)
            if (r.priority == j) rj.push_back(r);
        for (const Request& r : rhat)
            if (r.priority == j) pj.push_back(r);
        FrameworkConfig cfg = base_cfg;
        cfg.kind = ProblemKind::steiner_forest;
        cfg.priority_floor = j;
        RunReport rep = run_with_predictions(g, rj, pj, cfg);
        out.cost_sum = add_cost(out.cost_sum, rep.total_cost());
        for (EdgeId e : rep.edges_bought) union_edges[e] = 1;
        out.class_errors.push_back(pareto_frontier(rj, pj, g, ProblemKind::steiner_forest));
        out.per_class.push_back(std::move(rep));
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (union_edges[e]) out.cost_dedup = add_cost(out.cost_dedup, g.edge(e).cost);
    return out;
}

std::string priority_report_to_json_text(const PriorityRunReport& rep) {
    nlohmann::ordered_json j;
    j["classes"] = rep.per_class.size();
    j["cost_sum"] = rep.cost_sum;
    j["cost_dedup"] = rep.cost_dedup;
    nlohmann::ordered_json classes = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < rep.per_class.size(); ++i) {
        nlohmann::ordered_json cls =
            nlohmann::ordered_json::parse(run_report_to_json_text(rep.per_class[i]));
        cls["priority"] = i + 1;
        if (!rep.class_errors[i].points.empty()) {
            cls["error_delta"] = rep.class_errors[i].points.front().delta;
            cls["error_d"] = rep.class_errors[i].points.front().min_matching_cost;
        }
        classes.push_back(std::move(cls));
    }
    j["per_class"] = std::move(classes);
    return j.dump(2) + "\n";
}

}  // namespace netpred
