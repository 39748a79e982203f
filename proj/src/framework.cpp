#include "netpred/framework.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace netpred {

using ordered_json = nlohmann::ordered_json;

PartialScanBounds partial_scan_bounds(const WeightedGraph& g, int prediction_count) {
    if (prediction_count < 1) throw std::invalid_argument("scan bounds need at least one prediction");
    PartialScanBounds b;
    Cost cmin = g.min_positive_element_cost();
    if (cmin == 0) return b;  // all-zero costs: everything is free at any penalty
    b.i_min = floor_log2_ratio(cmin, prediction_count + 1);
    Cost total = add_cost(g.total_edge_cost(), g.total_finite_facility_cost());
    b.i_max = ceil_log2(total) + 1;
    return b;
}

PartialOracle::PartialOracle(const WeightedGraph& g, PredictionSet rhat, PcSolver& pc, Cost gamma)
    : g_(&g), rhat_(std::move(rhat)), pc_(&pc), gamma_(gamma) {
    if (!rhat_.empty()) bounds_ = partial_scan_bounds(g, static_cast<int>(rhat_.size()));
}

const PCSolution& PartialOracle::pc_at_exponent(int i) {
    auto it = cache_.find(i);
    if (it == cache_.end()) it = cache_.emplace(i, pc_->solve(Penalty::from_exponent(i))).first;
    return it->second;
}

PartialResult PartialOracle::partial(int u) {
    const int n = prediction_count();
    if (u < 0 || u > n) throw std::invalid_argument("partial: u out of range");
    PartialResult res;
    if (mul_cost(gamma_, u) >= n) return res;  // empty result: both guarantees hold vacuously

    int first = bounds_.i_min;
    bool found = false;
    for (int i = bounds_.i_min; i <= bounds_.i_max; ++i) {
        if (pc_at_exponent(i).unsatisfied <= mul_cost(gamma_, u)) {
            first = i;
            found = true;
            break;
        }
    }
    if (!found) throw std::logic_error("partial: no qualifying penalty exponent in scan range");

    const PCSolution& s1 = pc_at_exponent(first - 1);
    const PCSolution& s2 = pc_at_exponent(first);
    Cost u1 = s1.unsatisfied, u2 = s2.unsatisfied;
    const PCSolution& chosen = (2 * mul_cost(gamma_, u) >= u1 + u2) ? s1 : s2;
    res.chosen_branch = (&chosen == &s1) ? 1 : 2;
    res.penalty_exponent = first;
    res.edges = chosen.edges;
    res.facilities = chosen.facilities;
    res.unsatisfied_count = chosen.unsatisfied;
    res.element_cost = chosen.element_cost;
    return res;
}

// ---------------------------------------------------------------------------

FrameworkRunner::FrameworkRunner(const WeightedGraph& g, PredictionSet rhat, FrameworkConfig cfg)
    : g_(&g), rhat_(std::move(rhat)), cfg_(cfg) {
    if (!cfg_.use_predictions) rhat_.clear();
    validate_requests(g, rhat_, cfg_.kind);
    if (cfg_.kind == ProblemKind::steiner_tree && !g.connected_from(cfg_.root))
        throw std::invalid_argument("instance is not connected from the root");

    pc_ = make_pc_solver(cfg_.pc_solver, g, rhat_, cfg_.kind, cfg_.root, cfg_.priority_floor,
                         cfg_.gamma_override);
    gamma_ = cfg_.gamma_override.value_or(pc_->gamma());
    oracle_ = std::make_unique<PartialOracle>(g, rhat_, *pc_, gamma_);
    factory_ = make_engine_factory(cfg_.kind, cfg_.root, cfg_.priority_floor);
    s_edges_.assign(g.edge_count(), 0);
    s_facilities_.assign(g.vertex_count(), 0);
    restart_engine();
    rep_.kind = cfg_.kind;
    rep_.gamma = gamma_;
    rep_.framework = cfg_.use_predictions;
    rep_.phase_charged.assign(1, 0);
    rep_.phase_actual.assign(1, 0);
}

FrameworkRunner::~FrameworkRunner() = default;

void FrameworkRunner::restart_engine() {
    ZeroCostOverlay ov(*g_);
    for (EdgeId e = 0; e < g_->edge_count(); ++e)
        if (s_edges_[e]) ov.zero_edge(e);
    for (VertexId v = 0; v < g_->vertex_count(); ++v)
        if (s_facilities_[v]) ov.zero_facility(v);
    engine_ = factory_(*g_, ov);
}

const ChargeRecord& FrameworkRunner::step(const Request& r) {
    if (r.kind != cfg_.kind) throw std::invalid_argument("request kind mismatch");
    Cost charged = engine_->serve(r);
    ChargeRecord rec = engine_->log().back();
    b_ = add_cost(b_, charged);
    ++iteration_;

    // S grows with everything the online algorithm buys
    for (EdgeId e : rec.bought_edges) s_edges_[e] = 1;
    for (VertexId v : rec.opened_facilities) s_facilities_[v] = 1;

    rep_.engine_charged = b_;
    rep_.engine_actual = add_cost(rep_.engine_actual, rec.actual);
    rep_.phase_charged[phase_] = add_cost(rep_.phase_charged[phase_], rec.charged);
    rep_.phase_actual[phase_] = add_cost(rep_.phase_actual[phase_], rec.actual);
    rep_.trace.push_back(rec);

    // doubling trigger, evaluated after serving; B == 0 never triggers
    if (b_ > 0 && b_ >= 2 * b_hat_) major_iteration();
    return rep_.trace.back();
}

void FrameworkRunner::major_iteration() {
    MajorIterationRecord mi;
    mi.iteration = iteration_;
    mi.b_hat_before = b_hat_;
    b_hat_ = b_;
    mi.b_hat_after = b_hat_;

    // minimum u whose Partial solution fits in the budget 3*gamma*B_hat;
    // evaluated for every u (cache-backed), so non-monotone costs from the
    // approximate solver cannot hide the true minimum
    const int n = oracle_->prediction_count();
    const __int128 budget = __int128(3) * gamma_ * b_hat_;
    int best_u = n;
    PartialResult best;
    for (int u = n; u >= 0; --u) {
        PartialResult pr = oracle_->partial(u);
        if (__int128(pr.element_cost) <= budget) {
            best_u = u;
            best = std::move(pr);
        }
    }
    mi.u = best_u;
    mi.partial_cost_full = best.element_cost;
    mi.partial_unsatisfied = best.unsatisfied_count;
    mi.penalty_exponent = best.penalty_exponent;
    mi.chosen_branch = best.chosen_branch;

    Cost paid = 0;
    bool grew = false;
    for (EdgeId e : best.edges)
        if (!s_edges_[e]) {
            s_edges_[e] = 1;
            paid = add_cost(paid, g_->edge(e).cost);
            grew = true;
        }
    for (VertexId v : best.facilities)
        if (!s_facilities_[v]) {
            s_facilities_[v] = 1;
            paid = add_cost(paid, g_->facility_cost(v));
            grew = true;
        }
    mi.partial_cost_paid = paid;
    rep_.partial_paid = add_cost(rep_.partial_paid, paid);

    // a purchase that adds nothing leaves the live engine untouched; with an
    // empty prediction the framework then matches the bare engine exactly
    mi.restarted = grew;
    if (grew) restart_engine();

    ++phase_;
    rep_.phase_charged.push_back(0);
    rep_.phase_actual.push_back(0);
    mi.phase_after = phase_;
    rep_.b_hat = b_hat_;
    rep_.majors.push_back(mi);
}

RunReport FrameworkRunner::report() const {
    RunReport out = rep_;
    for (EdgeId e = 0; e < g_->edge_count(); ++e)
        if (s_edges_[e]) out.edges_bought.push_back(e);
    for (VertexId v = 0; v < g_->vertex_count(); ++v)
        if (s_facilities_[v]) out.facilities_bought.push_back(v);
    return out;
}

RunReport run_with_predictions(const WeightedGraph& g, const RequestSequence& R,
                               const PredictionSet& rhat, const FrameworkConfig& cfg) {
    validate_requests(g, R, cfg.kind);
    FrameworkRunner runner(g, rhat, cfg);
    for (const Request& r : R) runner.step(r);
    return runner.report();
}

RunReport run_engine_only(const WeightedGraph& g, const RequestSequence& R,
                          const FrameworkConfig& cfg) {
    validate_requests(g, R, cfg.kind);
    EngineFactory factory = make_engine_factory(cfg.kind, cfg.root, cfg.priority_floor);
    std::unique_ptr<OnlineEngine> engine = factory(g, ZeroCostOverlay(g));
    RunReport rep;
    rep.kind = cfg.kind;
    rep.gamma = 1;
    rep.framework = false;
    rep.phase_charged.assign(1, 0);
    rep.phase_actual.assign(1, 0);
    for (const Request& r : R) {
        Cost charged = engine->serve(r);
        const ChargeRecord& rec = engine->log().back();
        rep.engine_charged = add_cost(rep.engine_charged, charged);
        rep.engine_actual = add_cost(rep.engine_actual, rec.actual);
        rep.phase_charged[0] = add_cost(rep.phase_charged[0], rec.charged);
        rep.phase_actual[0] = add_cost(rep.phase_actual[0], rec.actual);
        rep.trace.push_back(rec);
    }
    std::vector<char> edges(g.edge_count(), 0), facs(g.vertex_count(), 0);
    for (const ChargeRecord& rec : rep.trace) {
        for (EdgeId e : rec.bought_edges) edges[e] = 1;
        for (VertexId v : rec.opened_facilities) facs[v] = 1;
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (edges[e]) rep.edges_bought.push_back(e);
    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (facs[v]) rep.facilities_bought.push_back(v);
    return rep;
}

RunChecks check_run(const RunReport& rep) {
    RunChecks c;
    const int m = static_cast<int>(rep.majors.size());
    for (int k = 1; k < m; ++k)
        if (rep.majors[k].b_hat_after < 2 * rep.majors[k - 1].b_hat_after) c.doubling_ok = false;

    // phase identity: charged inside phase p (between majors p and p+1)
    // equals the B_hat difference of the enclosing majors
    for (int k = 1; k < m; ++k) {
        Cost diff = rep.majors[k].b_hat_after - rep.majors[k - 1].b_hat_after;
        if (rep.phase_charged[k] != diff) c.phase_identity_ok = false;
    }

    // telescoping, for every anchor major
    for (int a = 0; a < m; ++a) {
        // phases after anchor a occupy indices a+1 .. m
        int last_full = m - 1;  // phase between the last two majors
        Cost sum = 0;
        for (int p = a + 1; p <= last_full - 1 && p < static_cast<int>(rep.phase_charged.size()); ++p)
            sum = add_cost(sum, rep.phase_charged[p]);
        if (last_full > a && last_full < static_cast<int>(rep.phase_charged.size())) {
            if (sum > rep.phase_charged[last_full]) c.telescoping_ok = false;
        }
    }

    // cumulative partial purchases against 6*gamma*B_hat
    __int128 cum = 0;
    for (const MajorIterationRecord& mi : rep.majors) {
        cum += mi.partial_cost_full;
        if (cum > __int128(6) * rep.gamma * mi.b_hat_after) c.partial_budget_ok = false;
    }
    return c;
}

std::string run_report_to_json_text(const RunReport& rep) {
    ordered_json j;
    j["problem"] = to_string(rep.kind);
    j["framework"] = rep.framework;
    j["gamma"] = rep.gamma;
    ordered_json totals;
    totals["engine_charged"] = rep.engine_charged;
    totals["engine_actual"] = rep.engine_actual;
    totals["partial_paid"] = rep.partial_paid;
    totals["total"] = rep.total_cost();
    totals["b_hat"] = rep.b_hat;
    j["totals"] = std::move(totals);
    ordered_json phases = ordered_json::array();
    for (std::size_t p = 0; p < rep.phase_charged.size(); ++p)
        phases.push_back({{"phase", p},
                          {"charged", rep.phase_charged[p]},
                          {"actual", rep.phase_actual[p]}});
    j["phases"] = std::move(phases);
    ordered_json majors = ordered_json::array();
    for (const MajorIterationRecord& mi : rep.majors)
        majors.push_back({{"iteration", mi.iteration},
                          {"b_hat_before", mi.b_hat_before},
                          {"b_hat_after", mi.b_hat_after},
                          {"u", mi.u},
                          {"partial_cost", mi.partial_cost_full},
                          {"partial_paid", mi.partial_cost_paid},
                          {"partial_unsatisfied", mi.partial_unsatisfied},
                          {"penalty_exponent", mi.penalty_exponent},
                          {"branch", mi.chosen_branch},
                          {"restarted", mi.restarted}});
    j["major_iterations"] = std::move(majors);
    RunChecks c = check_run(rep);
    j["checks"] = {{"telescoping", c.telescoping_ok},
                   {"partial_budget", c.partial_budget_ok},
                   {"doubling", c.doubling_ok},
                   {"phase_identity", c.phase_identity_ok}};
    j["edges_bought"] = rep.edges_bought;
    j["facilities_bought"] = rep.facilities_bought;
    return j.dump(2) + "\n";
}

std::string trace_to_csv(const RunReport& rep) {
    std::ostringstream out;
    out << "arrival_index,actual_cost,charged_cost,bought\n";
    for (const ChargeRecord& rec : rep.trace) {
        out << rec.arrival_index << "," << rec.actual << "," << rec.charged << ",";
        bool first = true;
        for (EdgeId e : rec.bought_edges) {
            if (!first) out << ";";
            out << "e" << e;
            first = false;
        }
        for (VertexId v : rec.opened_facilities) {
            if (!first) out << ";";
            out << "f" << v;
            first = false;
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace netpred
