#include <chrono>
#include <filesystem>
#include <iostream>
#include <optional>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "netpred/adversaries.hpp"
#include "netpred/error_model.hpp"
#include "netpred/framework.hpp"
#include "netpred/generators.hpp"
#include "netpred/oracles.hpp"
#include "netpred/perturb.hpp"
#include "netpred/reductions.hpp"
#include "netpred/report.hpp"
#include "netpred/verify.hpp"

namespace fs = std::filesystem;
using namespace netpred;
using ordered_json = nlohmann::ordered_json;

namespace {

int worker_count() {
    const char* env = std::getenv("NETPRED_WORKERS");
    if (!env) return 1;
    int n = std::atoi(env);
    return n < 1 ? 1 : n;
}

void write_meta(const fs::path& dir) {
    // timestamps live only here so runs stay byte-reproducible elsewhere
    auto now = std::chrono::system_clock::now().time_since_epoch();
    write_text_file((dir / "meta.txt").string(),
                    "wall_clock_ns=" + std::to_string(now.count()) + "\n");
}

struct RunInputs {
    WeightedGraph graph;
    RequestSequence requests;
    PredictionSet predictions;
};

ordered_json adversary_json(const std::string& family, const ordered_json& params) {
    ordered_json j;
    j["family"] = family;
    j["params"] = params;
    return j;
}

// single episode: run the configured algorithms, write reports
void run_episode(const fs::path& dir, const WeightedGraph& g, const RequestSequence& R,
                 const PredictionSet& rhat, const FrameworkConfig& cfg, const std::string& algo,
                 ProblemKind kind) {
    fs::create_directories(dir);
    bool any_opt = false;
    Cost opt = kInfCost;
    try {
        opt = exact_opt(g, R, kind, cfg.root);
        any_opt = !is_inf(opt);
    } catch (const OracleRefusal&) {
    }

    auto emit = [&](const RunReport& rep, const std::string& name) {
        ordered_json j = ordered_json::parse(run_report_to_json_text(rep));
        if (any_opt) {
            j["opt"] = opt;
            if (opt > 0) j["ratio"] = double(rep.total_cost()) / double(opt);
        }
        ParetoFrontier f = pareto_frontier(R, rhat, g, kind);
        if (!f.points.empty()) {
            j["error_delta"] = f.points.front().delta;
            j["error_d"] = f.points.front().min_matching_cost;
        }
        write_text_file((dir / (name + "_report.json")).string(), j.dump(2) + "\n");
        write_text_file((dir / (name + "_trace.csv")).string(), trace_to_csv(rep));
        write_text_file((dir / "frontier.csv").string(), frontier_to_csv(f));
    };

    if (algo == "framework" || algo == "both")
        emit(run_with_predictions(g, R, rhat, cfg), "framework");
    if (algo == "engine" || algo == "both") emit(run_engine_only(g, R, cfg), "engine");
    write_meta(dir);
}

int cmd_gen(const std::string& family, ProblemKind kind, int vertices, int requests, int spokes,
            int length, int depth, int m, int n, int k, int d1, int d2,
            const std::string& variant, std::uint64_t seed, const std::string& out) {
    fs::create_directories(out);
    fs::path dir(out);
    if (family == "random") {
        GeneratedInstance gi = gen_random(kind, vertices, requests, seed);
        gi.graph.save_file((dir / "instance.json").string());
        save_requests_file((dir / "requests.json").string(), gi.requests);
    } else if (family == "star") {
        GeneratedInstance gi = gen_star(spokes, kind);
        gi.graph.save_file((dir / "instance.json").string());
        save_requests_file((dir / "requests.json").string(), gi.requests);
    } else if (family == "path") {
        GeneratedInstance gi = gen_path(length, kind);
        gi.graph.save_file((dir / "instance.json").string());
        save_requests_file((dir / "requests.json").string(), gi.requests);
    } else if (family == "star-composite") {
        GeneratedInstance gi = gen_star_composite(requests);
        gi.graph.save_file((dir / "instance.json").string());
        save_requests_file((dir / "requests.json").string(), gi.requests);
    } else if (family == "diamond") {
        DiamondInstance di = build_diamond(depth);
        di.graph.save_file((dir / "instance.json").string());
        ordered_json p;
        p["depth"] = depth;
        write_text_file((dir / "adversary.json").string(),
                        adversary_json("diamond", p).dump(2) + "\n");
    } else if (family == "fotakis") {
        FotakisLbInstance fi = build_fotakis_lb(m);
        fi.graph.save_file((dir / "instance.json").string());
        ordered_json p;
        p["m"] = m;
        write_text_file((dir / "adversary.json").string(),
                        adversary_json("fotakis", p).dump(2) + "\n");
    } else if (family == "matching") {
        MatchingLbTranscript t = matching_lb_run(k);
        t.graph.save_file((dir / "instance.json").string());
        ordered_json p;
        p["k"] = k;
        write_text_file((dir / "adversary.json").string(),
                        adversary_json("matching", p).dump(2) + "\n");
    } else if (family == "nk-delta") {
        NkVariant v = variant == "delta1" ? NkVariant::delta1 : NkVariant::delta2;
        NkDeltaInstance inst = nk_delta_adversary(n, k, d1, d2, kind, v);
        inst.graph.save_file((dir / "instance.json").string());
        save_requests_file((dir / "predictions.json").string(), inst.predictions);
        ordered_json p;
        p["n"] = n;
        p["k"] = k;
        p["d1"] = d1;
        p["d2"] = d2;
        p["variant"] = variant;
        p["problem"] = to_string(kind);
        write_text_file((dir / "adversary.json").string(),
                        adversary_json("nk-delta", p).dump(2) + "\n");
    } else {
        std::cerr << "unknown family: " << family << "\n";
        return 2;
    }
    write_meta(dir);
    return 0;
}

int cmd_run_adversary(const std::string& adversary_file, const std::string& algo,
                      const FrameworkConfig& base_cfg, const std::string& out) {
    ordered_json adv = ordered_json::parse(read_text_file(adversary_file));
    std::string family = adv.at("family").get<std::string>();
    const ordered_json& p = adv.at("params");
    fs::path dir(out);
    fs::create_directories(dir);

    RequestSequence played;
    std::vector<Cost> step_costs;
    ordered_json result;
    result["family"] = family;
    result["algorithm"] = algo;

    auto track = [&](AlgorithmUnderTest inner) {
        AlgorithmUnderTest wrapped = inner;
        wrapped.serve = [&, inner](const Request& r) {
            Cost c = inner.serve(r);
            played.push_back(r);
            step_costs.push_back(c);
            return c;
        };
        return wrapped;
    };

    if (family == "diamond") {
        DiamondInstance inst = build_diamond(p.at("depth").get<int>());
        SteinerTreeGreedyEngine eng(inst.graph, ZeroCostOverlay(inst.graph), inst.root);
        std::optional<FrameworkRunner> runner;
        DiamondTranscript t;
        if (algo == "framework") {
            FrameworkConfig cfg = base_cfg;
            cfg.kind = ProblemKind::steiner_tree;
            cfg.root = inst.root;
            runner.emplace(inst.graph, PredictionSet{}, cfg);
            t = diamond_adversary(inst, track(adapt(*runner)));
        } else {
            t = diamond_adversary(inst, track(adapt(eng)));
        }
        result["alg_cost"] = t.alg_cost;
        result["opt_cost"] = t.opt_cost;
        result["ratio"] = t.ratio;
    } else if (family == "fotakis") {
        FotakisLbInstance inst = build_fotakis_lb(p.at("m").get<int>());
        FotakisEngine eng(inst.graph, ZeroCostOverlay(inst.graph));
        FotakisLbTranscript t = fotakis_lb_run(inst, eng);
        played = t.requests;
        for (const ChargeRecord& rec : t.trace) step_costs.push_back(rec.actual);
        result["actual_total"] = t.actual_total;
        result["alpha_total"] = t.alpha_total;
        result["facility_per_phase"] = t.facility_per_phase;
    } else if (family == "matching") {
        MatchingLbTranscript t = matching_lb_run(p.at("k").get<int>());
        played = t.reds;
        std::vector<std::string> actions;
        for (auto [red, blue] : t.matches) {
            step_costs.push_back(2);
            actions.push_back("match v" + std::to_string(blue));
        }
        write_text_file((fs::path(out) / "transcript.csv").string(),
                        transcript_to_csv(played, step_costs, actions));
        result["alg_cost"] = t.alg_cost;
        result["opt_cost"] = t.opt_cost;
        write_text_file((fs::path(out) / "adversary_result.json").string(), result.dump(2) + "\n");
        write_meta(dir);
        return 0;
    } else if (family == "nk-delta") {
        ProblemKind kind = problem_kind_from_string(p.at("problem").get<std::string>());
        NkVariant v = p.at("variant").get<std::string>() == "delta1" ? NkVariant::delta1
                                                                     : NkVariant::delta2;
        NkDeltaInstance inst = nk_delta_adversary(p.at("n").get<int>(), p.at("k").get<int>(),
                                                  p.at("d1").get<int>(), p.at("d2").get<int>(),
                                                  kind, v);
        NkDeltaTranscript t;
        if (algo == "framework") {
            FrameworkConfig cfg = base_cfg;
            cfg.kind = kind;
            cfg.root = inst.root;
            FrameworkRunner runner(inst.graph, inst.predictions, cfg);
            t = play_nk_delta(inst, track(adapt(runner)));
        } else if (kind == ProblemKind::facility_location) {
            FotakisEngine eng(inst.graph, ZeroCostOverlay(inst.graph));
            t = play_nk_delta(inst, track(adapt(eng)));
        } else {
            SteinerTreeGreedyEngine eng(inst.graph, ZeroCostOverlay(inst.graph), inst.root);
            t = play_nk_delta(inst, track(adapt(eng)));
        }
        result["alg_cost"] = t.alg_cost;
        result["opt_core_bound"] = t.opt_cost;
    } else {
        std::cerr << "unknown adversary family: " << family << "\n";
        return 2;
    }

    write_text_file((dir / "transcript.csv").string(), transcript_to_csv(played, step_costs));
    write_text_file((dir / "adversary_result.json").string(), result.dump(2) + "\n");
    write_meta(dir);
    return 0;
}

int cmd_report(const std::string& run_dir, const std::string& out) {
    fs::create_directories(out);
    struct Row {
        std::string path;
        std::string problem;
        bool framework = false;
        long long total = 0;
        double ratio = -1;
        long long delta = -1;
        long long d = -1;
    };
    std::vector<Row> rows;
    std::vector<fs::path> reports;
    for (const auto& entry : fs::recursive_directory_iterator(run_dir))
        if (entry.is_regular_file() && entry.path().filename().string().ends_with("report.json"))
            reports.push_back(entry.path());
    std::sort(reports.begin(), reports.end());
    for (const fs::path& path : reports) {
        ordered_json j = ordered_json::parse(read_text_file(path.string()));
        Row r;
        r.path = path.lexically_relative(run_dir).string();
        r.problem = j.value("problem", "?");
        r.framework = j.value("framework", false);
        r.total = j["totals"].value("total", 0LL);
        if (j.contains("ratio")) r.ratio = j["ratio"].get<double>();
        if (j.contains("error_delta")) r.delta = j["error_delta"].get<long long>();
        if (j.contains("error_d")) r.d = j["error_d"].get<long long>();
        rows.push_back(r);
    }

    std::ostringstream csv;
    csv << "run,problem,algorithm,total,ratio,delta,D\n";
    for (const Row& r : rows) {
        csv << r.path << "," << r.problem << "," << (r.framework ? "framework" : "engine") << ","
            << r.total << ",";
        if (r.ratio >= 0) csv << r.ratio;
        csv << ",";
        if (r.delta >= 0) csv << r.delta;
        csv << ",";
        if (r.d >= 0) csv << r.d;
        csv << "\n";
    }
    write_text_file((fs::path(out) / "aggregate.csv").string(), csv.str());

    // ratio vs delta at the smallest observed D, ratio vs D at the smallest
    // observed delta, and the first run's frontier scatter
    long long min_d = -1, min_delta = -1;
    for (const Row& r : rows) {
        if (r.ratio < 0) continue;
        if (r.d >= 0 && (min_d < 0 || r.d < min_d)) min_d = r.d;
        if (r.delta >= 0 && (min_delta < 0 || r.delta < min_delta)) min_delta = r.delta;
    }
    PlotSeries s1{"framework", {}, false}, s1e{"engine", {}, false};
    PlotSeries s2{"framework", {}, false}, s2e{"engine", {}, false};
    for (const Row& r : rows) {
        if (r.ratio < 0) continue;
        if (r.d == min_d && r.delta >= 0)
            (r.framework ? s1 : s1e).points.push_back({double(r.delta), r.ratio});
        if (r.delta == min_delta && r.d >= 0)
            (r.framework ? s2 : s2e).points.push_back({double(r.d), r.ratio});
    }
    write_text_file((fs::path(out) / "ratio_vs_delta.svg").string(),
                    render_svg_plot("ratio vs delta (fixed D)", "delta", "ALG/OPT", {s1, s1e}));
    write_text_file((fs::path(out) / "ratio_vs_d.svg").string(),
                    render_svg_plot("ratio vs D (fixed delta)", "D", "ALG/OPT", {s2, s2e}));

    PlotSeries frontier{"frontier", {}, true};
    for (const auto& entry : fs::recursive_directory_iterator(run_dir))
        if (entry.path().filename() == "frontier.csv") {
            std::istringstream in(read_text_file(entry.path().string()));
            std::string line;
            std::getline(in, line);  // header
            while (std::getline(in, line)) {
                auto c1 = line.find(','), c2 = line.find(',', c1 + 1);
                frontier.points.push_back(
                    {std::stod(line.substr(0, c1)), std::stod(line.substr(c1 + 1, c2 - c1 - 1))});
            }
            break;
        }
    write_text_file((fs::path(out) / "frontier.svg").string(),
                    render_svg_plot("error Pareto frontier", "delta", "D", {frontier}));
    write_meta(out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"online network design with predictions: experiment harness"};
    app.require_subcommand(1);

    // gen
    auto* gen = app.add_subcommand("gen", "generate instance families");
    std::string family = "random", problem = "steiner-tree", variant = "delta2", out = "out";
    int vertices = 24, requests = 8, spokes = 4, length = 8, depth = 2, m = 2;
    int n = 8, k = 6, d1 = 4, d2 = 2;
    std::uint64_t seed = 1;
    gen->add_option("--family", family,
                    "random|star|path|star-composite|diamond|fotakis|nk-delta|matching");
    gen->add_option("--problem", problem, "steiner-tree|steiner-forest|facility-location");
    gen->add_option("--vertices", vertices);
    gen->add_option("--requests", requests);
    gen->add_option("--spokes", spokes);
    gen->add_option("--length", length);
    gen->add_option("--depth", depth);
    gen->add_option("--m", m);
    gen->add_option("--n", n);
    gen->add_option("--k", k);
    gen->add_option("--d1", d1);
    gen->add_option("--d2", d2);
    gen->add_option("--variant", variant, "delta2|delta1");
    gen->add_option("--seed", seed);
    gen->add_option("--out", out)->required();

    // perturb
    auto* perturb = app.add_subcommand("perturb", "derive a prediction file from requests");
    std::string p_instance, p_requests, p_out;
    double drop = 0, add = 0;
    long long displace = 0;
    std::uint64_t p_seed = 1;
    perturb->add_option("--instance", p_instance)->required();
    perturb->add_option("--requests", p_requests)->required();
    perturb->add_option("--drop", drop);
    perturb->add_option("--add", add);
    perturb->add_option("--displace", displace);
    perturb->add_option("--seed", p_seed);
    perturb->add_option("--out", p_out)->required();

    // run
    auto* run = app.add_subcommand("run", "run engine/framework episodes");
    std::string r_instance, r_requests, r_predictions, r_adversary, r_out = "runs";
    std::string algo = "both", pc_name = "primal-dual", r_problem = "steiner-tree";
    int reps = 1, root = 0;
    std::int64_t gamma_flag = 0;
    double r_drop = 0, r_add = 0;
    long long r_displace = 0;
    std::uint64_t r_seed = 1;
    run->add_option("--instance", r_instance);
    run->add_option("--requests", r_requests);
    run->add_option("--predictions", r_predictions);
    run->add_option("--adversary", r_adversary);
    run->add_option("--problem", r_problem);
    run->add_option("--algo", algo, "engine|framework|both");
    run->add_option("--pc", pc_name, "primal-dual|exact");
    run->add_option("--gamma", gamma_flag, "override the declared approximation factor");
    run->add_option("--root", root);
    int priority_classes = 1;
    run->add_option("--priority-classes", priority_classes,
                    "steiner-forest only: run b parallel priority instances");
    run->add_option("--reps", reps);
    run->add_option("--seed", r_seed);
    run->add_option("--drop", r_drop, "per-rep perturbation: drop rate");
    run->add_option("--add", r_add, "per-rep perturbation: add rate");
    run->add_option("--displace", r_displace, "per-rep perturbation: displacement radius");
    run->add_option("--out", r_out);

    // error
    auto* err = app.add_subcommand("error", "compute the (delta, D) Pareto frontier");
    std::string e_instance, e_requests, e_predictions, e_problem = "steiner-tree", e_out;
    err->add_option("--instance", e_instance)->required();
    err->add_option("--requests", e_requests)->required();
    err->add_option("--predictions", e_predictions)->required();
    err->add_option("--problem", e_problem);
    err->add_option("--out", e_out)->required();

    // verify
    auto* verify = app.add_subcommand("verify", "run invariant suites");
    std::string suite = "all";
    verify->add_option("--suite", suite);

    // report
    auto* report = app.add_subcommand("report", "aggregate run outputs into CSV and plots");
    std::string rep_dir, rep_out = "report";
    report->add_option("--dir", rep_dir)->required();
    report->add_option("--out", rep_out);

    CLI11_PARSE(app, argc, argv);

    try {
        if (gen->parsed())
            return cmd_gen(family, problem_kind_from_string(problem), vertices, requests, spokes,
                           length, depth, m, n, k, d1, d2, variant, seed, out);

        if (perturb->parsed()) {
            WeightedGraph g = WeightedGraph::load_file(p_instance);
            RequestSequence reqs = load_requests_file(p_requests);
            Perturbation pert;
            pert.drop_rate = drop;
            pert.add_rate = add;
            pert.displacement_radius = displace;
            pert.seed = p_seed;
            save_requests_file(p_out, perturb_requests(g, reqs, pert));
            return 0;
        }

        if (run->parsed()) {
            FrameworkConfig cfg;
            cfg.kind = problem_kind_from_string(r_problem);
            cfg.root = root;
            cfg.pc_solver = pc_name;
            if (gamma_flag > 0) cfg.gamma_override = gamma_flag;
            if (!r_adversary.empty()) return cmd_run_adversary(r_adversary, algo, cfg, r_out);

            WeightedGraph g = WeightedGraph::load_file(r_instance);
            RequestSequence reqs = load_requests_file(r_requests);
            PredictionSet preds;
            if (!r_predictions.empty()) preds = load_requests_file(r_predictions);

            if (priority_classes > 1) {
                if (cfg.kind != ProblemKind::steiner_forest) {
                    std::cerr << "error: --priority-classes needs --problem steiner-forest\n";
                    return 2;
                }
                PriorityRunReport pr = priority_run(g, reqs, preds, priority_classes, cfg);
                fs::create_directories(r_out);
                write_text_file((fs::path(r_out) / "merged_report.json").string(),
                                priority_report_to_json_text(pr));
                write_meta(r_out);
                return 0;
            }

            std::vector<std::thread> pool;
            int workers = worker_count();
            std::atomic<int> next{0};
            auto work = [&]() {
                for (int i = next.fetch_add(1); i < reps; i = next.fetch_add(1)) {
                    PredictionSet p = preds;
                    if (r_predictions.empty() && (r_drop > 0 || r_add > 0 || r_displace > 0)) {
                        Perturbation pert;
                        pert.drop_rate = r_drop;
                        pert.add_rate = r_add;
                        pert.displacement_radius = r_displace;
                        pert.seed = r_seed + std::uint64_t(i);
                        p = perturb_requests(g, reqs, pert);
                    }
                    fs::path dir = reps == 1 ? fs::path(r_out)
                                             : fs::path(r_out) / ("rep_" + std::to_string(i));
                    run_episode(dir, g, reqs, p, cfg, algo, cfg.kind);
                }
            };
            for (int w = 0; w < workers; ++w) pool.emplace_back(work);
            for (auto& th : pool) th.join();
            return 0;
        }

        if (err->parsed()) {
            WeightedGraph g = WeightedGraph::load_file(e_instance);
            RequestSequence reqs = load_requests_file(e_requests);
            PredictionSet preds = load_requests_file(e_predictions);
            ParetoFrontier f = pareto_frontier(reqs, preds, g, problem_kind_from_string(e_problem));
            write_text_file(e_out, frontier_to_csv(f));
            return 0;
        }

        if (verify->parsed()) return run_verify(suite, std::cout) == 0 ? 0 : 1;

        if (report->parsed()) return cmd_report(rep_dir, rep_out);
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
