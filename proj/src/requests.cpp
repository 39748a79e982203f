#include "netpred/requests.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace netpred {

using ordered_json = nlohmann::ordered_json;

std::string to_string(ProblemKind k) {
    switch (k) {
        case ProblemKind::steiner_tree: return "steiner-tree";
        case ProblemKind::steiner_forest: return "steiner-forest";
        case ProblemKind::facility_location: return "facility-location";
    }
    return "?";
}

ProblemKind problem_kind_from_string(const std::string& s) {
    if (s == "steiner-tree" || s == "st") return ProblemKind::steiner_tree;
    if (s == "steiner-forest" || s == "sf") return ProblemKind::steiner_forest;
    if (s == "facility-location" || s == "fl") return ProblemKind::facility_location;
    throw std::invalid_argument("unknown problem kind: " + s);
}

std::string requests_to_json_text(const RequestSequence& reqs) {
    ordered_json arr = ordered_json::array();
    for (const Request& r : reqs) {
        ordered_json item;
        switch (r.kind) {
            case ProblemKind::steiner_tree:
                item["kind"] = "terminal";
                item["v"] = r.a;
                break;
            case ProblemKind::steiner_forest:
                item["kind"] = "pair";
                item["s"] = r.a;
                item["t"] = r.b;
                item["priority"] = r.priority;
                break;
            case ProblemKind::facility_location:
                item["kind"] = "client";
                item["v"] = r.a;
                break;
        }
        arr.push_back(std::move(item));
    }
    return arr.dump(2) + "\n";
}

RequestSequence requests_from_json_text(const std::string& text) {
    ordered_json arr;
    try {
        arr = ordered_json::parse(text);
    } catch (const std::exception& ex) {
        throw std::invalid_argument(std::string("request file parse error: ") + ex.what());
    }
    if (!arr.is_array()) throw std::invalid_argument("request file must be a JSON array");
    RequestSequence out;
    int idx = 0;
    for (const auto& item : arr) {
        std::string kind = item.at("kind").get<std::string>();
        Request r;
        if (kind == "terminal") {
            r = Request::terminal(item.at("v").get<VertexId>());
        } else if (kind == "pair") {
            r = Request::pair(item.at("s").get<VertexId>(), item.at("t").get<VertexId>(),
                              item.value("priority", 1));
        } else if (kind == "client") {
            r = Request::client(item.at("v").get<VertexId>());
        } else {
            throw std::invalid_argument("unknown request kind: " + kind);
        }
        r.arrival_index = idx++;
        out.push_back(r);
    }
    return out;
}

RequestSequence load_requests_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open request file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return requests_from_json_text(ss.str());
}

void save_requests_file(const std::string& path, const RequestSequence& reqs) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::invalid_argument("cannot write request file: " + path);
    out << requests_to_json_text(reqs);
}

void validate_requests(const WeightedGraph& g, const RequestSequence& reqs, ProblemKind kind) {
    for (const Request& r : reqs) {
        if (r.kind != kind) throw std::invalid_argument("request kind does not match the run's problem");
        if (r.a < 0 || r.a >= g.vertex_count() || r.b < 0 || r.b >= g.vertex_count())
            throw std::invalid_argument("request vertex out of range");
        if (r.priority < 1 || r.priority > g.max_priority())
            throw std::invalid_argument("request priority out of range");
    }
}

}  // namespace netpred
