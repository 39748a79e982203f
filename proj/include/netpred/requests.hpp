#pragma once

#include <string>
#include <vector>

#include "netpred/graph.hpp"

namespace netpred {

enum class ProblemKind { steiner_tree, steiner_forest, facility_location };

std::string to_string(ProblemKind k);
ProblemKind problem_kind_from_string(const std::string& s);

// Problem-tagged demand. Terminal and client requests use vertex a; terminal
// pairs use (a, b) plus a priority class. Duplicates are distinct matchable
// items (multiset semantics).
struct Request {
    ProblemKind kind = ProblemKind::steiner_tree;
    VertexId a = 0;
    VertexId b = 0;
    int priority = 1;
    int arrival_index = -1;

    static Request terminal(VertexId v) { return Request{ProblemKind::steiner_tree, v, v, 1, -1}; }
    static Request pair(VertexId s, VertexId t, int priority = 1) {
        return Request{ProblemKind::steiner_forest, s, t, priority, -1};
    }
    static Request client(VertexId v) {
        return Request{ProblemKind::facility_location, v, v, 1, -1};
    }
};

using RequestSequence = std::vector<Request>;
using PredictionSet = std::vector<Request>;

// arrival order = array order; arrival_index is assigned on load
RequestSequence load_requests_file(const std::string& path);
void save_requests_file(const std::string& path, const RequestSequence& reqs);
RequestSequence requests_from_json_text(const std::string& text);
std::string requests_to_json_text(const RequestSequence& reqs);

void validate_requests(const WeightedGraph& g, const RequestSequence& reqs, ProblemKind kind);

}  // namespace netpred
