#pragma once

#include <cstdint>

#include "netpred/graph.hpp"
#include "netpred/requests.hpp"

namespace netpred {

struct Perturbation {
    double drop_rate = 0.0;
    double add_rate = 0.0;
    Cost displacement_radius = 0;
    std::uint64_t seed = 0;
};

// Derive a prediction set from a request sequence: drop some requests, add
// spurious ones, and relocate survivors within graph distance at most the
// displacement radius (per endpoint, for pairs). Seeded and reproducible.
PredictionSet perturb_requests(const WeightedGraph& g, const RequestSequence& reqs,
                               const Perturbation& p);

}  // namespace netpred
