#pragma once

#include <cstdint>
#include <string>

#include "netpred/graph.hpp"
#include "netpred/requests.hpp"

namespace netpred {

// Deterministic RNG helpers. Modulo draws keep the streams reproducible and
// independent of library distribution internals.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ? seed : 0x9e3779b97f4a7c15ull) {}
    std::uint64_t next() {
        // splitmix64
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    int uniform(int lo, int hi) {  // inclusive bounds
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
    bool chance(double p) { return double(next() % (1ull << 53)) / double(1ull << 53) < p; }

  private:
    std::uint64_t state_;
};

struct GeneratedInstance {
    WeightedGraph graph;
    RequestSequence requests;
    VertexId root = 0;
    ProblemKind kind = ProblemKind::steiner_tree;
};

// geometric-like random connected graph with uniform random requests
GeneratedInstance gen_random(ProblemKind kind, int vertices, int requests, std::uint64_t seed);

// tiny random instances inside every oracle budget, for the invariant suites
GeneratedInstance gen_small_random(ProblemKind kind, std::uint64_t seed);

GeneratedInstance gen_star(int spokes, ProblemKind kind);
GeneratedInstance gen_path(int length, ProblemKind kind);

// unit-spoked path with terminals requested in bisection order: the greedy
// engine degrades with |R| while good predictions keep the ratio flat
GeneratedInstance gen_star_composite(int requests);

}  // namespace netpred
