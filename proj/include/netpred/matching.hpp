#pragma once

#include <utility>
#include <vector>

#include "netpred/cost.hpp"

namespace netpred {

// Cardinality-constrained assignment: pair exactly k rows to k distinct
// columns at minimum total cost. Entries of kInfCost are forbidden pairs.
// Solved by successive shortest augmenting paths, so the reported optimum is
// exact for every prefix size in one run.
struct MatchingTable {
    // cost_for_size[k], k in [0, min(rows, cols)]; kInfCost when no finite
    // pairing of size k exists
    std::vector<Cost> cost_for_size;
    // pairing_for_size[k]: k (row, col) pairs sorted by row
    std::vector<std::vector<std::pair<int, int>>> pairing_for_size;
};

MatchingTable min_cost_matchings(const std::vector<std::vector<Cost>>& cost);

std::pair<Cost, std::vector<std::pair<int, int>>> min_cost_matching_of_size(
    const std::vector<std::vector<Cost>>& cost, int k);

// Lexicographically smallest pairing among the minimum-cost pairings of size
// k (pairs compared as sorted (row, col) lists). Exact but quadratic in the
// matrix area, so the frontier only applies it to small matrices.
std::vector<std::pair<int, int>> lex_min_cost_pairing(const std::vector<std::vector<Cost>>& cost,
                                                      int k, Cost target_cost);

}  // namespace netpred
