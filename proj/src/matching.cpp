#include "netpred/matching.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace netpred {

namespace {

// min-cost-flow node layout: 0 = source, 1..R rows, R+1..R+C cols, R+C+1 sink
struct FlowGraph {
    struct Arc {
        int to;
        int cap;
        Cost cost;
        int rev;
    };
    std::vector<std::vector<Arc>> arcs;

    explicit FlowGraph(int n) : arcs(n) {}

    void add(int from, int to, int cap, Cost cost) {
        arcs[from].push_back({to, cap, cost, static_cast<int>(arcs[to].size())});
        arcs[to].push_back({from, 0, -cost, static_cast<int>(arcs[from].size()) - 1});
    }
};

}  // namespace

MatchingTable min_cost_matchings(const std::vector<std::vector<Cost>>& cost) {
    const int rows = static_cast<int>(cost.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(cost[0].size());
    for (const auto& row : cost)
        if (static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("cost matrix must be rectangular");

    const int kmax = std::min(rows, cols);
    MatchingTable out;
    out.cost_for_size.assign(kmax + 1, kInfCost);
    out.pairing_for_size.assign(kmax + 1, {});
    out.cost_for_size[0] = 0;

    const int n = rows + cols + 2;
    const int source = 0, sink = n - 1;
    FlowGraph fg(n);
    for (int i = 0; i < rows; ++i) fg.add(source, 1 + i, 1, 0);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            if (is_inf(cost[i][j])) continue;
            if (cost[i][j] < 0) throw std::invalid_argument("matching costs must be >= 0 or inf");
            fg.add(1 + i, 1 + rows + j, 1, cost[i][j]);
        }
    for (int j = 0; j < cols; ++j) fg.add(1 + rows + j, sink, 1, 0);

    std::vector<Cost> potential(n, 0);  // all arc costs >= 0 initially
    Cost total = 0;
    for (int k = 1; k <= kmax; ++k) {
        // Dijkstra on reduced costs
        std::vector<Cost> dist(n, kInfCost);
        std::vector<int> prev_node(n, -1), prev_arc(n, -1);
        dist[source] = 0;
        using Item = std::pair<Cost, int>;
        std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
        heap.push({0, source});
        while (!heap.empty()) {
            auto [d, v] = heap.top();
            heap.pop();
            if (d != dist[v]) continue;
            for (int a = 0; a < static_cast<int>(fg.arcs[v].size()); ++a) {
                const auto& arc = fg.arcs[v][a];
                if (arc.cap <= 0 || is_inf(dist[v])) continue;
                Cost rc = arc.cost + potential[v] - potential[arc.to];
                Cost nd = dist[v] + rc;
                if (nd < dist[arc.to]) {
                    dist[arc.to] = nd;
                    prev_node[arc.to] = v;
                    prev_arc[arc.to] = a;
                    heap.push({nd, arc.to});
                }
            }
        }
        if (is_inf(dist[sink])) break;  // no further feasible sizes
        // cap at dist[sink] so stale potentials of unreachable nodes stay valid
        for (int v = 0; v < n; ++v) potential[v] += std::min(dist[v], dist[sink]);
        // augment one unit along the path
        Cost path_cost = 0;
        for (int v = sink; v != source; v = prev_node[v]) {
            auto& arc = fg.arcs[prev_node[v]][prev_arc[v]];
            arc.cap -= 1;
            fg.arcs[v][arc.rev].cap += 1;
            path_cost += arc.cost;
        }
        total += path_cost;
        out.cost_for_size[k] = total;
        // read the current pairing off the saturated row->col arcs
        std::vector<std::pair<int, int>> pairing;
        for (int i = 0; i < rows; ++i)
            for (const auto& arc : fg.arcs[1 + i])
                if (arc.to >= 1 + rows && arc.to < 1 + rows + cols && arc.cap == 0)
                    pairing.push_back({i, arc.to - 1 - rows});
        std::sort(pairing.begin(), pairing.end());
        out.pairing_for_size[k] = std::move(pairing);
    }
    return out;
}

std::pair<Cost, std::vector<std::pair<int, int>>> min_cost_matching_of_size(
    const std::vector<std::vector<Cost>>& cost, int k) {
    const int rows = static_cast<int>(cost.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(cost[0].size());
    if (k < 0 || k > std::min(rows, cols))
        throw std::invalid_argument("matching size exceeds matrix dimensions");
    MatchingTable t = min_cost_matchings(cost);
    return {t.cost_for_size[k], t.pairing_for_size[k]};
}

std::vector<std::pair<int, int>> lex_min_cost_pairing(const std::vector<std::vector<Cost>>& cost,
                                                      int k, Cost target_cost) {
    const int rows = static_cast<int>(cost.size());
    const int cols = rows == 0 ? 0 : static_cast<int>(cost[0].size());
    std::vector<std::pair<int, int>> chosen;
    std::vector<char> row_used(rows, 0), col_used(cols, 0);
    Cost spent = 0;
    int min_row = 0;

    // completion cost of size `need` using rows >= from_row that are unused
    auto completion = [&](int from_row, int need) -> Cost {
        std::vector<int> rs, cs;
        for (int i = from_row; i < rows; ++i)
            if (!row_used[i]) rs.push_back(i);
        for (int j = 0; j < cols; ++j)
            if (!col_used[j]) cs.push_back(j);
        if (need > static_cast<int>(std::min(rs.size(), cs.size()))) return kInfCost;
        if (need == 0) return 0;
        std::vector<std::vector<Cost>> sub(rs.size(), std::vector<Cost>(cs.size()));
        for (std::size_t a = 0; a < rs.size(); ++a)
            for (std::size_t b = 0; b < cs.size(); ++b) sub[a][b] = cost[rs[a]][cs[b]];
        return min_cost_matchings(sub).cost_for_size[need];
    };

    for (int slot = 0; slot < k; ++slot) {
        bool fixed = false;
        for (int i = min_row; i < rows && !fixed; ++i) {
            if (row_used[i]) continue;
            for (int j = 0; j < cols && !fixed; ++j) {
                if (col_used[j] || is_inf(cost[i][j])) continue;
                row_used[i] = 1;
                col_used[j] = 1;
                Cost rest = completion(i + 1, k - slot - 1);
                if (!is_inf(rest) && spent + cost[i][j] + rest == target_cost) {
                    chosen.push_back({i, j});
                    spent += cost[i][j];
                    min_row = i + 1;
                    fixed = true;
                } else {
                    row_used[i] = 0;
                    col_used[j] = 0;
                }
            }
        }
        if (!fixed) throw std::logic_error("lex_min_cost_pairing: target cost unreachable");
    }
    return chosen;
}

}  // namespace netpred
