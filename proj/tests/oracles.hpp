// Independent oracles for cross-checking the engine. These deliberately take
// different algorithmic routes from core/ (matrix powers instead of BFS,
// queue-based BFS on adjacency lists instead of bitmask frontiers, recursive
// subset listing instead of mask walks).
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <random>
#include <vector>

#include "netforge/cost.hpp"
#include "netforge/graph.hpp"

namespace oracle {

inline constexpr int kUnreached = -1;

// Shortest-path matrix by repeated boolean matrix powers: d(i,j) is the
// smallest k with A^k(i,j) nonzero.
inline std::vector<std::vector<int>> matrix_power_distances(const netforge::UndirectedGraph& g) {
    int n = g.node_count();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, kUnreached));
    for (int i = 0; i < n; ++i) {
        dist[i][i] = 0;
        reach[i][i] = true;
        for (int j = 0; j < n; ++j) adj[i][j] = g.has_edge(i, j);
    }
    std::vector<std::vector<bool>> power = adj;
    for (int k = 1; k <= n; ++k) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (power[i][j] && dist[i][j] == kUnreached) dist[i][j] = k;
        // power = power * adj (boolean)
        std::vector<std::vector<bool>> next(n, std::vector<bool>(n, false));
        for (int i = 0; i < n; ++i)
            for (int m = 0; m < n; ++m)
                if (power[i][m])
                    for (int j = 0; j < n; ++j)
                        if (adj[m][j]) next[i][j] = true;
        power = std::move(next);
    }
    return dist;
}

// Queue-based BFS over adjacency lists.
inline std::vector<int> bfs_distances(const std::vector<std::vector<int>>& adj, int src) {
    int n = static_cast<int>(adj.size());
    std::vector<int> dist(n, kUnreached);
    dist[src] = 0;
    std::queue<int> q;
    q.push(src);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v]) {
            if (dist[w] == kUnreached) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
        }
    }
    return dist;
}

inline std::vector<std::vector<int>> adjacency_lists(const netforge::StrategyProfile& p) {
    int n = p.player_count();
    std::vector<std::vector<int>> adj(n);
    for (int i = 0; i < n; ++i) {
        for (int j : p.purchases(i)) {
            if (std::find(adj[i].begin(), adj[i].end(), j) == adj[i].end()) {
                adj[i].push_back(j);
                adj[j].push_back(i);
            }
        }
    }
    return adj;
}

// Player cost via the per-term formula; nullopt encodes disconnection.
inline std::optional<double> player_cost(const netforge::StrategyProfile& p,
                                         const std::vector<double>& alphas, int i) {
    auto adj = adjacency_lists(p);
    auto dist = bfs_distances(adj, i);
    double total = alphas[i] * static_cast<double>(p.purchases(i).size());
    for (int d : dist) {
        if (d == kUnreached) return std::nullopt;
        total += d;
    }
    return total;
}

// Recursive subset listing in lexicographic set order.
inline void list_subsets(const std::vector<int>& universe, std::size_t from,
                         std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    out.push_back(cur);
    for (std::size_t k = from; k < universe.size(); ++k) {
        cur.push_back(universe[k]);
        list_subsets(universe, k + 1, cur, out);
        cur.pop_back();
    }
}

struct BestResponseOracle {
    std::vector<int> strategy;
    std::optional<double> cost; // nullopt: every option disconnects i
};

// Exhaustive best response with the engine's tie rule (fewer purchases,
// then lexicographically smaller sorted set).
inline BestResponseOracle best_response(const netforge::StrategyProfile& p,
                                        const std::vector<double>& alphas, int i,
                                        double eps = netforge::kCostEpsilon) {
    int n = p.player_count();
    std::vector<int> universe;
    for (int j = 0; j < n; ++j)
        if (j != i) universe.push_back(j);
    std::vector<std::vector<int>> subsets;
    std::vector<int> cur;
    list_subsets(universe, 0, cur, subsets);

    auto lex_less = [](const std::vector<int>& a, const std::vector<int>& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    };

    BestResponseOracle best;
    bool first = true;
    for (const auto& s : subsets) {
        netforge::StrategyProfile q = p;
        std::uint32_t mask = 0;
        for (int j : s) mask |= 1u << j;
        q.set_purchase_mask(i, mask);
        std::optional<double> c = player_cost(q, alphas, i);
        bool better;
        if (first) {
            better = true;
        } else if (!c.has_value()) {
            better = false;
        } else if (!best.cost.has_value()) {
            better = true;
        } else if (*c < *best.cost - eps) {
            better = true;
        } else if (*c <= *best.cost + eps) {
            better = s.size() < best.strategy.size() ||
                     (s.size() == best.strategy.size() && lex_less(s, best.strategy));
        } else {
            better = false;
        }
        if (better) {
            best.strategy = s;
            best.cost = c;
            first = false;
        }
    }
    return best;
}

// Deterministic uniform alphas in [lo, hi); raw-draw scaling, no
// distribution objects.
inline std::vector<double> random_alphas(std::mt19937_64& rng, int n, double lo, double hi) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) {
        double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        v[i] = lo + (hi - lo) * u;
    }
    return v;
}

// All strategy profiles on n players, in plain counting order.
inline std::vector<netforge::StrategyProfile> all_profiles(int n) {
    std::vector<netforge::StrategyProfile> out;
    int per = 1 << (n - 1);
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(per);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        netforge::StrategyProfile p(n);
        std::uint64_t rem = idx;
        for (int i = 0; i < n; ++i) {
            std::uint32_t d = static_cast<std::uint32_t>(rem % per);
            rem /= per;
            std::uint32_t low = d & ((1u << i) - 1u);
            p.set_purchase_mask(i, low | ((d >> i) << (i + 1)));
        }
        out.push_back(std::move(p));
    }
    return out;
}

} // namespace oracle
