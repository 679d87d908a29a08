#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "netforge/equilibrium.hpp"

namespace netforge {

inline constexpr int kDefaultOptimumCap = 7;

struct OptimumReport {
    Cost optimal_cost;
    // Every connected owned graph attaining the minimum within eps, each edge
    // billed to its cheaper endpoint (tie: smaller index). Ordered by edge mask.
    std::vector<OwnedGraph> optimal_graphs;
    std::uint64_t graphs_searched = 0;
};

// Exhaustive minimum of social_cost_owned over all 2^(n(n-1)/2) graphs,
// restricted to connected ones.
OptimumReport social_optimum(const CostVector& costs, int cap = kDefaultOptimumCap,
                             int workers = 1);

struct RatioReport {
    std::optional<double> poa; // worst NE cost / optimal cost
    std::optional<double> pos; // best NE cost / optimal cost
    bool degenerate = false;   // 0/0 reported as 1.0
    Cost worst_ne_cost;
    Cost best_ne_cost;
    Cost optimal_cost;
    std::size_t equilibrium_count = 0;
};

RatioReport price_ratios(const CostVector& costs, int enumerate_cap = kDefaultEnumerateCap,
                         int optimum_cap = kDefaultOptimumCap, int workers = 1);

// Structural predicates used by the claim verdicts.
bool is_star_graph(const UndirectedGraph& g);
bool is_complete_graph(const UndirectedGraph& g);
// Nodes 0..j-1 pairwise adjacent; nodes >= j have edges only into the clique.
bool has_clique_star_shape(const UndirectedGraph& g, int j);

bool all_minimizers_satisfy(const OptimumReport& report,
                            const std::function<bool(const UndirectedGraph&)>& pred);
bool any_minimizer_satisfies(const OptimumReport& report,
                             const std::function<bool(const UndirectedGraph&)>& pred);

} // namespace netforge
