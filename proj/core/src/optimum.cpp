#include "netforge/optimum.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <thread>

namespace netforge {

namespace {

constexpr int kScratch = 32;

// Social cost of the graph encoded by `edge_mask`, edges billed to their
// cheaper endpoint. Returns infinity (as a quiet large flag via bool) when
// disconnected.
bool owned_cost_of_mask(int n, std::uint64_t edge_mask, const double* alphas, double* out) {
    std::array<std::uint32_t, kScratch> adj{};
    double edge_cost = 0.0;
    int k = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++k) {
            if (edge_mask & (std::uint64_t{1} << k)) {
                adj[i] |= 1u << j;
                adj[j] |= 1u << i;
                edge_cost += std::min(alphas[i], alphas[j]);
            }
        }
    }
    std::int64_t dist_total = 0;
    for (int i = 0; i < n; ++i) {
        auto [sum, reached] = distance_sum_from(adj.data(), n, i);
        if (reached < n) return false;
        dist_total += sum;
    }
    *out = edge_cost + static_cast<double>(dist_total);
    return true;
}

OwnedGraph owned_graph_of_mask(int n, std::uint64_t edge_mask, const double* alphas) {
    std::vector<OwnedEdge> edges;
    int k = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++k) {
            if (edge_mask & (std::uint64_t{1} << k)) {
                // cheaper endpoint pays; tie goes to the smaller index
                if (alphas[j] < alphas[i])
                    edges.push_back({j, i});
                else
                    edges.push_back({i, j});
            }
        }
    }
    return OwnedGraph(n, std::move(edges));
}

} // namespace

OptimumReport social_optimum(const CostVector& costs, int cap, int workers) {
    int n = costs.size();
    if (n > cap)
        throw CapacityError("n=" + std::to_string(n) + " exceeds optimum cap " +
                            std::to_string(cap));
    if (workers < 1) throw InvalidInputError("workers must be >= 1");

    const int m_all = n * (n - 1) / 2;
    const std::uint64_t total = std::uint64_t{1} << m_all;
    const double* alphas = costs.values().data();

    // pass 1: minimum over connected graphs
    std::vector<double> local_min(static_cast<std::size_t>(workers),
                                  std::numeric_limits<double>::infinity());
    auto scan_min = [&](int w) {
        std::uint64_t begin = total * w / workers;
        std::uint64_t end = total * (w + 1) / workers;
        double best = std::numeric_limits<double>::infinity();
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            double c;
            if (owned_cost_of_mask(n, mask, alphas, &c) && c < best) best = c;
        }
        local_min[w] = best;
    };
    if (workers == 1) {
        scan_min(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(scan_min, w);
        for (auto& t : pool) t.join();
    }
    double best = *std::min_element(local_min.begin(), local_min.end());

    OptimumReport report;
    report.graphs_searched = total;
    if (!std::isfinite(best)) {
        // unreachable for n >= 1 with finite alphas (the complete graph is
        // always connected), but keep the report well-formed
        report.optimal_cost = Cost::infinite();
        return report;
    }
    report.optimal_cost = Cost::finite(best);

    // pass 2: collect all minimizers within eps, ordered by edge mask
    std::vector<std::vector<std::uint64_t>> hits(static_cast<std::size_t>(workers));
    auto scan_collect = [&](int w) {
        std::uint64_t begin = total * w / workers;
        std::uint64_t end = total * (w + 1) / workers;
        for (std::uint64_t mask = begin; mask < end; ++mask) {
            double c;
            if (owned_cost_of_mask(n, mask, alphas, &c) && c <= best + kCostEpsilon)
                hits[w].push_back(mask);
        }
    };
    if (workers == 1) {
        scan_collect(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(scan_collect, w);
        for (auto& t : pool) t.join();
    }
    for (const auto& chunk : hits)
        for (std::uint64_t mask : chunk)
            report.optimal_graphs.push_back(owned_graph_of_mask(n, mask, alphas));
    return report;
}

RatioReport price_ratios(const CostVector& costs, int enumerate_cap, int optimum_cap,
                         int workers) {
    RatioReport report;
    OptimumReport opt = social_optimum(costs, optimum_cap, workers);
    report.optimal_cost = opt.optimal_cost;

    std::vector<StrategyProfile> equilibria = enumerate_nash(costs, enumerate_cap, workers);
    report.equilibrium_count = equilibria.size();
    if (equilibria.empty()) return report; // poa/pos undefined

    Cost worst = social_cost_profile(equilibria.front(), costs);
    Cost best = worst;
    for (std::size_t k = 1; k < equilibria.size(); ++k) {
        Cost c = social_cost_profile(equilibria[k], costs);
        if (worst < c) worst = c;
        if (c < best) best = c;
    }
    report.worst_ne_cost = worst;
    report.best_ne_cost = best;

    if (opt.optimal_cost.is_infinite()) return report;
    double denom = opt.optimal_cost.value();
    if (denom <= kCostEpsilon) {
        // n=1 style degenerate game: 0/0 reported as 1.0
        report.degenerate = true;
        report.poa = 1.0;
        report.pos = 1.0;
        return report;
    }
    if (!worst.is_infinite()) report.poa = worst.value() / denom;
    if (!best.is_infinite()) report.pos = best.value() / denom;
    return report;
}

bool is_star_graph(const UndirectedGraph& g) {
    int n = g.node_count();
    if (n <= 2) return g.edge_count() == n - 1;
    if (g.edge_count() != n - 1) return false;
    int center_count = 0;
    int leaf_count = 0;
    for (int i = 0; i < n; ++i) {
        if (g.degree(i) == n - 1) ++center_count;
        if (g.degree(i) == 1) ++leaf_count;
    }
    return center_count == 1 && leaf_count == n - 1;
}

bool is_complete_graph(const UndirectedGraph& g) {
    int n = g.node_count();
    return g.edge_count() == n * (n - 1) / 2;
}

bool has_clique_star_shape(const UndirectedGraph& g, int j) {
    int n = g.node_count();
    if (j < 0 || j > n) return false;
    for (int a = 0; a < j; ++a)
        for (int b = a + 1; b < j; ++b)
            if (!g.has_edge(a, b)) return false;
    for (int u = j; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (g.has_edge(u, v)) return false;
    return true;
}

bool all_minimizers_satisfy(const OptimumReport& report,
                            const std::function<bool(const UndirectedGraph&)>& pred) {
    for (const auto& og : report.optimal_graphs)
        if (!pred(og.graph())) return false;
    return true;
}

bool any_minimizer_satisfies(const OptimumReport& report,
                             const std::function<bool(const UndirectedGraph&)>& pred) {
    for (const auto& og : report.optimal_graphs)
        if (pred(og.graph())) return true;
    return false;
}

} // namespace netforge
