#include "netforge/cost.hpp"

#include <cmath>
#include <set>
#include <string>

namespace netforge {

CostVector::CostVector(std::vector<double> alphas) : alphas_(std::move(alphas)) {
    if (alphas_.empty()) throw InvalidInputError("cost vector must have length >= 1");
    for (double a : alphas_) {
        if (!(a >= 0.0) || !std::isfinite(a))
            throw InvalidInputError("alpha values must be finite and non-negative");
    }
}

double CostVector::alpha(PlayerId i) const {
    if (i < 0 || i >= size())
        throw InvalidInputError("alpha index out of range: " + std::to_string(i));
    return alphas_[i];
}

double CostVector::min_alpha() const {
    double m = alphas_[0];
    for (double a : alphas_) m = std::min(m, a);
    return m;
}

double CostVector::max_alpha() const {
    double m = alphas_[0];
    for (double a : alphas_) m = std::max(m, a);
    return m;
}

bool CostVector::is_ascending() const {
    for (std::size_t i = 1; i < alphas_.size(); ++i)
        if (alphas_[i] < alphas_[i - 1]) return false;
    return true;
}

OwnedGraph::OwnedGraph(int n, std::vector<OwnedEdge> edges)
    : n_(n), edges_(std::move(edges)) {
    std::set<std::pair<PlayerId, PlayerId>> seen;
    for (const auto& e : edges_) {
        if (e.owner < 0 || e.other < 0 || e.owner >= n || e.other >= n)
            throw InvalidInputError("owned edge endpoint out of range");
        if (e.owner == e.other) throw InvalidInputError("owned edge is a self-loop");
        auto key = std::minmax(e.owner, e.other);
        if (!seen.insert(key).second)
            throw InvalidInputError("duplicate edge in owned graph");
    }
}

UndirectedGraph OwnedGraph::graph() const {
    std::vector<std::pair<PlayerId, PlayerId>> pairs;
    pairs.reserve(edges_.size());
    for (const auto& e : edges_) pairs.emplace_back(e.owner, e.other);
    return UndirectedGraph::from_edges(n_, pairs);
}

namespace {

void check_dims(int profile_n, int costs_n) {
    if (profile_n != costs_n)
        throw InvalidInputError("profile n=" + std::to_string(profile_n) +
                                " does not match cost vector n=" + std::to_string(costs_n));
}

} // namespace

Cost player_cost(const StrategyProfile& profile, const CostVector& costs, PlayerId i) {
    check_dims(profile.player_count(), costs.size());
    int n = profile.player_count();
    if (i < 0 || i >= n) throw InvalidInputError("player index out of range");
    UndirectedGraph g = induced_graph(profile);
    auto [sum, reached] = distance_sum_from(g.adjacency().data(), n, i);
    if (reached < n) return Cost::infinite();
    return Cost::finite(costs.alpha(i) * profile.purchase_count(i) + static_cast<double>(sum));
}

Cost social_cost_profile(const StrategyProfile& profile, const CostVector& costs) {
    check_dims(profile.player_count(), costs.size());
    int n = profile.player_count();
    UndirectedGraph g = induced_graph(profile);
    const std::uint32_t* adj = g.adjacency().data();
    double total = 0.0;
    for (int i = 0; i < n; ++i) {
        auto [sum, reached] = distance_sum_from(adj, n, i);
        if (reached < n) return Cost::infinite();
        total += costs.alpha(i) * profile.purchase_count(i) + static_cast<double>(sum);
    }
    return Cost::finite(total);
}

Cost social_cost_owned(const OwnedGraph& owned, const CostVector& costs) {
    check_dims(owned.node_count(), costs.size());
    int n = owned.node_count();
    UndirectedGraph g = owned.graph();
    const std::uint32_t* adj = g.adjacency().data();
    double total = 0.0;
    for (const auto& e : owned.owned_edges()) total += costs.alpha(e.owner);
    for (int i = 0; i < n; ++i) {
        auto [sum, reached] = distance_sum_from(adj, n, i);
        if (reached < n) return Cost::infinite();
        total += static_cast<double>(sum);
    }
    return Cost::finite(total);
}

double lower_bound_global(int n, double alpha_min, int m) {
    if (n < 1) throw InvalidInputError("n must be >= 1");
    if (m < 0 || m > n * (n - 1) / 2)
        throw InvalidInputError("edge count out of range: " + std::to_string(m));
    return 2.0 * n * (n - 1) + (alpha_min - 2.0) * m;
}

double lower_bound_case2_raw(int n, double alpha1, double alpha2, int m) {
    return alpha1 * (n - 1) + alpha2 * (m - n + 1) + 2.0 * m +
           2.0 * (static_cast<double>(n) * (n - 1) - 2.0 * m);
}

double lower_bound_case2(int n, double alpha1, double alpha2, int m) {
    if (n < 1) throw InvalidInputError("n must be >= 1");
    if (alpha1 > alpha2) throw InvalidInputError("lower_bound_case2 requires alpha1 <= alpha2");
    if (m < n - 1)
        throw InvalidInputError("lower_bound_case2 requires m >= n-1, got m=" + std::to_string(m));
    double raw = lower_bound_case2_raw(n, alpha1, alpha2, m);
    double simplified = alpha1 * (n - 1) + (alpha2 - 2.0) * m -
                        (n - 1) * (alpha2 - 2.0 * n);
    if (std::abs(raw - simplified) > 1e-6 * (1.0 + std::abs(raw)))
        throw InvalidInputError("lower_bound_case2: algebraic forms disagree");
    return raw;
}

} // namespace netforge
