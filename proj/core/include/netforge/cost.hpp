#pragma once

#include <vector>

#include "netforge/graph.hpp"

namespace netforge {

// Tolerance for every "strictly better" / optimality comparison on finite
// costs.
inline constexpr double kCostEpsilon = 1e-9;

// Non-negative real cost, or infinite (disconnection).
class Cost {
public:
    constexpr Cost() : value_(0.0), infinite_(false) {}

    static constexpr Cost infinite() {
        Cost c;
        c.infinite_ = true;
        return c;
    }
    static Cost finite(double v) {
        if (v < 0.0) throw InvalidInputError("negative cost");
        Cost c;
        c.value_ = v;
        return c;
    }

    bool is_infinite() const { return infinite_; }
    double value() const {
        if (infinite_) throw InvalidInputError("Cost::value on infinite cost");
        return value_;
    }

    Cost operator+(const Cost& other) const {
        if (infinite_ || other.infinite_) return infinite();
        return finite(value_ + other.value_);
    }

    // a is strictly better than b: a < b - eps. Infinite is worse than any
    // finite cost; two infinite costs never improve on each other.
    static bool strictly_less(const Cost& a, const Cost& b, double eps = kCostEpsilon) {
        if (a.infinite_) return false;
        if (b.infinite_) return true;
        return a.value_ < b.value_ - eps;
    }

    static bool approx_equal(const Cost& a, const Cost& b, double eps = kCostEpsilon) {
        if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
        double d = a.value_ - b.value_;
        return d <= eps && d >= -eps;
    }

    // Total order with infinite greatest; exact on finite values (no eps).
    bool operator<(const Cost& o) const {
        if (infinite_) return false;
        if (o.infinite_) return true;
        return value_ < o.value_;
    }
    bool operator==(const Cost&) const = default;

private:
    double value_;
    bool infinite_;
};

// Per-player link prices alpha_0..alpha_{n-1}. Unsorted input is legal;
// claim verifiers demand ascending order and reject otherwise.
class CostVector {
public:
    explicit CostVector(std::vector<double> alphas);

    int size() const { return static_cast<int>(alphas_.size()); }
    double alpha(PlayerId i) const;
    double min_alpha() const;
    double max_alpha() const;
    bool is_ascending() const;
    const std::vector<double>& values() const { return alphas_; }

    bool operator==(const CostVector&) const = default;

private:
    std::vector<double> alphas_;
};

struct OwnedEdge {
    PlayerId owner;
    PlayerId other;
    bool operator==(const OwnedEdge&) const = default;
};

// Undirected edge set where each edge is billed to exactly one endpoint.
class OwnedGraph {
public:
    OwnedGraph(int n, std::vector<OwnedEdge> edges);

    int node_count() const { return n_; }
    const std::vector<OwnedEdge>& owned_edges() const { return edges_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    UndirectedGraph graph() const;

    bool operator==(const OwnedGraph&) const = default;

private:
    int n_;
    std::vector<OwnedEdge> edges_;
};

// alpha_i * |s_i| + sum_j d(i,j); infinite if any node is unreachable from i.
Cost player_cost(const StrategyProfile& profile, const CostVector& costs, PlayerId i);

// Sum of all player costs (both sides of a mutual purchase get billed).
Cost social_cost_profile(const StrategyProfile& profile, const CostVector& costs);

// Sum of alpha_owner over edges plus the ordered-pair distance sum.
Cost social_cost_owned(const OwnedGraph& graph, const CostVector& costs);

// 2n(n-1) + (alpha_min - 2) m: holds for every connected graph on m edges
// whose cheapest player pays alpha_min.
double lower_bound_global(int n, double alpha_min, int m);

// alpha_1(n-1) + (alpha_2 - 2) m - (n-1)(alpha_2 - 2n), for ascending alphas
// and m >= n-1. Computed from the un-simplified charging form; the closed
// form is cross-checked against it.
double lower_bound_case2(int n, double alpha1, double alpha2, int m);

// The un-simplified form: alpha_1(n-1) + alpha_2(m-n+1) + 2m + 2(n(n-1) - 2m).
double lower_bound_case2_raw(int n, double alpha1, double alpha2, int m);

} // namespace netforge
