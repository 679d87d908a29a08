#include "netforge/constructions.hpp"

#include <array>

namespace netforge {

StrategyProfile complete_profile(int n) {
    StrategyProfile p(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) p.add_purchase(i, j);
    return p;
}

StrategyProfile star_profile(int n, PlayerId center) {
    if (n >= 1 && (center < 0 || center >= n))
        throw InvalidInputError("star center out of range");
    StrategyProfile p(n);
    for (int i = 0; i < n; ++i)
        if (i != center) p.add_purchase(i, center);
    return p;
}

int threshold_split(const CostVector& costs, double threshold) {
    if (!costs.is_ascending())
        throw InvalidInputError("threshold_split requires ascending alphas");
    int j = 0;
    while (j < costs.size() && costs.alpha(j) <= threshold) ++j;
    return j;
}

StrategyProfile clique_star_profile(const CostVector& costs, double threshold,
                                    PeripheralAttachment attachment) {
    if (threshold <= 0.0) throw InvalidInputError("threshold must be positive");
    int n = costs.size();
    int j = threshold_split(costs, threshold); // validates ascending order
    if (j == 0) return star_profile(n, 0);
    if (j == n) return complete_profile(n);

    StrategyProfile p(n);
    for (int i = 0; i < j; ++i) {
        int last = attachment == PeripheralAttachment::kAllCliqueNodes ? n : j;
        for (int k = i + 1; k < last; ++k) p.add_purchase(i, k);
    }
    if (attachment == PeripheralAttachment::kSingleCliqueNode)
        for (int k = j; k < n; ++k) p.add_purchase(0, k);
    return p;
}

std::string claim_id_name(ClaimId id) {
    switch (id) {
    case ClaimId::kNeC1: return "NE-C1";
    case ClaimId::kNeC2: return "NE-C2";
    case ClaimId::kNeC3: return "NE-C3";
    case ClaimId::kOptC1: return "OPT-C1";
    case ClaimId::kOptC2Bound: return "OPT-C2-BOUND";
    case ClaimId::kOptC3Bound: return "OPT-C3-BOUND";
    case ClaimId::kOptC4: return "OPT-C4";
    case ClaimId::kOptC5: return "OPT-C5";
    }
    return "?";
}

namespace {

ClaimVerdict nash_claim(ClaimId id, bool applicable, const StrategyProfile& profile,
                        const CostVector& costs, const ClaimCaps& caps) {
    ClaimVerdict v;
    v.id = id;
    v.applicable = applicable;
    if (!applicable) return v;
    NashReport r = is_nash(profile, costs, NashMode::kExact, NashDefinition::kWeak,
                           caps.best_response_cap);
    v.holds = r.is_nash;
    if (!r.is_nash) v.deviation = r.witness;
    return v;
}

// Checks the case-2 bound against every connected graph, each edge billed to
// its cheaper endpoint (the cheapest ownership; if the bound holds there it
// holds for every ownership).
ClaimVerdict bound_claim(ClaimId id, bool applicable, const CostVector& costs,
                         const ClaimCaps& caps) {
    ClaimVerdict v;
    v.id = id;
    v.applicable = applicable;
    if (!applicable) return v;
    int n = costs.size();
    if (n > caps.bound_exhaustive_cap)
        throw CapacityError("bound claim check limited to n <= " +
                            std::to_string(caps.bound_exhaustive_cap));
    double a1 = costs.alpha(0);
    double a2 = n >= 2 ? costs.alpha(1) : a1;
    v.holds = true;
    int m_all = n * (n - 1) / 2;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m_all); ++mask) {
        UndirectedGraph g = UndirectedGraph::from_edge_mask(n, mask);
        if (!is_connected(g)) continue;
        std::vector<OwnedEdge> edges;
        for (auto [i, j] : g.edges()) {
            if (costs.alpha(j) < costs.alpha(i))
                edges.push_back({j, i});
            else
                edges.push_back({i, j});
        }
        OwnedGraph og(n, std::move(edges));
        double bound = lower_bound_case2(n, a1, a2, g.edge_count());
        Cost c = social_cost_owned(og, costs);
        if (!c.is_infinite() && c.value() < bound - kCostEpsilon) {
            v.holds = false;
            v.counterexample = og;
            break;
        }
    }
    return v;
}

std::optional<OwnedGraph> first_failing_minimizer(
    const OptimumReport& report, const std::function<bool(const UndirectedGraph&)>& pred) {
    for (const auto& og : report.optimal_graphs)
        if (!pred(og.graph())) return og;
    return std::nullopt;
}

} // namespace

std::vector<ClaimVerdict> verify_claims(const CostVector& costs, const ClaimCaps& caps) {
    if (!costs.is_ascending())
        throw InvalidInputError("verify_claims requires ascending alphas");
    int n = costs.size();
    double a_min = costs.min_alpha();
    double a_max = costs.max_alpha();

    std::vector<ClaimVerdict> out;

    // NE-C1: all alphas <= 1, complete graph
    out.push_back(nash_claim(ClaimId::kNeC1, a_max <= 1.0, complete_profile(n), costs, caps));

    // NE-C2: all alphas > 1, star centered at the cheapest player
    out.push_back(nash_claim(ClaimId::kNeC2, a_min > 1.0, star_profile(n, 0), costs, caps));

    // NE-C3: proper split at threshold 1
    {
        int j = threshold_split(costs, 1.0);
        bool applicable = j >= 1 && j <= n - 1;
        StrategyProfile profile = applicable ? clique_star_profile(costs, 1.0)
                                             : StrategyProfile(n);
        out.push_back(nash_claim(ClaimId::kNeC3, applicable, profile, costs, caps));
    }

    bool need_optimum = a_min > 2.0 || a_max < 2.0 ||
                        [&] {
                            int j = threshold_split(costs, 2.0);
                            return j >= 1 && j <= n - 1;
                        }();
    std::optional<OptimumReport> opt;
    if (need_optimum) opt = social_optimum(costs, caps.optimum_cap, caps.workers);

    // OPT-C1: min alpha > 2, every minimizer is a star
    {
        ClaimVerdict v;
        v.id = ClaimId::kOptC1;
        v.applicable = a_min > 2.0;
        if (v.applicable) {
            auto bad = first_failing_minimizer(*opt, is_star_graph);
            v.holds = !bad.has_value();
            v.counterexample = bad;
        }
        out.push_back(v);
    }

    // OPT-C2-BOUND / OPT-C3-BOUND: same displayed bound, different premise
    out.push_back(bound_claim(ClaimId::kOptC2Bound, costs.alpha(0) <= 2.0 && n >= 2, costs, caps));
    out.push_back(bound_claim(ClaimId::kOptC3Bound, n >= 2 && costs.alpha(1) < 2.0, costs, caps));

    // OPT-C4: max alpha < 2, unique minimizer is the complete graph
    {
        ClaimVerdict v;
        v.id = ClaimId::kOptC4;
        v.applicable = a_max < 2.0;
        if (v.applicable) {
            v.holds = opt->optimal_graphs.size() == 1 &&
                      is_complete_graph(opt->optimal_graphs.front().graph());
            if (!v.holds && !opt->optimal_graphs.empty()) {
                auto bad = first_failing_minimizer(*opt, is_complete_graph);
                v.counterexample = bad ? bad : std::optional<OwnedGraph>(opt->optimal_graphs.front());
            }
        }
        out.push_back(v);
    }

    // OPT-C5: proper split at threshold 2, every minimizer has clique-star shape
    {
        ClaimVerdict v;
        v.id = ClaimId::kOptC5;
        int j = threshold_split(costs, 2.0);
        v.applicable = j >= 1 && j <= n - 1;
        if (v.applicable) {
            auto pred = [j](const UndirectedGraph& g) { return has_clique_star_shape(g, j); };
            auto bad = first_failing_minimizer(*opt, pred);
            v.holds = !bad.has_value();
            v.counterexample = bad;
        }
        out.push_back(v);
    }

    return out;
}

} // namespace netforge
