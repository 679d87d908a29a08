#include "netforge/equilibrium.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <string>
#include <thread>

namespace netforge {

namespace {

constexpr int kScratch = 32;

struct PlayerCostEval {
    double finite_value;
    bool infinite;
};

// Cost of player i playing `mask` against `base` adjacency (all edges not
// bought by i, including edges to i that others bought).
PlayerCostEval eval_candidate(const std::uint32_t* base, int n, PlayerId i,
                              std::uint32_t mask, double alpha_i) {
    std::array<std::uint32_t, kScratch> adj;
    std::copy(base, base + n, adj.begin());
    adj[i] |= mask;
    std::uint32_t m = mask;
    while (m) {
        int k = std::countr_zero(m);
        m &= m - 1;
        adj[k] |= 1u << i;
    }
    auto [sum, reached] = distance_sum_from(adj.data(), n, i);
    if (reached < n) return {0.0, true};
    return {alpha_i * std::popcount(mask) + static_cast<double>(sum), false};
}

bool eval_less(const PlayerCostEval& a, const PlayerCostEval& b, double eps) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    return a.finite_value < b.finite_value - eps;
}

bool eval_tied(const PlayerCostEval& a, const PlayerCostEval& b, double eps) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    double d = a.finite_value - b.finite_value;
    return d <= eps && d >= -eps;
}

Cost eval_to_cost(const PlayerCostEval& e) {
    return e.infinite ? Cost::infinite() : Cost::finite(e.finite_value);
}

// Full adjacency from purchase masks.
void build_adjacency(const std::uint32_t* purchases, int n, std::uint32_t* adj) {
    std::fill(adj, adj + n, 0u);
    for (int i = 0; i < n; ++i) {
        std::uint32_t m = purchases[i];
        adj[i] |= m;
        while (m) {
            int k = std::countr_zero(m);
            m &= m - 1;
            adj[k] |= 1u << i;
        }
    }
}

// Adjacency with player i's purchases removed (edges others also bought stay).
void build_base(const std::uint32_t* purchases, int n, PlayerId i, std::uint32_t* base) {
    std::fill(base, base + n, 0u);
    for (int j = 0; j < n; ++j) {
        if (j == i) continue;
        std::uint32_t m = purchases[j];
        base[j] |= m;
        while (m) {
            int k = std::countr_zero(m);
            m &= m - 1;
            base[k] |= 1u << j;
        }
    }
}

void check_cap(int n, int cap) {
    if (n > cap)
        throw CapacityError("n=" + std::to_string(n) + " exceeds cap " + std::to_string(cap));
}

// Best response over all subsets, on raw masks. Ties: fewer purchases, then
// lexicographically smallest set.
std::pair<std::uint32_t, PlayerCostEval> best_response_masks(const std::uint32_t* base, int n,
                                                             PlayerId i, double alpha_i) {
    std::uint32_t full = ((n < 32 ? (1u << n) : 0u) - 1u) & ~(1u << i);
    std::uint32_t best_mask = 0;
    PlayerCostEval best = eval_candidate(base, n, i, 0, alpha_i);
    // subsets of `full` in increasing numeric order
    for (std::uint32_t m = 1; m != 0 && m <= full; ++m) {
        if ((m & ~full) != 0) continue;
        PlayerCostEval e = eval_candidate(base, n, i, m, alpha_i);
        if (eval_less(e, best, kCostEpsilon)) {
            best = e;
            best_mask = m;
        } else if (eval_tied(e, best, kCostEpsilon)) {
            int pc = std::popcount(m);
            int bc = std::popcount(best_mask);
            if (pc < bc || (pc == bc && mask_lex_less(m, best_mask))) {
                best = e;
                best_mask = m;
            }
        }
    }
    return {best_mask, best};
}

// True iff some deviation of player i violates the given Nash definition;
// fills the witness. Early exit on the first violation.
bool improving_deviation(const std::uint32_t* base, int n, PlayerId i, double alpha_i,
                         std::uint32_t current_mask, const PlayerCostEval& current,
                         NashDefinition def, DeviationWitness* witness) {
    std::uint32_t full = ((1u << n) - 1u) & ~(1u << i);
    for (std::uint32_t m = 0; m <= full; ++m) {
        if ((m & ~full) != 0 || m == current_mask) continue;
        PlayerCostEval e = eval_candidate(base, n, i, m, alpha_i);
        bool violates = def == NashDefinition::kWeak
                            ? eval_less(e, current, kCostEpsilon)
                            : !eval_less(current, e, kCostEpsilon);
        if (violates) {
            if (witness) {
                witness->player = i;
                witness->new_strategy.clear();
                std::uint32_t t = m;
                while (t) {
                    witness->new_strategy.push_back(std::countr_zero(t));
                    t &= t - 1;
                }
                witness->old_cost = eval_to_cost(current);
                witness->new_cost = eval_to_cost(e);
            }
            return true;
        }
    }
    return false;
}

// Weak exact-Nash check on raw purchase masks; no allocation, early exit.
bool is_weak_nash_masks(const std::uint32_t* purchases, int n, const double* alphas) {
    std::array<std::uint32_t, kScratch> adj;
    std::array<std::uint32_t, kScratch> base;
    build_adjacency(purchases, n, adj.data());
    for (int i = 0; i < n; ++i) {
        auto [sum, reached] = distance_sum_from(adj.data(), n, i);
        PlayerCostEval current{alphas[i] * std::popcount(purchases[i]) +
                                   static_cast<double>(sum),
                               reached < n};
        // base = adj minus edges only i bought
        std::copy(adj.begin(), adj.begin() + n, base.begin());
        std::uint32_t m = purchases[i];
        while (m) {
            int k = std::countr_zero(m);
            m &= m - 1;
            if (!((purchases[k] >> i) & 1u)) { // k did not buy i back
                base[i] &= ~(1u << k);
                base[k] &= ~(1u << i);
            }
        }
        if (improving_deviation(base.data(), n, i, alphas[i], purchases[i], current,
                                NashDefinition::kWeak, nullptr))
            return false;
    }
    return true;
}

} // namespace

BestResponseResult best_response(const StrategyProfile& profile, const CostVector& costs,
                                 PlayerId i, int cap) {
    int n = profile.player_count();
    if (n != costs.size()) throw InvalidInputError("profile/cost dimension mismatch");
    if (i < 0 || i >= n) throw InvalidInputError("player index out of range");
    check_cap(n, cap);

    std::array<std::uint32_t, kScratch> base;
    std::vector<std::uint32_t> purchases(n);
    for (int j = 0; j < n; ++j) purchases[j] = profile.purchase_mask(j);
    build_base(purchases.data(), n, i, base.data());

    auto [mask, eval] = best_response_masks(base.data(), n, i, costs.alpha(i));
    BestResponseResult out;
    out.strategy_mask = mask;
    out.cost = eval_to_cost(eval);
    std::uint32_t m = mask;
    while (m) {
        out.strategy.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

NashReport is_nash(const StrategyProfile& profile, const CostVector& costs,
                   NashMode mode, NashDefinition definition, int cap) {
    int n = profile.player_count();
    if (n != costs.size()) throw InvalidInputError("profile/cost dimension mismatch");
    if (mode == NashMode::kExact) check_cap(n, cap);

    NashReport report;
    report.mode = mode;
    report.is_nash = true;

    std::vector<std::uint32_t> purchases(n);
    for (int j = 0; j < n; ++j) purchases[j] = profile.purchase_mask(j);
    std::array<std::uint32_t, kScratch> adj;
    std::array<std::uint32_t, kScratch> base;
    build_adjacency(purchases.data(), n, adj.data());

    for (int i = 0; i < n && report.is_nash; ++i) {
        auto [sum, reached] = distance_sum_from(adj.data(), n, i);
        PlayerCostEval current{costs.alpha(i) * std::popcount(purchases[i]) +
                                   static_cast<double>(sum),
                               reached < n};
        build_base(purchases.data(), n, i, base.data());
        DeviationWitness w;
        bool violated = false;
        if (mode == NashMode::kExact) {
            violated = improving_deviation(base.data(), n, i, costs.alpha(i), purchases[i],
                                           current, definition, &w);
        } else {
            // LOCAL: one added purchase, one removed purchase, or one swap.
            std::uint32_t full = ((1u << n) - 1u) & ~(1u << i);
            std::uint32_t cur = purchases[i];
            std::vector<std::uint32_t> neighbors;
            for (int b = 0; b < n; ++b) {
                if (b == i) continue;
                std::uint32_t bit = 1u << b;
                if (cur & bit)
                    neighbors.push_back(cur & ~bit); // remove
                else
                    neighbors.push_back(cur | bit); // add
            }
            for (int a = 0; a < n; ++a) {
                if (a == i || !(cur & (1u << a))) continue;
                for (int b = 0; b < n; ++b) {
                    if (b == i || (cur & (1u << b)) || b == a) continue;
                    neighbors.push_back((cur & ~(1u << a)) | (1u << b)); // swap
                }
            }
            for (std::uint32_t m : neighbors) {
                if ((m & ~full) != 0) continue;
                PlayerCostEval e = eval_candidate(base.data(), n, i, m, costs.alpha(i));
                bool bad = definition == NashDefinition::kWeak
                               ? eval_less(e, current, kCostEpsilon)
                               : !eval_less(current, e, kCostEpsilon);
                if (bad) {
                    w.player = i;
                    w.new_strategy.clear();
                    std::uint32_t t = m;
                    while (t) {
                        w.new_strategy.push_back(std::countr_zero(t));
                        t &= t - 1;
                    }
                    w.old_cost = eval_to_cost(current);
                    w.new_cost = eval_to_cost(e);
                    violated = true;
                    break;
                }
            }
        }
        if (violated) {
            report.is_nash = false;
            report.witness = std::move(w);
        }
    }
    return report;
}

DynamicsResult best_response_dynamics(const StrategyProfile& initial, const CostVector& costs,
                                      UpdateOrder order, std::uint64_t seed, int max_rounds,
                                      int cap) {
    int n = initial.player_count();
    if (n != costs.size()) throw InvalidInputError("profile/cost dimension mismatch");
    check_cap(n, cap);

    DynamicsResult result{initial, false, 0};
    std::mt19937_64 rng(seed);
    std::vector<PlayerId> order_vec(n);
    for (int i = 0; i < n; ++i) order_vec[i] = i;

    for (int round = 0; round < max_rounds; ++round) {
        if (order == UpdateOrder::kRandom) {
            // Fisher-Yates with our own index draws for cross-platform
            // reproducibility.
            for (int i = n - 1; i > 0; --i) {
                int j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
                std::swap(order_vec[i], order_vec[j]);
            }
        }
        ++result.rounds;
        bool changed = false;
        for (PlayerId i : order_vec) {
            Cost current = player_cost(result.final_profile, costs, i);
            BestResponseResult br = best_response(result.final_profile, costs, i, cap);
            if (Cost::strictly_less(br.cost, current)) {
                result.final_profile.set_purchase_mask(i, br.strategy_mask);
                changed = true;
            }
        }
        if (!changed) {
            result.converged = true;
            break;
        }
    }
    return result;
}

std::vector<StrategyProfile> enumerate_nash(const CostVector& costs, int cap, int workers) {
    int n = costs.size();
    check_cap(n, cap);
    if (workers < 1) throw InvalidInputError("workers must be >= 1");

    if (n == 1) return {StrategyProfile(1)};

    const int strategies_per_player = 1 << (n - 1);
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) total *= static_cast<std::uint64_t>(strategies_per_player);

    const std::vector<double>& alphas = costs.values();

    auto decode = [&](std::uint64_t idx, std::uint32_t* purchases) {
        for (int i = 0; i < n; ++i) {
            std::uint32_t d = static_cast<std::uint32_t>(idx % strategies_per_player);
            idx /= strategies_per_player;
            // insert a zero bit at position i (no self-link)
            std::uint32_t low = d & ((1u << i) - 1u);
            purchases[i] = low | ((d >> i) << (i + 1));
        }
    };

    std::vector<std::vector<std::uint64_t>> found(static_cast<std::size_t>(workers));
    auto scan = [&](int w) {
        std::uint64_t begin = total * w / workers;
        std::uint64_t end = total * (w + 1) / workers;
        std::array<std::uint32_t, kScratch> purchases{};
        for (std::uint64_t idx = begin; idx < end; ++idx) {
            decode(idx, purchases.data());
            if (is_weak_nash_masks(purchases.data(), n, alphas.data()))
                found[w].push_back(idx);
        }
    };

    if (workers == 1) {
        scan(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(scan, w);
        for (auto& t : pool) t.join();
    }

    std::vector<StrategyProfile> out;
    for (const auto& chunk : found) {
        for (std::uint64_t idx : chunk) {
            std::array<std::uint32_t, kScratch> purchases{};
            decode(idx, purchases.data());
            StrategyProfile p(n);
            for (int i = 0; i < n; ++i) p.set_purchase_mask(i, purchases[i]);
            out.push_back(std::move(p));
        }
    }
    std::sort(out.begin(), out.end(), profile_lex_less);
    return out;
}

} // namespace netforge
