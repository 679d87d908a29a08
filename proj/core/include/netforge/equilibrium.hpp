#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "netforge/cost.hpp"

namespace netforge {

inline constexpr int kDefaultBestResponseCap = 12;
inline constexpr int kDefaultEnumerateCap = 5;

// A concrete strictly improving unilateral deviation.
struct DeviationWitness {
    PlayerId player = 0;
    std::vector<PlayerId> new_strategy;
    Cost old_cost;
    Cost new_cost;
};

enum class NashMode { kExact, kLocal };

// Weak: fail only on a strictly improving deviation (by more than eps).
// Strict: fail also on ties; required by none of the claims, exposed as an
// option.
enum class NashDefinition { kWeak, kStrict };

struct NashReport {
    bool is_nash = false;
    NashMode mode = NashMode::kExact;
    std::optional<DeviationWitness> witness;
};

struct BestResponseResult {
    std::vector<PlayerId> strategy;
    std::uint32_t strategy_mask = 0;
    Cost cost;
};

// Minimizes player i's cost over all 2^(n-1) purchase sets, holding the
// other players fixed. Ties broken by fewer purchases, then lexicographically
// smallest set.
BestResponseResult best_response(const StrategyProfile& profile, const CostVector& costs,
                                 PlayerId i, int cap = kDefaultBestResponseCap);

NashReport is_nash(const StrategyProfile& profile, const CostVector& costs,
                   NashMode mode, NashDefinition definition = NashDefinition::kWeak,
                   int cap = kDefaultBestResponseCap);

enum class UpdateOrder { kRoundRobin, kRandom };

struct DynamicsResult {
    StrategyProfile final_profile;
    bool converged = false;
    int rounds = 0;
};

// One player per step, full best response. A round is a pass over all
// players; converged when a full pass changes nothing. Deterministic given
// the seed.
DynamicsResult best_response_dynamics(const StrategyProfile& initial, const CostVector& costs,
                                      UpdateOrder order, std::uint64_t seed, int max_rounds,
                                      int cap = kDefaultBestResponseCap);

// All profiles passing the EXACT weak-Nash check, in lexicographic profile
// order. Searches all 2^(n(n-1)) profiles; the profile space may be
// partitioned across workers, the result never depends on the worker count.
std::vector<StrategyProfile> enumerate_nash(const CostVector& costs,
                                            int cap = kDefaultEnumerateCap,
                                            int workers = 1);

} // namespace netforge
