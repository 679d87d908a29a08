#pragma once

#include <optional>
#include <string>
#include <vector>

#include "netforge/optimum.hpp"

namespace netforge {

// s_i = {j : j > i}; the lower-index player buys each edge.
StrategyProfile complete_profile(int n);

// Every leaf buys exactly one edge to the center; the center buys nothing.
StrategyProfile star_profile(int n, PlayerId center);

// How peripheral nodes attach to the clique in clique_star_profile.
enum class PeripheralAttachment {
    kAllCliqueNodes,   // adjacent to every clique member (default reading)
    kSingleCliqueNode, // one edge to node 0 (variant reading)
};

// With j = count(alpha <= threshold): players 0..j-1 form a clique and every
// peripheral node attaches to the clique, all edges bought by the clique
// side. j=0 degenerates to a star centered at player 0; j=n to the complete
// profile. Requires ascending alphas.
StrategyProfile clique_star_profile(const CostVector& costs, double threshold,
                                    PeripheralAttachment attachment =
                                        PeripheralAttachment::kAllCliqueNodes);

// Largest count j of players with alpha <= threshold; requires ascending.
int threshold_split(const CostVector& costs, double threshold);

enum class ClaimId {
    kNeC1,      // all alpha <= 1: complete graph is a weak NE
    kNeC2,      // all alpha > 1: star is a weak NE
    kNeC3,      // mixed at threshold 1: clique-star construction checked
    kOptC1,     // min alpha > 2: every optimum is a star
    kOptC2Bound,// alpha_1 <= 2: case-2 bound holds on all connected graphs
    kOptC3Bound,// alpha_2 < 2: same bound, case-3 applicability
    kOptC4,     // max alpha < 2: the unique optimum is complete
    kOptC5,     // mixed at threshold 2: every optimum has clique-star shape
};

std::string claim_id_name(ClaimId id);

struct ClaimVerdict {
    ClaimId id = ClaimId::kNeC1;
    bool applicable = false;
    bool holds = false; // meaningful only when applicable
    std::optional<DeviationWitness> deviation;   // NE-claim refutations
    std::optional<OwnedGraph> counterexample;    // optimum/bound refutations
};

struct ClaimCaps {
    int best_response_cap = kDefaultBestResponseCap;
    int optimum_cap = kDefaultOptimumCap;
    int bound_exhaustive_cap = 5;
    int workers = 1;
};

// Mechanical check of every case claim. Requires ascending alphas (the
// claims' WLOG labeling); rejects unsorted input rather than sorting.
std::vector<ClaimVerdict> verify_claims(const CostVector& costs, const ClaimCaps& caps = {});

} // namespace netforge
