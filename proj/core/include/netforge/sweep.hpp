#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "netforge/constructions.hpp"

namespace netforge {

// Per-player alpha specification: a fixed value, an explicit list, or an
// inclusive range with step.
struct AlphaSpec {
    enum class Kind { kFixed, kList, kRange };
    Kind kind = Kind::kFixed;
    double fixed = 0.0;
    std::vector<double> list;
    double lo = 0.0, hi = 0.0, step = 0.0;

    std::vector<double> grid_values() const;
    std::string to_string() const;
};

// Accepts "1.5" (fixed), "0.5,1,2" (list), "0.5:3:0.5" (range).
AlphaSpec parse_alpha_spec(const std::string& token);

enum class SweepCheck { kClaims, kRatios };

struct SweepConfig {
    int n = 0;
    std::vector<AlphaSpec> per_player; // one entry applies to every player
    std::uint64_t seed = 0;
    int sample_count = 0; // 0: full grid; >0: seeded random vectors
    SweepCheck check = SweepCheck::kClaims;
    bool sort_ascending = true; // claims require the WLOG ascending labeling
    ClaimCaps caps;
};

// The alpha vectors a sweep visits, in their deterministic emission order.
// Grid mode walks the cartesian product (player 0 outermost); with
// sort_ascending each vector is sorted and duplicates are dropped. Sample
// mode draws sample_count vectors from the per-player specs using the seed.
std::vector<std::vector<double>> sweep_alpha_vectors(const SweepConfig& config);

struct SweepOutcome {
    int rows = 0;
    int claim_failures = 0; // applicable claims with holds=false
};

// Writes one CSV row per (alpha vector, claim) — or per vector in ratios
// mode. CSV bytes depend only on config and seed, never on wall time or the
// worker count. When record_json is non-null, a run record document
// (config echo, rows, engine version, wall time, timestamp) is written there.
SweepOutcome run_sweep(const SweepConfig& config, std::ostream& csv,
                       std::ostream* record_json = nullptr);

// Deterministic uniform double in [0,1) from a raw 64-bit draw; used instead
// of std::uniform_real_distribution so seeds reproduce across toolchains.
double uniform_unit(std::uint64_t raw);

} // namespace netforge
