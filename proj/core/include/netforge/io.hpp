#pragma once

#include <string>

#include "netforge/cost.hpp"

namespace netforge {

inline constexpr const char* kEngineVersion = "0.1.0";

namespace io {

// All numerics are printed with 9 decimal places so eps-comparisons stay
// auditable in logs and CSVs.
std::string format_number(double v);
std::string format_cost(const Cost& c); // "inf" for the infinite cost

// Alphas file: a JSON array of non-negative decimals. The CLI also accepts
// the same content as a comma-separated list.
CostVector parse_alphas(const std::string& text);
CostVector load_alphas(const std::string& path);
void save_alphas(const std::string& path, const CostVector& costs);

// Profile file: a JSON array of arrays of 0-based player indices; n is the
// outer length.
StrategyProfile parse_profile(const std::string& text);
StrategyProfile load_profile(const std::string& path);
void save_profile(const std::string& path, const StrategyProfile& profile);

std::string profile_to_text(const StrategyProfile& profile); // "[[1,2],[2],[]]"

} // namespace io
} // namespace netforge
