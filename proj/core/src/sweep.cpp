#include "netforge/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <ctime>
#include <random>
#include <sstream>

#include <json.hpp>

#include "netforge/io.hpp"

namespace netforge {

using nlohmann::json;

std::vector<double> AlphaSpec::grid_values() const {
    switch (kind) {
    case Kind::kFixed:
        return {fixed};
    case Kind::kList:
        return list;
    case Kind::kRange: {
        std::vector<double> out;
        // inclusive of hi up to a step-relative slack
        for (int k = 0;; ++k) {
            double v = lo + k * step;
            if (v > hi + step * 1e-9) break;
            out.push_back(v);
        }
        return out;
    }
    }
    return {};
}

std::string AlphaSpec::to_string() const {
    switch (kind) {
    case Kind::kFixed:
        return io::format_number(fixed);
    case Kind::kList: {
        std::string s;
        for (std::size_t i = 0; i < list.size(); ++i) {
            if (i) s += ",";
            s += io::format_number(list[i]);
        }
        return s;
    }
    case Kind::kRange:
        return io::format_number(lo) + ":" + io::format_number(hi) + ":" +
               io::format_number(step);
    }
    return "";
}

AlphaSpec parse_alpha_spec(const std::string& token) {
    auto parse_d = [&](const std::string& s) {
        try {
            std::size_t pos = 0;
            double v = std::stod(s, &pos);
            if (pos != s.size()) throw std::invalid_argument(s);
            if (!(v >= 0.0) || !std::isfinite(v)) throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw InvalidInputError("bad alpha value in spec: '" + s + "'");
        }
    };
    AlphaSpec spec;
    if (token.find(':') != std::string::npos) {
        std::stringstream ss(token);
        std::string a, b, c;
        if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, c))
            throw InvalidInputError("range spec must be lo:hi:step, got '" + token + "'");
        spec.kind = AlphaSpec::Kind::kRange;
        spec.lo = parse_d(a);
        spec.hi = parse_d(b);
        spec.step = parse_d(c);
        if (spec.step <= 0.0 || spec.hi < spec.lo)
            throw InvalidInputError("range spec must have step > 0 and hi >= lo");
    } else if (token.find(',') != std::string::npos) {
        spec.kind = AlphaSpec::Kind::kList;
        std::stringstream ss(token);
        std::string t;
        while (std::getline(ss, t, ',')) spec.list.push_back(parse_d(t));
        if (spec.list.empty()) throw InvalidInputError("empty alpha list spec");
    } else {
        spec.kind = AlphaSpec::Kind::kFixed;
        spec.fixed = parse_d(token);
    }
    return spec;
}

double uniform_unit(std::uint64_t raw) {
    return static_cast<double>(raw >> 11) * 0x1.0p-53;
}

namespace {

const AlphaSpec& spec_for_player(const SweepConfig& config, int i) {
    if (config.per_player.size() == 1) return config.per_player[0];
    return config.per_player[static_cast<std::size_t>(i)];
}

void validate(const SweepConfig& config) {
    if (config.n < 1) throw InvalidInputError("sweep needs n >= 1");
    if (config.per_player.empty())
        throw InvalidInputError("sweep needs at least one alpha spec");
    if (config.per_player.size() != 1 &&
        static_cast<int>(config.per_player.size()) != config.n)
        throw InvalidInputError("per-player alpha specs must match n");
    if (config.sample_count < 0) throw InvalidInputError("sample count must be >= 0");
}

std::string csv_escape(const std::string& s) {
    // summaries avoid commas; anything else gets them replaced
    std::string out = s;
    std::replace(out.begin(), out.end(), ',', ';');
    return out;
}

std::string witness_summary(const ClaimVerdict& v) {
    if (v.deviation) {
        const auto& w = *v.deviation;
        std::string s = "player=" + std::to_string(w.player) + " new={";
        for (std::size_t k = 0; k < w.new_strategy.size(); ++k) {
            if (k) s += " ";
            s += std::to_string(w.new_strategy[k]);
        }
        s += "} old_cost=" + io::format_cost(w.old_cost) +
             " new_cost=" + io::format_cost(w.new_cost);
        return s;
    }
    if (v.counterexample) {
        std::string s = "graph=";
        const auto& edges = v.counterexample->owned_edges();
        for (std::size_t k = 0; k < edges.size(); ++k) {
            if (k) s += "|";
            s += std::to_string(edges[k].owner) + "-" + std::to_string(edges[k].other);
        }
        return s;
    }
    return "";
}

std::string iso_timestamp() {
    auto now = std::chrono::system_clock::now();
    std::time_t t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

} // namespace

std::vector<std::vector<double>> sweep_alpha_vectors(const SweepConfig& config) {
    validate(config);
    int n = config.n;
    std::vector<std::vector<double>> out;

    if (config.sample_count > 0) {
        std::mt19937_64 rng(config.seed);
        for (int s = 0; s < config.sample_count; ++s) {
            std::vector<double> v(n);
            for (int i = 0; i < n; ++i) {
                const AlphaSpec& spec = spec_for_player(config, i);
                switch (spec.kind) {
                case AlphaSpec::Kind::kFixed:
                    v[i] = spec.fixed;
                    break;
                case AlphaSpec::Kind::kList:
                    v[i] = spec.list[rng() % spec.list.size()];
                    break;
                case AlphaSpec::Kind::kRange:
                    v[i] = spec.lo + (spec.hi - spec.lo) * uniform_unit(rng());
                    break;
                }
            }
            if (config.sort_ascending) std::sort(v.begin(), v.end());
            out.push_back(std::move(v));
        }
        return out;
    }

    // full cartesian grid, player 0 outermost
    std::vector<std::vector<double>> axes;
    std::uint64_t total = 1;
    for (int i = 0; i < n; ++i) {
        axes.push_back(spec_for_player(config, i).grid_values());
        if (axes.back().empty()) throw InvalidInputError("empty grid axis");
        total *= axes.back().size();
        if (total > 10'000'000) throw CapacityError("sweep grid exceeds 10M vectors");
    }
    for (std::uint64_t k = 0; k < total; ++k) {
        std::vector<double> v(n);
        std::uint64_t rem = k;
        for (int i = n - 1; i >= 0; --i) {
            v[i] = axes[i][rem % axes[i].size()];
            rem /= axes[i].size();
        }
        if (config.sort_ascending) std::sort(v.begin(), v.end());
        out.push_back(std::move(v));
    }
    if (config.sort_ascending) {
        // normalization creates duplicates; drop them, keeping first emission
        std::vector<std::vector<double>> dedup;
        for (auto& v : out)
            if (std::find(dedup.begin(), dedup.end(), v) == dedup.end())
                dedup.push_back(std::move(v));
        out = std::move(dedup);
    }
    return out;
}

SweepOutcome run_sweep(const SweepConfig& config, std::ostream& csv,
                       std::ostream* record_json) {
    validate(config);
    auto t0 = std::chrono::steady_clock::now();
    int n = config.n;
    auto vectors = sweep_alpha_vectors(config);

    csv << "alpha_0";
    for (int i = 1; i < n; ++i) csv << ",alpha_" << i;
    csv << ",claim_id,applicable,holds,witness_summary,social_cost,optimal_cost,poa,pos\n";

    SweepOutcome outcome;
    json rows = json::array();

    for (const auto& alphas : vectors) {
        CostVector costs(alphas);
        std::string prefix;
        for (int i = 0; i < n; ++i) {
            if (i) prefix += ",";
            prefix += io::format_number(alphas[i]);
        }

        std::string poa_s, pos_s, opt_s;
        RatioReport ratios;
        bool have_ratios = false;
        if (n <= config.caps.best_response_cap && n <= kDefaultEnumerateCap &&
            n <= config.caps.optimum_cap) {
            ratios = price_ratios(costs, kDefaultEnumerateCap, config.caps.optimum_cap,
                                  config.caps.workers);
            have_ratios = true;
            opt_s = io::format_cost(ratios.optimal_cost);
            if (ratios.poa) poa_s = io::format_number(*ratios.poa);
            if (ratios.pos) pos_s = io::format_number(*ratios.pos);
        }

        auto emit = [&](const std::string& claim_id, const std::string& applicable,
                        const std::string& holds, const std::string& witness,
                        const std::string& social) {
            csv << prefix << "," << claim_id << "," << applicable << "," << holds << ","
                << csv_escape(witness) << "," << social << "," << opt_s << "," << poa_s
                << "," << pos_s << "\n";
            ++outcome.rows;
            if (record_json) {
                json row;
                row["alphas"] = json::array();
                for (double a : alphas) row["alphas"].push_back(io::format_number(a));
                row["claim_id"] = claim_id;
                row["applicable"] = applicable;
                row["holds"] = holds;
                row["witness_summary"] = witness;
                row["social_cost"] = social;
                row["optimal_cost"] = opt_s;
                row["poa"] = poa_s;
                row["pos"] = pos_s;
                rows.push_back(std::move(row));
            }
        };

        if (config.check == SweepCheck::kClaims) {
            auto verdicts = verify_claims(costs, config.caps);
            for (const auto& v : verdicts) {
                std::string social;
                switch (v.id) {
                case ClaimId::kNeC1:
                    social = io::format_cost(social_cost_profile(complete_profile(n), costs));
                    break;
                case ClaimId::kNeC2:
                    social = io::format_cost(social_cost_profile(star_profile(n, 0), costs));
                    break;
                case ClaimId::kNeC3:
                    if (v.applicable)
                        social = io::format_cost(
                            social_cost_profile(clique_star_profile(costs, 1.0), costs));
                    break;
                default:
                    break; // bound/optimum claims: the optimal_cost column carries the number
                }
                if (v.applicable && !v.holds) ++outcome.claim_failures;
                emit(claim_id_name(v.id), v.applicable ? "true" : "false",
                     v.applicable ? (v.holds ? "true" : "false") : "",
                     v.applicable ? witness_summary(v) : "", social);
            }
        } else {
            bool sane = have_ratios && ratios.poa && ratios.pos &&
                        *ratios.pos <= *ratios.poa + kCostEpsilon &&
                        *ratios.pos >= 1.0 - kCostEpsilon;
            std::string social =
                have_ratios ? io::format_cost(ratios.worst_ne_cost) : std::string();
            emit("RATIOS", have_ratios ? "true" : "false",
                 have_ratios ? (sane ? "true" : "false") : "", "", social);
        }
    }

    if (record_json) {
        auto t1 = std::chrono::steady_clock::now();
        json record;
        record["command"] = "sweep";
        json cfg;
        cfg["n"] = n;
        cfg["seed"] = config.seed;
        cfg["sample_count"] = config.sample_count;
        cfg["check"] = config.check == SweepCheck::kClaims ? "claims" : "ratios";
        cfg["sort_ascending"] = config.sort_ascending;
        cfg["workers"] = config.caps.workers;
        json specs = json::array();
        for (const auto& s : config.per_player) specs.push_back(s.to_string());
        cfg["alpha_specs"] = specs;
        record["config"] = cfg;
        record["engine_version"] = kEngineVersion;
        record["rows"] = outcome.rows;
        record["claim_failures"] = outcome.claim_failures;
        record["instances"] = rows;
        record["wall_time_ms"] =
            std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        record["timestamp"] = iso_timestamp();
        *record_json << record.dump(2) << "\n";
    }
    return outcome;
}

} // namespace netforge
