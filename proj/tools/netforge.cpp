// netforge: heterogeneous-cost network creation game engine.
//
// Subcommands: cost, nash-check, best-response, dynamics, enumerate-nash,
// optimum, ratios, verify-claims, sweep. Results go to stdout as a JSON
// document {command, inputs, result, witnesses}; sweeps additionally emit
// CSV. Exit codes: 0 ok, 1 strict claim failure, 2 invalid input, 3
// capacity exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "netforge/constructions.hpp"
#include "netforge/io.hpp"
#include "netforge/sweep.hpp"

using nlohmann::json;
using namespace netforge;

namespace {

struct CommonArgs {
    std::string alphas;
    std::string alphas_file;
    std::string profile;
    std::string profile_file;
    std::string out;
    int workers = 0; // 0: resolve from env, default 1
    int best_response_cap = kDefaultBestResponseCap;
    int enumerate_cap = kDefaultEnumerateCap;
    int optimum_cap = kDefaultOptimumCap;
};

int resolve_workers(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("NETFORGE_WORKERS")) {
        int w = std::atoi(env);
        if (w > 0) return w;
    }
    return 1;
}

CostVector get_alphas(const CommonArgs& args) {
    if (!args.alphas_file.empty()) return io::load_alphas(args.alphas_file);
    if (!args.alphas.empty()) return io::parse_alphas(args.alphas);
    throw InvalidInputError("missing --alphas or --alphas-file");
}

// Named shorthands: complete, empty, star:<center>, clique-star:<threshold>;
// anything starting with '[' is inline JSON.
StrategyProfile get_profile(const CommonArgs& args, const CostVector& costs) {
    int n = costs.size();
    std::string spec = args.profile;
    if (!args.profile_file.empty()) return io::load_profile(args.profile_file);
    if (spec.empty()) throw InvalidInputError("missing --profile or --profile-file");
    if (spec[0] == '[') return io::parse_profile(spec);
    if (spec == "complete") return complete_profile(n);
    if (spec == "empty") return StrategyProfile(n);
    if (spec.rfind("star:", 0) == 0) {
        int center = std::atoi(spec.c_str() + 5);
        return star_profile(n, center);
    }
    if (spec == "star") return star_profile(n, 0);
    if (spec.rfind("clique-star:", 0) == 0) {
        double threshold = std::atof(spec.c_str() + 12);
        return clique_star_profile(costs, threshold);
    }
    throw InvalidInputError("unknown profile shorthand: '" + spec + "'");
}

json alphas_json(const CostVector& costs) {
    json a = json::array();
    for (int i = 0; i < costs.size(); ++i) a.push_back(io::format_number(costs.alpha(i)));
    return a;
}

json profile_json(const StrategyProfile& p) {
    json rows = json::array();
    for (int i = 0; i < p.player_count(); ++i) rows.push_back(p.purchases(i));
    return rows;
}

json witness_json(const DeviationWitness& w) {
    json j;
    j["player"] = w.player;
    j["new_strategy"] = w.new_strategy;
    j["old_cost"] = io::format_cost(w.old_cost);
    j["new_cost"] = io::format_cost(w.new_cost);
    return j;
}

json owned_graph_json(const OwnedGraph& g) {
    json edges = json::array();
    for (const auto& e : g.owned_edges()) {
        json row;
        row["owner"] = e.owner;
        row["other"] = e.other;
        edges.push_back(row);
    }
    json j;
    j["n"] = g.node_count();
    j["owned_edges"] = edges;
    return j;
}

void emit(const json& doc, const std::string& out_path) {
    std::string text = doc.dump(2) + "\n";
    std::cout << text;
    if (!out_path.empty()) {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) throw InvalidInputError("cannot write --out file: " + out_path);
        f << text;
    }
}

void add_common(CLI::App* cmd, CommonArgs* args, bool with_profile) {
    cmd->add_option("--alphas", args->alphas, "alpha vector, comma list or JSON array");
    cmd->add_option("--alphas-file", args->alphas_file, "file with a JSON array of alphas");
    if (with_profile) {
        cmd->add_option("--profile", args->profile,
                        "profile: complete|empty|star:<c>|clique-star:<t> or inline JSON");
        cmd->add_option("--profile-file", args->profile_file, "file with profile JSON");
    }
    cmd->add_option("--out", args->out, "also write the result document to this file");
    cmd->add_option("--workers", args->workers, "parallel workers (env NETFORGE_WORKERS)");
    cmd->add_option("--best-response-cap", args->best_response_cap, "n cap for best response");
    cmd->add_option("--enumerate-cap", args->enumerate_cap, "n cap for Nash enumeration");
    cmd->add_option("--optimum-cap", args->optimum_cap, "n cap for optimum search");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"heterogeneous-cost network creation game engine"};
    app.require_subcommand(1);

    CommonArgs args;

    auto* cmd_cost = app.add_subcommand("cost", "player and social costs of a profile");
    add_common(cmd_cost, &args, true);

    auto* cmd_nash = app.add_subcommand("nash-check", "Nash equilibrium check");
    add_common(cmd_nash, &args, true);
    std::string nash_mode = "exact";
    bool strict_ne = false;
    cmd_nash->add_option("--mode", nash_mode, "exact|local");
    cmd_nash->add_flag("--strict-ne", strict_ne, "use strict instead of weak Nash");

    auto* cmd_br = app.add_subcommand("best-response", "best response of one player");
    add_common(cmd_br, &args, true);
    int br_player = 0;
    cmd_br->add_option("--player", br_player, "deviating player")->required();

    auto* cmd_dyn = app.add_subcommand("dynamics", "best-response dynamics");
    add_common(cmd_dyn, &args, true);
    std::string dyn_order = "round-robin";
    std::uint64_t dyn_seed = 0;
    int max_rounds = 100;
    cmd_dyn->add_option("--order", dyn_order, "round-robin|random");
    cmd_dyn->add_option("--seed", dyn_seed, "seed for random order");
    cmd_dyn->add_option("--max-rounds", max_rounds, "round budget");

    auto* cmd_enum = app.add_subcommand("enumerate-nash", "all exact weak-Nash profiles");
    add_common(cmd_enum, &args, false);

    auto* cmd_opt = app.add_subcommand("optimum", "exhaustive social optimum");
    add_common(cmd_opt, &args, false);

    auto* cmd_ratios = app.add_subcommand("ratios", "Price of Anarchy / Stability");
    add_common(cmd_ratios, &args, false);

    auto* cmd_claims = app.add_subcommand("verify-claims", "check all case claims");
    add_common(cmd_claims, &args, false);
    bool strict_exit = false;
    cmd_claims->add_flag("--strict", strict_exit, "exit 1 if an applicable claim fails");

    auto* cmd_sweep = app.add_subcommand("sweep", "alpha-grid or sampled sweep to CSV");
    int sweep_n = 0;
    std::string alpha_grid, alpha_spec, check_kind = "claims", sweep_out, sweep_record;
    std::uint64_t sweep_seed = 0;
    int sample_count = 0;
    bool no_sort = false;
    bool sweep_strict = false;
    cmd_sweep->add_option("--n", sweep_n, "player count")->required();
    cmd_sweep->add_option("--alpha-grid", alpha_grid, "lo:hi:step applied to every player");
    cmd_sweep->add_option("--alpha-spec", alpha_spec,
                          "per-player specs separated by ';' (fixed, list, or lo:hi:step)");
    cmd_sweep->add_option("--samples", sample_count, "random vectors instead of the full grid");
    cmd_sweep->add_option("--seed", sweep_seed, "sampling seed");
    cmd_sweep->add_option("--check", check_kind, "claims|ratios");
    cmd_sweep->add_option("--out", sweep_out, "CSV output file (default stdout)");
    cmd_sweep->add_option("--out-json", sweep_record, "run record JSON file");
    cmd_sweep->add_flag("--no-sort", no_sort, "keep alpha vectors unsorted");
    cmd_sweep->add_flag("--strict", sweep_strict, "exit 1 on any claim failure");
    cmd_sweep->add_option("--workers", args.workers, "parallel workers");
    cmd_sweep->add_option("--optimum-cap", args.optimum_cap, "n cap for optimum search");

    CLI11_PARSE(app, argc, argv);

    try {
        int workers = resolve_workers(args.workers);
        json doc;
        doc["witnesses"] = json::array();

        if (cmd_cost->parsed()) {
            CostVector costs = get_alphas(args);
            StrategyProfile profile = get_profile(args, costs);
            doc["command"] = "cost";
            doc["inputs"] = {{"alphas", alphas_json(costs)}, {"profile", profile_json(profile)}};
            json per_player = json::array();
            for (int i = 0; i < costs.size(); ++i)
                per_player.push_back(io::format_cost(player_cost(profile, costs, i)));
            doc["result"] = {
                {"player_costs", per_player},
                {"social_cost", io::format_cost(social_cost_profile(profile, costs))},
            };
            emit(doc, args.out);
        } else if (cmd_nash->parsed()) {
            CostVector costs = get_alphas(args);
            StrategyProfile profile = get_profile(args, costs);
            NashMode mode;
            if (nash_mode == "exact")
                mode = NashMode::kExact;
            else if (nash_mode == "local")
                mode = NashMode::kLocal;
            else
                throw InvalidInputError("--mode must be exact or local");
            NashReport r = is_nash(profile, costs, mode,
                                   strict_ne ? NashDefinition::kStrict : NashDefinition::kWeak,
                                   args.best_response_cap);
            doc["command"] = "nash-check";
            doc["inputs"] = {{"alphas", alphas_json(costs)},
                             {"profile", profile_json(profile)},
                             {"mode", nash_mode},
                             {"definition", strict_ne ? "strict" : "weak"}};
            doc["result"] = {{"is_nash", r.is_nash}};
            if (r.witness) doc["witnesses"].push_back(witness_json(*r.witness));
            emit(doc, args.out);
        } else if (cmd_br->parsed()) {
            CostVector costs = get_alphas(args);
            StrategyProfile profile = get_profile(args, costs);
            BestResponseResult r = best_response(profile, costs, br_player, args.best_response_cap);
            doc["command"] = "best-response";
            doc["inputs"] = {{"alphas", alphas_json(costs)},
                             {"profile", profile_json(profile)},
                             {"player", br_player}};
            doc["result"] = {{"strategy", r.strategy}, {"cost", io::format_cost(r.cost)}};
            emit(doc, args.out);
        } else if (cmd_dyn->parsed()) {
            CostVector costs = get_alphas(args);
            StrategyProfile initial =
                args.profile.empty() && args.profile_file.empty()
                    ? StrategyProfile(costs.size())
                    : get_profile(args, costs);
            UpdateOrder order;
            if (dyn_order == "round-robin")
                order = UpdateOrder::kRoundRobin;
            else if (dyn_order == "random")
                order = UpdateOrder::kRandom;
            else
                throw InvalidInputError("--order must be round-robin or random");
            DynamicsResult r = best_response_dynamics(initial, costs, order, dyn_seed,
                                                      max_rounds, args.best_response_cap);
            doc["command"] = "dynamics";
            doc["inputs"] = {{"alphas", alphas_json(costs)},
                             {"initial", profile_json(initial)},
                             {"order", dyn_order},
                             {"seed", dyn_seed},
                             {"max_rounds", max_rounds}};
            doc["result"] = {{"final_profile", profile_json(r.final_profile)},
                             {"converged", r.converged},
                             {"rounds", r.rounds},
                             {"final_social_cost",
                              io::format_cost(social_cost_profile(r.final_profile, costs))}};
            emit(doc, args.out);
        } else if (cmd_enum->parsed()) {
            CostVector costs = get_alphas(args);
            auto equilibria = enumerate_nash(costs, args.enumerate_cap, workers);
            doc["command"] = "enumerate-nash";
            doc["inputs"] = {{"alphas", alphas_json(costs)}, {"workers", workers}};
            json list = json::array();
            for (const auto& p : equilibria) {
                json e;
                e["profile"] = profile_json(p);
                e["social_cost"] = io::format_cost(social_cost_profile(p, costs));
                list.push_back(std::move(e));
            }
            doc["result"] = {{"count", equilibria.size()}, {"equilibria", list}};
            emit(doc, args.out);
        } else if (cmd_opt->parsed()) {
            CostVector costs = get_alphas(args);
            OptimumReport r = social_optimum(costs, args.optimum_cap, workers);
            doc["command"] = "optimum";
            doc["inputs"] = {{"alphas", alphas_json(costs)}, {"workers", workers}};
            json mins = json::array();
            for (const auto& g : r.optimal_graphs) mins.push_back(owned_graph_json(g));
            doc["result"] = {{"optimal_cost", io::format_cost(r.optimal_cost)},
                             {"minimizer_count", r.optimal_graphs.size()},
                             {"minimizers", mins},
                             {"graphs_searched", r.graphs_searched}};
            emit(doc, args.out);
        } else if (cmd_ratios->parsed()) {
            CostVector costs = get_alphas(args);
            RatioReport r = price_ratios(costs, args.enumerate_cap, args.optimum_cap, workers);
            doc["command"] = "ratios";
            doc["inputs"] = {{"alphas", alphas_json(costs)}, {"workers", workers}};
            doc["result"] = {
                {"poa", r.poa ? json(io::format_number(*r.poa)) : json("undefined")},
                {"pos", r.pos ? json(io::format_number(*r.pos)) : json("undefined")},
                {"degenerate", r.degenerate},
                {"worst_ne_cost", io::format_cost(r.worst_ne_cost)},
                {"best_ne_cost", io::format_cost(r.best_ne_cost)},
                {"optimal_cost", io::format_cost(r.optimal_cost)},
                {"equilibrium_count", r.equilibrium_count},
            };
            emit(doc, args.out);
        } else if (cmd_claims->parsed()) {
            CostVector costs = get_alphas(args);
            ClaimCaps caps;
            caps.best_response_cap = args.best_response_cap;
            caps.optimum_cap = args.optimum_cap;
            caps.workers = workers;
            auto verdicts = verify_claims(costs, caps);
            doc["command"] = "verify-claims";
            doc["inputs"] = {{"alphas", alphas_json(costs)}};
            json list = json::array();
            bool any_failure = false;
            for (const auto& v : verdicts) {
                json e;
                e["claim_id"] = claim_id_name(v.id);
                e["applicable"] = v.applicable;
                if (v.applicable) e["holds"] = v.holds;
                if (v.deviation) {
                    e["witness"] = witness_json(*v.deviation);
                    doc["witnesses"].push_back(witness_json(*v.deviation));
                }
                if (v.counterexample) e["counterexample"] = owned_graph_json(*v.counterexample);
                if (v.applicable && !v.holds) any_failure = true;
                list.push_back(std::move(e));
            }
            doc["result"] = {{"verdicts", list}};
            emit(doc, args.out);
            if (strict_exit && any_failure) return 1;
        } else if (cmd_sweep->parsed()) {
            SweepConfig config;
            config.n = sweep_n;
            config.seed = sweep_seed;
            config.sample_count = sample_count;
            config.sort_ascending = !no_sort;
            config.caps.workers = workers;
            config.caps.optimum_cap = args.optimum_cap;
            if (check_kind == "claims")
                config.check = SweepCheck::kClaims;
            else if (check_kind == "ratios")
                config.check = SweepCheck::kRatios;
            else
                throw InvalidInputError("--check must be claims or ratios");
            if (!alpha_spec.empty()) {
                std::stringstream ss(alpha_spec);
                std::string tok;
                while (std::getline(ss, tok, ';'))
                    config.per_player.push_back(parse_alpha_spec(tok));
            } else if (!alpha_grid.empty()) {
                config.per_player.push_back(parse_alpha_spec(alpha_grid));
            } else {
                throw InvalidInputError("sweep needs --alpha-grid or --alpha-spec");
            }

            std::ostringstream csv;
            std::ostringstream record;
            SweepOutcome outcome = run_sweep(config, csv, &record);
            if (sweep_out.empty()) {
                std::cout << csv.str();
            } else {
                std::ofstream f(sweep_out, std::ios::binary);
                if (!f) throw InvalidInputError("cannot write --out file: " + sweep_out);
                f << csv.str();
            }
            if (!sweep_record.empty()) {
                std::ofstream f(sweep_record, std::ios::binary);
                if (!f) throw InvalidInputError("cannot write --out-json file: " + sweep_record);
                f << record.str();
            } else if (!sweep_out.empty()) {
                std::cout << record.str();
            }
            if (sweep_strict && outcome.claim_failures > 0) return 1;
        }
        return 0;
    } catch (const CapacityError& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 3;
    } catch (const InvalidInputError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
