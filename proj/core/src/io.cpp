#include "netforge/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace netforge::io {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InvalidInputError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidInputError("cannot write file: " + path);
    out << content;
}

json parse_json(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded())
        throw InvalidInputError(std::string("malformed ") + what + ": not valid JSON");
    return j;
}

} // namespace

std::string format_number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9f", v);
    return buf;
}

std::string format_cost(const Cost& c) {
    return c.is_infinite() ? "inf" : format_number(c.value());
}

CostVector parse_alphas(const std::string& text) {
    std::string trimmed = text;
    auto first = trimmed.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) throw InvalidInputError("empty alphas input");
    std::vector<double> values;
    if (trimmed[first] == '[') {
        json j = parse_json(text, "alphas");
        if (!j.is_array()) throw InvalidInputError("alphas must be an array of decimals");
        for (std::size_t k = 0; k < j.size(); ++k) {
            const auto& e = j[k];
            if (!e.is_number())
                throw InvalidInputError("alphas entry " + std::to_string(k) + " is not a number");
            values.push_back(e.get<double>());
        }
    } else {
        // comma-separated list
        std::stringstream ss(text);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            try {
                std::size_t pos = 0;
                double v = std::stod(tok, &pos);
                while (pos < tok.size() && std::isspace(static_cast<unsigned char>(tok[pos]))) ++pos;
                if (pos != tok.size()) throw std::invalid_argument(tok);
                values.push_back(v);
            } catch (const std::exception&) {
                throw InvalidInputError("bad alpha value: '" + tok + "'");
            }
        }
    }
    return CostVector(values); // validates non-negativity and length
}

CostVector load_alphas(const std::string& path) { return parse_alphas(read_file(path)); }

void save_alphas(const std::string& path, const CostVector& costs) {
    std::string out = "[";
    for (int i = 0; i < costs.size(); ++i) {
        if (i) out += ", ";
        out += format_number(costs.alpha(i));
    }
    out += "]\n";
    write_file(path, out);
}

StrategyProfile parse_profile(const std::string& text) {
    json j = parse_json(text, "profile");
    if (!j.is_array()) throw InvalidInputError("profile must be an array of index arrays");
    int n = static_cast<int>(j.size());
    std::vector<std::vector<PlayerId>> sets;
    for (int i = 0; i < n; ++i) {
        if (!j[i].is_array())
            throw InvalidInputError("profile row " + std::to_string(i) + " is not an array");
        std::vector<PlayerId> s;
        for (const auto& e : j[i]) {
            if (!e.is_number_integer())
                throw InvalidInputError("profile row " + std::to_string(i) +
                                        " has a non-integer entry");
            s.push_back(e.get<int>());
        }
        sets.push_back(std::move(s));
    }
    return StrategyProfile::from_sets(n, sets);
}

StrategyProfile load_profile(const std::string& path) { return parse_profile(read_file(path)); }

void save_profile(const std::string& path, const StrategyProfile& profile) {
    write_file(path, profile_to_text(profile) + "\n");
}

std::string profile_to_text(const StrategyProfile& profile) {
    std::string out = "[";
    for (int i = 0; i < profile.player_count(); ++i) {
        if (i) out += ", ";
        out += "[";
        auto s = profile.purchases(i);
        for (std::size_t k = 0; k < s.size(); ++k) {
            if (k) out += ", ";
            out += std::to_string(s[k]);
        }
        out += "]";
    }
    out += "]";
    return out;
}

} // namespace netforge::io
