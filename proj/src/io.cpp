#include "svet/io.hpp"

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "svet/errors.hpp"

namespace svet::io {

namespace {

using nlohmann::json;

std::string phase_entry(int twice_m, const RationalAngle& angle) {
    std::string out = "{\"twice_m\":" + std::to_string(twice_m);
    out += ",\"num\":" + std::to_string(angle.num());
    out += ",\"den\":" + std::to_string(angle.den()) + "}";
    return out;
}

std::string table_body(const PhaseTable& table) {
    std::string out = "{\"twice_j\":" + std::to_string(table.spin().twice());
    out += ",\"phases\":[";
    // m >= 0 only, ascending; negative m is implied by antisymmetry.
    bool first = true;
    const SpinJ j = table.spin();
    const int start_twice_m = j.is_integer() ? 0 : 1;
    for (int twice_m = start_twice_m; twice_m <= j.twice(); twice_m += 2) {
        if (!first)
            out += ',';
        first = false;
        out += phase_entry(twice_m, table.phase(MagneticIndex(j, twice_m)).rational());
    }
    out += "]}";
    return out;
}

long long require_int(const json& node, const char* key, const std::string& where) {
    if (!node.contains(key) || !node[key].is_number_integer())
        throw ScenarioParseError(where + ": missing integer field \"" + key + "\"");
    return node[key].get<long long>();
}

PhaseTable parse_table(const json& node, int twice_j, const std::string& where) {
    if (!node.is_object())
        throw ScenarioParseError(where + ": expected a phase table object");
    const long long own_twice_j = require_int(node, "twice_j", where);
    if (own_twice_j != twice_j)
        throw ScenarioParseError(where + ": twice_j " + std::to_string(own_twice_j) +
                                 " does not match the scenario value " +
                                 std::to_string(twice_j));
    if (!node.contains("phases") || !node["phases"].is_array())
        throw ScenarioParseError(where + ": missing \"phases\" array");

    const SpinJ j(twice_j);
    std::map<int, RationalAngle> entries;
    for (const json& item : node["phases"]) {
        const long long twice_m = require_int(item, "twice_m", where);
        const long long num = require_int(item, "num", where);
        const long long den = require_int(item, "den", where);
        const std::string at = where + ", twice_m = " + std::to_string(twice_m);
        if (den <= 0)
            throw ScenarioParseError(at + ": denominator must be positive");
        if (twice_m < -j.twice() || twice_m > j.twice() ||
            ((twice_m - j.twice()) & 1) != 0)
            throw ScenarioParseError(at + ": not a magnetic index of 2j = " +
                                     std::to_string(twice_j));
        if (!entries.emplace(static_cast<int>(twice_m), RationalAngle(num, den)).second)
            throw ScenarioParseError(at + ": duplicate entry");
    }

    std::vector<Phase> upper;
    for (const MagneticIndex& m : positive_m_values(j)) {
        const auto it = entries.find(m.twice());
        if (it == entries.end())
            throw ScenarioParseError(where + ": missing phase for twice_m = " +
                                     std::to_string(m.twice()));
        upper.emplace_back(it->second);
    }
    std::optional<Phase> zero;
    if (j.is_integer()) {
        const auto it = entries.find(0);
        if (it == entries.end())
            throw ScenarioParseError(where + ": missing phase for twice_m = 0");
        if (!(it->second == RationalAngle() || it->second == RationalAngle::pi()))
            throw ScenarioParseError(where + ", twice_m = 0: phase must be 0 or pi");
        zero = Phase(it->second);
    }

    // Negative-m entries are redundant; when present they must agree with
    // the antisymmetric completion exactly.
    for (const auto& [twice_m, angle] : entries) {
        if (twice_m >= 0)
            continue;
        const auto pos = entries.find(-twice_m);
        if (pos == entries.end())
            throw ScenarioParseError(where + ", twice_m = " + std::to_string(twice_m) +
                                     ": negative entry without its positive partner");
        if (!(angle == -pos->second))
            throw ScenarioParseError(where + ", twice_m = " + std::to_string(twice_m) +
                                     ": antisymmetry violated");
    }

    return make_phase_table(j, std::move(upper), zero);
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ScenarioParseError(std::string("invalid JSON: ") + e.what());
    }
}

} // namespace

std::string format_double(double value) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.9g", value);
    return buf;
}

std::string csv_field(const std::string& field) {
    if (field.find_first_of(",\"\n\r") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0)
            out += ',';
        out += csv_field(fields[i]);
    }
    return out;
}

std::string to_json(const PhaseTable& table) {
    return table_body(table);
}

std::string to_json(const Scenario& scenario) {
    std::string out = "{\"n\":" + std::to_string(scenario.parties());
    out += ",\"twice_j\":" + std::to_string(scenario.spin().twice());
    out += ",\"parties\":[";
    for (int party = 0; party < scenario.parties(); ++party) {
        if (party > 0)
            out += ',';
        out += "{\"setting0\":" + table_body(scenario.table(party, 0));
        out += ",\"setting1\":" + table_body(scenario.table(party, 1)) + "}";
    }
    out += "]}";
    return out;
}

std::string to_json(const SvetlichnyReport& report) {
    std::string out = "{\"n\":" + std::to_string(report.n);
    out += ",\"twice_j\":" + std::to_string(report.twice_j);
    out += ",\"value\":" + format_double(report.value);
    out += ",\"lhv_bound\":" + format_double(report.lhv_bound);
    out += ",\"quantum_bound\":" + format_double(report.quantum_bound);
    out += ",\"fixed_sign_bound\":" + format_double(report.fixed_sign_bound);
    out += ",\"ratio\":" + format_double(report.ratio);
    out += ",\"violated\":";
    out += report.violated ? "true" : "false";
    out += "}";
    return out;
}

std::string to_json(const SearchResult& result) {
    const int n = result.best_assignments.empty()
                      ? 0
                      : result.best_assignments.front().parties();
    std::string out = "{\"n\":" + std::to_string(n);
    out += ",\"best_value\":" + std::to_string(result.best_value);
    out += ",\"bound\":" + format_double(bounds(n).fixed_sign);
    out += ",\"assignments\":[";
    for (std::size_t a = 0; a < result.best_assignments.size(); ++a) {
        if (a > 0)
            out += ',';
        const SignAssignment& assignment = result.best_assignments[a];
        out += '[';
        for (int party = 0; party < assignment.parties(); ++party) {
            if (party > 0)
                out += ',';
            out += '[' + std::to_string(assignment.party(party).s0) + ',' +
                   std::to_string(assignment.party(party).s1) + ']';
        }
        out += ']';
    }
    out += "],\"evaluated\":" + std::to_string(result.evaluated_count) + "}";
    return out;
}

PhaseTable phase_table_from_json(const std::string& text) {
    const json node = parse_json_text(text);
    const long long twice_j = require_int(node, "twice_j", "phase table");
    if (twice_j < 1)
        throw ScenarioParseError("phase table: twice_j must be >= 1");
    return parse_table(node, static_cast<int>(twice_j), "phase table");
}

Scenario scenario_from_json(const std::string& text) {
    const json node = parse_json_text(text);
    if (!node.is_object())
        throw ScenarioParseError("scenario: expected a JSON object");
    const long long n = require_int(node, "n", "scenario");
    const long long twice_j = require_int(node, "twice_j", "scenario");
    if (n < 3)
        throw ScenarioParseError("scenario: n must be >= 3");
    if (n > 31)
        throw ScenarioParseError("scenario: n must be <= 31");
    if (twice_j < 1)
        throw ScenarioParseError("scenario: twice_j must be >= 1");
    if (!node.contains("parties") || !node["parties"].is_array())
        throw ScenarioParseError("scenario: missing \"parties\" array");
    if (static_cast<long long>(node["parties"].size()) != n)
        throw ScenarioParseError("scenario: expected " + std::to_string(n) +
                                 " parties, got " + std::to_string(node["parties"].size()));

    std::vector<PartyTables> parties;
    parties.reserve(static_cast<std::size_t>(n));
    for (long long party = 0; party < n; ++party) {
        const json& entry = node["parties"][static_cast<std::size_t>(party)];
        if (!entry.is_object() || !entry.contains("setting0") || !entry.contains("setting1"))
            throw ScenarioParseError("party " + std::to_string(party) +
                                     ": expected \"setting0\" and \"setting1\"");
        const std::string where = "party " + std::to_string(party);
        parties.push_back(
            {parse_table(entry["setting0"], static_cast<int>(twice_j), where + " setting 0"),
             parse_table(entry["setting1"], static_cast<int>(twice_j), where + " setting 1")});
    }
    return Scenario(SpinJ(static_cast<int>(twice_j)), std::move(parties));
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ScenarioParseError("cannot open scenario file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return scenario_from_json(buffer.str());
}

} // namespace svet::io
