#pragma once

#include <string>
#include <vector>

#include "svet/phase_table.hpp"
#include "svet/schemes.hpp"
#include "svet/svetlichny.hpp"

namespace svet::io {

/// Doubles formatted with 9 significant digits (round-half-even), so JSON
/// and CSV output is byte-identical across runs.
std::string format_double(double value);

/// RFC 4180 field quoting: quotes only when the field contains a comma,
/// quote, or newline.
std::string csv_field(const std::string& field);
std::string csv_row(const std::vector<std::string>& fields);

// JSON emitters. Field order is fixed; all emit a single line without
// trailing newline. Phase tables must be exact (NonRationalPhase otherwise).
std::string to_json(const PhaseTable& table);
std::string to_json(const Scenario& scenario);
std::string to_json(const SvetlichnyReport& report);
std::string to_json(const SearchResult& result);

/// Parses a phase table object {"twice_j": ..., "phases": [...]}. Negative-m
/// entries are optional; when present they must match the antisymmetric
/// completion exactly. Throws ScenarioParseError with the offending location.
PhaseTable phase_table_from_json(const std::string& text);

/// Parses a scenario object {"n": ..., "twice_j": ..., "parties": [...]}.
Scenario scenario_from_json(const std::string& text);

Scenario load_scenario(const std::string& path);

} // namespace svet::io
