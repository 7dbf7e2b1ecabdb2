#pragma once

/// @file facts.hpp
/// @brief Reader and writer for the `.facts` circuit format.
///
/// Grammar (one fact per `.`-terminated clause, `%` starts a line comment):
///
///     gate(N).
///     test_point_label(N, label).
///     is_connected(N, N | sink_atom).
///
/// Integers are decimal; atoms are lowercase identifiers. An atom in the
/// target position of is_connected names a lightbulb (conventionally
/// `lightbulb`).

#include <filesystem>
#include <string>
#include <string_view>

#include "faultlens/circuit/circuit.hpp"

namespace faultlens::circuit {

/// Parses and validates a fact document.
/// @throws ParseError on syntax errors, duplicate labels or labels on undeclared gates
/// @throws InvalidCircuitError when the resulting circuit has validation errors (e.g. a cycle)
[[nodiscard]] Circuit parse_circuit(std::string_view text);

/// Reads and parses a `.facts` file.
[[nodiscard]] Circuit load_circuit(const std::filesystem::path& path);

/// Canonical fact text; parse_circuit(to_facts(c)) reproduces c's relations.
[[nodiscard]] std::string to_facts(const Circuit& c);

}  // namespace faultlens::circuit
