#pragma once

/// @file random_circuits.hpp
/// @brief Test-only circuit fixtures and generators.

#include <random>
#include <set>
#include <string_view>

#include "faultlens/circuit/circuit.hpp"

namespace faultlens::testing {

/// The five-gate example circuit used throughout the tests.
inline constexpr std::string_view kExampleCircuit = R"(gate(1). gate(2). gate(3). gate(4). gate(5).

test_point_label(1, output_a).
test_point_label(2, output_b).
test_point_label(3, output_c).
test_point_label(4, output_d).
test_point_label(5, output_e).

is_connected(0, 1). is_connected(0, 2).
is_connected(1, 3). is_connected(2, 3).
is_connected(3, 4). is_connected(3, 5).
is_connected(4, lightbulb).
is_connected(5, lightbulb).
)";

struct RandomCircuitOptions {
    std::size_t max_gates = 12;
    /// Leave some gates without out-edges (validation warns, but the circuit stays usable).
    bool allow_dead_ends = true;
    /// Occasionally add a second, independent sub-circuit in group 1.
    bool allow_second_group = true;
};

/// Random validated DAG with test points on every gate.
[[nodiscard]] circuit::Circuit random_circuit(std::mt19937_64& rng,
                                              const RandomCircuitOptions& options = {});

/// Gate chain 1 -> 2 -> ... -> n -> lightbulb fed by battery 0, test point `t_XX` on every gate.
[[nodiscard]] circuit::Circuit chain_circuit(std::size_t n);

/// Literal marking procedure: start at the point, mark origins whose every
/// cable goes to the point, then keep marking gates whose every cable goes
/// to the point or a marked gate until nothing changes.
[[nodiscard]] std::set<circuit::NodeId> marking_procedure(const circuit::Circuit& c,
                                                          const circuit::Endpoint& point);

}  // namespace faultlens::testing
