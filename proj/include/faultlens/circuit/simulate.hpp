#pragma once

/// @file simulate.hpp
/// @brief Single-fault propagation with optional power injection at a test point.

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "faultlens/circuit/circuit.hpp"

namespace faultlens::circuit {

struct FaultScenario {
    NodeId faulty_gate;
    /// Label of the test point where extra power is supplied, if any.
    std::optional<std::string> injection;
};

/// Power state of every battery, gate and lightbulb.
struct SignalState {
    std::map<NodeId, bool> nodes;
    std::map<std::string, bool> sinks;

    /// @throws NotFoundError for unknown nodes
    [[nodiscard]] bool powered(NodeId id) const;
    /// @throws NotFoundError for unknown sinks
    [[nodiscard]] bool lit(std::string_view sink) const;

    friend bool operator==(const SignalState&, const SignalState&) = default;
};

/// Evaluates the circuit in topological order.
///
/// A gate is powered iff it is not the faulty gate and every in-edge carries
/// power. An in-edge carries power iff its origin is a battery, its origin is
/// powered, or its origin's output terminal is the injection point. A sink is
/// lit iff every in-edge carries power.
///
/// @throws InvalidCircuitError if `c` failed validation
/// @throws NotFoundError for an unknown gate or injection label
[[nodiscard]] SignalState simulate(const Circuit& c, const FaultScenario& scenario);

enum class Outcome { Lit, Unlit };

[[nodiscard]] std::string_view to_string(Outcome outcome);

/// Sinks fed directly by a gate in the circuit group of the test's gate.
[[nodiscard]] std::vector<std::string> relevant_sinks(const Circuit& c, std::string_view test);

/// Lightbulb state after injecting power at `test` with `fault` present.
///
/// Without an explicit `sink`, the test's sub-circuit must feed exactly one
/// lightbulb; otherwise an InvalidArgumentError ("ambiguous outcome") is thrown.
[[nodiscard]] Outcome observed_outcome(const Circuit& c, NodeId fault, std::string_view test,
                                       std::optional<std::string_view> sink = std::nullopt);

}  // namespace faultlens::circuit
