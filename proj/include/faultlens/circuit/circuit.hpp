#pragma once

/// @file circuit.hpp
/// @brief AND-gate circuit model: batteries, gates, lightbulbs and labelled test points.

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace faultlens::circuit {

/// Integer identifier of a gate or battery.
struct NodeId {
    std::uint32_t value = 0;

    friend auto operator<=>(const NodeId&, const NodeId&) = default;
};

/// Gates sharing floor(id / 100) form one sub-circuit.
[[nodiscard]] constexpr std::uint32_t circuit_group(NodeId id) { return id.value / 100; }

[[nodiscard]] std::string to_string(NodeId id);

/// A lightbulb, identified by the atom used in the fact file (usually `lightbulb`).
struct Sink {
    std::string name;

    friend auto operator<=>(const Sink&, const Sink&) = default;
};

/// Target of a cable: another node or a lightbulb.
using Endpoint = std::variant<NodeId, Sink>;

[[nodiscard]] std::string to_string(const Endpoint& endpoint);

struct Edge {
    NodeId from;
    Endpoint to;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// A test point taps the output terminal of `gate`.
struct TestPoint {
    NodeId gate;
    std::string label;

    friend auto operator<=>(const TestPoint&, const TestPoint&) = default;
};

struct Finding {
    std::string code;
    std::string message;
    std::vector<NodeId> nodes;
};

/// Errors make a circuit unusable; warnings are informational.
struct ValidationReport {
    std::vector<Finding> errors;
    std::vector<Finding> warnings;

    [[nodiscard]] bool ok() const { return errors.empty(); }
};

/// Immutable circuit graph.
///
/// Nodes that only ever appear as edge origins and are not declared gates are
/// batteries (always powered). Validation runs once at construction; the
/// result is available through report().
class Circuit {
  public:
    Circuit();
    Circuit(std::set<NodeId> gates, std::vector<Edge> edges, std::vector<TestPoint> test_points);

    [[nodiscard]] const std::set<NodeId>& gates() const { return gates_; }
    [[nodiscard]] const std::set<NodeId>& sources() const { return sources_; }
    [[nodiscard]] const std::set<std::string>& sinks() const { return sinks_; }
    [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
    /// Sorted by label.
    [[nodiscard]] const std::vector<TestPoint>& test_points() const { return test_points_; }

    [[nodiscard]] bool is_gate(NodeId id) const { return gates_.contains(id); }
    [[nodiscard]] bool is_source(NodeId id) const { return sources_.contains(id); }
    [[nodiscard]] bool has_sink(std::string_view name) const;

    /// Targets of the out-edges of `id`, sorted.
    [[nodiscard]] const std::vector<Endpoint>& successors(NodeId id) const;
    /// Origins of the in-edges of gate `id`, sorted.
    [[nodiscard]] const std::vector<NodeId>& predecessors(NodeId id) const;
    /// Origins of the in-edges of the named sink, sorted.
    [[nodiscard]] const std::vector<NodeId>& sink_inputs(std::string_view sink) const;

    [[nodiscard]] std::optional<NodeId> gate_for_label(std::string_view label) const;
    [[nodiscard]] std::optional<std::string> label_for_gate(NodeId gate) const;
    /// @throws NotFoundError if no test point carries `label`
    [[nodiscard]] const TestPoint& test_point(std::string_view label) const;

    [[nodiscard]] const ValidationReport& report() const { return report_; }
    [[nodiscard]] bool valid() const { return report_.ok(); }
    /// @throws InvalidCircuitError listing every validation error
    void require_valid() const;

    /// Gates in dependency order. Empty when the circuit is cyclic.
    [[nodiscard]] const std::vector<NodeId>& topological_order() const { return topo_order_; }

  private:
    void build_adjacency();
    void run_validation();

    std::set<NodeId> gates_;
    std::set<NodeId> sources_;
    std::set<std::string> sinks_;
    std::vector<Edge> edges_;
    std::vector<TestPoint> test_points_;

    std::map<NodeId, std::vector<Endpoint>> successors_;
    std::map<NodeId, std::vector<NodeId>> predecessors_;
    std::map<std::string, std::vector<NodeId>, std::less<>> sink_inputs_;

    std::vector<NodeId> topo_order_;
    ValidationReport report_;
};

/// Returns the findings computed when `c` was constructed.
[[nodiscard]] ValidationReport validate(const Circuit& c);

}  // namespace faultlens::circuit
