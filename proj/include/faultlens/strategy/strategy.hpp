#pragma once

/// @file strategy.hpp
/// @brief Information-gain test selection for single-fault diagnosis.
///
/// The five building blocks mirror the learned strategy: the exclusive-power
/// fixpoint, hypothesis partitioning, partition sizing, balanced-partition
/// comparison and locally optimal test selection.

#include <cstddef>
#include <initializer_list>
#include <set>
#include <string>
#include <string_view>

#include "faultlens/circuit/circuit.hpp"
#include "faultlens/circuit/simulate.hpp"

namespace faultlens::strategy {

using circuit::Circuit;
using circuit::NodeId;
using circuit::Outcome;

/// Candidate faulty gates, all with equal prior weight.
class HypothesisSet {
  public:
    HypothesisSet() = default;
    explicit HypothesisSet(std::set<NodeId> members) : members_(std::move(members)) {}
    HypothesisSet(std::initializer_list<std::uint32_t> ids);

    /// Every gate of `c`.
    [[nodiscard]] static HypothesisSet all_gates(const Circuit& c);

    [[nodiscard]] const std::set<NodeId>& members() const { return members_; }
    [[nodiscard]] std::size_t size() const { return members_.size(); }
    [[nodiscard]] bool empty() const { return members_.empty(); }
    [[nodiscard]] bool contains(NodeId id) const { return members_.contains(id); }

    friend bool operator==(const HypothesisSet&, const HypothesisSet&) = default;

  private:
    std::set<NodeId> members_;
};

/// Number of hypotheses on each side of a test: (inside, outside).
struct PartitionSizes {
    std::size_t inside = 0;
    std::size_t outside = 0;

    [[nodiscard]] std::size_t smaller() const { return inside < outside ? inside : outside; }
    [[nodiscard]] std::size_t total() const { return inside + outside; }

    friend bool operator==(const PartitionSizes&, const PartitionSizes&) = default;
};

/// Split of a hypothesis set by one test.
///
/// `inside` holds the hypotheses consistent with a lit lightbulb, `outside`
/// those consistent with an unlit one. Hypotheses in other sub-circuits than
/// the tested gate are listed in `excluded` and belong to neither side.
struct Partition {
    std::string test;
    NodeId gate;
    std::set<NodeId> inside;
    std::set<NodeId> outside;
    std::set<NodeId> excluded;

    [[nodiscard]] PartitionSizes sizes() const { return {inside.size(), outside.size()}; }
};

struct TestEvaluation {
    Partition partition;
    double minority_ratio = 0.0;
    /// Expected information gain in bits, H_b(minority_ratio).
    double entropy = 0.0;

    [[nodiscard]] const std::string& test() const { return partition.test; }
};

struct OptimalTest {
    std::string label;
    PartitionSizes sizes;
};

/// Gates whose every out-edge leads to `point` or to another member.
///
/// This is the least fixed point S of: g is in S iff g != point, g lies in the
/// circuit group of `point` and every out-edge of g targets `point` or a
/// member of S. For a lightbulb, its group is any group of a gate feeding it.
///
/// @throws InvalidCircuitError if `c` failed validation
/// @throws NotFoundError for an unknown gate or sink
[[nodiscard]] std::set<NodeId> exclusive_power_set(const Circuit& c, const circuit::Endpoint& point);

/// Splits `hypotheses` by the test labelled `test`.
/// @throws NotFoundError for an unknown test label
/// @throws InvalidArgumentError if `hypotheses` is empty
[[nodiscard]] Partition partition(const Circuit& c, std::string_view test,
                                  const HypothesisSet& hypotheses);

/// min(inside, outside) / (inside + outside).
/// @throws InvalidArgumentError when both counts are zero
[[nodiscard]] double minority_ratio(std::size_t inside, std::size_t outside);

/// -p log2 p - (1-p) log2 (1-p), with 0 log2 0 = 0.
/// @throws InvalidArgumentError for p outside [0, 1]
[[nodiscard]] double binary_entropy(double p);

[[nodiscard]] TestEvaluation evaluate_test(const Circuit& c, std::string_view test,
                                           const HypothesisSet& hypotheses);

/// Test with the largest smaller partition; ties go to the lexicographically
/// first label. Only test points in the circuit groups of `hypotheses` compete.
/// @throws NotFoundError if no such test point exists
[[nodiscard]] OptimalTest optimal_test(const Circuit& c, const HypothesisSet& hypotheses);

/// Hypotheses surviving an observation: `inside` when lit, `outside` when unlit.
/// @throws ContradictoryEvidenceError if no hypothesis survives
[[nodiscard]] HypothesisSet prune(const HypothesisSet& hypotheses, const TestEvaluation& evaluation,
                                  Outcome outcome);

}  // namespace faultlens::strategy
