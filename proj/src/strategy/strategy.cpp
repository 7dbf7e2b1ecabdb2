#include "faultlens/strategy/strategy.hpp"

#include <cmath>
#include <map>

#include "faultlens/error.hpp"

namespace faultlens::strategy {

using circuit::Endpoint;
using circuit::Sink;

HypothesisSet::HypothesisSet(std::initializer_list<std::uint32_t> ids) {
    for (auto id : ids) {
        members_.insert(NodeId{id});
    }
}

HypothesisSet HypothesisSet::all_gates(const Circuit& c) { return HypothesisSet(c.gates()); }

std::set<NodeId> exclusive_power_set(const Circuit& c, const Endpoint& point) {
    c.require_valid();
    std::set<std::uint32_t> groups;
    if (const auto* gate = std::get_if<NodeId>(&point)) {
        if (!c.is_gate(*gate)) {
            throw NotFoundError("unknown gate " + circuit::to_string(*gate));
        }
        groups.insert(circuit::circuit_group(*gate));
    } else {
        const auto& sink = std::get<Sink>(point).name;
        if (!c.has_sink(sink)) {
            throw NotFoundError("unknown sink '" + sink + "'");
        }
        for (NodeId origin : c.sink_inputs(sink)) {
            if (c.is_gate(origin)) {
                groups.insert(circuit::circuit_group(origin));
            }
        }
    }

    // On a DAG the fixpoint is unique; deciding gates after all their
    // successors yields it in one sweep.
    std::map<NodeId, bool> member;
    const auto& order = c.topological_order();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const NodeId gate = *it;
        bool in = Endpoint{gate} != point && groups.contains(circuit::circuit_group(gate));
        for (const auto& target : c.successors(gate)) {
            if (!in) {
                break;
            }
            if (target == point) {
                continue;
            }
            const auto* next = std::get_if<NodeId>(&target);
            in = next != nullptr && member[*next];
        }
        member[gate] = in;
    }

    std::set<NodeId> result;
    for (const auto& [gate, in] : member) {
        if (in) {
            result.insert(gate);
        }
    }
    return result;
}

Partition partition(const Circuit& c, std::string_view test, const HypothesisSet& hypotheses) {
    if (hypotheses.empty()) {
        throw InvalidArgumentError("empty hypothesis set");
    }
    const NodeId tested = c.test_point(test).gate;
    const auto dominated = exclusive_power_set(c, tested);
    const auto group = circuit::circuit_group(tested);

    Partition result;
    result.test = std::string(test);
    result.gate = tested;
    for (NodeId h : hypotheses.members()) {
        if (!c.is_gate(h)) {
            throw InvalidArgumentError("hypothesis " + circuit::to_string(h) + " is not a gate");
        }
        if (circuit::circuit_group(h) != group) {
            result.excluded.insert(h);
        } else if (h == tested || dominated.contains(h)) {
            result.inside.insert(h);
        } else {
            result.outside.insert(h);
        }
    }
    return result;
}

double minority_ratio(std::size_t inside, std::size_t outside) {
    const std::size_t total = inside + outside;
    if (total == 0) {
        throw InvalidArgumentError("minority ratio of an empty hypothesis set");
    }
    return static_cast<double>(std::min(inside, outside)) / static_cast<double>(total);
}

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw InvalidArgumentError("binary entropy needs p in [0, 1], got " + std::to_string(p));
    }
    auto term = [](double x) { return x > 0.0 ? -x * std::log2(x) : 0.0; };
    return term(p) + term(1.0 - p);
}

TestEvaluation evaluate_test(const Circuit& c, std::string_view test, const HypothesisSet& hypotheses) {
    TestEvaluation evaluation;
    evaluation.partition = partition(c, test, hypotheses);
    const auto sizes = evaluation.partition.sizes();
    if (sizes.total() == 0) {
        throw InvalidArgumentError("no hypothesis lies in the sub-circuit of test '" +
                                   std::string(test) + "'");
    }
    evaluation.minority_ratio = minority_ratio(sizes.inside, sizes.outside);
    evaluation.entropy = binary_entropy(evaluation.minority_ratio);
    return evaluation;
}

OptimalTest optimal_test(const Circuit& c, const HypothesisSet& hypotheses) {
    if (hypotheses.empty()) {
        throw InvalidArgumentError("empty hypothesis set");
    }
    std::set<std::uint32_t> groups;
    for (NodeId h : hypotheses.members()) {
        groups.insert(circuit::circuit_group(h));
    }

    std::optional<OptimalTest> best;
    for (const auto& tp : c.test_points()) {
        if (!groups.contains(circuit::circuit_group(tp.gate))) {
            continue;
        }
        const auto sizes = partition(c, tp.label, hypotheses).sizes();
        if (!best || sizes.smaller() > best->sizes.smaller()) {
            best = OptimalTest{tp.label, sizes};
        }
    }
    if (!best) {
        throw NotFoundError("no test points available for the hypothesis set");
    }
    return *best;
}

HypothesisSet prune(const HypothesisSet& hypotheses, const TestEvaluation& evaluation, Outcome outcome) {
    const auto& side =
        outcome == Outcome::Lit ? evaluation.partition.inside : evaluation.partition.outside;
    std::set<NodeId> survivors;
    for (NodeId h : side) {
        if (hypotheses.contains(h)) {
            survivors.insert(h);
        }
    }
    if (survivors.empty()) {
        throw ContradictoryEvidenceError("contradictory evidence: test '" + evaluation.test() +
                                         "' reported " + std::string(circuit::to_string(outcome)) +
                                         " but no hypothesis predicts it");
    }
    return HypothesisSet(std::move(survivors));
}

}  // namespace faultlens::strategy
