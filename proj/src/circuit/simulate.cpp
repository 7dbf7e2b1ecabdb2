#include "faultlens/circuit/simulate.hpp"

#include <set>

#include "faultlens/error.hpp"

namespace faultlens::circuit {

bool SignalState::powered(NodeId id) const {
    auto it = nodes.find(id);
    if (it == nodes.end()) {
        throw NotFoundError("unknown node " + to_string(id));
    }
    return it->second;
}

bool SignalState::lit(std::string_view sink) const {
    auto it = sinks.find(std::string(sink));
    if (it == sinks.end()) {
        throw NotFoundError("unknown sink '" + std::string(sink) + "'");
    }
    return it->second;
}

SignalState simulate(const Circuit& c, const FaultScenario& scenario) {
    c.require_valid();
    if (!c.is_gate(scenario.faulty_gate)) {
        throw NotFoundError("unknown gate " + to_string(scenario.faulty_gate));
    }
    std::optional<NodeId> injected;
    if (scenario.injection) {
        injected = c.test_point(*scenario.injection).gate;
    }

    SignalState state;
    for (NodeId source : c.sources()) {
        state.nodes[source] = true;
    }
    auto carries = [&](NodeId origin) {
        return c.is_source(origin) || state.nodes.at(origin) || origin == injected;
    };
    for (NodeId gate : c.topological_order()) {
        bool on = gate != scenario.faulty_gate;
        for (NodeId origin : c.predecessors(gate)) {
            on = on && carries(origin);
        }
        state.nodes[gate] = on;
    }
    for (const auto& sink : c.sinks()) {
        bool on = true;
        for (NodeId origin : c.sink_inputs(sink)) {
            on = on && carries(origin);
        }
        state.sinks[sink] = on;
    }
    return state;
}

std::string_view to_string(Outcome outcome) { return outcome == Outcome::Lit ? "lit" : "unlit"; }

std::vector<std::string> relevant_sinks(const Circuit& c, std::string_view test) {
    const auto group = circuit_group(c.test_point(test).gate);
    std::vector<std::string> result;
    for (const auto& sink : c.sinks()) {
        for (NodeId origin : c.sink_inputs(sink)) {
            if (c.is_gate(origin) && circuit_group(origin) == group) {
                result.push_back(sink);
                break;
            }
        }
    }
    return result;
}

Outcome observed_outcome(const Circuit& c, NodeId fault, std::string_view test,
                         std::optional<std::string_view> sink) {
    std::string target;
    if (sink) {
        if (!c.has_sink(*sink)) {
            throw NotFoundError("unknown sink '" + std::string(*sink) + "'");
        }
        target = std::string(*sink);
    } else {
        auto candidates = relevant_sinks(c, test);
        if (candidates.size() != 1) {
            throw InvalidArgumentError("ambiguous outcome: test '" + std::string(test) + "' reaches " +
                                       std::to_string(candidates.size()) +
                                       " lightbulbs; name the sink to observe");
        }
        target = candidates.front();
    }
    const auto state = simulate(c, {fault, std::string(test)});
    return state.lit(target) ? Outcome::Lit : Outcome::Unlit;
}

}  // namespace faultlens::circuit
