#include "faultlens/circuit/circuit.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <sstream>

#include "faultlens/error.hpp"

namespace faultlens::circuit {

namespace {

const std::vector<Endpoint> kNoEndpoints;
const std::vector<NodeId> kNoNodes;

std::string join_nodes(const std::vector<NodeId>& nodes) {
    std::ostringstream out;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        if (i > 0) {
            out << ", ";
        }
        out << nodes[i].value;
    }
    return out.str();
}

// Strongly connected components with more than one node, or with a self-loop.
std::vector<std::vector<NodeId>> cyclic_components(
    const std::set<NodeId>& nodes, const std::map<NodeId, std::vector<Endpoint>>& successors) {
    std::map<NodeId, int> index;
    std::map<NodeId, int> lowlink;
    std::set<NodeId> on_stack;
    std::vector<NodeId> stack;
    std::vector<std::vector<NodeId>> result;
    int counter = 0;

    std::function<void(NodeId)> visit = [&](NodeId v) {
        index[v] = lowlink[v] = counter++;
        stack.push_back(v);
        on_stack.insert(v);
        if (auto it = successors.find(v); it != successors.end()) {
            for (const auto& target : it->second) {
                const auto* w = std::get_if<NodeId>(&target);
                if (w == nullptr) {
                    continue;
                }
                if (!index.contains(*w)) {
                    visit(*w);
                    lowlink[v] = std::min(lowlink[v], lowlink[*w]);
                } else if (on_stack.contains(*w)) {
                    lowlink[v] = std::min(lowlink[v], index[*w]);
                }
            }
        }
        if (lowlink[v] == index[v]) {
            std::vector<NodeId> component;
            NodeId w;
            do {
                w = stack.back();
                stack.pop_back();
                on_stack.erase(w);
                component.push_back(w);
            } while (w != v);
            bool self_loop = false;
            if (auto it = successors.find(v); it != successors.end()) {
                self_loop = std::find(it->second.begin(), it->second.end(), Endpoint{v}) !=
                            it->second.end();
            }
            if (component.size() > 1 || self_loop) {
                std::sort(component.begin(), component.end());
                result.push_back(std::move(component));
            }
        }
    };

    for (NodeId v : nodes) {
        if (!index.contains(v)) {
            visit(v);
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}

}  // namespace

std::string to_string(NodeId id) { return std::to_string(id.value); }

std::string to_string(const Endpoint& endpoint) {
    if (const auto* node = std::get_if<NodeId>(&endpoint)) {
        return to_string(*node);
    }
    return std::get<Sink>(endpoint).name;
}

Circuit::Circuit() { run_validation(); }

Circuit::Circuit(std::set<NodeId> gates, std::vector<Edge> edges, std::vector<TestPoint> test_points)
    : gates_(std::move(gates)), edges_(std::move(edges)), test_points_(std::move(test_points)) {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    std::sort(test_points_.begin(), test_points_.end(),
              [](const TestPoint& a, const TestPoint& b) {
                  return std::tie(a.label, a.gate) < std::tie(b.label, b.gate);
              });
    test_points_.erase(std::unique(test_points_.begin(), test_points_.end()), test_points_.end());
    build_adjacency();
    run_validation();
}

void Circuit::build_adjacency() {
    std::set<NodeId> targets;
    std::set<NodeId> origins;
    for (const auto& edge : edges_) {
        origins.insert(edge.from);
        successors_[edge.from].push_back(edge.to);
        if (const auto* node = std::get_if<NodeId>(&edge.to)) {
            targets.insert(*node);
            predecessors_[*node].push_back(edge.from);
        } else {
            const auto& sink = std::get<Sink>(edge.to).name;
            sinks_.insert(sink);
            sink_inputs_[sink].push_back(edge.from);
        }
    }
    for (NodeId origin : origins) {
        if (!gates_.contains(origin) && !targets.contains(origin)) {
            sources_.insert(origin);
        }
    }
    for (auto& [node, list] : predecessors_) {
        std::sort(list.begin(), list.end());
    }
    for (auto& [sink, list] : sink_inputs_) {
        std::sort(list.begin(), list.end());
    }
}

void Circuit::run_validation() {
    report_ = {};

    // Numeric edge targets must be declared gates.
    std::set<NodeId> all_nodes(gates_.begin(), gates_.end());
    for (const auto& edge : edges_) {
        all_nodes.insert(edge.from);
        if (const auto* node = std::get_if<NodeId>(&edge.to)) {
            all_nodes.insert(*node);
        }
    }
    for (NodeId node : all_nodes) {
        if (!gates_.contains(node) && !sources_.contains(node)) {
            report_.errors.push_back({"undeclared-target",
                                      "node " + to_string(node) +
                                          " is the target of a cable but not a declared gate",
                                      {node}});
        }
    }

    // Test points: attached to declared gates, unique labels, one per gate.
    std::map<std::string, std::vector<NodeId>> by_label;
    std::map<NodeId, std::vector<std::string>> by_gate;
    for (const auto& tp : test_points_) {
        by_label[tp.label].push_back(tp.gate);
        by_gate[tp.gate].push_back(tp.label);
        if (!gates_.contains(tp.gate)) {
            report_.errors.push_back({"dangling-label",
                                      "test point '" + tp.label + "' is attached to undeclared gate " +
                                          to_string(tp.gate),
                                      {tp.gate}});
        }
    }
    for (const auto& [label, owners] : by_label) {
        if (owners.size() > 1) {
            report_.errors.push_back({"duplicate-label",
                                      "test point label '" + label + "' is used by gates " +
                                          join_nodes(owners),
                                      owners});
        }
    }
    for (const auto& [gate, labels] : by_gate) {
        if (labels.size() > 1) {
            report_.errors.push_back({"duplicate-test-point",
                                      "gate " + to_string(gate) + " carries more than one test point",
                                      {gate}});
        }
    }

    for (auto& component : cyclic_components(all_nodes, successors_)) {
        report_.errors.push_back(
            {"cycle", "not acyclic: cycle through nodes " + join_nodes(component), component});
    }

    if (sinks_.empty()) {
        report_.warnings.push_back({"no-sink", "no sink: the circuit has no lightbulb", {}});
    }

    // Gates off every source-to-sink path.
    std::set<NodeId> forward;
    std::deque<NodeId> queue(sources_.begin(), sources_.end());
    forward.insert(sources_.begin(), sources_.end());
    while (!queue.empty()) {
        NodeId v = queue.front();
        queue.pop_front();
        for (const auto& target : successors(v)) {
            if (const auto* w = std::get_if<NodeId>(&target); w != nullptr && forward.insert(*w).second) {
                queue.push_back(*w);
            }
        }
    }
    std::set<NodeId> backward;
    for (const auto& [sink, inputs] : sink_inputs_) {
        for (NodeId v : inputs) {
            if (backward.insert(v).second) {
                queue.push_back(v);
            }
        }
    }
    while (!queue.empty()) {
        NodeId v = queue.front();
        queue.pop_front();
        for (NodeId w : predecessors(v)) {
            if (backward.insert(w).second) {
                queue.push_back(w);
            }
        }
    }
    for (NodeId gate : gates_) {
        if (!forward.contains(gate) || !backward.contains(gate)) {
            report_.warnings.push_back(
                {"off-path",
                 "gate " + to_string(gate) +
                     " unreachable/unproductive: not on any battery-to-lightbulb path",
                 {gate}});
        }
    }

    // Kahn's algorithm over gates; sources are always ready.
    topo_order_.clear();
    if (report_.ok()) {
        std::map<NodeId, std::size_t> pending;
        for (NodeId gate : gates_) {
            std::size_t count = 0;
            for (NodeId origin : predecessors(gate)) {
                if (gates_.contains(origin)) {
                    ++count;
                }
            }
            pending[gate] = count;
        }
        std::deque<NodeId> ready;
        for (const auto& [gate, count] : pending) {
            if (count == 0) {
                ready.push_back(gate);
            }
        }
        while (!ready.empty()) {
            NodeId v = ready.front();
            ready.pop_front();
            topo_order_.push_back(v);
            for (const auto& target : successors(v)) {
                if (const auto* w = std::get_if<NodeId>(&target); w != nullptr && --pending[*w] == 0) {
                    ready.push_back(*w);
                }
            }
        }
    }
}

bool Circuit::has_sink(std::string_view name) const { return sinks_.contains(std::string(name)); }

const std::vector<Endpoint>& Circuit::successors(NodeId id) const {
    auto it = successors_.find(id);
    return it == successors_.end() ? kNoEndpoints : it->second;
}

const std::vector<NodeId>& Circuit::predecessors(NodeId id) const {
    auto it = predecessors_.find(id);
    return it == predecessors_.end() ? kNoNodes : it->second;
}

const std::vector<NodeId>& Circuit::sink_inputs(std::string_view sink) const {
    auto it = sink_inputs_.find(sink);
    return it == sink_inputs_.end() ? kNoNodes : it->second;
}

std::optional<NodeId> Circuit::gate_for_label(std::string_view label) const {
    for (const auto& tp : test_points_) {
        if (tp.label == label) {
            return tp.gate;
        }
    }
    return std::nullopt;
}

std::optional<std::string> Circuit::label_for_gate(NodeId gate) const {
    for (const auto& tp : test_points_) {
        if (tp.gate == gate) {
            return tp.label;
        }
    }
    return std::nullopt;
}

const TestPoint& Circuit::test_point(std::string_view label) const {
    for (const auto& tp : test_points_) {
        if (tp.label == label) {
            return tp;
        }
    }
    throw NotFoundError("unknown test point '" + std::string(label) + "'");
}

void Circuit::require_valid() const {
    if (report_.ok()) {
        return;
    }
    std::string message = "invalid circuit:";
    for (const auto& finding : report_.errors) {
        message += " " + finding.message + ";";
    }
    message.pop_back();
    throw InvalidCircuitError(message);
}

ValidationReport validate(const Circuit& c) { return c.report(); }

}  // namespace faultlens::circuit
