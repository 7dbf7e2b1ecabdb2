#include "faultlens/study/domains.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "faultlens/error.hpp"

namespace faultlens::study {

using circuit::Edge;
using circuit::NodeId;
using circuit::Sink;
using circuit::TestPoint;

std::string_view to_string(Domain domain) {
    switch (domain) {
    case Domain::Circuits:
        return "circuits";
    case Domain::Waterflow:
        return "waterflow";
    case Domain::Lists:
        return "lists";
    }
    return "circuits";
}

Domain parse_domain(std::string_view name) {
    for (Domain d : {Domain::Circuits, Domain::Waterflow, Domain::Lists}) {
        if (to_string(d) == name) {
            return d;
        }
    }
    throw InvalidArgumentError("unknown domain '" + std::string(name) + "'");
}

const Vocabulary& vocabulary(Domain domain) {
    static const Vocabulary circuits{"battery", "gate", "lightbulb", "test point"};
    static const Vocabulary waterflow{"pump", "junction", "outlet", "pressure measurement"};
    static const Vocabulary lists{"start", "position", "end", "split"};
    switch (domain) {
    case Domain::Waterflow:
        return waterflow;
    case Domain::Lists:
        return lists;
    case Domain::Circuits:
        break;
    }
    return circuits;
}

TrialItem make_item(std::string id, Domain domain, Circuit c) {
    std::vector<std::string> options;
    for (const auto& tp : c.test_points()) {
        options.push_back(tp.label);
    }
    auto hypotheses = HypothesisSet::all_gates(c);
    return make_item(std::move(id), domain, std::move(c), std::move(options), std::move(hypotheses));
}

TrialItem make_item(std::string id, Domain domain, Circuit c, std::vector<std::string> options,
                    HypothesisSet hypotheses) {
    c.require_valid();
    if (options.empty()) {
        throw InvalidArgumentError("trial item '" + id + "' offers no options");
    }
    if (hypotheses.empty()) {
        throw InvalidArgumentError("trial item '" + id + "' has no hypotheses");
    }
    std::set<std::string> seen;
    for (const auto& option : options) {
        if (!c.gate_for_label(option)) {
            throw InvalidArgumentError("option '" + option + "' is not a test point");
        }
        if (!seen.insert(option).second) {
            throw InvalidArgumentError("option '" + option + "' is listed twice");
        }
    }
    for (NodeId h : hypotheses.members()) {
        if (!c.is_gate(h)) {
            throw InvalidArgumentError("hypothesis " + circuit::to_string(h) + " is not a gate");
        }
    }
    TrialItem item;
    item.id = std::move(id);
    item.domain = domain;
    item.circuit = std::make_shared<const Circuit>(std::move(c));
    item.options = std::move(options);
    item.hypotheses = std::move(hypotheses);
    return item;
}

RelabelMap::RelabelMap(std::map<std::string, std::string> tokens) : tokens_(std::move(tokens)) {
    if (tokens_.empty()) {
        throw InvalidArgumentError("relabel map is empty");
    }
    std::set<std::string> targets;
    for (const auto& [from, to] : tokens_) {
        if (from.empty() || to.empty() || from.find('_') != std::string::npos ||
            to.find('_') != std::string::npos) {
            throw InvalidArgumentError("relabel tokens must be non-empty and contain no underscore");
        }
        if (from == to) {
            throw InvalidArgumentError("relabel map sends '" + from + "' to itself");
        }
        if (!targets.insert(to).second) {
            throw InvalidArgumentError("relabel map is not injective: '" + to + "' used twice");
        }
    }
}

RelabelMap RelabelMap::inverse() const {
    std::map<std::string, std::string> reversed;
    for (const auto& [from, to] : tokens_) {
        reversed.emplace(to, from);
    }
    return RelabelMap(std::move(reversed));
}

std::string RelabelMap::apply(std::string_view label) const {
    std::string out;
    std::size_t start = 0;
    while (true) {
        const auto end = label.find('_', start);
        const auto token = label.substr(start, end == std::string_view::npos ? end : end - start);
        const auto it = tokens_.find(std::string(token));
        out += it == tokens_.end() ? std::string(token) : it->second;
        if (end == std::string_view::npos) {
            break;
        }
        out += '_';
        start = end + 1;
    }
    return out;
}

Circuit RelabelMap::apply(const Circuit& c) const {
    const RelabelMap back = inverse();
    std::set<std::string> produced;
    auto rename = [&](const std::string& name) {
        std::string renamed = apply(name);
        if (back.apply(renamed) != name) {
            throw InvalidArgumentError("relabelling '" + name + "' cannot be undone");
        }
        return renamed;
    };

    std::vector<TestPoint> points;
    for (const auto& tp : c.test_points()) {
        points.push_back({tp.gate, rename(tp.label)});
        if (!produced.insert(points.back().label).second) {
            throw InvalidArgumentError("relabelling merges two names into '" + points.back().label + "'");
        }
    }
    std::set<std::string> sinks;
    for (const auto& sink : c.sinks()) {
        const auto renamed = rename(sink);
        if (!sinks.insert(renamed).second) {
            throw InvalidArgumentError("relabelling merges two sinks into '" + renamed + "'");
        }
    }
    std::vector<Edge> edges;
    for (const auto& edge : c.edges()) {
        if (const auto* sink = std::get_if<Sink>(&edge.to)) {
            edges.push_back({edge.from, Sink{apply(sink->name)}});
        } else {
            edges.push_back(edge);
        }
    }
    return Circuit(c.gates(), std::move(edges), std::move(points));
}

const RelabelMap& waterflow_relabeling() {
    static const RelabelMap map({{"battery", "pump"},
                                 {"gate", "junction"},
                                 {"lightbulb", "outlet"},
                                 {"output", "pressure"}});
    return map;
}

TrialItem map_waterflow(const TrialItem& circuits_item, const RelabelMap& map) {
    std::vector<std::string> options;
    options.reserve(circuits_item.options.size());
    for (const auto& option : circuits_item.options) {
        options.push_back(map.apply(option));
    }
    return make_item(circuits_item.id, Domain::Waterflow, map.apply(*circuits_item.circuit),
                     std::move(options), circuits_item.hypotheses);
}

TrialItem map_waterflow(const Circuit& c, const RelabelMap& map) {
    return map_waterflow(make_item("waterflow", Domain::Circuits, c), map);
}

std::string split_label(std::size_t i) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "split_%02zu", i);
    return buffer;
}

TrialItem list_to_circuit(std::size_t n) {
    if (n < 2 || n > 99) {
        throw InvalidArgumentError("list length must lie in [2, 99], got " + std::to_string(n));
    }
    std::set<NodeId> gates;
    std::vector<Edge> edges;
    std::vector<TestPoint> points;
    for (std::uint32_t i = 1; i <= n; ++i) {
        gates.insert(NodeId{i});
        edges.push_back({NodeId{i - 1}, NodeId{i}});
        if (i < n) {
            points.push_back({NodeId{i}, split_label(i)});
        }
    }
    edges.push_back({NodeId{static_cast<std::uint32_t>(n)}, Sink{"lightbulb"}});

    std::vector<std::string> options;
    for (std::size_t i = 1; i < n; ++i) {
        options.push_back(split_label(i));
    }
    Circuit c(gates, std::move(edges), std::move(points));
    auto hypotheses = HypothesisSet(gates);
    return make_item("list_" + std::to_string(n), Domain::Lists, std::move(c), std::move(options),
                     std::move(hypotheses));
}

}  // namespace faultlens::study
