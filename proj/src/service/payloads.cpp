#include "faultlens/service/payloads.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "faultlens/error.hpp"
#include "faultlens/strategy/strategy.hpp"

namespace faultlens::service {

using nlohmann::json;

std::string node_key(const circuit::Circuit& c, circuit::NodeId id) {
    return (c.is_source(id) ? "source:" : "gate:") + std::to_string(id.value);
}

std::string sink_key(std::string_view sink) { return "sink:" + std::string(sink); }

std::string endpoint_key(const circuit::Circuit& c, const circuit::Endpoint& endpoint) {
    if (const auto* node = std::get_if<circuit::NodeId>(&endpoint)) {
        return node_key(c, *node);
    }
    return sink_key(std::get<circuit::Sink>(endpoint).name);
}

std::string edge_key(const circuit::Circuit& c, const circuit::Edge& edge) {
    return node_key(c, edge.from) + "->" + endpoint_key(c, edge.to);
}

Layout Layout::parse(std::string_view text) {
    json document;
    try {
        document = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed layout JSON: ") + e.what(), 1, 1);
    }
    if (!document.is_object() || document.value("schema", "") != "faultlens.layout/1" ||
        !document.contains("graphs") || !document["graphs"].is_object()) {
        throw ParseError("layout must be a faultlens.layout/1 object with a 'graphs' map", 1, 1);
    }
    Layout layout;
    for (const auto& [graph, nodes] : document["graphs"].items()) {
        if (!nodes.is_object()) {
            throw ParseError("layout graph '" + graph + "' must map node ids to positions", 1, 1);
        }
        auto& out = layout.graphs_[graph];
        for (const auto& [node, pos] : nodes.items()) {
            if (!pos.is_object() || !pos.contains("x") || !pos.contains("y") || !pos["x"].is_number() ||
                !pos["y"].is_number()) {
                throw ParseError("layout position of '" + node + "' in '" + graph + "' needs numeric x and y", 1, 1);
            }
            out[node] = {pos["x"].get<double>(), pos["y"].get<double>()};
        }
    }
    return layout;
}

Layout Layout::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw NotFoundError("cannot open layout file '" + path.string() + "'");
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse(text.str());
}

const std::map<std::string, Position, std::less<>>& Layout::graph(std::string_view id) const {
    static const std::map<std::string, Position, std::less<>> empty;
    const auto it = graphs_.find(id);
    return it == graphs_.end() ? empty : it->second;
}

json to_json(const Highlights& highlights) {
    return {{"nodes", highlights.nodes}, {"edges", highlights.edges}};
}

json graph_json(const circuit::Circuit& c, std::string_view graph_id, const Layout& layout,
                const std::map<std::string, std::string>& names) {
    const auto& positions = layout.graph(graph_id);
    json nodes = json::array();
    auto add = [&](const std::string& key, std::string_view kind, std::string display, const json& test_point) {
        if (auto it = names.find(key); it != names.end()) {
            display = it->second;
        }
        json node{{"id", key}, {"kind", kind}, {"display", display}, {"test_point", test_point}};
        if (auto it = positions.find(key); it != positions.end()) {
            node["position"] = {{"x", it->second.x}, {"y", it->second.y}};
        }
        nodes.push_back(std::move(node));
    };
    for (auto source : c.sources()) {
        add(node_key(c, source), "source", "", nullptr);
    }
    for (auto gate : c.gates()) {
        const auto label = c.label_for_gate(gate);
        add(node_key(c, gate), "gate", std::to_string(gate.value), label ? json(*label) : json(nullptr));
    }
    for (const auto& sink : c.sinks()) {
        add(sink_key(sink), "sink", sink, nullptr);
    }
    json edges = json::array();
    for (const auto& edge : c.edges()) {
        edges.push_back({{"id", edge_key(c, edge)}, {"from", node_key(c, edge.from)}, {"to", endpoint_key(c, edge.to)}});
    }
    return {{"id", graph_id}, {"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

Highlights exclusive_highlights(const circuit::Circuit& c, const circuit::Endpoint& point, bool include_sources) {
    const auto members = strategy::exclusive_power_set(c, point);
    std::set<circuit::NodeId> highlighted(members.begin(), members.end());
    if (const auto* gate = std::get_if<circuit::NodeId>(&point)) {
        highlighted.insert(*gate);
    }
    if (include_sources) {
        for (auto source : c.sources()) {
            bool all_in = true;
            for (const auto& target : c.successors(source)) {
                const auto* next = std::get_if<circuit::NodeId>(&target);
                all_in = all_in && (target == point || (next != nullptr && members.contains(*next)));
            }
            if (all_in) {
                highlighted.insert(source);
            }
        }
    }

    Highlights out;
    for (auto id : highlighted) {
        out.nodes.push_back(node_key(c, id));
    }
    if (const auto* sink = std::get_if<circuit::Sink>(&point)) {
        out.nodes.push_back(sink_key(sink->name));
    }
    for (const auto& edge : c.edges()) {
        if (highlighted.contains(edge.from) && !(std::get_if<circuit::NodeId>(&point) &&
                                                 edge.from == std::get<circuit::NodeId>(point))) {
            out.edges.push_back(edge_key(c, edge));
        }
    }
    return out;
}

}  // namespace faultlens::service
