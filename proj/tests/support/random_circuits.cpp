#include "random_circuits.hpp"

#include <cstdio>
#include <string>

namespace faultlens::testing {

using circuit::Circuit;
using circuit::Edge;
using circuit::Endpoint;
using circuit::NodeId;
using circuit::Sink;
using circuit::TestPoint;

namespace {

std::string two_digits(std::size_t value) {
    char buffer[24];
    std::snprintf(buffer, sizeof buffer, "%02zu", value);
    return buffer;
}

}  // namespace

Circuit random_circuit(std::mt19937_64& rng, const RandomCircuitOptions& options) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const std::size_t groups = options.allow_second_group && unit(rng) < 0.2 ? 2 : 1;

    std::set<NodeId> gates;
    std::vector<Edge> edges;
    std::vector<TestPoint> points;

    for (std::size_t group = 0; group < groups; ++group) {
        const std::uint32_t base = static_cast<std::uint32_t>(group * 100);
        const std::size_t budget = options.max_gates / groups;
        const std::size_t count = std::uniform_int_distribution<std::size_t>(1, budget)(rng);
        const Sink sink{group == 0 ? "lightbulb" : "lightbulb_b"};

        std::vector<NodeId> batteries{NodeId{base}};
        if (unit(rng) < 0.3) {
            batteries.push_back(NodeId{base + 99});
        }
        std::vector<NodeId> ids;
        for (std::size_t i = 1; i <= count; ++i) {
            const NodeId id{base + static_cast<std::uint32_t>(i)};
            ids.push_back(id);
            gates.insert(id);
            points.push_back({id, "t" + std::to_string(group) + "_" + two_digits(i)});
        }

        std::vector<std::size_t> out_degree(count, 0);
        for (std::size_t i = 0; i < count; ++i) {
            // Each gate draws 1-3 inputs from batteries and earlier gates.
            const std::size_t pool = batteries.size() + i;
            const std::size_t fan_in = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(3, pool))(rng);
            std::set<std::size_t> picks;
            while (picks.size() < fan_in) {
                picks.insert(std::uniform_int_distribution<std::size_t>(0, pool - 1)(rng));
            }
            for (std::size_t pick : picks) {
                if (pick < batteries.size()) {
                    edges.push_back({batteries[pick], ids[i]});
                } else {
                    const std::size_t from = pick - batteries.size();
                    edges.push_back({ids[from], ids[i]});
                    ++out_degree[from];
                }
            }
        }

        bool sink_fed = false;
        for (std::size_t i = 0; i < count; ++i) {
            const bool last = i + 1 == count;
            if (out_degree[i] == 0) {
                if (!last && options.allow_dead_ends && unit(rng) < 0.15) {
                    continue;
                }
                edges.push_back({ids[i], sink});
                sink_fed = true;
            } else if (unit(rng) < 0.15) {
                edges.push_back({ids[i], sink});
                sink_fed = true;
            }
        }
        if (!sink_fed) {
            edges.push_back({ids.back(), sink});
        }
    }
    return Circuit(std::move(gates), std::move(edges), std::move(points));
}

Circuit chain_circuit(std::size_t n) {
    std::set<NodeId> gates;
    std::vector<Edge> edges{{NodeId{0}, NodeId{1}}};
    std::vector<TestPoint> points;
    for (std::uint32_t i = 1; i <= n; ++i) {
        gates.insert(NodeId{i});
        points.push_back({NodeId{i}, "t_" + two_digits(i)});
        if (i < n) {
            edges.push_back({NodeId{i}, NodeId{i + 1}});
        } else {
            edges.push_back({NodeId{i}, Sink{"lightbulb"}});
        }
    }
    return Circuit(std::move(gates), std::move(edges), std::move(points));
}

std::set<NodeId> marking_procedure(const Circuit& c, const Endpoint& point) {
    std::set<std::uint32_t> groups;
    std::vector<NodeId> incoming;
    if (const auto* gate = std::get_if<NodeId>(&point)) {
        groups.insert(circuit::circuit_group(*gate));
        incoming = c.predecessors(*gate);
    } else {
        incoming = c.sink_inputs(std::get<Sink>(point).name);
        for (NodeId origin : incoming) {
            groups.insert(circuit::circuit_group(origin));
        }
    }
    auto eligible = [&](NodeId g) {
        return c.is_gate(g) && Endpoint{g} != point && groups.contains(circuit::circuit_group(g));
    };

    std::set<NodeId> marked;
    for (NodeId origin : incoming) {
        if (!eligible(origin)) {
            continue;
        }
        bool only_point = true;
        for (const auto& target : c.successors(origin)) {
            only_point = only_point && target == point;
        }
        if (only_point) {
            marked.insert(origin);
        }
    }
    bool changed = true;
    while (changed) {
        changed = false;
        for (NodeId g : c.gates()) {
            if (marked.contains(g) || !eligible(g) || c.successors(g).empty()) {
                continue;
            }
            bool all = true;
            for (const auto& target : c.successors(g)) {
                const auto* next = std::get_if<NodeId>(&target);
                all = all && (target == point || (next != nullptr && marked.contains(*next)));
            }
            if (all) {
                marked.insert(g);
                changed = true;
            }
        }
    }
    return marked;
}

}  // namespace faultlens::testing
