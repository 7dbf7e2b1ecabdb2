/// @file test_circuit.cpp
/// @brief Fact parsing, validation and fault simulation.

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include "faultlens/circuit/facts.hpp"
#include "faultlens/circuit/simulate.hpp"
#include "faultlens/error.hpp"
#include "support/random_circuits.hpp"

using namespace faultlens;
using namespace faultlens::circuit;
using faultlens::testing::kExampleCircuit;

namespace {

bool has_code(const std::vector<Finding>& findings, std::string_view code) {
    return std::any_of(findings.begin(), findings.end(),
                       [&](const Finding& f) { return f.code == code; });
}

}  // namespace

TEST_CASE("Example fact document parses into its relations", "[facts]") {
    const auto c = parse_circuit(kExampleCircuit);
    CHECK(c.gates().size() == 5);
    CHECK(c.sources() == std::set<NodeId>{NodeId{0}});
    CHECK(c.sinks() == std::set<std::string>{"lightbulb"});
    CHECK(c.test_points().size() == 5);
    CHECK(c.edges().size() == 8);
    CHECK(c.gate_for_label("output_c") == NodeId{3});
    CHECK(c.label_for_gate(NodeId{5}) == "output_e");
    CHECK(validate(c).errors.empty());
    CHECK(validate(c).warnings.empty());
}

TEST_CASE("Empty document yields an empty circuit with a no-sink warning", "[facts]") {
    const auto c = parse_circuit("");
    CHECK(c.gates().empty());
    CHECK(c.edges().empty());
    REQUIRE(c.report().warnings.size() == 1);
    CHECK(c.report().warnings[0].message.find("no sink") != std::string::npos);
}

TEST_CASE("Comments and free whitespace are ignored", "[facts]") {
    const auto c = parse_circuit("% header\ngate( 1 ) .   % trailing\n\n is_connected(0,1).is_connected(1,lightbulb).");
    CHECK(c.gates().size() == 1);
    CHECK(c.edges().size() == 2);
}

TEST_CASE("A back edge is reported as a cycle naming its nodes", "[facts]") {
    std::string text(kExampleCircuit);
    text += "is_connected(3, 1).\n";
    try {
        (void)parse_circuit(text);
        FAIL("expected a cycle error");
    } catch (const InvalidCircuitError& e) {
        const std::string message = e.what();
        CHECK(message.find("not acyclic") != std::string::npos);
        CHECK(message.find("1, 3") != std::string::npos);
    }

    const Circuit direct({NodeId{1}, NodeId{3}},
                         {{NodeId{0}, NodeId{1}}, {NodeId{1}, NodeId{3}}, {NodeId{3}, NodeId{1}},
                          {NodeId{3}, Sink{"lightbulb"}}},
                         {});
    REQUIRE(has_code(direct.report().errors, "cycle"));
    CHECK(direct.report().errors[0].nodes == std::vector<NodeId>{NodeId{1}, NodeId{3}});
}

TEST_CASE("Syntax errors carry a position", "[facts]") {
    try {
        (void)parse_circuit("gate(1).\ngate(2)\ngate(3).");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(e.column() == 1);
    }
    CHECK_THROWS_AS(parse_circuit("gate(x)."), ParseError);
    CHECK_THROWS_AS(parse_circuit("gate(1)"), ParseError);
    CHECK_THROWS_AS(parse_circuit("Gate(1)."), ParseError);
    CHECK_THROWS_AS(parse_circuit("wire(1, 2)."), ParseError);
    CHECK_THROWS_AS(parse_circuit("gate(1). is_connected(lightbulb, 1)."), ParseError);
}

TEST_CASE("Label errors are rejected at parse time", "[facts]") {
    CHECK_THROWS_AS(parse_circuit("gate(1). gate(2). test_point_label(1, a). test_point_label(2, a)."),
                    ParseError);
    CHECK_THROWS_AS(parse_circuit("gate(1). test_point_label(7, a)."), ParseError);
    CHECK_THROWS_AS(parse_circuit("gate(1). test_point_label(1, a). test_point_label(1, b)."),
                    ParseError);
    // Repeating an identical fact is harmless.
    CHECK_NOTHROW(parse_circuit("gate(1). test_point_label(1, a). test_point_label(1, a)."));
}

TEST_CASE("Validation findings", "[validate]") {
    SECTION("isolated gate is a warning") {
        std::string text(kExampleCircuit);
        text += "gate(7).\n";
        const auto c = parse_circuit(text);
        CHECK(c.valid());
        REQUIRE(c.report().warnings.size() == 1);
        CHECK(c.report().warnings[0].message.find("gate 7 unreachable/unproductive") !=
              std::string::npos);
    }
    SECTION("two-gate cycle is an error") {
        const Circuit c({NodeId{1}, NodeId{2}},
                        {{NodeId{1}, NodeId{2}}, {NodeId{2}, NodeId{1}}, {NodeId{2}, Sink{"lightbulb"}}},
                        {});
        CHECK_FALSE(c.valid());
        CHECK(c.report().errors[0].message.find("not acyclic") != std::string::npos);
        CHECK(c.topological_order().empty());
        CHECK_THROWS_AS(simulate(c, {NodeId{1}, std::nullopt}), InvalidCircuitError);
    }
    SECTION("undeclared edge target and dangling label are errors") {
        const Circuit c({NodeId{1}}, {{NodeId{0}, NodeId{1}}, {NodeId{1}, NodeId{9}}},
                        {{NodeId{4}, "ghost"}});
        CHECK(has_code(c.report().errors, "undeclared-target"));
        CHECK(has_code(c.report().errors, "dangling-label"));
    }
}

TEST_CASE("Simulation follows AND semantics with injection", "[simulate]") {
    const auto c = parse_circuit(kExampleCircuit);

    SECTION("fault 4, inject at output_c: gate 4 dead blocks a sink input") {
        const auto s = simulate(c, {NodeId{4}, "output_c"});
        CHECK_FALSE(s.powered(NodeId{4}));
        CHECK(s.powered(NodeId{5}));
        CHECK_FALSE(s.lit("lightbulb"));
    }
    SECTION("fault 1, inject at output_c: injection feeds gates 4 and 5") {
        const auto s = simulate(c, {NodeId{1}, "output_c"});
        CHECK_FALSE(s.powered(NodeId{1}));
        CHECK_FALSE(s.powered(NodeId{3}));
        CHECK(s.powered(NodeId{4}));
        CHECK(s.powered(NodeId{5}));
        CHECK(s.lit("lightbulb"));
    }
    SECTION("without injection any single fault darkens the bulb") {
        for (NodeId g : c.gates()) {
            CHECK_FALSE(simulate(c, {g, std::nullopt}).lit("lightbulb"));
        }
    }
    SECTION("unknown gate or label") {
        CHECK_THROWS_AS(simulate(c, {NodeId{42}, std::nullopt}), NotFoundError);
        CHECK_THROWS_AS(simulate(c, {NodeId{1}, "output_z"}), NotFoundError);
    }
}

TEST_CASE("Injection at the faulty gate's own output masks the fault downstream", "[simulate]") {
    const auto c = parse_circuit(kExampleCircuit);
    for (const auto& tp : c.test_points()) {
        const auto masked = simulate(c, {tp.gate, tp.label});
        CHECK(masked.lit("lightbulb"));
        // Every gate downstream of the faulty one is powered exactly as with no fault at all.
        for (const auto& target : c.successors(tp.gate)) {
            if (const auto* next = std::get_if<NodeId>(&target)) {
                CHECK(masked.powered(*next));
            }
        }
    }
}

TEST_CASE("Observed outcomes for the example circuit", "[simulate]") {
    const auto c = parse_circuit(kExampleCircuit);
    CHECK(observed_outcome(c, NodeId{3}, "output_c") == Outcome::Lit);
    CHECK(observed_outcome(c, NodeId{5}, "output_c") == Outcome::Unlit);
    CHECK(observed_outcome(c, NodeId{2}, "output_a") == Outcome::Unlit);
    CHECK(observed_outcome(c, NodeId{2}, "output_a", "lightbulb") == Outcome::Unlit);
    CHECK_THROWS_AS(observed_outcome(c, NodeId{2}, "output_a", "lamp"), NotFoundError);
}

TEST_CASE("Several lightbulbs in one sub-circuit make the outcome ambiguous", "[simulate]") {
    const auto c = parse_circuit(
        "gate(1). gate(2). test_point_label(1, a)."
        "is_connected(0, 1). is_connected(1, 2). is_connected(2, bulb_x). is_connected(1, bulb_y).");
    CHECK_THROWS_AS(observed_outcome(c, NodeId{2}, "a"), InvalidArgumentError);
    CHECK(observed_outcome(c, NodeId{2}, "a", "bulb_y") == Outcome::Lit);
    CHECK(observed_outcome(c, NodeId{2}, "a", "bulb_x") == Outcome::Unlit);
}

TEST_CASE("Property: print/parse round-trip preserves relations", "[property]") {
    std::mt19937_64 rng(1234);
    for (int i = 0; i < 200; ++i) {
        const auto c = testing::random_circuit(rng);
        REQUIRE(c.valid());
        const auto back = parse_circuit(to_facts(c));
        CHECK(back.gates() == c.gates());
        CHECK(back.edges() == c.edges());
        CHECK(back.test_points() == c.test_points());
        CHECK(back.sources() == c.sources());
        CHECK(to_facts(back) == to_facts(c));
    }
}

TEST_CASE("Property: injection only ever adds power", "[property]") {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 200; ++i) {
        const auto c = testing::random_circuit(rng);
        for (NodeId fault : c.gates()) {
            const auto plain = simulate(c, {fault, std::nullopt});
            for (const auto& tp : c.test_points()) {
                const auto injected = simulate(c, {fault, tp.label});
                for (const auto& [node, on] : plain.nodes) {
                    if (on) {
                        CHECK(injected.powered(node));
                    }
                }
                for (const auto& [sink, on] : plain.sinks) {
                    if (on) {
                        CHECK(injected.lit(sink));
                    }
                }
            }
        }
    }
}

TEST_CASE("Property: simulation is deterministic", "[property]") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 50; ++i) {
        const auto c = testing::random_circuit(rng);
        const auto copy = parse_circuit(to_facts(c));
        for (const auto& tp : c.test_points()) {
            const FaultScenario scenario{*c.gates().begin(), tp.label};
            CHECK(simulate(c, scenario) == simulate(copy, scenario));
        }
    }
}
