/// @file test_strategy.cpp
/// @brief Exclusive-power fixpoint, partitions, entropy and test selection.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>

#include "faultlens/circuit/facts.hpp"
#include "faultlens/error.hpp"
#include "faultlens/strategy/strategy.hpp"
#include "support/random_circuits.hpp"

using namespace faultlens;
using namespace faultlens::circuit;
using namespace faultlens::strategy;
using Catch::Approx;

namespace {

std::set<NodeId> ids(std::initializer_list<std::uint32_t> values) {
    std::set<NodeId> out;
    for (auto v : values) {
        out.insert(NodeId{v});
    }
    return out;
}

// Closed form with natural logarithms, independent of binary_entropy().
double entropy_oracle(double p) {
    return -(p * std::log(p) + (1 - p) * std::log(1 - p)) / std::log(2.0);
}

const Circuit& example() {
    static const Circuit c = parse_circuit(testing::kExampleCircuit);
    return c;
}

}  // namespace

TEST_CASE("Exclusive power sets", "[strategy]") {
    CHECK(exclusive_power_set(example(), NodeId{3}) == ids({1, 2}));
    CHECK(exclusive_power_set(example(), Sink{"lightbulb"}) == ids({1, 2, 3, 4, 5}));
    CHECK(exclusive_power_set(example(), NodeId{4}).empty());
    CHECK(exclusive_power_set(testing::chain_circuit(2), NodeId{1}).empty());
    CHECK_THROWS_AS(exclusive_power_set(example(), NodeId{9}), NotFoundError);
    CHECK_THROWS_AS(exclusive_power_set(example(), Sink{"lamp"}), NotFoundError);
}

TEST_CASE("Exclusive power for one of two lightbulbs", "[strategy]") {
    // 2 feeds both bulbs and is excluded; 3 and 4 only reach bulb y.
    const auto c = parse_circuit(
        "gate(1). gate(2). gate(3). gate(4). gate(5). gate(6)."
        "is_connected(0, 1). is_connected(0, 2). is_connected(91, 3). is_connected(92, 4)."
        "is_connected(1, 5). is_connected(2, 5). is_connected(2, 6). is_connected(3, 6)."
        "is_connected(4, bulb_y). is_connected(5, bulb_x). is_connected(6, bulb_y).");
    CHECK(exclusive_power_set(c, Sink{"bulb_y"}) == ids({3, 4, 6}));
    CHECK(exclusive_power_set(c, Sink{"bulb_x"}) == ids({1, 5}));
}

TEST_CASE("Partitions of the example circuit", "[strategy]") {
    const auto all = HypothesisSet::all_gates(example());
    auto p = partition(example(), "output_c", all);
    CHECK(p.inside == ids({1, 2, 3}));
    CHECK(p.outside == ids({4, 5}));
    CHECK(p.excluded.empty());

    p = partition(example(), "output_a", all);
    CHECK(p.inside == ids({1}));
    CHECK(p.outside == ids({2, 3, 4, 5}));

    p = partition(example(), "output_c", HypothesisSet{4});
    CHECK(p.inside.empty());
    CHECK(p.outside == ids({4}));

    CHECK_THROWS_AS(partition(example(), "output_q", all), NotFoundError);
    CHECK_THROWS_AS(partition(example(), "output_c", HypothesisSet{}), InvalidArgumentError);
}

TEST_CASE("Hypotheses in other sub-circuits are excluded from both sides", "[strategy]") {
    const auto c = parse_circuit(
        "gate(1). gate(2). gate(101). test_point_label(1, a). test_point_label(101, z)."
        "is_connected(0, 1). is_connected(1, 2). is_connected(2, lightbulb)."
        "is_connected(100, 101). is_connected(101, lightbulb_b).");
    const auto p = partition(c, "a", HypothesisSet::all_gates(c));
    CHECK(p.inside == ids({1}));
    CHECK(p.outside == ids({2}));
    CHECK(p.excluded == ids({101}));
}

TEST_CASE("Minority ratio", "[strategy]") {
    CHECK(minority_ratio(3, 2) == Approx(0.4));
    for (std::size_t k = 1; k < 20; ++k) {
        CHECK(minority_ratio(k, k) == 0.5);
    }
    CHECK(minority_ratio(5, 0) == 0.0);
    CHECK_THROWS_AS(minority_ratio(0, 0), InvalidArgumentError);
}

TEST_CASE("Binary entropy", "[strategy]") {
    CHECK(binary_entropy(0.5) == 1.0);
    CHECK(binary_entropy(0.0) == 0.0);
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(0.4) == Approx(0.970951).margin(1e-6));
    CHECK(binary_entropy(0.4) == Approx(entropy_oracle(0.4)).margin(1e-12));
    CHECK_THROWS_AS(binary_entropy(-0.01), InvalidArgumentError);
    CHECK_THROWS_AS(binary_entropy(1.5), InvalidArgumentError);
    CHECK_THROWS_AS(binary_entropy(std::nan("")), InvalidArgumentError);
}

TEST_CASE("Property: entropy is symmetric and increasing on [0, 0.5]", "[property]") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 1000; ++i) {
        const double p = unit(rng);
        CHECK(binary_entropy(p) == Approx(binary_entropy(1.0 - p)).margin(1e-12));
    }
    double previous = -1.0;
    for (int i = 0; i <= 500; ++i) {
        const double value = binary_entropy(i / 1000.0);
        CHECK(value > previous);
        previous = value;
    }
}

TEST_CASE("Test evaluations", "[strategy]") {
    const auto all = HypothesisSet::all_gates(example());
    const auto c_eval = evaluate_test(example(), "output_c", all);
    CHECK(c_eval.minority_ratio == Approx(0.4));
    CHECK(c_eval.entropy == Approx(0.970951).margin(1e-6));
    const auto a_eval = evaluate_test(example(), "output_a", all);
    CHECK(a_eval.entropy == Approx(0.721928).margin(1e-6));
    CHECK(a_eval.entropy == Approx(entropy_oracle(0.2)).margin(1e-12));
    const auto empty_inside = evaluate_test(example(), "output_c", HypothesisSet{4, 5});
    CHECK(empty_inside.partition.inside.empty());
    CHECK(empty_inside.entropy == 0.0);
}

TEST_CASE("Optimal test selection", "[strategy]") {
    SECTION("example circuit, brute force over all five tests") {
        const auto all = HypothesisSet::all_gates(example());
        std::size_t best_min = 0;
        std::string best_label;
        for (const auto& tp : example().test_points()) {
            std::size_t inside = 0;
            for (NodeId g : example().gates()) {
                inside += observed_outcome(example(), g, tp.label) == Outcome::Lit ? 1 : 0;
            }
            const std::size_t smaller = std::min(inside, example().gates().size() - inside);
            if (smaller > best_min) {
                best_min = smaller;
                best_label = tp.label;
            }
        }
        const auto best = optimal_test(example(), all);
        CHECK(best.label == best_label);
        CHECK(best.label == "output_c");
        CHECK(best.sizes == PartitionSizes{3, 2});
    }
    SECTION("chain of four gates splits in the middle") {
        const auto chain = testing::chain_circuit(4);
        const auto best = optimal_test(chain, HypothesisSet::all_gates(chain));
        CHECK(best.label == "t_02");
        CHECK(best.sizes == PartitionSizes{2, 2});
    }
    SECTION("singleton hypothesis set returns the first label") {
        const auto best = optimal_test(example(), HypothesisSet{4});
        CHECK(best.label == "output_a");
        CHECK(best.sizes.total() == 1);
        CHECK(best.sizes.smaller() == 0);
    }
    SECTION("no test points") {
        const auto bare = parse_circuit("gate(1). is_connected(0, 1). is_connected(1, lightbulb).");
        CHECK_THROWS_AS(optimal_test(bare, HypothesisSet{1}), NotFoundError);
    }
}

TEST_CASE("Pruning by outcome", "[strategy]") {
    const auto all = HypothesisSet::all_gates(example());
    const auto eval = evaluate_test(example(), "output_c", all);
    CHECK(prune(all, eval, Outcome::Lit) == HypothesisSet{1, 2, 3});
    CHECK(prune(all, eval, Outcome::Unlit) == HypothesisSet{4, 5});

    const HypothesisSet tail{4, 5};
    const auto a_eval = evaluate_test(example(), "output_a", tail);
    CHECK_THROWS_AS(prune(tail, a_eval, Outcome::Lit), ContradictoryEvidenceError);

    // Lit survivors are exactly the faults simulation says keep the bulb lit.
    const auto survivors = prune(all, eval, Outcome::Lit);
    for (NodeId g : survivors.members()) {
        CHECK(observed_outcome(example(), g, "output_c") == Outcome::Lit);
    }
}

TEST_CASE("Property: fixpoint equals the literal marking procedure on productive circuits",
          "[property]") {
    std::mt19937_64 rng(2024);
    testing::RandomCircuitOptions options;
    options.allow_dead_ends = false;
    for (int i = 0; i < 300; ++i) {
        const auto c = testing::random_circuit(rng, options);
        for (NodeId g : c.gates()) {
            CHECK(exclusive_power_set(c, g) == testing::marking_procedure(c, g));
        }
        for (const auto& sink : c.sinks()) {
            CHECK(exclusive_power_set(c, Sink{sink}) == testing::marking_procedure(c, Sink{sink}));
        }
    }
}

TEST_CASE("Property: partition matches exhaustive simulation", "[property]") {
    std::mt19937_64 rng(77);
    for (int i = 0; i < 300; ++i) {
        const auto c = testing::random_circuit(rng);
        const auto all = HypothesisSet::all_gates(c);
        for (const auto& tp : c.test_points()) {
            const auto p = partition(c, tp.label, all);
            std::set<NodeId> lit;
            for (NodeId g : c.gates()) {
                if (circuit_group(g) == circuit_group(tp.gate) &&
                    observed_outcome(c, g, tp.label) == Outcome::Lit) {
                    lit.insert(g);
                }
            }
            CHECK(p.inside == lit);
        }
    }
}

TEST_CASE("Property: optimal test dominates every alternative", "[property]") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        const auto c = testing::random_circuit(rng);
        const auto all = HypothesisSet::all_gates(c);
        const auto best = optimal_test(c, all);
        for (const auto& tp : c.test_points()) {
            const auto sizes = partition(c, tp.label, all).sizes();
            CHECK(best.sizes.smaller() >= sizes.smaller());
            if (sizes.smaller() == best.sizes.smaller()) {
                CHECK(best.label <= tp.label);
            }
        }
    }
}

TEST_CASE("Property: prune splits the hypothesis set", "[property]") {
    std::mt19937_64 rng(8);
    for (int i = 0; i < 200; ++i) {
        const auto c = testing::random_circuit(rng);
        const HypothesisSet all(c.gates());
        for (const auto& tp : c.test_points()) {
            const auto eval = evaluate_test(c, tp.label, all);
            if (eval.partition.inside.empty() || eval.partition.outside.empty()) {
                continue;
            }
            const auto lit = prune(all, eval, Outcome::Lit);
            const auto unlit = prune(all, eval, Outcome::Unlit);
            std::set<NodeId> joined = lit.members();
            joined.insert(unlit.members().begin(), unlit.members().end());
            for (NodeId g : lit.members()) {
                CHECK_FALSE(unlit.contains(g));
            }
            std::set<NodeId> in_group;
            for (NodeId g : all.members()) {
                if (circuit_group(g) == circuit_group(tp.gate)) {
                    in_group.insert(g);
                }
            }
            CHECK(joined == in_group);
        }
    }
}

TEST_CASE("Property: copies of irrelevant sub-circuits never change the choice", "[property]") {
    std::mt19937_64 rng(404);
    testing::RandomCircuitOptions options;
    options.allow_second_group = false;
    for (int i = 0; i < 200; ++i) {
        const auto c = testing::random_circuit(rng, options);
        const auto hypotheses = HypothesisSet::all_gates(c);

        // Duplicate the whole circuit into group 3 with labels that sort first.
        std::set<NodeId> gates = c.gates();
        std::vector<Edge> edges = c.edges();
        std::vector<TestPoint> points = c.test_points();
        auto shift = [](NodeId n) { return NodeId{n.value + 300}; };
        for (NodeId g : c.gates()) {
            gates.insert(shift(g));
        }
        for (const auto& e : c.edges()) {
            Endpoint to = e.to;
            if (const auto* n = std::get_if<NodeId>(&e.to)) {
                to = shift(*n);
            } else {
                to = Sink{"copy_" + std::get<Sink>(e.to).name};
            }
            edges.push_back({shift(e.from), to});
        }
        for (const auto& tp : c.test_points()) {
            points.push_back({shift(tp.gate), "a_" + tp.label});
        }
        const Circuit doubled(std::move(gates), std::move(edges), std::move(points));
        REQUIRE(doubled.valid());
        CHECK(optimal_test(doubled, hypotheses).label == optimal_test(c, hypotheses).label);
    }
}
