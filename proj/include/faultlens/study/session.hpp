#pragma once

/// @file session.hpp
/// @brief Greedy sequential diagnosis: choose, observe, prune until one gate remains.

#include <string>
#include <vector>

#include "faultlens/strategy/strategy.hpp"

namespace faultlens::study {

using circuit::Circuit;
using circuit::NodeId;
using circuit::Outcome;
using strategy::HypothesisSet;

struct SessionStep {
    std::string test;
    strategy::PartitionSizes sizes;
    Outcome outcome = Outcome::Unlit;
    HypothesisSet survivors;
};

struct SessionTrace {
    std::vector<SessionStep> steps;
    NodeId final;
};

/// Repeats optimal_test / observed_outcome / prune against `true_fault`.
///
/// The initial hypotheses must lie in one sub-circuit and contain the fault.
/// @throws IndistinguishableError when no test separates the survivors
/// @throws InvalidArgumentError on a bad initial hypothesis set
[[nodiscard]] SessionTrace run_session(const Circuit& c, NodeId true_fault, const HypothesisSet& initial);

}  // namespace faultlens::study
