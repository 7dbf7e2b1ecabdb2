#include "faultlens/study/session.hpp"

#include "faultlens/error.hpp"

namespace faultlens::study {

SessionTrace run_session(const Circuit& c, NodeId true_fault, const HypothesisSet& initial) {
    if (!initial.contains(true_fault)) {
        throw InvalidArgumentError("true fault " + circuit::to_string(true_fault) +
                                   " is not among the hypotheses");
    }
    const auto group = circuit::circuit_group(true_fault);
    for (NodeId h : initial.members()) {
        if (circuit::circuit_group(h) != group) {
            throw InvalidArgumentError("session hypotheses must share one sub-circuit");
        }
    }

    SessionTrace trace;
    HypothesisSet survivors = initial;
    while (survivors.size() > 1) {
        const auto choice = strategy::optimal_test(c, survivors);
        if (choice.sizes.smaller() == 0) {
            throw IndistinguishableError("no test separates the remaining " +
                                         std::to_string(survivors.size()) + " hypotheses");
        }
        const auto evaluation = strategy::evaluate_test(c, choice.label, survivors);
        const auto outcome = circuit::observed_outcome(c, true_fault, choice.label);
        survivors = strategy::prune(survivors, evaluation, outcome);
        trace.steps.push_back({choice.label, choice.sizes, outcome, survivors});
    }
    trace.final = *survivors.members().begin();
    return trace;
}

}  // namespace faultlens::study
