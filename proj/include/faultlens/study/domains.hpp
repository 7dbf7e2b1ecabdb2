#pragma once

/// @file domains.hpp
/// @brief Trial items in the three isomorphic domains: circuits, waterflow and sorted lists.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "faultlens/strategy/strategy.hpp"

namespace faultlens::study {

using circuit::Circuit;
using strategy::HypothesisSet;

enum class Domain { Circuits, Waterflow, Lists };

[[nodiscard]] std::string_view to_string(Domain domain);
/// @throws InvalidArgumentError for an unknown name
[[nodiscard]] Domain parse_domain(std::string_view name);

/// Display words for the components of a domain.
struct Vocabulary {
    std::string source;
    std::string gate;
    std::string sink;
    std::string test;
};

[[nodiscard]] const Vocabulary& vocabulary(Domain domain);

/// Text of the "I don't know" answer every trial offers.
inline constexpr std::string_view kEscapeOption = "I don't know";

/// One multiple-choice trial: which test should be performed next?
struct TrialItem {
    std::string id;
    Domain domain = Domain::Circuits;
    std::shared_ptr<const Circuit> circuit;
    /// Test labels offered to the participant, in presentation order.
    std::vector<std::string> options;
    HypothesisSet hypotheses;
};

/// Builds an item offering every test point against every gate.
/// @throws InvalidArgumentError if the circuit has no test point
[[nodiscard]] TrialItem make_item(std::string id, Domain domain, Circuit c);

/// Builds an item with explicit options and hypotheses.
/// @throws InvalidArgumentError if an option is not a test point of `c`,
///         a hypothesis is not a gate, or either list is empty
[[nodiscard]] TrialItem make_item(std::string id, Domain domain, Circuit c,
                                  std::vector<std::string> options, HypothesisSet hypotheses);

/// Token-wise rename of labels and sink names.
///
/// A label is split at underscores and every token found in the map is
/// replaced. The map must be a non-empty bijection.
class RelabelMap {
  public:
    /// @throws InvalidArgumentError if empty, not injective, or mapping a token to itself
    explicit RelabelMap(std::map<std::string, std::string> tokens);

    [[nodiscard]] const std::map<std::string, std::string>& tokens() const { return tokens_; }
    [[nodiscard]] RelabelMap inverse() const;

    [[nodiscard]] std::string apply(std::string_view label) const;
    /// Renames every test label and sink; gate ids and edges are untouched.
    /// @throws InvalidArgumentError if the renaming would merge two names or
    ///         could not be undone by inverse()
    [[nodiscard]] Circuit apply(const Circuit& c) const;

  private:
    std::map<std::string, std::string> tokens_;
};

/// battery → pump, gate → junction, lightbulb → outlet, output → pressure.
[[nodiscard]] const RelabelMap& waterflow_relabeling();

/// Waterflow counterpart of a circuits item, with options relabelled in order.
[[nodiscard]] TrialItem map_waterflow(const TrialItem& circuits_item,
                                      const RelabelMap& map = waterflow_relabeling());
[[nodiscard]] TrialItem map_waterflow(const Circuit& c, const RelabelMap& map = waterflow_relabeling());

/// Label of the split after list position `i`, e.g. `split_04`.
[[nodiscard]] std::string split_label(std::size_t i);

/// Chain of `n` positions from battery 0 to `lightbulb`, split points after
/// each of the first n - 1 positions, every position a hypothesis.
/// @throws InvalidArgumentError unless 2 <= n <= 99
[[nodiscard]] TrialItem list_to_circuit(std::size_t n);

}  // namespace faultlens::study
