#pragma once

/// @file templates.hpp
/// @brief Versioned prompt templates and placeholder substitution.

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace faultlens::lens {

/// Fully rendered prompt sent to a model.
struct PromptPair {
    std::string system_text;
    std::string user_text;

    friend bool operator==(const PromptPair&, const PromptPair&) = default;
};

using Bindings = std::map<std::string, std::string, std::less<>>;

/// Every placeholder name a template may use.
[[nodiscard]] const std::set<std::string, std::less<>>& known_placeholders();

/// Ids of the shipped templates, e.g. `coding_user`.
[[nodiscard]] std::vector<std::string> template_ids();

/// @throws NotFoundError for an unknown id
[[nodiscard]] std::string_view template_text(std::string_view template_id);

/// Placeholders of `text` in order of first appearance.
[[nodiscard]] std::vector<std::string> placeholders(std::string_view text);

/// Substitutes every `{name}` of one template in a single pass; bound values
/// are never rescanned.
/// @throws InvalidArgumentError listing missing keys, or naming a binding the template does not use
[[nodiscard]] std::string render_template(std::string_view template_id, const Bindings& bindings);

/// System and user template ids of a named prompt pair.
struct TemplatePair {
    std::string system_id;
    std::string user_id;
};

/// Pairs: coding, judge, consensus, consensus_no_gc, consensus_no_lc,
/// consensus_no_gc_no_lc, direct, direct_lc.
/// @throws NotFoundError for an unknown pair
[[nodiscard]] TemplatePair template_pair(std::string_view pair_id);
[[nodiscard]] std::vector<std::string> template_pair_ids();

/// Renders both halves of a pair from one binding set.
/// @throws InvalidArgumentError listing keys neither half can resolve, or a
///         binding that neither half uses
[[nodiscard]] PromptPair render_prompt(std::string_view pair_id, const Bindings& bindings);

}  // namespace faultlens::lens
