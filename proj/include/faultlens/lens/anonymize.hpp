#pragma once

/// @file anonymize.hpp
/// @brief Consistent renaming of user-defined Prolog predicates to p1, p2, ...

#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace faultlens::lens {

struct Rename {
    std::string original;
    std::string alias;

    friend bool operator==(const Rename&, const Rename&) = default;
};

struct AnonymizedProgram {
    std::string text;
    /// In order of first definition.
    std::vector<Rename> renames;
};

/// Background-knowledge and builtin predicate names left untouched by default.
[[nodiscard]] const std::set<std::string, std::less<>>& default_allowlist();

/// Renames every predicate defined in `program` (any clause head) and every
/// undefined atom starting with `inv`, unless allowlisted.
///
/// Unquoted atoms and whole words inside comments are renamed; quoted atoms,
/// strings and whitespace are copied verbatim. Aliases already occurring
/// anywhere in the text are skipped. A zero `mapping_seed` numbers aliases in definition order; any
/// other seed permutes the numbering deterministically.
/// @throws ParseError for unterminated quotes or comments, a clause that does
///         not start with an atom, unbalanced brackets, or a missing final period
[[nodiscard]] AnonymizedProgram anonymize_predicates(std::string_view program, std::uint64_t mapping_seed = 0,
                                                     const std::set<std::string, std::less<>>& allowlist =
                                                         default_allowlist());

/// Replaces every alias word in `text` by its original name. Works on free
/// text as well as on programs.
[[nodiscard]] std::string deanonymize(std::string_view text, const std::vector<Rename>& renames);

}  // namespace faultlens::lens
