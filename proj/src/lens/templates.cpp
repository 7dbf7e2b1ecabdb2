#include "faultlens/lens/templates.hpp"

#include <algorithm>
#include <array>

#include "faultlens/assets.hpp"
#include "faultlens/error.hpp"

namespace faultlens::lens {

namespace {

constexpr std::string_view kTemplateDir = "templates/v1/";

struct NamedPair {
    std::string_view id;
    std::string_view system_id;
    std::string_view user_id;
};

constexpr std::array<NamedPair, 8> kPairs{{
    {"coding", "coding_system", "coding_user"},
    {"judge", "judge_system", "judge_user"},
    {"consensus", "reasoning_system", "reasoning_user"},
    {"consensus_no_gc", "reasoning_system_no_global_context", "reasoning_user"},
    {"consensus_no_lc", "reasoning_system", "reasoning_user_no_local_context"},
    {"consensus_no_gc_no_lc", "reasoning_system_no_global_context", "reasoning_user_no_local_context"},
    {"direct", "reasoning_system_direct", "reasoning_user_direct"},
    {"direct_lc", "reasoning_system_direct", "reasoning_user_direct_local_context"},
}};

bool is_name_char(char c) { return (c >= 'a' && c <= 'z') || c == '_'; }

/// Visits literal text and `{name}` placeholders with a known name.
template <typename Literal, typename Placeholder>
void scan(std::string_view text, Literal&& on_literal, Placeholder&& on_placeholder) {
    std::size_t pos = 0;
    std::size_t literal_start = 0;
    while ((pos = text.find('{', pos)) != std::string_view::npos) {
        std::size_t end = pos + 1;
        while (end < text.size() && is_name_char(text[end])) {
            ++end;
        }
        if (end < text.size() && text[end] == '}' && end > pos + 1) {
            const auto name = text.substr(pos + 1, end - pos - 1);
            if (known_placeholders().contains(name)) {
                on_literal(text.substr(literal_start, pos - literal_start));
                on_placeholder(name);
                pos = end + 1;
                literal_start = pos;
                continue;
            }
        }
        ++pos;
    }
    on_literal(text.substr(literal_start));
}

std::string join(const std::vector<std::string>& names) {
    std::string out;
    for (const auto& n : names) {
        out += (out.empty() ? "" : ", ") + n;
    }
    return out;
}

std::string substitute(std::string_view text, const Bindings& bindings) {
    std::string out;
    scan(
        text, [&](std::string_view literal) { out += literal; },
        [&](std::string_view name) { out += bindings.find(name)->second; });
    return out;
}

void check_bindings(const std::vector<std::string>& used, const Bindings& bindings, std::string_view what) {
    std::vector<std::string> missing;
    for (const auto& name : used) {
        if (!bindings.contains(name)) {
            missing.push_back(name);
        }
    }
    if (!missing.empty()) {
        throw InvalidArgumentError("missing binding for " + std::string(what) + ": " + join(missing));
    }
    for (const auto& [key, value] : bindings) {
        if (std::find(used.begin(), used.end(), key) == used.end()) {
            throw InvalidArgumentError("unknown placeholder '" + key + "' for " + std::string(what));
        }
    }
}

}  // namespace

const std::set<std::string, std::less<>>& known_placeholders() {
    static const std::set<std::string, std::less<>> names{
        "prolog", "domain_context", "samples",  "description", "example_type",
        "example", "instructions",  "question", "answer_ref",  "answer"};
    return names;
}

std::vector<std::string> template_ids() {
    std::vector<std::string> ids;
    for (const auto& path : assets::list(kTemplateDir)) {
        auto id = path.substr(kTemplateDir.size());
        if (id.ends_with(".txt")) {
            ids.emplace_back(id.substr(0, id.size() - 4));
        }
    }
    return ids;
}

std::string_view template_text(std::string_view template_id) {
    const auto text = assets::find(std::string(kTemplateDir) + std::string(template_id) + ".txt");
    if (!text) {
        throw NotFoundError("unknown template '" + std::string(template_id) + "'");
    }
    return *text;
}

std::vector<std::string> placeholders(std::string_view text) {
    std::vector<std::string> names;
    scan(
        text, [](std::string_view) {},
        [&](std::string_view name) {
            if (std::find(names.begin(), names.end(), name) == names.end()) {
                names.emplace_back(name);
            }
        });
    return names;
}

std::string render_template(std::string_view template_id, const Bindings& bindings) {
    const auto text = template_text(template_id);
    check_bindings(placeholders(text), bindings, "template '" + std::string(template_id) + "'");
    return substitute(text, bindings);
}

TemplatePair template_pair(std::string_view pair_id) {
    for (const auto& pair : kPairs) {
        if (pair.id == pair_id) {
            return {std::string(pair.system_id), std::string(pair.user_id)};
        }
    }
    throw NotFoundError("unknown template pair '" + std::string(pair_id) + "'");
}

std::vector<std::string> template_pair_ids() {
    std::vector<std::string> ids;
    for (const auto& pair : kPairs) {
        ids.emplace_back(pair.id);
    }
    return ids;
}

PromptPair render_prompt(std::string_view pair_id, const Bindings& bindings) {
    const auto pair = template_pair(pair_id);
    const auto system = template_text(pair.system_id);
    const auto user = template_text(pair.user_id);
    auto used = placeholders(system);
    for (auto& name : placeholders(user)) {
        if (std::find(used.begin(), used.end(), name) == used.end()) {
            used.push_back(std::move(name));
        }
    }
    check_bindings(used, bindings, "prompt pair '" + std::string(pair_id) + "'");
    return {substitute(system, bindings), substitute(user, bindings)};
}

}  // namespace faultlens::lens
