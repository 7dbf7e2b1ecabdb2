#include "faultlens/lens/anonymize.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <random>

#include "faultlens/error.hpp"

namespace faultlens::lens {

namespace {

enum class Kind { Atom, Variable, Number, Quoted, Punct, Symbol, Layout, End };

struct Token {
    Kind kind;
    std::string_view text;
    std::size_t line;
    std::size_t column;
};

bool is_alnum(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

bool is_symbol_char(char c) { return std::string_view("+-*/\\^<>=~:.?@#&$").find(c) != std::string_view::npos; }

/// Splits Prolog text into tokens; layout and comments become Layout tokens
/// so the concatenation of all token texts is the input.
class Tokenizer {
  public:
    explicit Tokenizer(std::string_view text) : text_(text) {}

    std::vector<Token> run() {
        std::vector<Token> tokens;
        while (pos_ < text_.size()) {
            tokens.push_back(next());
        }
        return tokens;
    }

  private:
    Token next() {
        const std::size_t start = pos_;
        const std::size_t line = line_;
        const std::size_t column = column_;
        const char c = text_[pos_];
        Kind kind = Kind::Punct;

        if (std::isspace(static_cast<unsigned char>(c))) {
            kind = Kind::Layout;
            while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
                advance();
            }
        } else if (c == '%') {
            kind = Kind::Layout;
            while (pos_ < text_.size() && text_[pos_] != '\n') {
                advance();
            }
        } else if (c == '/' && peek(1) == '*') {
            kind = Kind::Layout;
            advance();
            advance();
            while (pos_ < text_.size() && !(text_[pos_] == '*' && peek(1) == '/')) {
                advance();
            }
            if (pos_ >= text_.size()) {
                throw ParseError("unterminated block comment", line, column);
            }
            advance();
            advance();
        } else if (std::islower(static_cast<unsigned char>(c))) {
            kind = Kind::Atom;
            while (pos_ < text_.size() && is_alnum(text_[pos_])) {
                advance();
            }
        } else if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
            kind = Kind::Variable;
            while (pos_ < text_.size() && is_alnum(text_[pos_])) {
                advance();
            }
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            kind = Kind::Number;
            if (c == '0' && peek(1) == '\'' && pos_ + 2 < text_.size()) {
                advance();
                advance();
                advance();
            } else {
                while (pos_ < text_.size() && is_alnum(text_[pos_])) {
                    advance();
                }
                if (pos_ + 1 < text_.size() && text_[pos_] == '.' &&
                    std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
                    advance();
                    while (pos_ < text_.size() && is_alnum(text_[pos_])) {
                        advance();
                    }
                }
            }
        } else if (c == '\'' || c == '"' || c == '`') {
            kind = Kind::Quoted;
            advance();
            while (true) {
                if (pos_ >= text_.size()) {
                    throw ParseError("unterminated quoted text", line, column);
                }
                const char q = advance();
                if (q == '\\' && pos_ < text_.size()) {
                    advance();
                } else if (q == c) {
                    if (pos_ < text_.size() && text_[pos_] == c) {
                        advance();
                    } else {
                        break;
                    }
                }
            }
        } else if (c == '.' && (pos_ + 1 >= text_.size() || std::isspace(static_cast<unsigned char>(peek(1))) ||
                                peek(1) == '%')) {
            kind = Kind::End;
            advance();
        } else if (is_symbol_char(c)) {
            kind = Kind::Symbol;
            while (pos_ < text_.size() && is_symbol_char(text_[pos_])) {
                advance();
            }
        } else {
            advance();
        }
        return {kind, text_.substr(start, pos_ - start), line, column};
    }

    char peek(std::size_t offset) const { return pos_ + offset < text_.size() ? text_[pos_ + offset] : '\0'; }

    char advance() {
        const char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        return c;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

/// Checks clause structure and returns the head names in definition order.
std::vector<std::string> clause_heads(const std::vector<Token>& tokens) {
    std::vector<std::string> heads;
    bool in_clause = false;
    bool directive = false;
    std::vector<char> brackets;
    const Token* clause_start = nullptr;
    for (const auto& token : tokens) {
        if (token.kind == Kind::Layout) {
            continue;
        }
        if (!in_clause) {
            in_clause = true;
            clause_start = &token;
            directive = token.kind == Kind::Symbol && token.text == ":-";
            if (!directive) {
                if (token.kind != Kind::Atom) {
                    throw ParseError("clause must start with a predicate name", token.line, token.column);
                }
                if (std::find(heads.begin(), heads.end(), token.text) == heads.end()) {
                    heads.emplace_back(token.text);
                }
            }
            continue;
        }
        if (token.kind == Kind::End) {
            if (!brackets.empty()) {
                throw ParseError("unbalanced brackets in clause", token.line, token.column);
            }
            in_clause = false;
            continue;
        }
        if (token.kind == Kind::Punct && token.text.size() == 1) {
            const char c = token.text[0];
            if (c == '(' || c == '[' || c == '{') {
                brackets.push_back(c == '(' ? ')' : (c == '[' ? ']' : '}'));
            } else if (c == ')' || c == ']' || c == '}') {
                if (brackets.empty() || brackets.back() != c) {
                    throw ParseError(std::string("unexpected '") + c + "'", token.line, token.column);
                }
                brackets.pop_back();
            }
        }
    }
    if (in_clause) {
        throw ParseError("clause is not terminated by a period", clause_start->line, clause_start->column);
    }
    return heads;
}

/// Maximal runs of identifier characters, wherever they occur.
template <typename Fn>
void for_each_word(std::string_view text, Fn&& fn) {
    std::size_t i = 0;
    while (i < text.size()) {
        if (!is_alnum(text[i])) {
            fn(text.substr(i, 1), false);
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && is_alnum(text[j])) {
            ++j;
        }
        fn(text.substr(i, j - i), true);
        i = j;
    }
}

std::size_t uniform_index(std::mt19937_64& rng, std::size_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t draw = 0;
    do {
        draw = rng();
    } while (draw >= limit);
    return static_cast<std::size_t>(draw % n);
}

}  // namespace

const std::set<std::string, std::less<>>& default_allowlist() {
    static const std::set<std::string, std::less<>> names{
        // background knowledge
        "find_all", "all", "empty_list", "not_empty_list", "is_equal", "same_circuit", "size", "not_list",
        "pair", "larger_min_size", "min", "max", "fold", "map", "empty_partition_sizes",
        // circuit facts
        "gate", "is_connected", "test_point_label", "lightbulb",
        // builtins
        "findall", "call", "is_list", "length", "min_list", "max_list", "not", "member", "append",
        "is", "true", "fail", "false", "forall", "msort", "sort", "nth0", "nth1", "last", "reverse"};
    return names;
}

AnonymizedProgram anonymize_predicates(std::string_view program, std::uint64_t mapping_seed,
                                       const std::set<std::string, std::less<>>& allowlist) {
    const auto tokens = Tokenizer(program).run();
    std::vector<std::string> targets;
    for (auto& head : clause_heads(tokens)) {
        if (!allowlist.contains(head)) {
            targets.push_back(std::move(head));
        }
    }
    std::set<std::string_view> words;
    for_each_word(program, [&](std::string_view word, bool is_word) {
        if (is_word) {
            words.insert(word);
        }
    });
    for (const auto& token : tokens) {
        if (token.kind == Kind::Atom) {
            if (token.text.starts_with("inv") && !allowlist.contains(token.text) &&
                std::find(targets.begin(), targets.end(), token.text) == targets.end()) {
                targets.emplace_back(token.text);
            }
        }
    }

    std::vector<std::string> aliases;
    for (std::size_t n = 1; aliases.size() < targets.size(); ++n) {
        auto alias = "p" + std::to_string(n);
        if (!words.contains(alias)) {
            aliases.push_back(std::move(alias));
        }
    }
    if (mapping_seed != 0 && aliases.size() > 1) {
        std::seed_seq seq{static_cast<std::uint32_t>(mapping_seed), static_cast<std::uint32_t>(mapping_seed >> 32)};
        std::mt19937_64 rng(seq);
        for (std::size_t i = aliases.size() - 1; i > 0; --i) {
            std::swap(aliases[i], aliases[uniform_index(rng, i + 1)]);
        }
    }

    AnonymizedProgram result;
    std::map<std::string, std::string, std::less<>> lookup;
    for (std::size_t i = 0; i < targets.size(); ++i) {
        result.renames.push_back({targets[i], aliases[i]});
        lookup.emplace(targets[i], aliases[i]);
    }
    for (const auto& token : tokens) {
        if (token.kind == Kind::Atom) {
            if (auto it = lookup.find(token.text); it != lookup.end()) {
                result.text += it->second;
                continue;
            }
        }
        if (token.kind == Kind::Layout) {
            for_each_word(token.text, [&](std::string_view word, bool is_word) {
                const auto it = is_word ? lookup.find(word) : lookup.end();
                result.text += it != lookup.end() ? std::string_view(it->second) : word;
            });
            continue;
        }
        result.text += token.text;
    }
    return result;
}

std::string deanonymize(std::string_view text, const std::vector<Rename>& renames) {
    std::map<std::string, std::string, std::less<>> lookup;
    for (const auto& r : renames) {
        lookup.emplace(r.alias, r.original);
    }
    std::string out;
    for_each_word(text, [&](std::string_view word, bool is_word) {
        if (is_word) {
            if (auto it = lookup.find(word); it != lookup.end()) {
                out += it->second;
                return;
            }
        }
        out += word;
    });
    return out;
}

}  // namespace faultlens::lens
