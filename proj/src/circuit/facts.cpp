#include "faultlens/circuit/facts.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "faultlens/error.hpp"

namespace faultlens::circuit {

namespace {

struct Token {
    enum class Kind { Atom, Integer, LParen, RParen, Comma, Period, End };
    Kind kind = Kind::End;
    std::string text;
    std::size_t line = 1;
    std::size_t column = 1;
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_space_and_comments();
        Token token;
        token.line = line_;
        token.column = column_;
        if (pos_ >= text_.size()) {
            return token;
        }
        const char c = text_[pos_];
        if (std::islower(static_cast<unsigned char>(c))) {
            token.kind = Token::Kind::Atom;
            while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                           text_[pos_] == '_')) {
                token.text.push_back(advance());
            }
            return token;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            token.kind = Token::Kind::Integer;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                token.text.push_back(advance());
            }
            if (pos_ < text_.size() && (std::isalpha(static_cast<unsigned char>(text_[pos_])) ||
                                        text_[pos_] == '_')) {
                throw ParseError("malformed integer", token.line, token.column);
            }
            return token;
        }
        switch (c) {
        case '(':
            token.kind = Token::Kind::LParen;
            break;
        case ')':
            token.kind = Token::Kind::RParen;
            break;
        case ',':
            token.kind = Token::Kind::Comma;
            break;
        case '.':
            token.kind = Token::Kind::Period;
            break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", line_, column_);
        }
        token.text.push_back(advance());
        return token;
    }

  private:
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

    void skip_space_and_comments() {
        while (pos_ < text_.size()) {
            const char c = text_[pos_];
            if (c == '%') {
                while (pos_ < text_.size() && text_[pos_] != '\n') {
                    advance();
                }
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t column_ = 1;
};

const char* describe(Token::Kind kind) {
    switch (kind) {
    case Token::Kind::Atom:
        return "atom";
    case Token::Kind::Integer:
        return "integer";
    case Token::Kind::LParen:
        return "'('";
    case Token::Kind::RParen:
        return "')'";
    case Token::Kind::Comma:
        return "','";
    case Token::Kind::Period:
        return "'.'";
    case Token::Kind::End:
        return "end of input";
    }
    return "token";
}

struct LabelFact {
    TestPoint point;
    std::size_t line;
    std::size_t column;
};

class Parser {
  public:
    explicit Parser(std::string_view text) : lexer_(text) { current_ = lexer_.next(); }

    Circuit parse() {
        while (current_.kind != Token::Kind::End) {
            parse_fact();
        }

        std::map<std::string, NodeId> seen_labels;
        std::map<NodeId, std::string> seen_gates;
        for (const auto& fact : labels_) {
            if (!gates_.contains(fact.point.gate)) {
                throw ParseError("test_point_label on undeclared gate " + to_string(fact.point.gate),
                                 fact.line, fact.column);
            }
            if (auto it = seen_labels.find(fact.point.label); it != seen_labels.end()) {
                if (it->second == fact.point.gate) {
                    continue;
                }
                throw ParseError("duplicate test point label '" + fact.point.label + "'", fact.line,
                                 fact.column);
            }
            if (auto it = seen_gates.find(fact.point.gate); it != seen_gates.end()) {
                throw ParseError("gate " + to_string(fact.point.gate) + " already has test point '" +
                                     it->second + "'",
                                 fact.line, fact.column);
            }
            seen_labels.emplace(fact.point.label, fact.point.gate);
            seen_gates.emplace(fact.point.gate, fact.point.label);
        }

        std::vector<TestPoint> points;
        points.reserve(labels_.size());
        for (const auto& fact : labels_) {
            points.push_back(fact.point);
        }
        Circuit circuit(std::move(gates_), std::move(edges_), std::move(points));
        circuit.require_valid();
        return circuit;
    }

  private:
    Token expect(Token::Kind kind) {
        if (current_.kind != kind) {
            throw ParseError(std::string("expected ") + describe(kind) + ", found " +
                                 describe(current_.kind),
                             current_.line, current_.column);
        }
        Token token = current_;
        current_ = lexer_.next();
        return token;
    }

    static NodeId to_node(const Token& token) {
        std::uint32_t value = 0;
        const auto* begin = token.text.data();
        const auto* end = begin + token.text.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || ptr != end) {
            throw ParseError("integer out of range", token.line, token.column);
        }
        return NodeId{value};
    }

    void parse_fact() {
        const Token head = expect(Token::Kind::Atom);
        expect(Token::Kind::LParen);
        if (head.text == "gate") {
            gates_.insert(to_node(expect(Token::Kind::Integer)));
        } else if (head.text == "test_point_label") {
            const NodeId gate = to_node(expect(Token::Kind::Integer));
            expect(Token::Kind::Comma);
            const Token label = expect(Token::Kind::Atom);
            labels_.push_back({{gate, label.text}, head.line, head.column});
        } else if (head.text == "is_connected") {
            if (current_.kind == Token::Kind::Atom) {
                throw ParseError("lightbulb '" + current_.text + "' cannot be the origin of a cable",
                                 current_.line, current_.column);
            }
            const NodeId from = to_node(expect(Token::Kind::Integer));
            expect(Token::Kind::Comma);
            if (current_.kind == Token::Kind::Atom) {
                edges_.push_back({from, Sink{expect(Token::Kind::Atom).text}});
            } else {
                edges_.push_back({from, to_node(expect(Token::Kind::Integer))});
            }
        } else {
            throw ParseError("unknown predicate '" + head.text + "'", head.line, head.column);
        }
        expect(Token::Kind::RParen);
        expect(Token::Kind::Period);
    }

    Lexer lexer_;
    Token current_;
    std::set<NodeId> gates_;
    std::vector<Edge> edges_;
    std::vector<LabelFact> labels_;
};

}  // namespace

Circuit parse_circuit(std::string_view text) { return Parser(text).parse(); }

Circuit load_circuit(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw NotFoundError("cannot open circuit file '" + path.string() + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_circuit(buffer.str());
}

std::string to_facts(const Circuit& c) {
    std::ostringstream out;
    bool first = true;
    for (NodeId gate : c.gates()) {
        out << (first ? "" : " ") << "gate(" << gate.value << ").";
        first = false;
    }
    if (!c.gates().empty()) {
        out << "\n";
    }
    if (!c.test_points().empty()) {
        out << "\n";
        std::vector<TestPoint> by_gate = c.test_points();
        std::sort(by_gate.begin(), by_gate.end());
        for (const auto& tp : by_gate) {
            out << "test_point_label(" << tp.gate.value << ", " << tp.label << ").\n";
        }
    }
    if (!c.edges().empty()) {
        out << "\n";
        for (const auto& edge : c.edges()) {
            out << "is_connected(" << edge.from.value << ", " << to_string(edge.to) << ").\n";
        }
    }
    return out.str();
}

}  // namespace faultlens::circuit
