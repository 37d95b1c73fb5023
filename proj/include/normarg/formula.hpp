#pragma once

// Propositional formulas: immutable shared-structure AST, a recursive-descent
// parser and a canonical printer that emits the minimal parenthesization.

#include <cctype>
#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace normarg {

// ===== abstract syntax =====

enum class Conn { Atom, Top, Bottom, Not, And, Or, Implies, Iff };

class Formula {
public:
    struct Node {
        Conn conn;
        std::string name;                       // atoms only
        std::shared_ptr<const Node> lhs, rhs;   // rhs empty for Not
    };

    Formula() = default;
    explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    const Node& node() const { return *node_; }
    Conn conn() const { return node_->conn; }
    const std::string& atom_name() const { return node_->name; }
    Formula lhs() const { return Formula(node_->lhs); }
    Formula rhs() const { return Formula(node_->rhs); }
    bool valid() const { return node_ != nullptr; }

    friend bool operator==(const Formula& a, const Formula& b) {
        return equal_nodes(a.node_.get(), b.node_.get());
    }
    friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

private:
    static bool equal_nodes(const Node* a, const Node* b) {
        if (a == b) return true;
        if (a == nullptr || b == nullptr) return false;
        if (a->conn != b->conn) return false;
        if (a->conn == Conn::Atom) return a->name == b->name;
        return equal_nodes(a->lhs.get(), b->lhs.get()) &&
               equal_nodes(a->rhs.get(), b->rhs.get());
    }

    std::shared_ptr<const Node> node_;
};

// ===== constructors =====

inline Formula atom(const std::string& name) {
    return Formula(std::make_shared<Formula::Node>(Formula::Node{Conn::Atom, name, nullptr, nullptr}));
}

inline Formula top() {
    return Formula(std::make_shared<Formula::Node>(Formula::Node{Conn::Top, "", nullptr, nullptr}));
}

inline Formula bottom() {
    return Formula(std::make_shared<Formula::Node>(Formula::Node{Conn::Bottom, "", nullptr, nullptr}));
}

inline Formula neg(const Formula& f) {
    return Formula(std::make_shared<Formula::Node>(
        Formula::Node{Conn::Not, "", std::make_shared<Formula::Node>(f.node()), nullptr}));
}

namespace detail {
inline Formula binary(Conn conn, const Formula& a, const Formula& b) {
    return Formula(std::make_shared<Formula::Node>(
        Formula::Node{conn, "",
                      std::make_shared<Formula::Node>(a.node()),
                      std::make_shared<Formula::Node>(b.node())}));
}
}  // namespace detail

inline Formula conj(const Formula& a, const Formula& b)    { return detail::binary(Conn::And, a, b); }
inline Formula disj(const Formula& a, const Formula& b)    { return detail::binary(Conn::Or, a, b); }
inline Formula implies(const Formula& a, const Formula& b) { return detail::binary(Conn::Implies, a, b); }
inline Formula iff(const Formula& a, const Formula& b)     { return detail::binary(Conn::Iff, a, b); }

// ===== atom collection =====

namespace detail {
inline void collect_atoms(const Formula::Node* n, std::set<std::string>& out) {
    if (n == nullptr) return;
    if (n->conn == Conn::Atom) { out.insert(n->name); return; }
    collect_atoms(n->lhs.get(), out);
    collect_atoms(n->rhs.get(), out);
}
}  // namespace detail

inline std::set<std::string> atoms(const Formula& f) {
    std::set<std::string> out;
    detail::collect_atoms(&f.node(), out);
    return out;
}

// ===== canonical printing =====
//
// Connective precedence, loosest first: <->  ->  |  &  !
// -> and <-> are right-associative; & and | associate to the left.
// Parentheses are emitted only where re-parsing would otherwise
// change the structure, so parse(print(f)) == f.

namespace detail {

inline int precedence(Conn c) {
    switch (c) {
        case Conn::Iff:     return 0;
        case Conn::Implies: return 1;
        case Conn::Or:      return 2;
        case Conn::And:     return 3;
        case Conn::Not:     return 4;
        default:            return 5;  // atoms and constants
    }
}

inline bool right_associative(Conn c) { return c == Conn::Implies || c == Conn::Iff; }

inline void print_node(const Formula::Node* n, std::string& out) {
    switch (n->conn) {
        case Conn::Atom:   out += n->name; return;
        case Conn::Top:    out += "true";  return;
        case Conn::Bottom: out += "false"; return;
        case Conn::Not: {
            out += '!';
            bool parens = precedence(n->lhs->conn) < precedence(Conn::Not);
            if (parens) out += '(';
            print_node(n->lhs.get(), out);
            if (parens) out += ')';
            return;
        }
        default: break;
    }
    const int prec = precedence(n->conn);
    const char* op = n->conn == Conn::And ? " & "
                   : n->conn == Conn::Or  ? " | "
                   : n->conn == Conn::Implies ? " -> " : " <-> ";
    // the chained side of an associative operator needs no parentheses
    bool lparens = right_associative(n->conn) ? precedence(n->lhs->conn) <= prec
                                              : precedence(n->lhs->conn) < prec;
    bool rparens = right_associative(n->conn) ? precedence(n->rhs->conn) < prec
                                              : precedence(n->rhs->conn) <= prec;
    if (lparens) out += '(';
    print_node(n->lhs.get(), out);
    if (lparens) out += ')';
    out += op;
    if (rparens) out += '(';
    print_node(n->rhs.get(), out);
    if (rparens) out += ')';
}

}  // namespace detail

inline std::string to_string(const Formula& f) {
    std::string out;
    detail::print_node(&f.node(), out);
    return out;
}

// ===== parsing =====

class SyntaxError : public std::runtime_error {
public:
    SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& found)
        : std::runtime_error(format(offset, expected, found)),
          offset_(offset), expected_(std::move(expected)), found_(found) {}

    std::size_t offset() const { return offset_; }
    const std::vector<std::string>& expected() const { return expected_; }
    const std::string& found() const { return found_; }

private:
    static std::string format(std::size_t offset, const std::vector<std::string>& expected,
                              const std::string& found) {
        std::string msg = "syntax error at byte " + std::to_string(offset) + ": expected ";
        for (std::size_t i = 0; i < expected.size(); ++i) {
            if (i > 0) msg += i + 1 == expected.size() ? " or " : ", ";
            msg += expected[i];
        }
        msg += ", found " + found;
        return msg;
    }

    std::size_t offset_;
    std::vector<std::string> expected_;
    std::string found_;
};

namespace detail {

struct Token {
    enum Type { LParen, RParen, Bang, Amp, Pipe, Arrow, DArrow, True, False, Ident, End };
    Type type;
    std::string text;
    std::size_t offset;
};

inline std::string describe(const Token& t) {
    if (t.type == Token::End) return "end of input";
    return "'" + t.text + "'";
}

inline std::vector<Token> lex(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < src.size()) {
        char c = src[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        std::size_t at = i;
        switch (c) {
            case '(': out.push_back({Token::LParen, "(", at}); ++i; continue;
            case ')': out.push_back({Token::RParen, ")", at}); ++i; continue;
            case '!': out.push_back({Token::Bang, "!", at}); ++i; continue;
            case '&': out.push_back({Token::Amp, "&", at}); ++i; continue;
            case '|': out.push_back({Token::Pipe, "|", at}); ++i; continue;
            case '-':
                if (i + 1 < src.size() && src[i + 1] == '>') {
                    out.push_back({Token::Arrow, "->", at});
                    i += 2;
                    continue;
                }
                throw SyntaxError(at, {"'->'"}, "'" + src.substr(i, 1) + "'");
            case '<':
                if (src.compare(i, 3, "<->") == 0) {
                    out.push_back({Token::DArrow, "<->", at});
                    i += 3;
                    continue;
                }
                throw SyntaxError(at, {"'<->'"}, "'" + src.substr(i, 1) + "'");
            default: break;
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t j = i + 1;
            while (j < src.size() &&
                   (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_'))
                ++j;
            std::string word = src.substr(i, j - i);
            if (word == "true")       out.push_back({Token::True, word, at});
            else if (word == "false") out.push_back({Token::False, word, at});
            else                      out.push_back({Token::Ident, word, at});
            i = j;
            continue;
        }
        throw SyntaxError(at, {"a formula"}, "'" + src.substr(i, 1) + "'");
    }
    out.push_back({Token::End, "", src.size()});
    return out;
}

// Grammar, loosest binding first.  -> and <-> fold to the right.
//   iff   := imp ("<->" imp)*
//   imp   := or ("->" imp)?
//   or    := and ("|" and)*
//   and   := unary ("&" unary)*
//   unary := "!" unary | "(" iff ")" | "true" | "false" | IDENT
class Parser {
public:
    explicit Parser(const std::string& src) : tokens_(lex(src)) {}

    Formula parse() {
        Formula f = parse_iff();
        if (peek().type != Token::End)
            throw SyntaxError(peek().offset,
                              {"'&'", "'|'", "'->'", "'<->'", "end of input"},
                              describe(peek()));
        return f;
    }

private:
    const Token& peek() const { return tokens_[pos_]; }
    Token take() { return tokens_[pos_++]; }

    Formula parse_iff() {
        std::vector<Formula> parts;
        parts.push_back(parse_imp());
        while (peek().type == Token::DArrow) {
            take();
            parts.push_back(parse_imp());
        }
        Formula f = parts.back();
        for (std::size_t i = parts.size() - 1; i-- > 0;) f = iff(parts[i], f);
        return f;
    }

    Formula parse_imp() {
        Formula lhs = parse_or();
        if (peek().type == Token::Arrow) {
            take();
            return implies(lhs, parse_imp());
        }
        return lhs;
    }

    Formula parse_or() {
        Formula f = parse_and();
        while (peek().type == Token::Pipe) {
            take();
            f = disj(f, parse_and());
        }
        return f;
    }

    Formula parse_and() {
        Formula f = parse_unary();
        while (peek().type == Token::Amp) {
            take();
            f = conj(f, parse_unary());
        }
        return f;
    }

    Formula parse_unary() {
        const Token& t = peek();
        switch (t.type) {
            case Token::Bang:   take(); return neg(parse_unary());
            case Token::True:   take(); return top();
            case Token::False:  take(); return bottom();
            case Token::Ident:  return atom(take().text);
            case Token::LParen: {
                take();
                Formula f = parse_iff();
                if (peek().type != Token::RParen)
                    throw SyntaxError(peek().offset, {"')'"}, describe(peek()));
                take();
                return f;
            }
            default:
                throw SyntaxError(t.offset,
                                  {"'!'", "'('", "'true'", "'false'", "an identifier"},
                                  describe(t));
        }
    }

    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline Formula parse_formula(const std::string& src) {
    return detail::Parser(src).parse();
}

}  // namespace normarg
