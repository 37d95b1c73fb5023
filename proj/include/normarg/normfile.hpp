#pragma once

// The norm file format: a theory block, one block per hierarchy level from
// most to least important, a situation block and a consequence line.
//
//   theory { }
//   level 1 { p -> !r }
//   level 2 { q -> r }
//   level 3 { !r }
//   situation { p, q }
//   consequence r
//
// Formulas inside blocks are comma-separated; '#' starts a line comment.

#include <cctype>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "formula.hpp"
#include "hierarchy.hpp"
#include "logic.hpp"

namespace normarg {

class NormFileError : public std::runtime_error {
public:
    NormFileError(std::size_t line, const std::string& msg)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + msg : msg),
          line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct NormFile {
    FormulaSet theory;
    std::vector<FormulaSet> levels;  // levels[0] parsed as "level 1"
    FormulaSet situation;
    Formula consequence;
};

namespace detail {

class NormFileParser {
public:
    explicit NormFileParser(const std::string& text) : text_(strip_comments(text)) {}

    NormFile parse() {
        NormFile out;
        std::map<std::size_t, FormulaSet> levels;
        bool saw_theory = false, saw_situation = false, saw_consequence = false;

        for (;;) {
            skip_ws();
            if (pos_ >= text_.size()) break;
            const std::size_t at = line();
            const std::string word = read_word();
            if (word == "theory") {
                if (saw_theory) throw NormFileError(at, "duplicate theory section");
                saw_theory = true;
                out.theory = read_block();
            } else if (word == "level") {
                const std::size_t index = read_index();
                if (levels.count(index))
                    throw NormFileError(at, "duplicate level " + std::to_string(index));
                levels[index] = read_block();
            } else if (word == "situation") {
                if (saw_situation) throw NormFileError(at, "duplicate situation section");
                saw_situation = true;
                out.situation = read_block();
            } else if (word == "consequence") {
                if (saw_consequence) throw NormFileError(at, "duplicate consequence");
                saw_consequence = true;
                out.consequence = read_line_formula();
            } else {
                throw NormFileError(at, "expected 'theory', 'level', 'situation' or "
                                        "'consequence', found '" + word + "'");
            }
        }

        if (levels.empty()) throw NormFileError(0, "a norm file needs at least one level");
        if (!saw_consequence) throw NormFileError(0, "a norm file needs a consequence");
        std::size_t expected = 1;
        for (const auto& [index, set] : levels) {
            if (index != expected)
                throw NormFileError(0, "level indices must run 1.." +
                                           std::to_string(levels.size()) + " without gaps");
            ++expected;
            out.levels.push_back(set);
        }
        return out;
    }

private:
    static std::string strip_comments(const std::string& text) {
        std::string out = text;
        bool in_comment = false;
        for (char& c : out) {
            if (c == '\n')      in_comment = false;
            else if (c == '#')  in_comment = true;
            if (in_comment) c = ' ';
        }
        return out;
    }

    std::size_t line() const {
        std::size_t n = 1;
        for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i)
            if (text_[i] == '\n') ++n;
        return n;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    std::string read_word() {
        if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_])))
            throw NormFileError(line(), "expected a section keyword");
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        return text_.substr(start, pos_ - start);
    }

    std::size_t read_index() {
        skip_ws();
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
            throw NormFileError(line(), "expected a level number");
        std::size_t value = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            value = value * 10 + static_cast<std::size_t>(text_[pos_++] - '0');
        if (value == 0) throw NormFileError(line(), "level numbers start at 1");
        return value;
    }

    FormulaSet read_block() {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != '{')
            throw NormFileError(line(), "expected '{'");
        ++pos_;
        const std::size_t start = pos_;
        while (pos_ < text_.size() && text_[pos_] != '}') ++pos_;
        if (pos_ >= text_.size())
            throw NormFileError(line(), "unterminated block, expected '}'");
        const std::string body = text_.substr(start, pos_ - start);
        ++pos_;  // consume '}'

        FormulaSet out;
        bool blank = true;
        for (char c : body)
            if (!std::isspace(static_cast<unsigned char>(c))) { blank = false; break; }
        if (blank) return out;

        std::size_t piece_start = 0;
        for (std::size_t i = 0; i <= body.size(); ++i) {
            if (i < body.size() && body[i] != ',') continue;
            out.insert(parse_piece(body.substr(piece_start, i - piece_start),
                                   start + piece_start));
            piece_start = i + 1;
        }
        return out;
    }

    Formula read_line_formula() {
        std::size_t end = pos_;
        while (end < text_.size() && text_[end] != '\n') ++end;
        Formula f = parse_piece(text_.substr(pos_, end - pos_), pos_);
        pos_ = end;
        return f;
    }

    Formula parse_piece(const std::string& piece, std::size_t offset) {
        std::size_t at_line = 1;
        for (std::size_t i = 0; i < offset && i < text_.size(); ++i)
            if (text_[i] == '\n') ++at_line;
        bool blank = true;
        for (char c : piece)
            if (!std::isspace(static_cast<unsigned char>(c))) { blank = false; break; }
        if (blank) throw NormFileError(at_line, "empty formula");
        try {
            return parse_formula(piece);
        } catch (const SyntaxError& e) {
            throw NormFileError(at_line, e.what());
        }
    }

    std::string text_;
    std::size_t pos_ = 0;
};

}  // namespace detail

inline NormFile parse_norm_file(const std::string& text) {
    return detail::NormFileParser(text).parse();
}

inline NormCase to_norm_case(const NormFile& file, std::size_t atom_cap = kMaxAtoms) {
    return make_norm_case(file.theory, file.levels, file.situation, file.consequence, atom_cap);
}

inline NormCase load_norm_case(const std::string& text, std::size_t atom_cap = kMaxAtoms) {
    return to_norm_case(parse_norm_file(text), atom_cap);
}

// Canonical serialization; parsing it back yields the same case.
inline std::string render_norm_file(const NormCase& c) {
    const auto join = [](const FormulaSet& fs) {
        std::string out;
        bool first = true;
        for (const Formula& f : fs) {
            if (!first) out += ", ";
            out += to_string(f);
            first = false;
        }
        return out;
    };
    std::string out = "theory { " + join(c.theory) + (c.theory.empty() ? "}" : " }") + "\n";
    for (std::size_t i = 0; i < c.hierarchy->levels.size(); ++i) {
        const FormulaSet& level = c.hierarchy->levels[i];
        out += "level " + std::to_string(i + 1) + " { " + join(level) +
               (level.empty() ? "}" : " }") + "\n";
    }
    out += "situation { " + join(c.situation) + (c.situation.empty() ? "}" : " }") + "\n";
    out += "consequence " + to_string(c.consequence) + "\n";
    return out;
}

}  // namespace normarg
