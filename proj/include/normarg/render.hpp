#pragma once

// Text, DOT and JSON renderings of verdicts, state grids, frameworks and
// explanations.  Every rendering is a pure function of its input, so repeated
// runs are byte-identical.  ASCII mode swaps the few non-ASCII glyphs
// (angle brackets, the sub-base letter, the inconsistency mark) for plain
// characters; states always print as '+', '-' and 'n'.

#include <array>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dsa.hpp"
#include "explain.hpp"
#include "hierarchy.hpp"
#include "semantics.hpp"

namespace normarg {

namespace detail {

// display columns of a UTF-8 string: continuation bytes do not count
inline std::size_t display_width(const std::string& s) {
    std::size_t w = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++w;
    return w;
}

inline std::string pad_left(const std::string& s, std::size_t width) {
    const std::size_t w = display_width(s);
    return std::string(w < width ? width - w : 0, ' ') + s;
}

inline std::string pad_right(const std::string& s, std::size_t width) {
    const std::size_t w = display_width(s);
    return s + std::string(w < width ? width - w : 0, ' ');
}

inline std::string knowledge_label(const FormulaSet& fs) {
    std::string out = "{";
    bool first = true;
    for (const Formula& f : fs) {
        if (!first) out += ",";
        out += to_string(f);
        first = false;
    }
    return out + "}";
}

inline std::string cell_label(DerivationState s, bool ascii) {
    if (s == DerivationState::Bot) return ascii ? "B" : "⊥";
    return std::string(1, state_char(s));
}

}  // namespace detail

// ===== the state grid =====

inline std::string render_statespace(const StateSpace& space, bool ascii) {
    const std::string delta = ascii ? "d" : "δ";
    std::vector<std::string> headers;
    headers.reserve(space.subbases.size());
    for (const SubBase& d : space.subbases)
        headers.push_back(delta + std::to_string(d.canonical_rank()));
    std::vector<std::string> rows;
    rows.reserve(space.knowledge.size());
    std::size_t label_width = 0;
    for (const FormulaSet& pi : space.knowledge) {
        rows.push_back(detail::knowledge_label(pi));
        label_width = std::max(label_width, detail::display_width(rows.back()));
    }

    std::string out = detail::pad_right("", label_width) + " |";
    for (const std::string& h : headers) out += "  " + h;
    out += "\n";
    out += std::string(label_width, '-') + "-+";
    std::size_t grid_width = 0;
    for (const std::string& h : headers) grid_width += 2 + detail::display_width(h);
    out += std::string(grid_width, '-') + "\n";
    for (std::size_t r = 0; r < rows.size(); ++r) {
        out += detail::pad_right(rows[r], label_width) + " |";
        for (std::size_t c = 0; c < headers.size(); ++c)
            out += "  " + detail::pad_left(detail::cell_label(space.cells[r][c], ascii),
                                           detail::display_width(headers[c]));
        out += "\n";
    }
    return out;
}

// ===== verdicts =====

inline std::string render_verdict(const Verdict& v, bool ascii) {
    std::string out = to_string(v.kind);
    out += "\nmaximal consistent sub-bases:\n";
    for (const VerdictWitness& w : v.witnesses) {
        out += "  ";
        out += ascii ? "d" : "δ";
        out += std::to_string(w.delta.canonical_rank());
        out += " " + subbase_label(w.delta, ascii);
        out += " [" + std::string(1, w.polarity) + "]\n";
    }
    return out;
}

// ===== framework serialization =====

struct ArgumentDoc {
    std::string id;
    std::vector<std::vector<std::string>> subbase;  // formula prints per level
    std::vector<std::string> knowledge;
    std::string state;  // "+", "-" or "n"

    friend bool operator==(const ArgumentDoc&, const ArgumentDoc&) = default;
};

struct FrameworkDoc {
    std::vector<ArgumentDoc> arguments;
    std::vector<std::array<std::string, 2>> attacks;  // (attacker id, attacked id)

    friend bool operator==(const FrameworkDoc&, const FrameworkDoc&) = default;
};

inline FrameworkDoc framework_doc(const DsaFramework& fw) {
    FrameworkDoc doc;
    for (const DsArgument& a : fw.arguments) {
        ArgumentDoc ad;
        ad.id = a.id;
        for (std::size_t i = 0; i < a.delta.level_count(); ++i) {
            std::vector<std::string> level;
            for (const Formula& f : a.delta.level(i)) level.push_back(to_string(f));
            ad.subbase.push_back(std::move(level));
        }
        for (const Formula& f : a.knowledge) ad.knowledge.push_back(to_string(f));
        ad.state = std::string(1, state_char(a.state));
        doc.arguments.push_back(std::move(ad));
    }
    for (const auto& [x, y] : fw.attacks)
        doc.attacks.push_back({fw.arguments[x].id, fw.arguments[y].id});
    return doc;
}

inline nlohmann::ordered_json framework_json(const FrameworkDoc& doc) {
    nlohmann::ordered_json j;
    j["arguments"] = nlohmann::ordered_json::array();
    for (const ArgumentDoc& a : doc.arguments) {
        nlohmann::ordered_json ja;
        ja["id"] = a.id;
        ja["subbase"] = a.subbase;
        ja["knowledge"] = a.knowledge;
        ja["state"] = a.state;
        j["arguments"].push_back(std::move(ja));
    }
    j["attacks"] = nlohmann::ordered_json::array();
    for (const auto& [x, y] : doc.attacks)
        j["attacks"].push_back(nlohmann::ordered_json::array({x, y}));
    return j;
}

inline FrameworkDoc framework_doc_from_json(const nlohmann::ordered_json& j) {
    FrameworkDoc doc;
    for (const auto& ja : j.at("arguments")) {
        ArgumentDoc a;
        a.id = ja.at("id").get<std::string>();
        a.subbase = ja.at("subbase").get<std::vector<std::vector<std::string>>>();
        a.knowledge = ja.at("knowledge").get<std::vector<std::string>>();
        a.state = ja.at("state").get<std::string>();
        doc.arguments.push_back(std::move(a));
    }
    for (const auto& jp : j.at("attacks"))
        doc.attacks.push_back({jp.at(0).get<std::string>(), jp.at(1).get<std::string>()});
    return doc;
}

inline std::string render_framework_json(const DsaFramework& fw) {
    return framework_json(framework_doc(fw)).dump(2) + "\n";
}

inline std::string render_framework_dot(const DsaFramework& fw, bool ascii) {
    std::string out = "digraph framework {\n  node [shape=box];\n";
    for (const DsArgument& a : fw.arguments)
        out += "  " + a.id + " [label=\"" + argument_label(a, ascii) + "\"];\n";
    for (const auto& [x, y] : fw.attacks)
        out += "  " + fw.arguments[x].id + " -> " + fw.arguments[y].id + ";\n";
    out += "}\n";
    return out;
}

// ===== explanation serialization =====

namespace detail {

inline void tree_dot_lines(const DsaFramework& fw, const DisputeNode& node,
                           const std::string& parent, std::size_t& counter, bool ascii,
                           std::string& out) {
    const std::string name = "n" + std::to_string(counter++);
    out += "  " + name + " [label=\"" + std::string(node.proponent ? "P: " : "O: ") +
           argument_label(fw.arguments[node.arg], ascii) + "\"];\n";
    if (!parent.empty()) out += "  " + name + " -> " + parent + ";\n";  // attack direction
    for (const DisputeNode& child : node.children)
        tree_dot_lines(fw, child, name, counter, ascii, out);
}

inline nlohmann::ordered_json tree_node_json(const DsaFramework& fw, const DisputeNode& node) {
    nlohmann::ordered_json j;
    j["side"] = node.proponent ? "P" : "O";
    j["argument"] = fw.arguments[node.arg].id;
    j["children"] = nlohmann::ordered_json::array();
    for (const DisputeNode& child : node.children)
        j["children"].push_back(tree_node_json(fw, child));
    return j;
}

}  // namespace detail

inline std::string render_explanation_dot(const DsaFramework& fw,
                                          const std::vector<Explanation>& families, bool ascii) {
    std::string out = "digraph explanation {\n  node [shape=box];\n";
    std::size_t counter = 0;
    for (const Explanation& family : families) {
        out += "  // family: consequence " + std::string(to_string(family.style)) + "\n";
        for (const ExplanationEntry& entry : family.entries) {
            if (!entry.built) {
                out += "  // no admissible dispute tree for " +
                       argument_label(fw.arguments[entry.root], ascii) + "\n";
                continue;
            }
            detail::tree_dot_lines(fw, entry.tree.root, "", counter, ascii, out);
        }
    }
    out += "}\n";
    return out;
}

inline nlohmann::ordered_json explanation_json(const DsaFramework& fw, VerdictKind verdict_kind,
                                               const std::vector<Explanation>& families) {
    nlohmann::ordered_json j;
    j["verdict"] = to_string(verdict_kind);
    j["families"] = nlohmann::ordered_json::array();
    for (const Explanation& family : families) {
        nlohmann::ordered_json jf;
        jf["style"] = to_string(family.style);
        jf["complete"] = family.complete;
        jf["trees"] = nlohmann::ordered_json::array();
        jf["missing"] = nlohmann::ordered_json::array();
        for (const ExplanationEntry& entry : family.entries) {
            if (!entry.built) {
                nlohmann::ordered_json jm;
                jm["root"] = fw.arguments[entry.root].id;
                jm["kind"] = "admissible";
                jf["missing"].push_back(std::move(jm));
                continue;
            }
            nlohmann::ordered_json jt;
            jt["root"] = fw.arguments[entry.root].id;
            jt["kind"] = entry.kind == TreeKind::Admissible ? "admissible" : "maximal";
            jt["nodes"] = detail::tree_node_json(fw, entry.tree.root);
            jf["trees"].push_back(std::move(jt));
        }
        j["families"].push_back(std::move(jf));
    }
    return j;
}

// ===== the check report =====

inline std::string render_check_report(const DsaFramework& fw, const FrameworkReport& report,
                                       const Extension& grounded, bool* all_ok) {
    std::string out = "verdict: " + std::string(to_string(report.verdict)) + "\n";
    out += "local optimality: ";
    out += !report.optimality_known ? "unknown (subset-enumeration cap)"
         : report.locally_optimized ? "yes"
                                    : "no";
    out += "\n";
    bool ok = report.all_pass;
    for (const PropertyItem& item : report.items) {
        out += item.name + " (" + item.description + "): ";
        if (!item.applicable)
            out += "skipped (" + item.detail + ")";
        else if (item.pass)
            out += "pass";
        else
            out += "FAIL (" + item.detail + ")";
        out += "\n";
    }

    out += "grounded extension: {";
    for (std::size_t i = 0; i < grounded.size(); ++i)
        out += (i > 0 ? ", " : "") + fw.arguments[grounded[i]].id;
    out += "}\n";

    const AaFramework aa = to_aa(fw);
    if (aa.size <= kMaxBruteArgs) {
        const ExtensionKinds kinds = check_extension_kinds(aa, grounded);
        const UniquenessReport uni = check_extension_uniqueness(aa);
        const auto yn = [](bool b) { return b ? "yes" : "NO"; };
        out += "grounded extension is stable: " + std::string(yn(kinds.stable)) +
               ", preferred: " + yn(kinds.preferred) + ", complete: " + yn(kinds.complete) + "\n";
        out += "extension kinds unique (brute force): " + std::string(yn(uni.unique)) + "\n";
        ok = ok && kinds.stable && kinds.preferred && kinds.complete && uni.unique;
    } else {
        out += "extension kind checks: skipped (argument cap)\n";
    }
    if (all_ok != nullptr) *all_ok = ok;
    return out;
}

}  // namespace normarg
