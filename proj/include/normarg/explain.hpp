#pragma once

// Dispute trees and explanations.  A dispute tree re-plays the framework as
// a two-player exchange: the proponent owns the root, every proponent node
// answers all of its attackers, and every opponent node is countered by at
// most one attacker.  An admissible tree counters every opponent and never
// fields the same argument on both sides; a maximal tree only leaves an
// opponent uncountered when nothing attacks it.  Explanations bundle one
// deterministically chosen tree per qualifying root.

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "dsa.hpp"
#include "semantics.hpp"

namespace normarg {

// ===== errors =====

class NotInExtension : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NoVerdict : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ExistenceViolation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ===== dispute trees =====

enum class TreeKind { Admissible, Maximal };

struct DisputeNode {
    bool proponent;
    std::size_t arg;
    std::vector<DisputeNode> children;
};

struct DisputeTree {
    TreeKind kind;
    DisputeNode root;
};

namespace detail {

// Every proponent node answers all of its attackers.  Opponent nodes pick
// their single counter by the policy passed in; termination is bounded by
// the argument count, which covers every acyclic framework.
template <typename DefenderPolicy>
DisputeNode grow_proponent(const DsaFramework& fw, std::size_t arg, std::size_t depth,
                           const DefenderPolicy& pick_defender) {
    if (depth > fw.arguments.size())
        throw std::logic_error("dispute tree deeper than the argument count");
    DisputeNode node{true, arg, {}};
    for (std::size_t attacker : fw.attackers_of(arg)) {
        DisputeNode opp{false, attacker, {}};
        if (auto defender = pick_defender(attacker))
            opp.children.push_back(grow_proponent(fw, *defender, depth + 2, pick_defender));
        node.children.push_back(std::move(opp));
    }
    return node;
}

}  // namespace detail

// Admissible dispute tree for a member of the grounded extension: every
// opponent is countered by its lowest-ranked attacker inside the extension.
inline DisputeTree admissible_dispute_tree(const DsaFramework& fw, const Extension& grounded,
                                           std::size_t root) {
    if (!contains(grounded, root))
        throw NotInExtension("argument " + fw.arguments[root].id +
                             " is outside the grounded extension");
    auto pick = [&](std::size_t attacker) -> std::optional<std::size_t> {
        for (std::size_t defender : fw.attackers_of(attacker))
            if (contains(grounded, defender)) return defender;
        throw ExistenceViolation("no defender inside the grounded extension counters " +
                                 fw.arguments[attacker].id);
    };
    return DisputeTree{TreeKind::Admissible, detail::grow_proponent(fw, root, 1, pick)};
}

// Maximal dispute tree: every attacked opponent is countered by its
// lowest-ranked attacker; unattacked opponents close their branch.
inline DisputeTree maximal_dispute_tree(const DsaFramework& fw, std::size_t root) {
    auto pick = [&](std::size_t attacker) -> std::optional<std::size_t> {
        const std::vector<std::size_t> counters = fw.attackers_of(attacker);
        if (counters.empty()) return std::nullopt;
        return counters.front();
    };
    return DisputeTree{TreeKind::Maximal, detail::grow_proponent(fw, root, 1, pick)};
}

// ===== tree invariants =====

namespace detail {

inline void collect_sides(const DisputeNode& node, std::set<std::size_t>& proponents,
                          std::set<std::size_t>& opponents) {
    (node.proponent ? proponents : opponents).insert(node.arg);
    for (const DisputeNode& child : node.children) collect_sides(child, proponents, opponents);
}

inline void check_node(const DsaFramework& fw, const DisputeNode& node, TreeKind kind,
                       std::vector<std::string>& violations) {
    for (const DisputeNode& child : node.children) {
        if (child.proponent == node.proponent)
            violations.push_back("a node and its child share a side");
        bool child_attacks_parent = false;
        for (const auto& [x, y] : fw.attacks)
            if (x == child.arg && y == node.arg) child_attacks_parent = true;
        if (!child_attacks_parent)
            violations.push_back("child " + fw.arguments[child.arg].id +
                                 " does not attack its parent " + fw.arguments[node.arg].id);
    }
    if (node.proponent) {
        // exactly one opponent child per attacker
        std::vector<std::size_t> expected = fw.attackers_of(node.arg);
        std::vector<std::size_t> actual;
        for (const DisputeNode& child : node.children) actual.push_back(child.arg);
        std::sort(actual.begin(), actual.end());
        if (actual != expected)
            violations.push_back("proponent " + fw.arguments[node.arg].id +
                                 " does not answer exactly its attackers");
    } else {
        if (node.children.size() > 1)
            violations.push_back("opponent " + fw.arguments[node.arg].id +
                                 " has more than one counter");
        if (kind == TreeKind::Admissible && node.children.empty())
            violations.push_back("opponent " + fw.arguments[node.arg].id + " is uncountered");
        if (kind == TreeKind::Maximal && node.children.empty() &&
            !fw.attackers_of(node.arg).empty())
            violations.push_back("opponent leaf " + fw.arguments[node.arg].id + " is attacked");
    }
    for (const DisputeNode& child : node.children) check_node(fw, child, kind, violations);
}

}  // namespace detail

// Structural violations of the dispute-tree conditions; empty means valid.
inline std::vector<std::string> check_dispute_tree(const DsaFramework& fw,
                                                   const DisputeTree& tree) {
    std::vector<std::string> violations;
    if (!tree.root.proponent) violations.push_back("root is not a proponent node");
    detail::check_node(fw, tree.root, tree.kind, violations);
    if (tree.kind == TreeKind::Admissible) {
        std::set<std::size_t> proponents, opponents;
        detail::collect_sides(tree.root, proponents, opponents);
        for (std::size_t arg : proponents)
            if (opponents.count(arg))
                violations.push_back("argument " + fw.arguments[arg].id +
                                     " plays both sides");
    }
    return violations;
}

// Arguments fielded by the proponent, as a sorted extension.
inline Extension proponent_side(const DisputeTree& tree) {
    std::set<std::size_t> proponents, opponents;
    detail::collect_sides(tree.root, proponents, opponents);
    return Extension(proponents.begin(), proponents.end());
}

// ===== explanations =====

struct ExplanationEntry {
    std::size_t root;
    TreeKind kind;   // the kind this root calls for
    bool built;      // false only without the existence guarantee
    DisputeTree tree;
};

struct Explanation {
    VerdictKind style;  // the verdict this family argues for
    std::vector<ExplanationEntry> entries;
    bool complete = true;  // every prescribed tree was built
};

namespace detail {

// Roots prescribed for a family: the style's winning state takes admissible
// trees, the opposing state takes maximal ones — each over the
// empty-knowledge arguments and the attackers of empty-knowledge neutrals.
inline std::vector<std::pair<std::size_t, TreeKind>> explanation_roots(const DsaFramework& fw,
                                                                       VerdictKind style) {
    const DerivationState winning =
        style == VerdictKind::Obligatory ? DerivationState::Pos : DerivationState::Neg;
    const DerivationState losing =
        style == VerdictKind::Obligatory ? DerivationState::Neg : DerivationState::Pos;
    std::set<std::size_t> admissible_roots, maximal_roots;
    for (std::size_t i = 0; i < fw.arguments.size(); ++i) {
        const DsArgument& a = fw.arguments[i];
        if (a.knowledge.empty()) {
            if (a.state == winning) admissible_roots.insert(i);
            if (a.state == losing) maximal_roots.insert(i);
            if (a.state == DerivationState::Neu)
                for (std::size_t x : fw.attackers_of(i)) {
                    if (fw.arguments[x].state == winning) admissible_roots.insert(x);
                    if (fw.arguments[x].state == losing) maximal_roots.insert(x);
                }
        }
    }
    std::vector<std::pair<std::size_t, TreeKind>> roots;
    for (std::size_t r : admissible_roots) roots.emplace_back(r, TreeKind::Admissible);
    for (std::size_t r : maximal_roots) roots.emplace_back(r, TreeKind::Maximal);
    return roots;
}

inline Explanation build_family(const DsaFramework& fw, const Extension& grounded,
                                VerdictKind style, bool guarantee) {
    Explanation out{style, {}, true};
    for (const auto& [root, kind] : explanation_roots(fw, style)) {
        if (kind == TreeKind::Admissible) {
            if (contains(grounded, root)) {
                out.entries.push_back(
                    {root, kind, true, admissible_dispute_tree(fw, grounded, root)});
            } else if (guarantee) {
                throw ExistenceViolation("no admissible dispute tree exists for " +
                                         fw.arguments[root].id);
            } else {
                out.entries.push_back({root, kind, false, {}});
                out.complete = false;
            }
        } else {
            out.entries.push_back({root, kind, true, maximal_dispute_tree(fw, root)});
        }
    }
    return out;
}

}  // namespace detail

// Explanation for a decided verdict.  With a locally optimized case the
// prescribed trees are guaranteed to exist, and failing to build one is an
// internal error; without that guarantee gaps are reported, not fatal.
inline Explanation build_explanation(const DsaFramework& fw) {
    const Verdict v = verdict(fw.norm_case);
    if (v.kind == VerdictKind::Neither)
        throw NoVerdict("the consequence is neither obligatory nor forbidden");
    bool guarantee = false;
    try {
        guarantee = is_locally_optimized(fw.norm_case).holds;
    } catch (const CapExceeded&) {
        guarantee = false;
    }
    return detail::build_family(fw, grounded_extension(to_aa(fw)), v.kind, guarantee);
}

// Both rival families regardless of the verdict: what a case would offer in
// support of each decided reading.  Roots whose prescribed tree cannot exist
// are reported as gaps.
inline std::pair<Explanation, Explanation> build_rival_explanations(const DsaFramework& fw) {
    const Extension grounded = grounded_extension(to_aa(fw));
    return {detail::build_family(fw, grounded, VerdictKind::Obligatory, false),
            detail::build_family(fw, grounded, VerdictKind::Forbidden, false)};
}

// ===== dialogue rendering =====

// "<d2,{p,q},->" or, in full glyphs, "⟨δ2,{p,q},-⟩"
inline std::string argument_label(const DsArgument& a, bool ascii) {
    std::string out = ascii ? "<d" : "⟨δ";
    out += std::to_string(a.delta.canonical_rank());
    out += ",{";
    bool first = true;
    for (const Formula& f : a.knowledge) {
        if (!first) out += ",";
        out += to_string(f);
        first = false;
    }
    out += "},";
    out += state_char(a.state);
    out += ascii ? ">" : "⟩";
    return out;
}

inline std::string subbase_label(const SubBase& d, bool ascii) {
    std::string out = ascii ? "<" : "⟨";
    for (std::size_t i = 0; i < d.level_count(); ++i) {
        if (i > 0) out += ", ";
        out += "{";
        bool first = true;
        for (const Formula& f : d.level(i)) {
            if (!first) out += ", ";
            out += to_string(f);
            first = false;
        }
        out += "}";
    }
    out += ascii ? ">" : "⟩";
    return out;
}

namespace detail {

inline void dialogue_lines(const DsaFramework& fw, const DisputeNode& node, std::size_t depth,
                           bool ascii, std::string& out) {
    const DsArgument& a = fw.arguments[node.arg];
    out.append(2 * depth, ' ');
    out += node.proponent ? "P: " : "O: ";
    out += argument_label(a, ascii);
    out += " sub-base ";
    out += subbase_label(a.delta, ascii);
    out += "\n";
    for (const DisputeNode& child : node.children)
        dialogue_lines(fw, child, depth + 1, ascii, out);
}

}  // namespace detail

inline std::string render_dialogue(const DsaFramework& fw, const DisputeTree& tree, bool ascii) {
    std::string out;
    detail::dialogue_lines(fw, tree.root, 0, ascii, out);
    return out;
}

inline std::string render_dialogue(const DsaFramework& fw, const Explanation& expl, bool ascii) {
    std::string out = "explanation that the consequence is ";
    out += to_string(expl.style);
    out += expl.complete ? "" : " (incomplete)";
    out += "\n";
    for (const ExplanationEntry& entry : expl.entries) {
        const std::string label = argument_label(fw.arguments[entry.root], ascii);
        if (!entry.built) {
            out += "missing: no admissible dispute tree for " + label +
                   " (outside the grounded extension)\n";
            continue;
        }
        out += entry.kind == TreeKind::Admissible ? "admissible dispute tree for " + label + ":\n"
                                                  : "maximal dispute tree for " + label + ":\n";
        out += render_dialogue(fw, entry.tree, ascii);
    }
    return out;
}

}  // namespace normarg
