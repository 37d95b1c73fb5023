#pragma once

// Derivation states and the argumentation framework built from them.  Every
// pairing of a sub-base with a part of the situational knowledge yields a
// derivation state for the consequence; the distinguished pairs — locally
// preferred maxima among the sub-bases consistent with that knowledge — form
// arguments, and an argument attacks a differently-stated argument built
// from strictly less knowledge unless an equal-stated argument sits strictly
// between the two knowledge sets.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "formula.hpp"
#include "hierarchy.hpp"
#include "logic.hpp"

namespace normarg {

// ===== derivation states =====

enum class DerivationState { Bot, Pos, Neg, Neu };

inline char state_char(DerivationState s) {
    switch (s) {
        case DerivationState::Bot: return 'B';
        case DerivationState::Pos: return '+';
        case DerivationState::Neg: return '-';
        default:                   return 'n';
    }
}

inline DerivationState derivation_state(const FormulaSet& theory, const SubBase& delta,
                                        const FormulaSet& knowledge, const Formula& consequence,
                                        std::size_t atom_cap = kMaxAtoms) {
    const FormulaSet fs = set_union(set_union(theory, delta.flat()), knowledge);
    if (!is_consistent(fs, atom_cap)) return DerivationState::Bot;
    if (entails(fs, consequence, atom_cap)) return DerivationState::Pos;
    if (entails(fs, neg(consequence), atom_cap)) return DerivationState::Neg;
    return DerivationState::Neu;
}

// ===== knowledge subsets =====

namespace detail {

inline std::vector<std::string> sorted_prints(const FormulaSet& fs) {
    std::vector<std::string> out;
    out.reserve(fs.size());
    for (const Formula& f : fs) out.push_back(to_string(f));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

// Subsets of the situation, ascending by size and then lexicographically by
// their members' canonical prints.  Members keep the situation's own order.
inline std::vector<FormulaSet> knowledge_subsets(const FormulaSet& situation) {
    if (situation.size() > kMaxSituation)
        throw CapExceeded("situation holds " + std::to_string(situation.size()) +
                          " elements; the cap is " + std::to_string(kMaxSituation));
    const std::size_t n = situation.size();
    std::vector<FormulaSet> out;
    out.reserve(std::size_t{1} << n);
    for (std::uint32_t m = 0; m < (1u << n); ++m) {
        FormulaSet subset;
        for (std::size_t j = 0; j < n; ++j)
            if ((m >> j) & 1u) subset.insert(situation[j]);
        out.push_back(std::move(subset));
    }
    std::stable_sort(out.begin(), out.end(), [](const FormulaSet& a, const FormulaSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return detail::sorted_prints(a) < detail::sorted_prints(b);
    });
    return out;
}

// ===== the state grid =====

struct StateSpace {
    std::vector<SubBase> subbases;                     // columns: full hierarchy first
    std::vector<FormulaSet> knowledge;                 // rows: ascending knowledge subsets
    std::vector<std::vector<DerivationState>> cells;   // cells[row][column]
};

inline StateSpace state_space(const NormCase& c) {
    StateSpace space;
    space.subbases = enumerate_subbases(c.hierarchy);
    space.knowledge = knowledge_subsets(c.situation);
    space.cells.reserve(space.knowledge.size());
    for (const FormulaSet& pi : space.knowledge) {
        std::vector<DerivationState> row;
        row.reserve(space.subbases.size());
        for (const SubBase& d : space.subbases)
            row.push_back(derivation_state(c.theory, d, pi, c.consequence, c.atom_cap));
        space.cells.push_back(std::move(row));
    }
    return space;
}

// ===== arguments =====

struct DsArgument {
    SubBase delta;
    FormulaSet knowledge;
    DerivationState state;  // never Bot
    std::string id;         // "a" + canonical rank
};

namespace detail {

inline int state_rank(DerivationState s) {
    switch (s) {
        case DerivationState::Pos: return 0;
        case DerivationState::Neg: return 1;
        default:                   return 2;
    }
}

}  // namespace detail

// Arguments in canonical order: ascending knowledge (size, then lexicographic
// print), descending sub-base index, winning state first.
inline std::vector<DsArgument> ds_arguments(const NormCase& c) {
    std::vector<DsArgument> args;
    for (const FormulaSet& pi : knowledge_subsets(c.situation)) {
        for (const SubBase& d : maximal_consistent_subbases(c.hierarchy, c.theory, pi, c.atom_cap)) {
            DerivationState s = derivation_state(c.theory, d, pi, c.consequence, c.atom_cap);
            args.push_back({d, pi, s, ""});
        }
    }
    std::stable_sort(args.begin(), args.end(), [](const DsArgument& a, const DsArgument& b) {
        if (a.knowledge.size() != b.knowledge.size())
            return a.knowledge.size() < b.knowledge.size();
        const auto ak = detail::sorted_prints(a.knowledge), bk = detail::sorted_prints(b.knowledge);
        if (ak != bk) return ak < bk;
        if (a.delta.canonical_index() != b.delta.canonical_index())
            return a.delta.canonical_index() > b.delta.canonical_index();
        return detail::state_rank(a.state) < detail::state_rank(b.state);
    });
    for (std::size_t i = 0; i < args.size(); ++i) args[i].id = "a" + std::to_string(i);
    return args;
}

// ===== attacks =====

// Ordered pairs (attacker, attacked) under the concise-attack rule: the
// states differ, the attacked argument knows strictly less, and no argument
// sharing the attacker's state sits strictly between the two knowledge sets.
inline std::vector<std::pair<std::size_t, std::size_t>> compute_attacks(
    const std::vector<DsArgument>& args) {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t x = 0; x < args.size(); ++x) {
        for (std::size_t y = 0; y < args.size(); ++y) {
            if (args[x].state == args[y].state) continue;
            if (!args[y].knowledge.strict_subset_of(args[x].knowledge)) continue;
            bool blocked = false;
            for (std::size_t z = 0; z < args.size() && !blocked; ++z)
                blocked = args[z].state == args[x].state &&
                          args[y].knowledge.strict_subset_of(args[z].knowledge) &&
                          args[z].knowledge.strict_subset_of(args[x].knowledge);
            if (!blocked) out.emplace_back(x, y);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ===== the framework =====

struct DsaFramework {
    NormCase norm_case;
    std::vector<DsArgument> arguments;
    std::vector<std::pair<std::size_t, std::size_t>> attacks;  // (attacker, attacked)

    std::vector<std::size_t> attackers_of(std::size_t i) const {
        std::vector<std::size_t> out;
        for (const auto& [x, y] : attacks)
            if (y == i) out.push_back(x);
        return out;
    }

    std::vector<std::size_t> targets_of(std::size_t i) const {
        std::vector<std::size_t> out;
        for (const auto& [x, y] : attacks)
            if (x == i) out.push_back(y);
        return out;
    }
};

inline DsaFramework build_framework(const NormCase& c) {
    DsaFramework fw{c, ds_arguments(c), {}};
    fw.attacks = compute_attacks(fw.arguments);
    return fw;
}

// ===== structural properties =====

struct PropertyItem {
    std::string name;
    std::string description;
    bool applicable;
    bool pass;
    std::string detail;  // failure witness or skip reason
};

struct FrameworkReport {
    std::vector<PropertyItem> items;
    bool all_pass = true;       // over applicable items
    bool locally_optimized = false;
    bool optimality_known = true;  // false when the subset-enumeration cap blocked the check
    VerdictKind verdict = VerdictKind::Neither;
};

namespace detail {

inline bool attack_graph_acyclic(const DsaFramework& fw) {
    // Kahn's algorithm over attacker -> attacked edges
    std::vector<std::size_t> indegree(fw.arguments.size(), 0);
    for (const auto& [x, y] : fw.attacks) { (void)x; ++indegree[y]; }
    std::vector<std::size_t> queue;
    for (std::size_t i = 0; i < indegree.size(); ++i)
        if (indegree[i] == 0) queue.push_back(i);
    std::size_t seen = 0;
    while (!queue.empty()) {
        std::size_t i = queue.back();
        queue.pop_back();
        ++seen;
        for (std::size_t t : fw.targets_of(i))
            if (--indegree[t] == 0) queue.push_back(t);
    }
    return seen == fw.arguments.size();
}

}  // namespace detail

inline FrameworkReport check_framework_properties(const DsaFramework& fw) {
    FrameworkReport report;
    const Verdict v = verdict(fw.norm_case);
    report.verdict = v.kind;
    try {
        report.locally_optimized = is_locally_optimized(fw.norm_case).holds;
    } catch (const CapExceeded&) {
        report.optimality_known = false;
    }
    const bool decided = v.kind != VerdictKind::Neither;
    const bool optimal_decided =
        report.optimality_known && report.locally_optimized && decided;
    const char losing = v.kind == VerdictKind::Obligatory ? '-' : '+';

    auto add = [&](const std::string& name, const std::string& description, bool applicable,
                   bool pass, const std::string& detail) {
        report.items.push_back({name, description, applicable, pass, detail});
        if (applicable && !pass) report.all_pass = false;
    };

    {  // every knowledge subset supports at least one argument
        std::string missing;
        for (const FormulaSet& pi : knowledge_subsets(fw.norm_case.situation)) {
            bool found = false;
            for (const DsArgument& a : fw.arguments)
                if (a.knowledge == pi) { found = true; break; }
            if (!found) {
                missing = "no argument for a knowledge subset of size " +
                          std::to_string(pi.size());
                break;
            }
        }
        add("coverage", "every knowledge subset supports an argument", true, missing.empty(),
            missing);
    }
    {
        bool acyclic = detail::attack_graph_acyclic(fw);
        add("acyclic", "the attack graph is acyclic", true, acyclic,
            acyclic ? "" : "attack cycle found");
    }
    {
        bool pass = true;
        std::string detail = decided ? "" : "verdict is NEITHER";
        if (decided) {
            const DerivationState want =
                v.kind == VerdictKind::Obligatory ? DerivationState::Pos : DerivationState::Neg;
            for (const DsArgument& a : fw.arguments)
                if (a.knowledge == fw.norm_case.situation && a.state != want) {
                    pass = false;
                    detail = a.id + " carries state " + std::string(1, state_char(a.state));
                    break;
                }
        }
        add("full-knowledge-verdict", "full-knowledge arguments carry the verdict state",
            decided, pass, detail);
    }
    {
        bool pass = true;
        std::string detail;
        for (const auto& [x, y] : fw.attacks)
            if (local_gt(fw.arguments[x].delta, fw.arguments[y].delta)) {
                pass = false;
                detail = fw.arguments[x].id + " is locally preferred over " + fw.arguments[y].id;
                break;
            }
        add("attacker-not-preferred", "no attacker is locally preferred over its target", true,
            pass, detail);
    }

    const std::string skip = !report.optimality_known ? "local optimality unknown (cap)"
                           : !report.locally_optimized ? "case is not locally optimized"
                           : !decided                   ? "verdict is NEITHER"
                                                        : "";
    {
        bool pass = true;
        std::string detail = skip;
        if (optimal_decided)
            for (const auto& [x, y] : fw.attacks) {
                (void)y;
                if (fw.arguments[x].state == DerivationState::Neu) {
                    pass = false;
                    detail = fw.arguments[x].id + " attacks despite a neutral state";
                    break;
                }
            }
        add("neutral-no-attack", "neutral arguments launch no attacks", optimal_decided, pass,
            detail);
    }
    {
        bool pass = true;
        std::string detail = skip;
        if (optimal_decided)
            for (std::size_t i = 0; i < fw.arguments.size(); ++i)
                if (fw.arguments[i].state == DerivationState::Neu && fw.attackers_of(i).empty()) {
                    pass = false;
                    detail = fw.arguments[i].id + " is neutral yet unattacked";
                    break;
                }
        add("neutral-attacked", "every neutral argument is attacked", optimal_decided, pass,
            detail);
    }
    {
        bool pass = true;
        std::string detail = skip;
        if (optimal_decided)
            for (std::size_t i = 0; i < fw.arguments.size(); ++i)
                if (state_char(fw.arguments[i].state) == losing && fw.attackers_of(i).empty()) {
                    pass = false;
                    detail = fw.arguments[i].id + " carries the losing state yet is unattacked";
                    break;
                }
        add("loser-attacked", "every argument carrying the losing state is attacked",
            optimal_decided, pass, detail);
    }
    return report;
}

}  // namespace normarg
