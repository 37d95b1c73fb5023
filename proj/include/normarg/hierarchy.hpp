#pragma once

// Prioritized soft-constraint hierarchies.  A hierarchy orders finite levels
// of propositional constraints from most to least important; a sub-base keeps
// a subset of every level.  The verdict machinery asks which sub-bases are
// maximal under local preference while staying consistent with the situation,
// and whether they force the consequence one way or the other.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "formula.hpp"
#include "logic.hpp"

namespace normarg {

// ===== hierarchies =====

struct ConstraintHierarchy {
    std::vector<FormulaSet> levels;  // levels[0] is the most important

    std::size_t total_constraints() const {
        std::size_t n = 0;
        for (const FormulaSet& level : levels) n += level.size();
        return n;
    }

    FormulaSet flatten() const {
        FormulaSet out;
        for (const FormulaSet& level : levels) out.insert_all(level);
        return out;
    }
};

using HierarchyPtr = std::shared_ptr<const ConstraintHierarchy>;

inline HierarchyPtr make_hierarchy(std::vector<FormulaSet> levels) {
    return std::make_shared<const ConstraintHierarchy>(ConstraintHierarchy{std::move(levels)});
}

// ===== sub-bases =====
//
// A sub-base is identified by one selection mask per level (bit j covers the
// j-th formula of that level).  Its canonical index packs the masks into one
// integer, most important level in the most significant bits, so that the
// descending index order starts at the full hierarchy and ends at the empty
// sub-base.

class SubBase {
public:
    SubBase(HierarchyPtr parent, std::vector<std::uint32_t> masks)
        : parent_(std::move(parent)), masks_(std::move(masks)) {}

    const ConstraintHierarchy& hierarchy() const { return *parent_; }
    const HierarchyPtr& hierarchy_ptr() const { return parent_; }
    std::size_t level_count() const { return masks_.size(); }
    std::uint32_t level_mask(std::size_t i) const { return masks_[i]; }

    FormulaSet level(std::size_t i) const {
        FormulaSet out;
        const FormulaSet& full = parent_->levels[i];
        for (std::size_t j = 0; j < full.size(); ++j)
            if ((masks_[i] >> j) & 1u) out.insert(full[j]);
        return out;
    }

    FormulaSet flat() const {
        FormulaSet out;
        for (std::size_t i = 0; i < masks_.size(); ++i) out.insert_all(level(i));
        return out;
    }

    std::uint64_t canonical_index() const {
        std::uint64_t index = 0;
        for (std::size_t i = 0; i < masks_.size(); ++i)
            for (std::size_t j = 0; j < parent_->levels[i].size(); ++j)
                index = (index << 1) | ((masks_[i] >> j) & 1u);
        return index;
    }

    // position in the descending enumeration: 0 is the full hierarchy
    std::uint64_t canonical_rank() const {
        const std::uint64_t all = (std::uint64_t{1} << parent_->total_constraints()) - 1;
        return all - canonical_index();
    }

    friend bool operator==(const SubBase& a, const SubBase& b) {
        return a.parent_ == b.parent_ && a.masks_ == b.masks_;
    }
    friend bool operator!=(const SubBase& a, const SubBase& b) { return !(a == b); }

private:
    HierarchyPtr parent_;
    std::vector<std::uint32_t> masks_;
};

inline SubBase subbase_from_index(const HierarchyPtr& h, std::uint64_t index) {
    const std::size_t total = h->total_constraints();
    std::vector<std::uint32_t> masks(h->levels.size(), 0);
    std::size_t pos = 0;  // bit position from the most significant end
    for (std::size_t i = 0; i < h->levels.size(); ++i)
        for (std::size_t j = 0; j < h->levels[i].size(); ++j, ++pos)
            if ((index >> (total - 1 - pos)) & 1u) masks[i] |= (1u << j);
    return SubBase(h, std::move(masks));
}

// All sub-bases by descending canonical index: full hierarchy first.
inline std::vector<SubBase> enumerate_subbases(const HierarchyPtr& h) {
    const std::size_t total = h->total_constraints();
    if (total > kMaxConstraints)
        throw CapExceeded("hierarchy holds " + std::to_string(total) +
                          " constraints; the enumeration cap is " + std::to_string(kMaxConstraints));
    std::vector<SubBase> out;
    const std::uint64_t count = std::uint64_t{1} << total;
    out.reserve(count);
    for (std::uint64_t index = count; index-- > 0;)
        out.push_back(subbase_from_index(h, index));
    return out;
}

// ===== local preference =====
//
// a is preferred to b when, at the most important level where they differ,
// b keeps strictly fewer constraints; everything below that level is free.

inline bool local_ge(const SubBase& a, const SubBase& b) {
    for (std::size_t k = 0; k < a.level_count(); ++k) {
        const std::uint32_t am = a.level_mask(k), bm = b.level_mask(k);
        if (am == bm) continue;
        return (am & bm) == bm;
    }
    return false;  // equal selections: neither is preferred
}

inline bool local_gt(const SubBase& a, const SubBase& b) {
    return local_ge(a, b) && !local_ge(b, a);
}

// ===== consistency-constrained sub-base selection =====

// Sub-bases whose constraints can hold together with theory and phi,
// in descending canonical order.
inline std::vector<SubBase> consistent_subbases(const HierarchyPtr& h, const FormulaSet& theory,
                                                const FormulaSet& phi,
                                                std::size_t atom_cap = kMaxAtoms) {
    std::vector<SubBase> out;
    const FormulaSet base = set_union(theory, phi);
    for (const SubBase& d : enumerate_subbases(h))
        if (is_consistent(set_union(base, d.flat()), atom_cap)) out.push_back(d);
    return out;
}

// Locally preferred maxima of the consistent sub-bases, computed level by
// level: each consistent prefix is extended with every inclusion-maximal
// selection of the next level that keeps it consistent.  A selection made
// this way can never be improved at an earlier level without losing
// consistency, which is exactly local-preference maximality.
inline std::vector<SubBase> maximal_consistent_subbases(const HierarchyPtr& h,
                                                        const FormulaSet& theory,
                                                        const FormulaSet& phi,
                                                        std::size_t atom_cap = kMaxAtoms) {
    if (h->total_constraints() > kMaxConstraints)
        throw CapExceeded("hierarchy holds " + std::to_string(h->total_constraints()) +
                          " constraints; the enumeration cap is " + std::to_string(kMaxConstraints));

    const FormulaSet base = set_union(theory, phi);
    if (!is_consistent(base, atom_cap)) return {};

    struct Prefix {
        std::vector<std::uint32_t> masks;
        FormulaSet committed;
    };
    std::vector<Prefix> prefixes{{{}, base}};

    for (const FormulaSet& level : h->levels) {
        const std::size_t s = level.size();
        const std::uint32_t count = 1u << s;
        std::vector<Prefix> next;
        for (const Prefix& prefix : prefixes) {
            // consistency of every selection from this level given the prefix;
            // a selection with an inconsistent sub-selection is inconsistent
            std::vector<char> consistent(count, 0);
            for (std::uint32_t m = 0; m < count; ++m) {
                bool viable = true;
                for (std::size_t b = 0; b < s && viable; ++b)
                    if ((m >> b) & 1u) viable = consistent[m ^ (1u << b)] != 0;
                if (!viable) continue;
                FormulaSet fs = prefix.committed;
                for (std::size_t j = 0; j < s; ++j)
                    if ((m >> j) & 1u) fs.insert(level[j]);
                consistent[m] = is_consistent(fs, atom_cap) ? 1 : 0;
            }
            for (std::uint32_t m = count; m-- > 0;) {
                if (!consistent[m]) continue;
                bool maximal = true;
                for (std::size_t b = 0; b < s && maximal; ++b)
                    if (!((m >> b) & 1u)) maximal = consistent[m | (1u << b)] == 0;
                if (!maximal) continue;
                Prefix extended = prefix;
                extended.masks.push_back(m);
                for (std::size_t j = 0; j < s; ++j)
                    if ((m >> j) & 1u) extended.committed.insert(level[j]);
                next.push_back(std::move(extended));
            }
        }
        prefixes = std::move(next);
    }

    std::vector<SubBase> out;
    out.reserve(prefixes.size());
    for (Prefix& p : prefixes) out.emplace_back(h, std::move(p.masks));
    std::sort(out.begin(), out.end(), [](const SubBase& a, const SubBase& b) {
        return a.canonical_index() > b.canonical_index();
    });
    return out;
}

// ===== norm cases =====

class InvalidCase : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A decision problem: hard theory, soft hierarchy, situation at hand and the
// consequence under question.  Only validated cases circulate.
struct NormCase {
    FormulaSet theory;
    HierarchyPtr hierarchy;
    FormulaSet situation;
    Formula consequence;
    std::size_t atom_cap = kMaxAtoms;
};

inline NormCase make_norm_case(FormulaSet theory, std::vector<FormulaSet> levels,
                               FormulaSet situation, const Formula& consequence,
                               std::size_t atom_cap = kMaxAtoms) {
    NormCase c{std::move(theory), make_hierarchy(std::move(levels)), std::move(situation),
               consequence, std::min(atom_cap, kMaxAtoms)};

    // caps come first: they guard the valuation loops below
    std::set<std::string> names = atoms(c.theory);
    for (const FormulaSet& level : c.hierarchy->levels)
        for (const Formula& f : level) detail::collect_atoms(&f.node(), names);
    for (const Formula& f : c.situation) detail::collect_atoms(&f.node(), names);
    detail::collect_atoms(&c.consequence.node(), names);
    if (names.size() > c.atom_cap)
        throw CapExceeded("case mentions " + std::to_string(names.size()) +
                          " atoms; the cap is " + std::to_string(c.atom_cap));
    if (c.hierarchy->total_constraints() > kMaxConstraints)
        throw CapExceeded("hierarchy holds " + std::to_string(c.hierarchy->total_constraints()) +
                          " constraints; the cap is " + std::to_string(kMaxConstraints));
    if (c.situation.size() > kMaxSituation)
        throw CapExceeded("situation holds " + std::to_string(c.situation.size()) +
                          " elements; the cap is " + std::to_string(kMaxSituation));
    if (c.hierarchy->levels.empty())
        throw InvalidCase("hierarchy needs at least one level");

    if (!is_consistent(c.theory, c.atom_cap))
        throw InvalidCase("background theory is inconsistent");
    const FormulaSet grounding = set_union(c.theory, c.situation);
    if (!is_consistent(grounding, c.atom_cap))
        throw InvalidCase("situation is inconsistent with the background theory");
    if (entails(grounding, c.consequence, c.atom_cap))
        throw InvalidCase("consequence already follows from theory and situation alone");
    if (entails(grounding, neg(c.consequence), c.atom_cap))
        throw InvalidCase("negated consequence already follows from theory and situation alone");
    return c;
}

// ===== verdicts =====

enum class VerdictKind { Obligatory, Forbidden, Neither };

inline const char* to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::Obligatory: return "OBLIGATORY";
        case VerdictKind::Forbidden:  return "FORBIDDEN";
        default:                      return "NEITHER";
    }
}

struct VerdictWitness {
    SubBase delta;
    char polarity;  // '+': forces the consequence, '-': forces its negation, 'n': neither
};

struct Verdict {
    VerdictKind kind;
    std::vector<VerdictWitness> witnesses;  // the maximal consistent sub-bases
};

inline Verdict verdict(const NormCase& c) {
    Verdict v{VerdictKind::Neither, {}};
    bool all_pos = true, all_neg = true;
    for (const SubBase& d :
         maximal_consistent_subbases(c.hierarchy, c.theory, c.situation, c.atom_cap)) {
        FormulaSet fs = set_union(set_union(c.theory, d.flat()), c.situation);
        char pol = entails(fs, c.consequence, c.atom_cap)        ? '+'
                 : entails(fs, neg(c.consequence), c.atom_cap)   ? '-'
                                                                 : 'n';
        all_pos = all_pos && pol == '+';
        all_neg = all_neg && pol == '-';
        v.witnesses.push_back({d, pol});
    }
    if (v.witnesses.empty())
        throw InvalidCase("no sub-base is consistent with the situation");  // excluded by validation
    v.kind = all_pos ? VerdictKind::Obligatory
           : all_neg ? VerdictKind::Forbidden
                     : VerdictKind::Neither;
    return v;
}

// ===== local optimality =====
//
// The verdict machinery is decision-complete for a case exactly when every
// maximal consistent subset of hierarchy-plus-situation settles the
// consequence one way or the other.

struct LocalOptimalityReport {
    bool holds = true;
    FormulaSet witness;  // a non-decisive maximal consistent subset when !holds
};

inline LocalOptimalityReport is_locally_optimized(const NormCase& c) {
    const FormulaSet pool = set_union(c.hierarchy->flatten(), c.situation);
    const std::size_t n = pool.size();
    if (n > kMaxSubsetEnum)
        throw CapExceeded("hierarchy plus situation holds " + std::to_string(n) +
                          " formulas; the subset-enumeration cap is " +
                          std::to_string(kMaxSubsetEnum));

    const std::uint32_t count = 1u << n;
    std::vector<char> consistent(count, 0);
    const auto subset_of_pool = [&](std::uint32_t m) {
        FormulaSet fs = c.theory;
        for (std::size_t j = 0; j < n; ++j)
            if ((m >> j) & 1u) fs.insert(pool[j]);
        return fs;
    };
    for (std::uint32_t m = 0; m < count; ++m) {
        bool viable = true;
        for (std::size_t b = 0; b < n && viable; ++b)
            if ((m >> b) & 1u) viable = consistent[m ^ (1u << b)] != 0;
        if (!viable) continue;
        consistent[m] = is_consistent(subset_of_pool(m), c.atom_cap) ? 1 : 0;
    }
    for (std::uint32_t m = 0; m < count; ++m) {
        if (!consistent[m]) continue;
        bool maximal = true;
        for (std::size_t b = 0; b < n && maximal; ++b)
            if (!((m >> b) & 1u)) maximal = consistent[m | (1u << b)] == 0;
        if (!maximal) continue;
        FormulaSet fs = subset_of_pool(m);
        if (!entails(fs, c.consequence, c.atom_cap) &&
            !entails(fs, neg(c.consequence), c.atom_cap)) {
            FormulaSet witness;
            for (std::size_t j = 0; j < n; ++j)
                if ((m >> j) & 1u) witness.insert(pool[j]);
            return {false, witness};
        }
    }
    return {true, {}};
}

}  // namespace normarg
