#pragma once

// Finite formula sets plus the two ground queries everything else is built
// on: satisfiability and entailment, decided by exhaustive valuation of the
// atoms that actually occur.  Exactness over scale: inputs are capped.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "formula.hpp"

namespace normarg {

// ===== desk-scale caps =====

inline constexpr std::size_t kMaxAtoms = 20;        // exhaustive valuation bound
inline constexpr std::size_t kMaxConstraints = 16;  // soft constraints across all levels
inline constexpr std::size_t kMaxSituation = 10;    // situation elements
inline constexpr std::size_t kMaxSubsetEnum = 16;   // subset-enumeration bound
inline constexpr std::size_t kMaxBruteArgs = 20;    // argument bound for brute-force extension checks

class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ===== formula sets =====
//
// Deduplicated by structural equality; iteration follows insertion order so
// every derived listing is reproducible.  Equality is set equality.

class FormulaSet {
public:
    FormulaSet() = default;
    FormulaSet(std::initializer_list<Formula> fs) {
        for (const Formula& f : fs) insert(f);
    }

    bool insert(const Formula& f) {
        if (contains(f)) return false;
        items_.push_back(f);
        return true;
    }

    void insert_all(const FormulaSet& other) {
        for (const Formula& f : other) insert(f);
    }

    bool contains(const Formula& f) const {
        return std::find(items_.begin(), items_.end(), f) != items_.end();
    }

    bool subset_of(const FormulaSet& other) const {
        for (const Formula& f : items_)
            if (!other.contains(f)) return false;
        return true;
    }

    bool strict_subset_of(const FormulaSet& other) const {
        return size() < other.size() && subset_of(other);
    }

    std::size_t size() const { return items_.size(); }
    bool empty() const { return items_.empty(); }
    const Formula& operator[](std::size_t i) const { return items_[i]; }

    std::vector<Formula>::const_iterator begin() const { return items_.begin(); }
    std::vector<Formula>::const_iterator end() const { return items_.end(); }

    friend bool operator==(const FormulaSet& a, const FormulaSet& b) {
        return a.size() == b.size() && a.subset_of(b);
    }
    friend bool operator!=(const FormulaSet& a, const FormulaSet& b) { return !(a == b); }

private:
    std::vector<Formula> items_;
};

inline FormulaSet set_union(const FormulaSet& a, const FormulaSet& b) {
    FormulaSet out = a;
    out.insert_all(b);
    return out;
}

inline std::set<std::string> atoms(const FormulaSet& fs) {
    std::set<std::string> out;
    for (const Formula& f : fs) detail::collect_atoms(&f.node(), out);
    return out;
}

// ===== exhaustive valuation =====

namespace detail {

inline bool eval_node(const Formula::Node* n, const std::map<std::string, std::size_t>& index,
                      std::uint64_t valuation) {
    switch (n->conn) {
        case Conn::Atom:    return (valuation >> index.at(n->name)) & 1u;
        case Conn::Top:     return true;
        case Conn::Bottom:  return false;
        case Conn::Not:     return !eval_node(n->lhs.get(), index, valuation);
        case Conn::And:     return eval_node(n->lhs.get(), index, valuation) &&
                                   eval_node(n->rhs.get(), index, valuation);
        case Conn::Or:      return eval_node(n->lhs.get(), index, valuation) ||
                                   eval_node(n->rhs.get(), index, valuation);
        case Conn::Implies: return !eval_node(n->lhs.get(), index, valuation) ||
                                   eval_node(n->rhs.get(), index, valuation);
        case Conn::Iff:     return eval_node(n->lhs.get(), index, valuation) ==
                                   eval_node(n->rhs.get(), index, valuation);
    }
    return false;  // unreachable
}

inline std::map<std::string, std::size_t> atom_index(const std::set<std::string>& names,
                                                     std::size_t atom_cap) {
    if (names.size() > atom_cap)
        throw CapExceeded("formula set mentions " + std::to_string(names.size()) +
                          " atoms; the exhaustive valuation cap is " + std::to_string(atom_cap));
    std::map<std::string, std::size_t> index;
    std::size_t i = 0;
    for (const std::string& name : names) index[name] = i++;
    return index;
}

}  // namespace detail

// True iff some valuation satisfies every member.
inline bool is_consistent(const FormulaSet& fs, std::size_t atom_cap = kMaxAtoms) {
    auto index = detail::atom_index(atoms(fs), atom_cap);
    const std::uint64_t count = std::uint64_t{1} << index.size();
    for (std::uint64_t v = 0; v < count; ++v) {
        bool all = true;
        for (const Formula& f : fs)
            if (!detail::eval_node(&f.node(), index, v)) {
                all = false;
                break;
            }
        if (all) return true;
    }
    return false;
}

// True iff every valuation satisfying the set satisfies the goal.  An
// inconsistent set entails everything; the callers that must not rely on
// explosion check consistency first.
inline bool entails(const FormulaSet& fs, const Formula& goal, std::size_t atom_cap = kMaxAtoms) {
    std::set<std::string> names = atoms(fs);
    detail::collect_atoms(&goal.node(), names);
    auto index = detail::atom_index(names, atom_cap);
    const std::uint64_t count = std::uint64_t{1} << index.size();
    for (std::uint64_t v = 0; v < count; ++v) {
        bool all = true;
        for (const Formula& f : fs)
            if (!detail::eval_node(&f.node(), index, v)) {
                all = false;
                break;
            }
        if (all && !detail::eval_node(&goal.node(), index, v))
            return false;
    }
    return true;
}

}  // namespace normarg
