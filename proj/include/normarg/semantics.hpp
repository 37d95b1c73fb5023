#pragma once

// Extension semantics over an abstract attack graph: conflict-freeness,
// defense, the grounded fixpoint, and brute-force verification of the
// classical extension kinds.  The graph is plain indices and attack pairs,
// so these checks also run on frameworks that never came from a norm case.

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "dsa.hpp"
#include "logic.hpp"

namespace normarg {

// ===== abstract frameworks and extensions =====

struct AaFramework {
    std::size_t size = 0;
    std::vector<std::pair<std::size_t, std::size_t>> attacks;  // (attacker, attacked)
};

inline AaFramework to_aa(const DsaFramework& fw) {
    return AaFramework{fw.arguments.size(), fw.attacks};
}

using Extension = std::vector<std::size_t>;  // sorted argument indices

inline bool contains(const Extension& e, std::size_t i) {
    return std::binary_search(e.begin(), e.end(), i);
}

// ===== basic predicates =====

inline bool is_conflict_free(const AaFramework& fw, const Extension& e) {
    for (const auto& [x, y] : fw.attacks)
        if (contains(e, x) && contains(e, y)) return false;
    return true;
}

// some member of e attacks i
inline bool attacks_member(const AaFramework& fw, const Extension& e, std::size_t i) {
    for (const auto& [x, y] : fw.attacks)
        if (y == i && contains(e, x)) return true;
    return false;
}

// every attacker of i is attacked by e
inline bool defends(const AaFramework& fw, const Extension& e, std::size_t i) {
    for (const auto& [x, y] : fw.attacks)
        if (y == i && !attacks_member(fw, e, x)) return false;
    return true;
}

inline bool is_admissible(const AaFramework& fw, const Extension& e) {
    if (!is_conflict_free(fw, e)) return false;
    for (std::size_t i : e)
        if (!defends(fw, e, i)) return false;
    return true;
}

inline bool is_stable(const AaFramework& fw, const Extension& e) {
    if (!is_conflict_free(fw, e)) return false;
    for (std::size_t i = 0; i < fw.size; ++i)
        if (!contains(e, i) && !attacks_member(fw, e, i)) return false;
    return true;
}

inline bool is_complete(const AaFramework& fw, const Extension& e) {
    if (!is_admissible(fw, e)) return false;
    for (std::size_t i = 0; i < fw.size; ++i)
        if (defends(fw, e, i) && !contains(e, i)) return false;
    return true;
}

// ===== the grounded extension =====

// Stages of the defense fixpoint: the unattacked arguments, then at every
// step everything the previous stage defends, until nothing new appears.
inline std::vector<Extension> grounded_stages(const AaFramework& fw) {
    std::vector<Extension> stages;
    Extension current;  // stage -1: the empty set defends exactly the unattacked
    for (;;) {
        Extension next;
        for (std::size_t i = 0; i < fw.size; ++i)
            if (defends(fw, current, i)) next.push_back(i);
        stages.push_back(next);
        if (next == current) return stages;
        current = std::move(next);
    }
}

inline Extension grounded_extension(const AaFramework& fw) {
    return grounded_stages(fw).back();
}

// ===== extension kinds =====

struct ExtensionKinds {
    bool grounded = false;
    bool stable = false;
    bool preferred = false;
    bool complete = false;
};

// The preferred check enumerates admissible strict supersets, so it is
// capped; everything else is a direct predicate.
inline ExtensionKinds check_extension_kinds(const AaFramework& fw, const Extension& e) {
    ExtensionKinds kinds;
    kinds.grounded = e == grounded_extension(fw);
    kinds.stable = is_stable(fw, e);
    kinds.complete = is_complete(fw, e);

    if (fw.size > kMaxBruteArgs)
        throw CapExceeded("framework holds " + std::to_string(fw.size) +
                          " arguments; the brute-force cap is " + std::to_string(kMaxBruteArgs));
    kinds.preferred = is_admissible(fw, e);
    if (kinds.preferred) {
        std::uint32_t base = 0;
        for (std::size_t i : e) base |= (1u << i);
        std::vector<std::size_t> rest;
        for (std::size_t i = 0; i < fw.size; ++i)
            if (!contains(e, i)) rest.push_back(i);
        const std::uint32_t count = 1u << rest.size();
        for (std::uint32_t m = 1; m < count && kinds.preferred; ++m) {
            Extension super;
            std::uint32_t mask = base;
            for (std::size_t j = 0; j < rest.size(); ++j)
                if ((m >> j) & 1u) mask |= (1u << rest[j]);
            for (std::size_t i = 0; i < fw.size; ++i)
                if ((mask >> i) & 1u) super.push_back(i);
            if (is_admissible(fw, super)) kinds.preferred = false;  // a strictly larger one
        }
    }
    return kinds;
}

// ===== extension uniqueness =====

// Brute-force count of stable, preferred and complete subsets.  On the
// acyclic frameworks built from norm cases each kind is expected to pick out
// exactly the grounded extension.
struct UniquenessReport {
    bool applicable = false;  // false when the argument cap blocked the enumeration
    std::size_t stable_count = 0;
    std::size_t preferred_count = 0;
    std::size_t complete_count = 0;
    bool unique = false;  // one of each and all equal to the grounded extension
};

inline UniquenessReport check_extension_uniqueness(const AaFramework& fw) {
    UniquenessReport report;
    if (fw.size > kMaxBruteArgs) return report;
    report.applicable = true;

    const std::size_t n = fw.size;
    std::vector<std::uint32_t> attacker_mask(n, 0), target_mask(n, 0);
    for (const auto& [x, y] : fw.attacks) {
        attacker_mask[y] |= (1u << x);
        target_mask[x] |= (1u << y);
    }
    const std::uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
    const auto attacked_by = [&](std::uint32_t m) {
        std::uint32_t out = 0;
        for (std::size_t i = 0; i < n; ++i)
            if ((m >> i) & 1u) out |= target_mask[i];
        return out;
    };

    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<std::uint32_t> admissible_masks;
    std::uint32_t grounded_mask = 0;
    for (std::size_t i : grounded_extension(fw)) grounded_mask |= (1u << i);

    bool stable_is_grounded = true, complete_is_grounded = true;
    for (std::uint64_t mm = 0; mm < count; ++mm) {
        const auto m = static_cast<std::uint32_t>(mm);
        const std::uint32_t hit = attacked_by(m);
        if ((hit & m) != 0) continue;  // not conflict-free
        std::uint32_t defended = 0;
        for (std::size_t i = 0; i < n; ++i)
            if ((attacker_mask[i] & ~hit) == 0) defended |= (1u << i);
        const bool admissible = (m & ~defended) == 0;
        if (admissible) admissible_masks.push_back(m);
        if ((~m & ~hit & full) == 0) {
            ++report.stable_count;
            stable_is_grounded = stable_is_grounded && m == grounded_mask;
        }
        if (admissible && (defended & ~m) == 0) {
            ++report.complete_count;
            complete_is_grounded = complete_is_grounded && m == grounded_mask;
        }
    }
    bool preferred_is_grounded = true;
    for (std::uint32_t m : admissible_masks) {
        bool maximal = true;
        for (std::uint32_t other : admissible_masks)
            if (other != m && (m & other) == m) { maximal = false; break; }
        if (maximal) {
            ++report.preferred_count;
            preferred_is_grounded = preferred_is_grounded && m == grounded_mask;
        }
    }
    report.unique = report.stable_count == 1 && report.preferred_count == 1 &&
                    report.complete_count == 1 && stable_is_grounded &&
                    preferred_is_grounded && complete_is_grounded;
    return report;
}

// ===== extension membership properties =====

// With a locally optimized case and a decided verdict, the grounded
// extension sorts empty-knowledge arguments by their state: winners belong,
// losers stay out, and the attackers of neutral empty-knowledge arguments
// follow the same rule.
struct ExtensionPropertyReport {
    std::vector<PropertyItem> items;
    bool applicable = false;
    bool all_pass = true;
};

inline ExtensionPropertyReport check_extension_properties(const DsaFramework& fw,
                                                          const Extension& e) {
    ExtensionPropertyReport report;
    const Verdict v = verdict(fw.norm_case);
    bool optimized = false, optimality_known = true;
    try {
        optimized = is_locally_optimized(fw.norm_case).holds;
    } catch (const CapExceeded&) {
        optimality_known = false;
    }
    report.applicable =
        optimality_known && optimized && v.kind != VerdictKind::Neither;
    const std::string skip = !optimality_known ? "local optimality unknown (cap)"
                           : !optimized        ? "case is not locally optimized"
                           : "verdict is NEITHER";

    const DerivationState winning =
        v.kind == VerdictKind::Obligatory ? DerivationState::Pos : DerivationState::Neg;
    const DerivationState losing =
        v.kind == VerdictKind::Obligatory ? DerivationState::Neg : DerivationState::Pos;

    auto add = [&](const std::string& name, const std::string& description, bool pass,
                   const std::string& detail) {
        report.items.push_back({name, description, report.applicable, pass,
                                report.applicable ? detail : skip});
        if (report.applicable && !pass) report.all_pass = false;
    };

    bool winners_in = true, losers_out = true, neutral_sorted = true;
    std::string w_detail, l_detail, n_detail;
    if (report.applicable) {
        for (std::size_t i = 0; i < fw.arguments.size(); ++i) {
            const DsArgument& a = fw.arguments[i];
            if (!a.knowledge.empty()) continue;
            if (a.state == winning && !contains(e, i)) {
                winners_in = false;
                w_detail = a.id + " is outside the grounded extension";
            }
            if (a.state == losing && contains(e, i)) {
                losers_out = false;
                l_detail = a.id + " is inside the grounded extension";
            }
            if (a.state == DerivationState::Neu) {
                for (std::size_t x : fw.attackers_of(i)) {
                    if (fw.arguments[x].state == winning && !contains(e, x)) {
                        neutral_sorted = false;
                        n_detail = fw.arguments[x].id + " is outside the grounded extension";
                    }
                    if (fw.arguments[x].state == losing && contains(e, x)) {
                        neutral_sorted = false;
                        n_detail = fw.arguments[x].id + " is inside the grounded extension";
                    }
                }
            }
        }
    }
    add("empty-winners-in", "empty-knowledge arguments with the winning state are in",
        winners_in, w_detail);
    add("empty-losers-out", "empty-knowledge arguments with the losing state are out",
        losers_out, l_detail);
    add("neutral-attackers-sorted",
        "attackers of neutral empty-knowledge arguments follow the verdict", neutral_sorted,
        n_detail);
    return report;
}

}  // namespace normarg
