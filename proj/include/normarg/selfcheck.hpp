#pragma once

// Randomized self-check: generates small random cases and verifies the
// implementation against independent oracles and the structural properties
// the theory promises.  Deterministic for a fixed seed.

#include <cstdint>
#include <ostream>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "dsa.hpp"
#include "explain.hpp"
#include "hierarchy.hpp"
#include "normfile.hpp"
#include "semantics.hpp"

namespace normarg::selfcheck {

// mt19937 output is pinned by the standard; reducing with % keeps the draw
// sequence identical across platforms (uniform_int_distribution is not).
struct Rng {
    std::mt19937 engine;
    explicit Rng(std::uint64_t seed)
        : engine(static_cast<std::mt19937::result_type>(seed)) {}
    std::size_t next(std::size_t bound) { return engine() % bound; }
};

// Definitional oracle for the maxima computation: filter the consistent
// sub-bases, keeping those with no locally preferred consistent rival.
inline std::vector<SubBase> brute_force_maximal_subbases(const HierarchyPtr& h,
                                                         const FormulaSet& theory,
                                                         const FormulaSet& phi,
                                                         std::size_t atom_cap) {
    const std::vector<SubBase> consistent = consistent_subbases(h, theory, phi, atom_cap);
    std::vector<SubBase> out;
    for (const SubBase& d : consistent) {
        bool dominated = false;
        for (const SubBase& rival : consistent)
            if (local_gt(rival, d)) { dominated = true; break; }
        if (!dominated) out.push_back(d);
    }
    return out;
}

namespace detail {

inline Formula random_literal(Rng& rng, std::size_t natoms) {
    static const char* const pool[] = {"p", "q", "r", "s"};
    const Formula a = atom(pool[rng.next(natoms)]);
    return rng.next(2) == 0 ? a : neg(a);
}

inline Formula random_constraint(Rng& rng, std::size_t natoms) {
    if (rng.next(2) == 0) return random_literal(rng, natoms);
    return implies(random_literal(rng, natoms), random_literal(rng, natoms));
}

// One draw from the case distribution; throws InvalidCase for degenerate
// draws (inconsistent theory, settled consequence, ...) — the caller retries.
inline NormCase random_case(Rng& rng) {
    const std::size_t natoms = 2 + rng.next(3);
    FormulaSet theory;
    if (rng.next(3) == 0) theory.insert(random_constraint(rng, natoms));
    std::vector<FormulaSet> levels(1 + rng.next(3));
    for (FormulaSet& level : levels) {
        const std::size_t n = 1 + rng.next(2);
        for (std::size_t i = 0; i < n; ++i) level.insert(random_constraint(rng, natoms));
    }
    FormulaSet situation;
    const std::size_t n = rng.next(4);
    for (std::size_t i = 0; i < n; ++i) situation.insert(random_literal(rng, natoms));
    const Formula consequence = random_literal(rng, natoms);
    return make_norm_case(std::move(theory), std::move(levels), std::move(situation),
                          consequence);
}

struct Category {
    std::string name;
    std::size_t pass = 0;
    std::size_t total = 0;

    // records the first failing instance across all categories
    void tally(bool ok, const NormCase& c, std::string& counterexample,
               std::string& where) {
        ++total;
        if (ok) { ++pass; return; }
        if (counterexample.empty()) {
            counterexample = render_norm_file(c);
            where = name;
        }
    }
};

}  // namespace detail

inline bool run_selfcheck(std::uint64_t seed, std::size_t count, std::ostream& out) {
    Rng rng(seed);
    detail::Category maxima{"maximal sub-bases vs brute force"};
    detail::Category framework{"framework properties"};
    detail::Category membership{"extension membership"};
    detail::Category explanations{"explanations and dispute trees"};
    detail::Category uniqueness{"extension uniqueness"};
    std::size_t discarded = 0, uniqueness_skipped = 0;
    std::string counterexample, where;

    constexpr std::size_t kMaxAttempts = 100000;
    std::size_t attempts = 0;
    for (std::size_t instance = 0; instance < count; ++instance) {
        NormCase c = [&] {
            for (;;) {
                if (++attempts > kMaxAttempts)
                    throw std::runtime_error("selfcheck generator exhausted its retry budget");
                try {
                    return detail::random_case(rng);
                } catch (const InvalidCase&) {
                    ++discarded;
                }
            }
        }();

        // the greedy maxima computation against the definitional filter,
        // at every knowledge subset the framework will use
        bool maxima_ok = true;
        for (const FormulaSet& pi : knowledge_subsets(c.situation)) {
            const auto greedy = maximal_consistent_subbases(c.hierarchy, c.theory, pi, c.atom_cap);
            const auto brute =
                brute_force_maximal_subbases(c.hierarchy, c.theory, pi, c.atom_cap);
            if (greedy != brute) { maxima_ok = false; break; }
        }
        maxima.tally(maxima_ok, c, counterexample, where);

        const DsaFramework fw = build_framework(c);
        const FrameworkReport report = check_framework_properties(fw);
        framework.tally(report.all_pass, c, counterexample, where);

        const AaFramework aa = to_aa(fw);
        const Extension grounded = grounded_extension(aa);
        const ExtensionPropertyReport ext = check_extension_properties(fw, grounded);
        if (ext.applicable) membership.tally(ext.all_pass, c, counterexample, where);

        bool explain_ok = true;
        if (report.verdict != VerdictKind::Neither) {
            try {
                const Explanation expl = build_explanation(fw);
                if (report.optimality_known && report.locally_optimized && !expl.complete)
                    explain_ok = false;
                for (const ExplanationEntry& entry : expl.entries) {
                    if (!entry.built) continue;
                    if (!check_dispute_tree(fw, entry.tree).empty()) explain_ok = false;
                    if (entry.kind == TreeKind::Admissible &&
                        !is_admissible(aa, proponent_side(entry.tree)))
                        explain_ok = false;
                }
            } catch (const ExistenceViolation&) {
                explain_ok = false;  // guaranteed tree was missing
            }
        }
        const auto rivals = build_rival_explanations(fw);
        for (const Explanation* family : {&rivals.first, &rivals.second})
            for (const ExplanationEntry& entry : family->entries) {
                if (!entry.built) continue;
                if (!check_dispute_tree(fw, entry.tree).empty()) explain_ok = false;
                if (entry.kind == TreeKind::Admissible &&
                    !is_admissible(aa, proponent_side(entry.tree)))
                    explain_ok = false;
            }
        explanations.tally(explain_ok, c, counterexample, where);

        // attack edges strictly shrink knowledge, so every framework is
        // well-founded and all four extension kinds must coincide uniquely
        const UniquenessReport uni = check_extension_uniqueness(aa);
        if (uni.applicable)
            uniqueness.tally(uni.unique, c, counterexample, where);
        else
            ++uniqueness_skipped;
    }

    out << "selfcheck seed=" << seed << " count=" << count << "\n";
    out << "instances: " << count << " generated, " << discarded << " discarded\n";
    bool all_pass = true;
    for (const detail::Category* cat :
         {&maxima, &framework, &membership, &explanations, &uniqueness}) {
        out << cat->name << ": " << cat->pass << "/" << cat->total;
        if (cat == &membership) out << " applicable";
        if (cat == &uniqueness) out << " checked, " << uniqueness_skipped << " skipped";
        out << "\n";
        all_pass = all_pass && cat->pass == cat->total;
    }
    if (!counterexample.empty())
        out << "first counterexample (" << where << "):\n" << counterexample;
    out << "result: " << (all_pass ? "PASS" : "FAIL") << "\n";
    return all_pass;
}

}  // namespace normarg::selfcheck
