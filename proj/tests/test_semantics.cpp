#include <catch2/catch_amalgamated.hpp>

#include <normarg/semantics.hpp>

using namespace normarg;

namespace {

FormulaSet make_set(const std::vector<std::string>& texts) {
    FormulaSet out;
    for (const std::string& t : texts) out.insert(parse_formula(t));
    return out;
}

NormCase overtaking_case(const std::vector<std::string>& situation) {
    return make_norm_case(FormulaSet{},
                          {make_set({"p -> !r"}), make_set({"q -> r"}), make_set({"!r"})},
                          make_set(situation), parse_formula("r"));
}

NormCase conflict_case() {
    return make_norm_case(FormulaSet{}, {make_set({"p -> !r", "q -> r"})},
                          make_set({"p", "q"}), parse_formula("r"));
}

// two arguments attacking each other, both attacking a third
AaFramework mutual_cycle() {
    return AaFramework{3, {{0, 1}, {0, 2}, {1, 0}, {1, 2}}};
}

}  // namespace

TEST_CASE("grounded extension of the three-level example, stage by stage") {
    const AaFramework aa = to_aa(build_framework(overtaking_case({"p", "q"})));
    REQUIRE(aa.size == 4);

    const std::vector<Extension> stages = grounded_stages(aa);
    REQUIRE(stages.size() >= 2);
    CHECK(stages.front() == Extension{1, 3});        // unattacked arguments
    CHECK(stages.back() == Extension{0, 1, 3});      // a0 is defended by a3
    CHECK(grounded_extension(aa) == Extension{0, 1, 3});

    // stages grow monotonically
    for (std::size_t i = 0; i + 1 < stages.size(); ++i)
        CHECK(std::includes(stages[i + 1].begin(), stages[i + 1].end(),
                            stages[i].begin(), stages[i].end()));
}

TEST_CASE("grounded extension of the conflicting-norms example") {
    const AaFramework aa = to_aa(build_framework(conflict_case()));
    // the two full-knowledge rivals survive, and together they defend the
    // uninformed neutral against both of its attackers
    CHECK(grounded_extension(aa) == Extension{0, 3, 4});
}

TEST_CASE("basic predicates on the three-level example") {
    const AaFramework aa = to_aa(build_framework(overtaking_case({"p", "q"})));
    const Extension grounded{0, 1, 3};

    CHECK(is_conflict_free(aa, grounded));
    CHECK(is_admissible(aa, grounded));
    CHECK(is_stable(aa, grounded));
    CHECK(is_complete(aa, grounded));

    CHECK_FALSE(is_conflict_free(aa, Extension{0, 2}));   // a2 attacks a0
    CHECK(is_conflict_free(aa, Extension{0, 1}));
    CHECK_FALSE(is_admissible(aa, Extension{0, 1}));      // a0 undefended against a2
    CHECK(is_admissible(aa, Extension{}));
    CHECK_FALSE(is_complete(aa, Extension{}));            // a1, a3 are unattacked
    CHECK_FALSE(is_stable(aa, Extension{1, 3}));          // a0 is neither in nor attacked
}

TEST_CASE("extension kinds coincide on the example framework") {
    const AaFramework aa = to_aa(build_framework(overtaking_case({"p", "q"})));
    const ExtensionKinds kinds = check_extension_kinds(aa, grounded_extension(aa));
    CHECK(kinds.grounded);
    CHECK(kinds.stable);
    CHECK(kinds.preferred);
    CHECK(kinds.complete);

    const UniquenessReport report = check_extension_uniqueness(aa);
    CHECK(report.applicable);
    CHECK(report.stable_count == 1);
    CHECK(report.preferred_count == 1);
    CHECK(report.complete_count == 1);
    CHECK(report.unique);
}

TEST_CASE("a mutual attack cycle breaks uniqueness") {
    const AaFramework aa = mutual_cycle();
    CHECK(grounded_extension(aa).empty());

    const ExtensionKinds kinds = check_extension_kinds(aa, Extension{});
    CHECK(kinds.grounded);
    CHECK(kinds.complete);       // the empty set defends nothing here
    CHECK_FALSE(kinds.stable);
    CHECK_FALSE(kinds.preferred);  // {0} and {1} are larger admissible sets

    const ExtensionKinds zero = check_extension_kinds(aa, Extension{0});
    CHECK_FALSE(zero.grounded);
    CHECK(zero.stable);
    CHECK(zero.preferred);
    CHECK(zero.complete);

    const UniquenessReport report = check_extension_uniqueness(aa);
    CHECK(report.applicable);
    CHECK(report.stable_count == 2);     // {0} and {1}
    CHECK(report.preferred_count == 2);
    CHECK(report.complete_count == 3);   // {}, {0}, {1}
    CHECK_FALSE(report.unique);
}

TEST_CASE("uniqueness check bows out above the brute-force cap") {
    AaFramework big;
    big.size = kMaxBruteArgs + 1;
    const UniquenessReport report = check_extension_uniqueness(big);
    CHECK_FALSE(report.applicable);
}

TEST_CASE("extension membership properties on decided optimized cases") {
    const DsaFramework fw = build_framework(overtaking_case({"p", "q"}));
    const ExtensionPropertyReport report =
        check_extension_properties(fw, grounded_extension(to_aa(fw)));
    CHECK(report.applicable);
    CHECK(report.all_pass);
    REQUIRE(report.items.size() == 3);
    CHECK(report.items[0].name == "empty-winners-in");
    CHECK(report.items[1].name == "empty-losers-out");
    CHECK(report.items[2].name == "neutral-attackers-sorted");
}

TEST_CASE("extension membership properties are inapplicable without a verdict") {
    const DsaFramework fw = build_framework(conflict_case());
    const ExtensionPropertyReport report =
        check_extension_properties(fw, grounded_extension(to_aa(fw)));
    CHECK_FALSE(report.applicable);
}

TEST_CASE("membership fails on a wrong extension") {
    const DsaFramework fw = build_framework(overtaking_case({"p", "q"}));
    // a2 carries the winning state's rival (+) and the empty-knowledge winner
    // a0 is excluded: both clauses should object
    const ExtensionPropertyReport report = check_extension_properties(fw, Extension{1, 2});
    CHECK(report.applicable);
    CHECK_FALSE(report.all_pass);
}
