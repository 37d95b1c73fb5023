#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <normarg/logic.hpp>

using namespace normarg;

namespace {

FormulaSet make_set(const std::vector<std::string>& texts) {
    FormulaSet out;
    for (const std::string& t : texts) out.insert(parse_formula(t));
    return out;
}

}  // namespace

TEST_CASE("formula sets deduplicate and keep insertion order") {
    FormulaSet s = make_set({"p", "q", "p", "p & q"});
    REQUIRE(s.size() == 3);
    CHECK(to_string(s[0]) == "p");
    CHECK(to_string(s[1]) == "q");
    CHECK(to_string(s[2]) == "p & q");
    CHECK(s.contains(parse_formula("q")));
    CHECK_FALSE(s.contains(parse_formula("r")));
}

TEST_CASE("set equality ignores order, subset relations are strict where named") {
    const FormulaSet a = make_set({"p", "q"});
    const FormulaSet b = make_set({"q", "p"});
    CHECK(a == b);
    CHECK(a.subset_of(b));
    CHECK_FALSE(a.strict_subset_of(b));
    CHECK(make_set({"p"}).strict_subset_of(a));
    CHECK_FALSE(a.strict_subset_of(make_set({"p"})));
}

TEST_CASE("consistency on basic sets") {
    CHECK(is_consistent(make_set({})));
    CHECK(is_consistent(make_set({"p"})));
    CHECK(is_consistent(make_set({"p -> q", "p"})));
    CHECK_FALSE(is_consistent(make_set({"p", "!p"})));
    CHECK_FALSE(is_consistent(make_set({"p -> q", "p", "!q"})));
    CHECK_FALSE(is_consistent(make_set({"false"})));
    CHECK(is_consistent(make_set({"p | !p"})));
    CHECK_FALSE(is_consistent(make_set({"p <-> !p"})));
}

TEST_CASE("entailment on basic sets") {
    CHECK(entails(make_set({"p", "p -> q"}), parse_formula("q")));
    CHECK_FALSE(entails(make_set({"p -> q"}), parse_formula("q")));
    CHECK(entails(make_set({"!q", "p -> q"}), parse_formula("!p")));
    CHECK(entails(make_set({}), parse_formula("p | !p")));
    CHECK_FALSE(entails(make_set({}), parse_formula("p")));
    CHECK(entails(make_set({"!p", "!r -> p"}), parse_formula("r")));

    // an inconsistent premise set entails everything; callers gate on
    // consistency first
    CHECK(entails(make_set({"p", "!p"}), parse_formula("q")));
}

TEST_CASE("atom cap is enforced and adjustable") {
    FormulaSet wide;
    for (char c = 'a'; c <= 'u'; ++c) wide.insert(atom(std::string(1, c)));  // 21 atoms
    CHECK_THROWS_AS(is_consistent(wide), CapExceeded);
    CHECK_THROWS_AS(entails(wide, parse_formula("a")), CapExceeded);

    const FormulaSet narrow = make_set({"p -> q", "p"});
    CHECK(is_consistent(narrow, 2));
    CHECK_THROWS_AS(is_consistent(make_set({"p", "q", "r"}), 2), CapExceeded);
}

TEST_CASE("twenty atoms stay within the cap") {
    FormulaSet wide;
    for (char c = 'a'; c <= 't'; ++c) wide.insert(atom(std::string(1, c)));
    CHECK(is_consistent(wide));
}

TEST_CASE("entailment is monotone and consistency antitone on random sets") {
    std::mt19937 rng(99);
    const auto pick = [&](std::size_t bound) { return rng() % bound; };
    static const char* const names[] = {"p", "q", "r"};
    const auto literal = [&] {
        const Formula a = atom(names[pick(3)]);
        return pick(2) == 0 ? a : neg(a);
    };
    for (int i = 0; i < 300; ++i) {
        FormulaSet small;
        const std::size_t n = pick(4);
        for (std::size_t k = 0; k < n; ++k)
            small.insert(pick(2) == 0 ? literal() : implies(literal(), literal()));
        FormulaSet big = small;
        big.insert(literal());
        const Formula goal = literal();
        if (entails(small, goal)) CHECK(entails(big, goal));
        if (is_consistent(big)) CHECK(is_consistent(small));
    }
}
