#include <catch2/catch_amalgamated.hpp>

#include <normarg/cli.hpp>

// Everything below cli.hpp is pulled in transitively; this keeps one
// translation unit that compiles the whole library.

TEST_CASE("library headers compile and a trivial case runs end to end") {
    using namespace normarg;
    FormulaSet level;
    level.insert(parse_formula("p -> q"));
    const NormCase c = make_norm_case(FormulaSet{}, {level}, FormulaSet{}, parse_formula("q"));
    const DsaFramework fw = build_framework(c);
    CHECK(fw.arguments.size() == 1);
    CHECK(verdict(c).kind == VerdictKind::Neither);
}
