#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <filesystem>
#include <fstream>

#include "grhopf/hopf.hpp"
#include "grhopf/parser.hpp"

using namespace grhopf;

namespace {

std::string fixture_path(const std::string& name) {
    return std::string(GRHOPF_FIXTURES_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("a1 fixture parses to the expected presentation") {
    Presentation p = parse_presentation(slurp(fixture_path("a1.ghopf")));
    CHECK(p.name == "a1");
    REQUIRE(p.generators.size() == 2);
    CHECK(p.generators[0].name == "xi1");
    CHECK(p.generators[0].degree == 1);
    CHECK(p.generators[1].name == "xi2");
    CHECK(p.generators[1].degree == 3);
    REQUIRE(p.relations[0].has_value());
    CHECK(p.relations[0]->exponent == 4);
    CHECK(p.relations[0]->rhs.empty());
    CHECK(p.has_coalgebra);
    CHECK(p.has_antipode);
    CHECK(p.comul[1].size() == 3);
    // the file builds and verifies
    HopfAlgebra h = attach_coalgebra(p);
    CHECK(verify_hopf(h).ok());
}

TEST_CASE("every bundled fixture parses, builds and verifies") {
    for (const char* name : {"a1.ghopf", "mu3_q.ghopf", "mu3_f2.ghopf", "c_ex53.ghopf",
                             "d_variety.ghopf", "ex2_8.ghopf", "ex2_7.ghopf"}) {
        INFO("fixture ", name);
        Presentation p = parse_presentation(slurp(fixture_path(name)));
        HopfAlgebra h = attach_coalgebra(p);
        CHECK(verify_hopf(h).ok());
    }
}

TEST_CASE("ring fixtures parse and build") {
    for (const char* name : {"rings/f2_a4.ghopf", "rings/gf4_b2.ghopf", "rings/gf4.ghopf"}) {
        Presentation p = parse_presentation(slurp(fixture_path(name)));
        CHECK_FALSE(p.has_coalgebra);
        auto a = build_algebra(p);
        CHECK(a->dim > 0);
    }
}

TEST_CASE("print-then-parse is stable on every fixture") {
    for (const char* name : {"a1.ghopf", "mu3_q.ghopf", "mu3_f2.ghopf", "c_ex53.ghopf",
                             "d_variety.ghopf", "ex2_8.ghopf", "ex2_7.ghopf",
                             "rings/f2_a4.ghopf", "rings/gf4_b2.ghopf"}) {
        INFO("fixture ", name);
        Presentation p1 = parse_presentation(slurp(fixture_path(name)));
        std::string printed = print_presentation(p1);
        Presentation p2 = parse_presentation(printed);
        CHECK(print_presentation(p2) == printed);
    }
}

TEST_CASE("rational scalars survive the round trip") {
    std::string text =
        "algebra q over QQ\n"
        "gen x deg 0\n"
        "rel x^3 = 1\n"
        "counit x = 1\n"
        "comul x = x (x) x\n"
        "antipode x = 2/3 x^2 + 1/3 x - 0\n";
    Presentation p = parse_presentation(text);
    REQUIRE(p.antipode[0].size() == 2);
    CHECK(p.antipode[0][0].coeff.q == Rational(2, 3));
    CHECK(p.antipode[0][1].coeff.q == Rational(1, 3));
    std::string printed = print_presentation(p);
    CHECK(print_presentation(parse_presentation(printed)) == printed);
}

TEST_CASE("syntax errors carry positions") {
    try {
        parse_presentation("algebra a over GF(2)\ngen x deg !\n");
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::input);
        std::string msg = e.what();
        CHECK(msg.find("line 2") != std::string::npos);
    }
}

TEST_CASE("semantic errors: unknown generator and cross-generator relation") {
    CHECK_THROWS_WITH_AS(
        parse_presentation("algebra a over GF(2)\ngen x deg 1\nrel y^2 = 0\n"),
        doctest::Contains("unknown generator"), Error);
    // rel x^3 = y is not univariate in x
    CHECK_THROWS_WITH_AS(
        parse_presentation(
            "algebra a over GF(2)\ngen x deg 1\ngen y deg 0\nrel x^3 = y\n"),
        doctest::Contains("must be a polynomial in x"), Error);
}

TEST_CASE("inhomogeneous relation is rejected at build time") {
    // x^2 = x with |x| = 1: parses (univariate) but cannot build
    Presentation p = parse_presentation(
        "algebra a over GF(2)\ngen x deg 1\nrel x^2 = x\n");
    CHECK_THROWS_WITH_AS(build_algebra(p), doctest::Contains("inhomogeneous"), Error);
}

TEST_CASE("missing algebra line and unknown directives") {
    CHECK_THROWS_AS(parse_presentation("gen x deg 1\n"), Error);
    CHECK_THROWS_WITH_AS(parse_presentation("algebra a over GF(2)\nfoo bar\n"),
                         doctest::Contains("unknown directive"), Error);
    CHECK_THROWS_AS(parse_presentation(""), Error);
}

TEST_CASE("comments and blank lines are ignored") {
    Presentation p = parse_presentation(
        "# leading comment\n\nalgebra a over GF(3)\n  # indented comment\n"
        "gen y deg 1  # trailing comment\n");
    CHECK(p.generators.size() == 1);
    CHECK(p.field->characteristic() == 3);
}

TEST_CASE("extension fields parse") {
    Presentation p = parse_presentation("algebra a over GF(2,2)\ngen x deg 0\nrel x^2 = x\n");
    CHECK(p.field->order() == 4);
}
