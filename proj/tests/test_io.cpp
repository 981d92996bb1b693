#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "lexdepth/io.hpp"
#include "test_support.hpp"

using namespace lexdepth;

namespace {

Monomial mono(std::vector<int> e) { return Monomial{std::move(e)}; }

}  // namespace

TEST_CASE("monomial printing") {
    CHECK(monomial_to_string(Monomial::unit(3)) == "1");
    CHECK(monomial_to_string(mono({1, 0, 0})) == "x1");
    CHECK(monomial_to_string(mono({2, 0, 1})) == "x1^2*x3");
    CHECK(monomial_to_string(mono({0, 3, 2})) == "x2^3*x3^2");
}

TEST_CASE("monomial parsing") {
    CHECK(parse_monomial("1", 3) == Monomial::unit(3));
    CHECK(parse_monomial("x2", 3) == mono({0, 1, 0}));
    CHECK(parse_monomial("x1^2*x3", 3) == mono({2, 0, 1}));
    CHECK(parse_monomial(" x1 ^ 2 * x3 ", 3) == mono({2, 0, 1}));
    CHECK(parse_monomial("x1*x1", 2) == mono({2, 0}));
    CHECK(parse_monomial("x3*x1^2", 3) == mono({2, 0, 1}));

    CHECK_THROWS_AS(parse_monomial("", 3), ParseError);
    CHECK_THROWS_AS(parse_monomial("x0", 3), ParseError);
    CHECK_THROWS_AS(parse_monomial("x4", 3), ParseError);
    CHECK_THROWS_AS(parse_monomial("y1", 3), ParseError);
    CHECK_THROWS_AS(parse_monomial("x1x2", 3), ParseError);
    CHECK_THROWS_AS(parse_monomial("x1^^2", 3), ParseError);
    CHECK_THROWS_AS(parse_monomial("x1^0", 3), ParseError);
    CHECK_THROWS_AS(parse_monomial("x1*", 3), ParseError);
    CHECK_THROWS_AS(parse_monomial("x1**x2", 3), ParseError);
    CHECK_THROWS_WITH(parse_monomial("x9", 3),
                      Catch::Matchers::ContainsSubstring("outside ambient ring"));
}

TEST_CASE("monomial print-parse round trip") {
    support::Rng rng(140211);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = static_cast<int>(support::uniform_long(rng, 1, 6));
        const Monomial u = support::random_monomial(rng, n, support::uniform_long(rng, 0, 7));
        CHECK(parse_monomial(monomial_to_string(u), n) == u);
    }
}

TEST_CASE("ideal file parsing") {
    std::istringstream in(
        "# a comment line\n"
        "n=4\n"
        "\n"
        "x1*x4   # inline comment\n"
        "x3*x4\n"
        "x1*x3*x4\n");
    const MonomialIdeal I = parse_ideal_text(in, "test");
    CHECK(I.n == 4);
    // the third generator is a multiple of the first and drops out
    CHECK(I == MonomialIdeal{4, {mono({1, 0, 0, 1}), mono({0, 0, 1, 1})}});
}

TEST_CASE("ideal file with no generators") {
    std::istringstream in("n=3\n");
    const MonomialIdeal I = parse_ideal_text(in, "test");
    CHECK(I.is_zero());
    CHECK(I.n == 3);
}

TEST_CASE("ideal file parse errors carry the line number") {
    {
        std::istringstream in("x1\n");
        CHECK_THROWS_WITH(parse_ideal_text(in, "f"),
                          Catch::Matchers::ContainsSubstring("f:1") &&
                              Catch::Matchers::ContainsSubstring("header"));
    }
    {
        std::istringstream in("n=3\nx1\nbroken~\n");
        CHECK_THROWS_WITH(parse_ideal_text(in, "f"), Catch::Matchers::ContainsSubstring("f:3"));
    }
    {
        std::istringstream in("n=0\n");
        CHECK_THROWS_AS(parse_ideal_text(in, "f"), ParseError);
    }
    {
        std::istringstream in("n=3x\n");
        CHECK_THROWS_AS(parse_ideal_text(in, "f"), ParseError);
    }
    {
        std::istringstream in("");
        CHECK_THROWS_WITH(parse_ideal_text(in, "f"),
                          Catch::Matchers::ContainsSubstring("missing 'n=<count>'"));
    }
    {
        std::istringstream in("n=3\n1\n");
        CHECK_THROWS_WITH(parse_ideal_text(in, "f"),
                          Catch::Matchers::ContainsSubstring("unit monomial"));
    }
    CHECK_THROWS_AS(read_ideal_file("/nonexistent/path.ideal"), ParseError);
}

TEST_CASE("ideal printing") {
    CHECK(ideal_to_string(MonomialIdeal{3, {}}) == "()");
    CHECK(ideal_to_string(MonomialIdeal{4, {mono({2, 0, 0, 0}), mono({1, 1, 0, 0})}}) ==
          "(x1^2, x1*x2)");
}

TEST_CASE("value list parsing") {
    const std::vector<Int> v = parse_int_list("1,5,11,18");
    REQUIRE(v.size() == 4);
    CHECK(v[0] == 1);
    CHECK(v[3] == 18);

    CHECK(parse_int_list(" 1 , 2 ")[1] == 2);
    CHECK(parse_int_list("-3")[0] == -3);
    CHECK(parse_int_list("123456789012345678901234567890")[0] ==
          Int("123456789012345678901234567890"));

    CHECK_THROWS_AS(parse_int_list(""), ParseError);
    CHECK_THROWS_AS(parse_int_list("1,,2"), ParseError);
    CHECK_THROWS_AS(parse_int_list("1,a"), ParseError);
    CHECK_THROWS_AS(parse_int_list("1,2,"), ParseError);
    CHECK_THROWS_AS(parse_int_list("-"), ParseError);
}

TEST_CASE("tail mode names") {
    CHECK(parse_tail("max") == Tail::MaxGrowth);
    CHECK(parse_tail("zero") == Tail::Zero);
    CHECK_THROWS_AS(parse_tail("Max"), ParseError);
    CHECK(tail_to_string(Tail::MaxGrowth) == "max");
    CHECK(tail_to_string(Tail::Zero) == "zero");
}

TEST_CASE("series numerator formatting") {
    auto kp = [](std::vector<long> c) {
        KPolynomial K;
        for (long x : c) K.coeffs.emplace_back(x);
        return K;
    };
    CHECK(kpoly_to_string(kp({1, 2, -1, -1})) == "1 + 2t - t^2 - t^3");
    CHECK(kpoly_to_string(kp({1, 0, -4, 3, 1, -1})) == "1 - 4t^2 + 3t^3 + t^4 - t^5");
    CHECK(kpoly_to_string(kp({1})) == "1");
    CHECK(kpoly_to_string(kp({})) == "0");
    CHECK(kpoly_to_string(kp({-1, 1})) == "-1 + t");
    CHECK(kpoly_to_string(kp({0, 1})) == "t");
    CHECK(kpoly_to_string(kp({2, 0, 5})) == "2 + 5t^2");
}

TEST_CASE("Betti table formatting") {
    GradedBetti B;
    B.convention = BettiConvention::Quotient;
    B.add(0, 0, Int(1));
    B.add(1, 2, Int(1));
    CHECK(betti_to_string(B) ==
          "convention: quotient\n"
          "   0 1\n"
          "0: 1 .\n"
          "1: . 1\n");

    GradedBetti empty;
    empty.convention = BettiConvention::Ideal;
    CHECK(betti_to_string(empty) == "convention: ideal\n(zero table)\n");

    // a wider multiplicity widens its column; rows are indexed by the
    // shift j - i, so both entries here live in the same row
    GradedBetti W;
    W.convention = BettiConvention::Ideal;
    W.add(0, 2, Int(12));
    W.add(1, 3, Int(1));
    CHECK(betti_to_string(W) ==
          "convention: ideal\n"
          "    0 1\n"
          "0:  . .\n"
          "1:  . .\n"
          "2: 12 1\n");
}
