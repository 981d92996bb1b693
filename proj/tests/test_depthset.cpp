#include <catch2/catch_amalgamated.hpp>

#include "test_support.hpp"

using namespace lexdepth;

namespace {

Monomial mono(std::vector<int> e) { return Monomial{std::move(e)}; }

OSequence seq(int n, std::vector<long> values, Tail tail = Tail::MaxGrowth) {
    std::vector<Int> v;
    for (long x : values) v.emplace_back(x);
    return OSequence{n, std::move(v), tail};
}

const OSequence kRunning = seq(5, {1, 5, 11, 18, 26, 35, 45});
const OSequence kRunningShort = seq(5, {1, 5, 11, 18, 26, 35});
const OSequence kCritical = seq(4, {1, 4, 8, 13, 19});

}  // namespace

TEST_CASE("classification of known Hilbert functions") {
    const Classification running = classify(kRunning);
    CHECK_FALSE(running.critical);
    CHECK(running.delta == 12);
    CHECK(running.n == 5);

    const Classification crit = classify(kCritical);
    CHECK(crit.critical);
    CHECK(crit.delta == 2);
    CHECK(crit.degrees == std::vector<long>{2, 2});

    const Classification ones = classify(seq(3, {1, 1, 1}));
    CHECK(ones.critical);
    CHECK(ones.delta == 2);
    CHECK(ones.degrees == std::vector<long>{1, 1});

    const Classification full = classify(seq(3, {1, 3}));
    CHECK(full.critical);
    CHECK(full.delta == 0);
    CHECK(full.degrees.empty());
}

TEST_CASE("depth set of known Hilbert functions") {
    CHECK(depth_set(kRunning) == DepthSet{0, 2});
    CHECK(depth_set(kRunning).to_string() == "{0..2}");

    CHECK(depth_set(kCritical) == DepthSet{2, 2});
    CHECK(depth_set(kCritical).to_string() == "{2}");

    CHECK(depth_set(seq(3, {1, 1, 1})) == DepthSet{1, 1});
    CHECK(depth_set(seq(3, {1, 3})) == DepthSet{3, 3});
    CHECK(depth_set(seq(3, {1, 3, 3, 3})) == DepthSet{0, 1});
    CHECK(depth_set(seq(3, {1, 3, 3, 4, 5})) == DepthSet{0, 0});
    CHECK(depth_set(seq(3, {1, 3, 3, 4, 5})).to_string() == "{0}");

    // the same window one entry shorter pins a different tail, hence a
    // different maximal depth
    CHECK(depth_set(kRunningShort) == DepthSet{0, 0});
}

TEST_CASE("depth set helpers") {
    const DepthSet s{0, 2};
    CHECK(s.contains(0));
    CHECK(s.contains(2));
    CHECK_FALSE(s.contains(3));
    CHECK_FALSE(s.contains(-1));
    CHECK(s.values() == std::vector<int>{0, 1, 2});
    CHECK(DepthSet{2, 2}.values() == std::vector<int>{2});
}

TEST_CASE("per-difference diagnostics of the running example") {
    const std::vector<PDiagnostic> diag = depth_diagnostics(kRunning);
    REQUIRE(diag.size() == 6);
    for (int p = 0; p <= 5; ++p) CHECK(diag[p].p == p);
    CHECK(diag[0].passes);
    CHECK(diag[1].passes);
    CHECK(diag[2].passes);
    CHECK_FALSE(diag[3].passes);
    CHECK_FALSE(diag[4].passes);
    CHECK_FALSE(diag[5].passes);

    REQUIRE(diag[3].violation.has_value());
    CHECK(diag[3].violation->reason == "negative");
    CHECK(diag[3].violation->q == 2);
    CHECK(diag[3].violation->value == -1);

    REQUIRE(diag[4].violation.has_value());
    CHECK(diag[4].violation->reason == "negative");
    CHECK(diag[4].violation->value == -3);

    CHECK(max_depth(kRunning) == 2);
}

TEST_CASE("diagnostics of the shorter window fail in degree form") {
    const std::vector<PDiagnostic> diag = depth_diagnostics(kRunningShort);
    CHECK(diag[0].passes);
    CHECK_FALSE(diag[1].passes);
    REQUIRE(diag[1].violation.has_value());
    CHECK(diag[1].violation->reason == "growth");
    CHECK(diag[1].violation->q == 5);
    CHECK(diag[1].violation->value == 11);
    CHECK(diag[1].violation->bound == 10);
    CHECK(max_depth(kRunningShort) == 0);
}

TEST_CASE("relaxed-ambient diagnostics never diverge on valid input") {
    // once h(1) <= n holds, every iterated difference satisfies its own
    // ambient bound automatically, so the relaxed check agrees
    for (const OSequence& H :
         {kRunning, kRunningShort, kCritical, seq(3, {1, 3, 3, 3}), seq(2, {1, 2, 2, 1}, Tail::Zero)}) {
        for (const PDiagnostic& d : depth_diagnostics(H))
            CHECK(d.growth_only_passes == d.passes);
    }

    support::Rng rng(411559);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = static_cast<int>(support::uniform_long(rng, 1, 5));
        const OSequence H = support::random_osequence(rng, n, support::uniform_long(rng, 2, 6));
        if (!is_o_sequence(H).ok) continue;
        for (const PDiagnostic& d : depth_diagnostics(H))
            CHECK(d.growth_only_passes == d.passes);
    }
}

TEST_CASE("diagnostics reject invalid input at the base level") {
    CHECK_THROWS_AS(max_depth(seq(2, {1, 3})), DomainError);
    CHECK_THROWS_WITH(max_depth(seq(2, {1, 3})),
                      Catch::Matchers::ContainsSubstring("exceeds the variable count"));
    CHECK_THROWS_AS(depth_set(seq(2, {1, 3})), DomainError);
}

TEST_CASE("critical Hilbert functions have maximal difference order n - delta") {
    support::Rng rng(77113);
    int seen = 0;
    for (int trial = 0; trial < 120 && seen < 25; ++trial) {
        const int n = static_cast<int>(support::uniform_long(rng, 1, 5));
        const OSequence H = support::random_osequence(rng, n, support::uniform_long(rng, 2, 6));
        if (!is_o_sequence(H).ok) continue;
        const Classification c = classify(H);
        if (!c.critical) continue;
        ++seen;
        CHECK(max_depth(H) == n - static_cast<int>(c.delta));
        CHECK(depth_set(H) == DepthSet{n - static_cast<int>(c.delta), n - static_cast<int>(c.delta)});
    }
    CHECK(seen > 0);
}

TEST_CASE("witness ideals for known Hilbert functions") {
    const MonomialIdeal w2 = witness_ideal(kCritical, 2);
    CHECK(w2 == MonomialIdeal{4, {mono({2, 0, 0, 0}), mono({1, 1, 0, 0})}});
    CHECK(depth_any(w2) == 2);
    for (long q = 0; q <= 8; ++q) CHECK(hilbert_function(w2, q) == oseq_value(kCritical, q));

    const MonomialIdeal r2 = witness_ideal(kRunning, 2);
    const MonomialIdeal expect2{5,
                                {mono({2, 0, 0, 0, 0}), mono({1, 1, 0, 0, 0}), mono({1, 0, 1, 0, 0}),
                                 mono({0, 2, 0, 0, 0}), mono({0, 1, 2, 0, 0})}};
    CHECK(r2 == expect2);
    REQUIRE(is_stable(r2));
    CHECK(depth_any(r2) == 2);
    CHECK(5 - to_quotient(ek_betti(r2)).proj_dim_quotient() == 2);
    CHECK(5 - koszul_betti(r2).proj_dim_quotient() == 2);
    for (long q = 0; q <= 8; ++q) CHECK(hilbert_function(r2, q) == oseq_value(kRunning, q));

    // depth 0 witness is the lexsegment ideal of H itself
    CHECK(witness_ideal(kRunning, 0) == lexify(kRunning));

    const MonomialIdeal r1 = witness_ideal(kRunning, 1);
    CHECK(depth_any(r1) == 1);
    for (long q = 0; q <= 8; ++q) CHECK(hilbert_function(r1, q) == oseq_value(kRunning, q));
}

TEST_CASE("witness ideals reject unattainable depths") {
    CHECK_THROWS_AS(witness_ideal(kRunning, 3), DomainError);
    CHECK_THROWS_WITH(witness_ideal(kRunning, 3), Catch::Matchers::ContainsSubstring("{0..2}"));
    CHECK_THROWS_AS(witness_ideal(kCritical, 1), DomainError);
    CHECK_THROWS_WITH(witness_ideal(kCritical, 1), Catch::Matchers::ContainsSubstring("{2}"));
    CHECK_THROWS_AS(witness_ideal(kRunning, -1), DomainError);
}

TEST_CASE("witness ideals attain every depth in the set") {
    support::Rng rng(333217);
    int tested = 0;
    for (int trial = 0; trial < 80 && tested < 20; ++trial) {
        const int n = static_cast<int>(support::uniform_long(rng, 2, 5));
        const OSequence H = support::random_osequence(rng, n, support::uniform_long(rng, 2, 5));
        if (!is_o_sequence(H).ok) continue;
        ++tested;
        const DepthAnalysis a = depth_analysis(H);
        for (int r : a.set.values()) {
            const MonomialIdeal w = witness_ideal(H, r);
            CHECK(w.n == n);
            CHECK(depth_any(w) == r);
            for (long q = 0; q <= H.window_end() + 2; ++q)
                CHECK(hilbert_function(w, q) == oseq_value(H, q));
        }
    }
    CHECK(tested > 0);
}

TEST_CASE("differences of noncritical Hilbert functions stay noncritical below the top") {
    support::Rng rng(59021);
    int seen = 0;
    for (int trial = 0; trial < 120 && seen < 20; ++trial) {
        const int n = static_cast<int>(support::uniform_long(rng, 2, 5));
        const OSequence H = support::random_osequence(rng, n, support::uniform_long(rng, 2, 5));
        if (!is_o_sequence(H).ok) continue;
        const DepthAnalysis a = depth_analysis(H);
        if (a.cls.critical) continue;
        ++seen;
        const int b = a.set.max_depth;
        for (int r = 0; r <= b; ++r) {
            const Classification cr = classify(pth_differential(H, r));
            if (r < b) CHECK_FALSE(cr.critical);
            CHECK(cr.delta >= n - r);
        }
    }
    CHECK(seen > 0);
}

TEST_CASE("exhaustive search over a critical Hilbert function") {
    const ExploreReport rep = explore(kCritical);
    CHECK(rep.complete);
    CHECK(rep.degree_cap == 2);
    CHECK(rep.ideals_matched == 24);
    REQUIRE(rep.observed_depths.size() == 1);
    CHECK(rep.observed_depths.at(2) == 24);
    CHECK(rep.all_in_depth_set);
    CHECK(rep.samples.size() == 20);
    for (const MonomialIdeal& I : rep.samples) {
        CHECK(I.delta() == 2);
        CHECK(k_polynomial_auto(I) == k_polynomial_auto(rep.cls.lex));
    }
}

TEST_CASE("exhaustive search over the full polynomial ring") {
    const ExploreReport rep = explore(seq(2, {1, 2}));
    CHECK(rep.complete);
    CHECK(rep.ideals_matched == 1);
    CHECK(rep.observed_depths.at(2) == 1);
    REQUIRE(rep.samples.size() == 1);
    CHECK(rep.samples[0].is_zero());
}

TEST_CASE("exhaustive search over a noncritical Hilbert function") {
    const ExploreReport rep = explore(seq(3, {1, 3, 3, 3}));
    CHECK(rep.complete);
    CHECK(rep.degree_cap == 3);
    CHECK(rep.set == DepthSet{0, 1});
    CHECK(rep.all_in_depth_set);
    REQUIRE(rep.observed_depths.size() == 2);
    CHECK(rep.observed_depths.at(0) > 0);
    CHECK(rep.observed_depths.at(1) > 0);
    CHECK(rep.ideals_matched == rep.observed_depths.at(0) + rep.observed_depths.at(1));
}

TEST_CASE("exhaustive search over a maximal-generator critical function") {
    const ExploreReport rep = explore(seq(3, {1, 3, 3, 4, 5}));
    CHECK(rep.complete);
    CHECK(rep.set == DepthSet{0, 0});
    CHECK(rep.all_in_depth_set);
    CHECK(rep.observed_depths.size() == 1);
    CHECK(rep.observed_depths.at(0) == rep.ideals_matched);
    CHECK(rep.ideals_matched >= 1);
}

TEST_CASE("search guardrails") {
    CHECK_THROWS_AS(explore(seq(5, {1, 5, 11, 18, 26, 35, 45})), DomainError);

    const ExploreReport rep = explore(kCritical, 2, 3);
    CHECK_FALSE(rep.complete);
}
