#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "lexdepth/hilbert.hpp"
#include "lexdepth/lex.hpp"
#include "lexdepth/resolution.hpp"

namespace lexdepth {

inline constexpr long kDefaultNodeLimit = 500'000;
inline constexpr int kExploreMaxVars = 4;
inline constexpr int kExploreSampleCap = 20;

// ============================================================
//  Classification
// ============================================================

/**
 * A Hilbert function is critical when its lexsegment ideal has at most n
 * minimal generators; in that case every ideal attaining the function has
 * the same depth n - delta.  Otherwise the attainable depths form the full
 * range {0, ..., max}.
 */
struct Classification {
    int n = 0;
    bool critical = false;
    long delta = 0;
    std::vector<long> degrees;  // generator degrees of the lexsegment ideal
    MonomialIdeal lex;
};

inline Classification classify(const OSequence& H) {
    Classification c;
    c.n = H.n;
    c.lex = lexify(H);
    c.delta = c.lex.delta();
    c.critical = c.delta <= H.n;
    for (const auto& g : c.lex.gens) c.degrees.push_back(g.degree());
    return c;
}

// ============================================================
//  Attainable depth range
// ============================================================

struct DepthSet {
    int min_depth = 0;
    int max_depth = 0;

    bool contains(int r) const { return min_depth <= r && r <= max_depth; }

    std::vector<int> values() const {
        std::vector<int> v;
        for (int r = min_depth; r <= max_depth; ++r) v.push_back(r);
        return v;
    }

    std::string to_string() const {
        std::ostringstream os;
        if (min_depth == max_depth)
            os << "{" << min_depth << "}";
        else
            os << "{" << min_depth << ".." << max_depth << "}";
        return os.str();
    }

    bool operator==(const DepthSet& o) const {
        return min_depth == o.min_depth && max_depth == o.max_depth;
    }
};

/// Outcome of testing one iterated difference against the O-sequence conditions.
struct PDiagnostic {
    int p = 0;
    bool passes = false;
    /// Same test with the ambient bound h(1) <= n - p relaxed away.
    bool growth_only_passes = false;
    std::optional<OSeqViolation> violation;
};

namespace detail {

inline bool growth_only_check(const OSequence& g) {
    long relaxed = g.n;
    if (g.values.size() > 1) {
        const Int& h1 = g.values[1];
        if (h1 > relaxed) relaxed = h1.fits_slong_p() ? h1.get_si() : std::numeric_limits<long>::max() / 4;
    }
    OSequence widened{static_cast<int>(std::min<long>(relaxed, std::numeric_limits<int>::max() / 4)),
                      g.values, g.tail};
    return is_o_sequence(widened).ok;
}

}  // namespace detail

inline std::vector<PDiagnostic> depth_diagnostics(const OSequence& H) {
    if (H.n < 0) throw DomainError("depth_diagnostics: negative variable count");
    std::vector<PDiagnostic> out;
    for (int p = 0; p <= H.n; ++p) {
        PDiagnostic d;
        d.p = p;
        const OSequence g = pth_differential(H, p);
        const OSeqReport rep = is_o_sequence(g);
        d.passes = rep.ok;
        d.violation = rep.violation;
        d.growth_only_passes = rep.ok || detail::growth_only_check(g);
        out.push_back(std::move(d));
    }
    return out;
}

/**
 * The largest attainable depth: the largest p for which the p-th iterated
 * difference of H is an O-sequence over n - p variables.
 */
inline int max_depth(const OSequence& H, const std::vector<PDiagnostic>& diagnostics) {
    for (int p = H.n; p >= 0; --p) {
        if (diagnostics[p].passes) return p;
    }
    throw DomainError("max_depth: " + is_o_sequence(H).message());
}

inline int max_depth(const OSequence& H) { return max_depth(H, depth_diagnostics(H)); }

/// Classification, attainable range, and per-p diagnostics in one pass.
struct DepthAnalysis {
    Classification cls;
    DepthSet set;
    std::vector<PDiagnostic> diagnostics;
};

inline DepthAnalysis depth_analysis(const OSequence& H) {
    DepthAnalysis a;
    a.cls = classify(H);
    a.diagnostics = depth_diagnostics(H);
    const int b = max_depth(H, a.diagnostics);
    if (a.cls.critical) {
        const int r = static_cast<int>(H.n - a.cls.delta);
        a.set = DepthSet{r, r};
    } else {
        a.set = DepthSet{0, b};
    }
    return a;
}

inline DepthSet depth_set(const OSequence& H) { return depth_analysis(H).set; }

// ============================================================
//  Witnesses
// ============================================================

/**
 * An ideal attaining Hilbert function H with depth exactly r: the
 * lexsegment ideal of the r-th iterated difference, generated over the
 * first n - r variables and extended to the full ring.
 */
inline MonomialIdeal witness_ideal(const OSequence& H, int r) {
    const DepthAnalysis a = depth_analysis(H);
    if (!a.set.contains(r))
        throw DomainError("witness_ideal: depth " + std::to_string(r) +
                          " is not attainable; the attainable set is " + a.set.to_string());
    const MonomialIdeal J = lexify(pth_differential(H, r));
    return embed(J, H.n);
}

// ============================================================
//  Exhaustive search over small ambient rings
// ============================================================

struct ExploreReport {
    Classification cls;
    DepthSet set;
    long degree_cap = 0;
    long nodes = 0;
    bool complete = true;
    long ideals_matched = 0;
    std::map<int, long> observed_depths;
    std::vector<MonomialIdeal> samples;  // first few matches, one per discovery order
    bool all_in_depth_set = true;
};

namespace detail {

struct ExploreState {
    const OSequence* H = nullptr;
    long cap = 0;
    long node_limit = 0;
    KPolynomial target;
    ExploreReport* report = nullptr;
};

inline void explore_rec(ExploreState& st, long q, const std::vector<Monomial>& prev_piece,
                        std::vector<Monomial>& gens) {
    if (!st.report->complete) return;
    if (++st.report->nodes > st.node_limit) {
        st.report->complete = false;
        return;
    }
    const int n = st.H->n;
    if (q > st.cap) {
        MonomialIdeal cand{n, minimalize(gens, n)};
        if (k_polynomial_auto(cand) == st.target) {
            const int d = depth_any(cand);
            st.report->ideals_matched += 1;
            st.report->observed_depths[d] += 1;
            if (!st.report->set.contains(d)) st.report->all_in_depth_set = false;
            if (static_cast<int>(st.report->samples.size()) < kExploreSampleCap)
                st.report->samples.push_back(std::move(cand));
        }
        return;
    }

    const long total = to_long(degree_count(n, q));
    const long want = total - to_long(oseq_value(*st.H, q));
    if (want < 0) return;

    const std::vector<Monomial> forced = shadow(prev_piece);
    const long need = want - static_cast<long>(forced.size());
    if (need < 0) return;

    std::vector<Monomial> free_monos;
    for (auto& u : degree_monomials(n, q)) {
        bool in_forced = false;
        for (const auto& f : forced)
            if (f == u) {
                in_forced = true;
                break;
            }
        if (!in_forced) free_monos.push_back(std::move(u));
    }
    if (need > static_cast<long>(free_monos.size())) return;

    std::vector<long> idx(need);
    for (long i = 0; i < need; ++i) idx[i] = i;
    const long m = static_cast<long>(free_monos.size());
    while (true) {
        std::vector<Monomial> piece = forced;
        const size_t gens_mark = gens.size();
        for (long i = 0; i < need; ++i) {
            piece.push_back(free_monos[idx[i]]);
            gens.push_back(free_monos[idx[i]]);
        }
        explore_rec(st, q + 1, piece, gens);
        gens.resize(gens_mark);
        if (!st.report->complete) return;

        long pos = need - 1;
        while (pos >= 0 && idx[pos] == m - need + pos) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (long i = pos + 1; i < need; ++i) idx[i] = idx[i - 1] + 1;
    }
}

}  // namespace detail

/**
 * Enumerate every monomial ideal generated in degrees <= degree_cap whose
 * Hilbert function equals H, recording the depth of each.  Candidates are
 * built degree by degree (the degree-q piece must contain the multiples of
 * the piece below and have the size H dictates) and accepted when their
 * K-polynomial matches that of the lexsegment ideal of H, which pins the
 * Hilbert function in all degrees at once.
 */
inline ExploreReport explore(const OSequence& H, std::optional<long> degree_cap = std::nullopt,
                             long node_limit = kDefaultNodeLimit) {
    if (H.n > kExploreMaxVars)
        throw DomainError("explore: supports at most " + std::to_string(kExploreMaxVars) +
                          " variables");
    ExploreReport report;
    const DepthAnalysis a = depth_analysis(H);
    report.cls = a.cls;
    report.set = a.set;
    report.degree_cap = degree_cap.value_or(report.cls.lex.max_degree());

    detail::ExploreState st;
    st.H = &H;
    st.cap = report.degree_cap;
    st.node_limit = node_limit;
    st.target = k_polynomial_auto(report.cls.lex);
    st.report = &report;

    std::vector<Monomial> gens;
    detail::explore_rec(st, 1, {}, gens);
    return report;
}

}  // namespace lexdepth
