#pragma once

#include <string>
#include <vector>

#include "lexdepth/monomial.hpp"
#include "lexdepth/oseq.hpp"

namespace lexdepth {

// ============================================================
//  Lexification
// ============================================================

/**
 * The lexsegment ideal realizing H, built degree by degree.  In degree q the
 * ideal occupies the top c_q = C(n-1+q, n-1) - h(q) positions of the
 * lex-descending slice; new generators are the positions from |shadow| to
 * c_q, where the shadow size of the previous segment comes from Macaulay
 * sharpness: |shadow| = C(n-1+q, n-1) - h(q-1)^<q-1>.  Only those positions
 * are unranked.  Under the MaxGrowth tail no generators exist beyond the
 * window; under the Zero tail degree D+1 receives every monomial outside the
 * shadow.
 */
inline MonomialIdeal lexify(const OSequence& H) {
    if (H.n < 1) throw DomainError("lexify: requires at least one variable");
    OSeqReport rep = is_o_sequence(H);
    if (!rep.ok) throw DomainError("lexify: not an O-sequence: " + rep.message());
    const long D = H.window_end();
    const long last = (H.tail == Tail::Zero) ? D + 1 : D;
    std::vector<Monomial> gens;
    for (long q = 1; q <= last; ++q) {
        const Int total = degree_count(H.n, q);
        const Int h_here = (q <= D) ? H.values[q] : Int(0);
        const Int c_q = total - h_here;
        Int sh(0);
        if (q >= 2) sh = total - macaulay_bound(H.values[q - 1], q - 1);
        for (Int r = sh; r < c_q; ++r) gens.push_back(lex_unrank(H.n, q, r));
    }
    return MonomialIdeal{H.n, std::move(gens)};
}

// ============================================================
//  Lexsegment recognition
// ============================================================

/**
 * Does every graded slice of the ideal form an initial segment of the
 * lex-descending order?  Slices are checked up to the maximum generator
 * degree; beyond it each slice is the shadow of the previous one, and shadows
 * of initial segments are initial segments.
 */
inline bool is_lexsegment(const MonomialIdeal& I, long enum_limit = kDefaultEnumLimit) {
    if (I.is_zero()) return true;
    for (long q = 1; q <= I.max_degree(); ++q) {
        bool gap = false;
        for (const auto& u : degree_monomials(I.n, q, enum_limit)) {
            const bool member = I.contains(u);
            if (member && gap) return false;
            if (!member) gap = true;
        }
    }
    return true;
}

/// Lexsegment with at most n generators (so it stays lexsegment in any extension).
inline bool is_universal_lex(const MonomialIdeal& I, long enum_limit = kDefaultEnumLimit) {
    return I.delta() <= I.n && is_lexsegment(I, enum_limit);
}

/**
 * Closed form for the universal lexsegment ideal with generator degrees
 * e_1 <= ... <= e_d: with s_1 = e_1 - 1 and s_i = e_i - e_{i-1}, the k-th
 * generator is x_1^{s_1} ... x_{k-1}^{s_{k-1}} x_k^{s_k + 1}.
 */
inline MonomialIdeal universal_lex_from_degrees(int n, const std::vector<long>& degrees) {
    const long d = static_cast<long>(degrees.size());
    if (n < 1) throw DomainError("universal_lex_from_degrees: requires at least one variable");
    if (d > n) throw DomainError("universal_lex_from_degrees: more degrees than variables");
    for (long i = 0; i < d; ++i) {
        if (degrees[i] < 1) throw DomainError("universal_lex_from_degrees: degrees must be positive");
        if (i > 0 && degrees[i] < degrees[i - 1])
            throw DomainError("universal_lex_from_degrees: degrees must be nondecreasing");
    }
    std::vector<long> s(d);
    if (d > 0) s[0] = degrees[0] - 1;
    for (long i = 1; i < d; ++i) s[i] = degrees[i] - degrees[i - 1];
    std::vector<Monomial> gens;
    for (long k = 1; k <= d; ++k) {
        Monomial u = Monomial::unit(n);
        for (long i = 1; i < k; ++i) u.e[i - 1] = static_cast<int>(s[i - 1]);
        u.e[k - 1] = static_cast<int>(s[k - 1] + 1);
        gens.push_back(std::move(u));
    }
    return MonomialIdeal{n, std::move(gens)};
}

/**
 * The lex-largest monomial of degree e outside J.  Appending it to a
 * lexsegment ideal with fewer than n generators keeps the result lexsegment;
 * iterating from the zero ideal reproduces universal_lex_from_degrees.
 */
inline Monomial greedy_next_generator(const MonomialIdeal& J, long e,
                                      long enum_limit = kDefaultEnumLimit) {
    if (!is_lexsegment(J, enum_limit))
        throw DomainError("greedy_next_generator: input is not a lexsegment ideal");
    if (J.delta() >= J.n)
        throw DomainError("greedy_next_generator: generator count already reaches the variable count");
    if (e < J.max_degree() || e < 1)
        throw DomainError("greedy_next_generator: degree below the current maximum generator degree");
    const Int total = degree_count(J.n, e);
    for (Int r(0); r < total; ++r) {
        Monomial u = lex_unrank(J.n, e, r);
        if (!J.contains(u)) return u;
    }
    throw DomainError("greedy_next_generator: every monomial of this degree lies in the ideal");
}

}  // namespace lexdepth
