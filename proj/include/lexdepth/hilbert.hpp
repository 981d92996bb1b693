#pragma once

#include <utility>
#include <vector>

#include "lexdepth/monomial.hpp"
#include "lexdepth/oseq.hpp"

namespace lexdepth {

/// Inclusion-exclusion over generator subsets is capped at this many generators.
inline constexpr long kSubsetLimit = 22;

// ============================================================
//  Hilbert function by enumeration
// ============================================================

namespace detail {
inline Int count_standard(const MonomialIdeal& I, long q, int pos, Monomial& cur) {
    if (pos + 1 == I.n) {
        cur.e[pos] = static_cast<int>(q);
        Int res(I.contains(cur) ? 0 : 1);
        cur.e[pos] = 0;
        return res;
    }
    Int total(0);
    for (long c = q; c >= 0; --c) {
        cur.e[pos] = static_cast<int>(c);
        total += count_standard(I, q - c, pos + 1, cur);
    }
    cur.e[pos] = 0;
    return total;
}
}  // namespace detail

/**
 * dim_K (A/I)_q, counted directly: the number of degree-q monomials divisible
 * by no generator.  This is the enumeration oracle the series machinery is
 * tested against.
 */
inline Int hilbert_function(const MonomialIdeal& I, long q, long enum_limit = kDefaultEnumLimit) {
    if (q < 0) throw DomainError("hilbert_function: degree must be nonnegative");
    if (I.n < 1) throw DomainError("hilbert_function: requires at least one variable");
    if (degree_count(I.n, q) > enum_limit)
        throw GuardrailError("hilbert_function: slice exceeds the enumeration guardrail");
    Monomial cur = Monomial::unit(I.n);
    return detail::count_standard(I, q, 0, cur);
}

// ============================================================
//  K-polynomial
// ============================================================

/**
 * Numerator of the Hilbert series over (1 - t)^n, coefficients indexed by
 * degree.  Trailing zeros are trimmed; the zero ideal has numerator [1].
 */
struct KPolynomial {
    std::vector<Int> coeffs;

    long degree() const { return static_cast<long>(coeffs.size()) - 1; }

    Int at(long j) const {
        if (j < 0 || j > degree()) return Int(0);
        return coeffs[j];
    }

    Int eval_at_one() const {
        Int s(0);
        for (const auto& c : coeffs) s += c;
        return s;
    }

    bool operator==(const KPolynomial& o) const { return coeffs == o.coeffs; }
};

namespace detail {
inline void trim(KPolynomial& K) {
    while (!K.coeffs.empty() && K.coeffs.back() == 0) K.coeffs.pop_back();
    if (K.coeffs.empty()) K.coeffs.push_back(Int(0));
}

inline void kpoly_subsets(const MonomialIdeal& I, size_t idx, std::vector<int>& lcm_exps,
                          long lcm_deg, int sign, std::vector<Int>& coeffs) {
    if (idx == I.gens.size()) {
        coeffs[lcm_deg] += sign;
        return;
    }
    kpoly_subsets(I, idx + 1, lcm_exps, lcm_deg, sign, coeffs);
    const Monomial& g = I.gens[idx];
    std::vector<std::pair<int, int>> saved;
    long deg = lcm_deg;
    for (int i = 0; i < I.n; ++i) {
        if (g.e[i] > lcm_exps[i]) {
            saved.emplace_back(i, lcm_exps[i]);
            deg += g.e[i] - lcm_exps[i];
            lcm_exps[i] = g.e[i];
        }
    }
    kpoly_subsets(I, idx + 1, lcm_exps, deg, -sign, coeffs);
    for (auto& [i, old] : saved) lcm_exps[i] = old;
}
}  // namespace detail

/**
 * K-polynomial by inclusion-exclusion over generator subsets:
 * sum over S of (-1)^|S| t^{deg lcm(S)}.  Rejected past the subset guardrail;
 * k_polynomial_split handles larger generator counts.
 */
inline KPolynomial k_polynomial(const MonomialIdeal& I) {
    if (I.delta() > kSubsetLimit)
        throw GuardrailError(
            "k_polynomial: generator count exceeds the subset guardrail; "
            "use the splitting method (k_polynomial_split)");
    Monomial big = Monomial::unit(I.n);
    for (const auto& g : I.gens) big = lcm(big, g);
    KPolynomial K;
    K.coeffs.assign(big.degree() + 1, Int(0));
    std::vector<int> lcm_exps(I.n, 0);
    detail::kpoly_subsets(I, 0, lcm_exps, 0, 1, K.coeffs);
    detail::trim(K);
    return K;
}

/**
 * K-polynomial by pivot splitting: with I = I' + (m),
 * K(I) = K(I') - t^{deg m} * K(I' : m).  No subset guardrail.
 */
inline KPolynomial k_polynomial_split(const MonomialIdeal& I) {
    if (I.is_zero()) {
        KPolynomial K;
        K.coeffs.assign(1, Int(1));
        return K;
    }
    const Monomial m = I.gens.back();
    std::vector<Monomial> rest(I.gens.begin(), I.gens.end() - 1);
    MonomialIdeal head{I.n, minimalize(rest, I.n)};
    KPolynomial Kh = k_polynomial_split(head);

    std::vector<Monomial> colon_gens;
    bool colon_is_unit = false;
    for (const auto& g : rest) {
        Monomial q = g;
        bool trivial = true;
        for (int i = 0; i < I.n; ++i) {
            q.e[i] = std::max(0, g.e[i] - m.e[i]);
            if (q.e[i] > 0) trivial = false;
        }
        if (trivial) {
            colon_is_unit = true;
            break;
        }
        colon_gens.push_back(std::move(q));
    }
    KPolynomial Kc;
    if (colon_is_unit) {
        Kc.coeffs.assign(1, Int(0));  // colon is the unit ideal, quotient vanishes
    } else {
        Kc = k_polynomial_split(MonomialIdeal{I.n, minimalize(colon_gens, I.n)});
    }

    const long dm = m.degree();
    KPolynomial K;
    K.coeffs.assign(std::max<size_t>(Kh.coeffs.size(), Kc.coeffs.size() + dm), Int(0));
    for (size_t j = 0; j < Kh.coeffs.size(); ++j) K.coeffs[j] += Kh.coeffs[j];
    for (size_t j = 0; j < Kc.coeffs.size(); ++j) K.coeffs[j + dm] -= Kc.coeffs[j];
    detail::trim(K);
    return K;
}

/// Inclusion-exclusion when it fits the guardrail, splitting otherwise.
inline KPolynomial k_polynomial_auto(const MonomialIdeal& I) {
    if (I.delta() <= kSubsetLimit) return k_polynomial(I);
    return k_polynomial_split(I);
}

/**
 * Divides out (1 - t) while t = 1 remains a root; returns the reduced
 * numerator and the multiplicity removed.
 */
inline std::pair<KPolynomial, int> reduce_k_polynomial(KPolynomial K) {
    int mult = 0;
    while (K.eval_at_one() == 0 && !(K.coeffs.size() == 1 && K.coeffs[0] == 0)) {
        // synthetic division by (1 - t): quotient coefficients are prefix sums
        std::vector<Int> q(K.coeffs.size() - (K.coeffs.empty() ? 0 : 1));
        Int run(0);
        for (size_t j = 0; j + 1 < K.coeffs.size(); ++j) {
            run += K.coeffs[j];
            q[j] = run;
        }
        if (q.empty()) q.push_back(Int(0));
        K.coeffs = std::move(q);
        detail::trim(K);
        ++mult;
    }
    return {std::move(K), mult};
}

/// Krull dimension of A/I: n minus the multiplicity of the root t = 1.
inline int krull_dim(const MonomialIdeal& I) {
    auto [red, mult] = reduce_k_polynomial(k_polynomial_auto(I));
    (void)red;
    return I.n - mult;
}

/// Expands K / (1 - t)^n out to degree qmax.
inline std::vector<Int> series_values(const KPolynomial& K, int n, long qmax) {
    std::vector<Int> h(qmax + 1, Int(0));
    for (long q = 0; q <= qmax; ++q)
        for (long j = 0; j <= std::min(q, K.degree()); ++j)
            h[q] += K.at(j) * degree_count(n, q - j);
    return h;
}

// ============================================================
//  Critical Hilbert functions in closed form
// ============================================================

/**
 * Value at q of the Hilbert function carved out by a universal lexsegment
 * ideal with generator degrees e_1 <= ... <= e_d:
 * C(n-1+q, n-1) - sum_i C(n-i+q-e_i, n-i), negative-top binomials read as 0.
 */
inline Int critical_hilbert(int n, const std::vector<long>& degrees, long q) {
    const long d = static_cast<long>(degrees.size());
    if (d > n) throw DomainError("critical_hilbert: more degrees than variables");
    for (long i = 0; i < d; ++i) {
        if (degrees[i] < 1) throw DomainError("critical_hilbert: degrees must be positive");
        if (i > 0 && degrees[i] < degrees[i - 1])
            throw DomainError("critical_hilbert: degrees must be nondecreasing");
    }
    if (q < 0) return Int(0);
    Int h = degree_count(n, q);
    for (long i = 1; i <= d; ++i)
        h -= binomial(static_cast<long>(n) - i + q - degrees[i - 1], n - i);
    return h;
}

}  // namespace lexdepth
