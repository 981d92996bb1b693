#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "lexdepth/arith.hpp"
#include "lexdepth/errors.hpp"

namespace lexdepth {

/// Default cap on monomials enumerated per degree slice.
inline constexpr long kDefaultEnumLimit = 10'000'000;

// ============================================================
//  Monomials
// ============================================================

/**
 * A monomial in a fixed ambient ring K[x_1..x_n], stored as its exponent
 * vector.  The lexicographic order with x_1 > x_2 > ... > x_n coincides with
 * the positionwise comparison of exponent vectors.
 */
struct Monomial {
    std::vector<int> e;

    Monomial() = default;
    explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

    static Monomial unit(int n) { return Monomial(std::vector<int>(n, 0)); }

    /// x_i, with i counted from 1.
    static Monomial variable(int n, int i) {
        Monomial u = unit(n);
        u.e[i - 1] = 1;
        return u;
    }

    int vars() const { return static_cast<int>(e.size()); }

    long degree() const { return std::accumulate(e.begin(), e.end(), 0L); }

    /// Index of the last variable with positive exponent (1-based); 0 for the unit.
    int m_index() const {
        for (int i = vars(); i >= 1; --i)
            if (e[i - 1] > 0) return i;
        return 0;
    }

    bool operator==(const Monomial& o) const { return e == o.e; }
    bool operator!=(const Monomial& o) const { return e != o.e; }
};

namespace detail {
inline void check_same_ambient(const Monomial& u, const Monomial& v, const char* op) {
    if (u.vars() != v.vars())
        throw DomainError(std::string(op) + ": ambient variable counts differ");
}
}  // namespace detail

/// Three-way lexicographic comparison: +1 if u > v, -1 if u < v, 0 if equal.
inline int lex_compare(const Monomial& u, const Monomial& v) {
    detail::check_same_ambient(u, v, "lex_compare");
    for (int i = 0; i < u.vars(); ++i) {
        if (u.e[i] != v.e[i]) return u.e[i] > v.e[i] ? 1 : -1;
    }
    return 0;
}

inline bool lex_greater(const Monomial& u, const Monomial& v) { return lex_compare(u, v) > 0; }
inline bool lex_less(const Monomial& u, const Monomial& v) { return lex_compare(u, v) < 0; }

/// Does u divide v?
inline bool divides(const Monomial& u, const Monomial& v) {
    detail::check_same_ambient(u, v, "divides");
    for (int i = 0; i < u.vars(); ++i)
        if (u.e[i] > v.e[i]) return false;
    return true;
}

inline Monomial times_var(const Monomial& u, int i) {
    Monomial v = u;
    v.e[i - 1] += 1;
    return v;
}

inline Monomial lcm(const Monomial& u, const Monomial& v) {
    detail::check_same_ambient(u, v, "lcm");
    Monomial w = u;
    for (int i = 0; i < u.vars(); ++i) w.e[i] = std::max(u.e[i], v.e[i]);
    return w;
}

/// Canonical generator order: ascending degree, lex-descending within a degree.
inline bool ideal_order_less(const Monomial& u, const Monomial& v) {
    long du = u.degree(), dv = v.degree();
    if (du != dv) return du < dv;
    return lex_compare(u, v) > 0;
}

// ============================================================
//  Degree slices and ranking
// ============================================================

/// Number of monomials of degree q in n variables: C(n-1+q, n-1).
inline Int degree_count(int n, long q) {
    if (q < 0) return Int(0);
    if (n == 0) return Int(q == 0 ? 1 : 0);
    return binomial(static_cast<long>(n) - 1 + q, n - 1);
}

/**
 * Position of u within the lex-descending list of its degree slice,
 * counted from 0 (the combinatorial number system for compositions).
 */
inline Int lex_rank(const Monomial& u) {
    const int n = u.vars();
    long q = u.degree();
    Int r(0);
    for (int pos = 0; pos + 1 < n; ++pos) {
        for (long c = q; c > u.e[pos]; --c) r += degree_count(n - pos - 1, q - c);
        q -= u.e[pos];
    }
    return r;
}

/// Inverse of lex_rank on the slice of degree q in n variables.
inline Monomial lex_unrank(int n, long q, const Int& rank) {
    if (n < 1) throw DomainError("lex_unrank: requires at least one variable");
    if (q < 0) throw DomainError("lex_unrank: degree must be nonnegative");
    if (rank < 0 || rank >= degree_count(n, q))
        throw DomainError("lex_unrank: rank outside the degree slice");
    Monomial u = Monomial::unit(n);
    Int r = rank;
    long rem = q;
    for (int pos = 0; pos + 1 < n; ++pos) {
        for (long c = rem;; --c) {
            Int cnt = degree_count(n - pos - 1, rem - c);
            if (r < cnt) {
                u.e[pos] = static_cast<int>(c);
                rem -= c;
                break;
            }
            r -= cnt;
        }
    }
    u.e[n - 1] = static_cast<int>(rem);
    return u;
}

namespace detail {
inline void gen_degree_monomials(int n, long q, int pos, Monomial& cur,
                                 std::vector<Monomial>& out) {
    if (pos + 1 == n) {
        cur.e[pos] = static_cast<int>(q);
        out.push_back(cur);
        cur.e[pos] = 0;
        return;
    }
    for (long c = q; c >= 0; --c) {
        cur.e[pos] = static_cast<int>(c);
        gen_degree_monomials(n, q - c, pos + 1, cur, out);
    }
    cur.e[pos] = 0;
}
}  // namespace detail

/// All monomials of degree q in n variables, lex-descending, under a guardrail.
inline std::vector<Monomial> degree_monomials(int n, long q, long enum_limit = kDefaultEnumLimit) {
    if (n < 1) throw DomainError("degree_monomials: requires at least one variable");
    if (q < 0) throw DomainError("degree_monomials: degree must be nonnegative");
    if (degree_count(n, q) > enum_limit)
        throw GuardrailError("degree_monomials: slice exceeds the enumeration guardrail");
    std::vector<Monomial> out;
    out.reserve(static_cast<size_t>(to_long(degree_count(n, q))));
    Monomial cur = Monomial::unit(n);
    detail::gen_degree_monomials(n, q, 0, cur, out);
    return out;
}

/**
 * Shadow of an equal-degree set: all products by single variables, deduplicated
 * and returned lex-descending.
 */
inline std::vector<Monomial> shadow(const std::vector<Monomial>& S) {
    if (S.empty()) return {};
    const int n = S.front().vars();
    const long q = S.front().degree();
    for (const auto& u : S) {
        if (u.vars() != n) throw DomainError("shadow: mixed ambient variable counts");
        if (u.degree() != q) throw DomainError("shadow: mixed degrees");
    }
    std::vector<Monomial> out;
    out.reserve(S.size() * n);
    for (const auto& u : S)
        for (int i = 1; i <= n; ++i) out.push_back(times_var(u, i));
    std::sort(out.begin(), out.end(),
              [](const Monomial& a, const Monomial& b) { return a.e > b.e; });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// ============================================================
//  Monomial ideals
// ============================================================

/**
 * A monomial ideal presented by its unique minimal generating set, kept in
 * canonical order (ascending degree, lex-descending within a degree).
 */
struct MonomialIdeal {
    int n = 0;
    std::vector<Monomial> gens;

    long delta() const { return static_cast<long>(gens.size()); }
    bool is_zero() const { return gens.empty(); }

    long max_degree() const {
        long d = 0;
        for (const auto& g : gens) d = std::max(d, g.degree());
        return d;
    }

    bool contains(const Monomial& u) const {
        for (const auto& g : gens)
            if (divides(g, u)) return true;
        return false;
    }

    bool operator==(const MonomialIdeal& o) const { return n == o.n && gens == o.gens; }
};

/**
 * Discards generators divisible by another generator, rejects the unit
 * monomial, and sorts canonically.  The result is the minimal generating set.
 */
inline std::vector<Monomial> minimalize(std::vector<Monomial> gens, int n) {
    if (n < 1) throw DomainError("minimalize: requires at least one variable");
    for (const auto& g : gens) {
        if (g.vars() != n) throw DomainError("minimalize: generator ambient mismatch");
        if (g.degree() == 0) throw DomainError("minimalize: the unit monomial is not a valid generator");
    }
    std::sort(gens.begin(), gens.end(), ideal_order_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> keep;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& k : keep) {
            if (divides(k, g)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) keep.push_back(g);
    }
    return keep;
}

/**
 * Stability check on generators: for every generator u and every q < m(u),
 * the exchange x_q * u / x_{m(u)} must again lie in the ideal.  Checking
 * generators alone suffices because exchanges of arbitrary elements factor
 * through exchanges of the generators dividing them.
 */
inline bool is_stable(const MonomialIdeal& I) {
    for (const auto& u : I.gens) {
        const int m = u.m_index();
        for (int q = 1; q < m; ++q) {
            Monomial v = u;
            v.e[m - 1] -= 1;
            v.e[q - 1] += 1;
            if (!I.contains(v)) return false;
        }
    }
    return true;
}

/// Re-embeds an ideal into a larger ambient ring by padding exponent vectors.
inline MonomialIdeal embed(const MonomialIdeal& I, int n_new) {
    if (n_new < I.n) throw DomainError("embed: cannot shrink the ambient ring");
    std::vector<Monomial> gens;
    gens.reserve(I.gens.size());
    for (const auto& g : I.gens) {
        Monomial u = Monomial::unit(n_new);
        std::copy(g.e.begin(), g.e.end(), u.e.begin());
        gens.push_back(std::move(u));
    }
    return MonomialIdeal{n_new, std::move(gens)};
}

}  // namespace lexdepth
