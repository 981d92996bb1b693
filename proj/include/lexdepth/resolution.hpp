#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lexdepth/hilbert.hpp"
#include "lexdepth/lex.hpp"
#include "lexdepth/monomial.hpp"
#include "lexdepth/sparse_rank.hpp"

namespace lexdepth {

/// Default cap on columns per graded block of a Koszul boundary matrix.
inline constexpr long kDefaultColLimit = 20'000;

// ============================================================
//  Graded Betti tables
// ============================================================

enum class BettiConvention { Quotient, Ideal };

/**
 * A graded Betti table: multiplicity at (homological index i, internal
 * degree j).  The convention records whether the table resolves A/I or I;
 * the two differ by the shift beta_{i,j}(I) = beta_{i+1,j}(A/I) plus the
 * free rank 1 of A/I at (0, 0).
 */
struct GradedBetti {
    BettiConvention convention = BettiConvention::Quotient;
    std::map<std::pair<int, long>, Int> entries;

    Int at(int i, long j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? Int(0) : it->second;
    }

    void add(int i, long j, const Int& mult) {
        if (mult == 0) return;
        entries[{i, j}] += mult;
        if (entries[{i, j}] == 0) entries.erase({i, j});
    }

    /// Projective dimension of A/I encoded by this table.
    int proj_dim_quotient() const {
        int pd = 0;
        for (const auto& [key, mult] : entries) {
            const int i = key.first;
            pd = std::max(pd, convention == BettiConvention::Ideal ? i + 1 : i);
        }
        return pd;
    }

    bool operator==(const GradedBetti& o) const {
        return convention == o.convention && entries == o.entries;
    }
};

inline GradedBetti to_quotient(const GradedBetti& B) {
    if (B.convention == BettiConvention::Quotient) return B;
    GradedBetti out;
    out.convention = BettiConvention::Quotient;
    out.add(0, 0, Int(1));
    for (const auto& [key, mult] : B.entries) out.add(key.first + 1, key.second, mult);
    return out;
}

inline GradedBetti to_ideal(const GradedBetti& B) {
    if (B.convention == BettiConvention::Ideal) return B;
    GradedBetti out;
    out.convention = BettiConvention::Ideal;
    for (const auto& [key, mult] : B.entries) {
        if (key.first == 0) continue;  // drop the free rank of A/I itself
        out.add(key.first - 1, key.second, mult);
    }
    return out;
}

// ============================================================
//  Closed-form resolutions of structured ideals
// ============================================================

/**
 * Graded Betti numbers of a stable ideal: each generator u contributes
 * C(m(u)-1, i) at (i, i + deg u) for 0 <= i <= m(u)-1 (resolves-ideal
 * convention).
 */
inline GradedBetti ek_betti(const MonomialIdeal& I) {
    if (!is_stable(I)) throw DomainError("ek_betti: ideal is not stable");
    GradedBetti B;
    B.convention = BettiConvention::Ideal;
    for (const auto& u : I.gens) {
        const int m = u.m_index();
        const long d = u.degree();
        for (int i = 0; i <= m - 1; ++i) B.add(i, i + d, binomial(static_cast<long>(m) - 1, i));
    }
    return B;
}

/// Projective dimension of A/I for stable I: the largest m-index of a generator.
inline int proj_dim_stable(const MonomialIdeal& I) {
    if (!is_stable(I)) throw DomainError("proj_dim_stable: ideal is not stable");
    int pd = 0;
    for (const auto& u : I.gens) pd = std::max(pd, u.m_index());
    return pd;
}

/// Depth of A/I for lexsegment I: max{n - |G(I)|, 0}.
inline int depth_lexsegment(const MonomialIdeal& I, long enum_limit = kDefaultEnumLimit) {
    if (!is_lexsegment(I, enum_limit))
        throw DomainError("depth_lexsegment: ideal is not a lexsegment ideal");
    const long d = I.delta();
    return d >= I.n ? 0 : static_cast<int>(I.n - d);
}

// ============================================================
//  Koszul homology oracle
// ============================================================

namespace detail {

struct DegreeSlice {
    std::vector<Monomial> monos;          // standard monomials, lex-descending
    std::map<std::vector<int>, long> index;
};

inline const DegreeSlice& standard_slice(const MonomialIdeal& I, long d,
                                         std::map<long, DegreeSlice>& cache) {
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
    DegreeSlice slice;
    for (auto& u : degree_monomials(I.n, d)) {
        if (!I.contains(u)) {
            slice.index[u.e] = static_cast<long>(slice.monos.size());
            slice.monos.push_back(std::move(u));
        }
    }
    return cache.emplace(d, std::move(slice)).first->second;
}

inline std::vector<std::vector<std::vector<int>>> subsets_by_size(int n) {
    std::vector<std::vector<std::vector<int>>> out(n + 1);
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) s.push_back(i + 1);
        out[s.size()].push_back(std::move(s));
    }
    for (auto& level : out) std::sort(level.begin(), level.end());
    return out;
}

}  // namespace detail

/**
 * Exact graded Betti numbers of A/I from Koszul homology, in the
 * resolves-quotient convention.  In internal degree j the i-th block has
 * basis (S, w) with S an i-subset of the variables and w a standard monomial
 * of degree j - i; the boundary sends (S, w) to the signed sum over k in S of
 * (S \ k, x_k w), the sign alternating with the position of k in S and the
 * term dropped when x_k w falls into I.  Then beta_{i,j} is the nullity of
 * the outgoing boundary minus the rank of the incoming one, over the
 * rationals.  Betti numbers vanish above the degree of the lcm of all
 * generators (Taylor support), which bounds the default degree range.
 */
inline GradedBetti koszul_betti(const MonomialIdeal& I, std::optional<long> j_max = std::nullopt,
                                long col_limit = kDefaultColLimit) {
    if (I.n < 1) throw DomainError("koszul_betti: requires at least one variable");
    const int n = I.n;
    Monomial big = Monomial::unit(n);
    for (const auto& g : I.gens) big = lcm(big, g);
    const long jmax = j_max.value_or(big.degree());

    GradedBetti B;
    B.convention = BettiConvention::Quotient;
    std::map<long, detail::DegreeSlice> cache;
    const auto subsets = detail::subsets_by_size(n);
    std::map<std::vector<int>, long> subset_index;
    for (int i = 0; i <= n; ++i)
        for (size_t k = 0; k < subsets[i].size(); ++k) subset_index[subsets[i][k]] = static_cast<long>(k);

    for (long j = 0; j <= jmax; ++j) {
        const int imax = static_cast<int>(std::min<long>(n, j));
        std::vector<long> cols(imax + 2, 0);
        for (int i = 0; i <= imax; ++i) {
            const auto& slice = detail::standard_slice(I, j - i, cache);
            cols[i] = static_cast<long>(subsets[i].size()) * static_cast<long>(slice.monos.size());
            if (cols[i] > col_limit)
                throw GuardrailError("koszul_betti: graded block exceeds the column guardrail");
        }

        // rank of the boundary from block i to block i-1, inside degree j
        std::vector<long> rank(imax + 2, 0);
        for (int i = 1; i <= imax; ++i) {
            if (cols[i] == 0 || cols[i - 1] == 0) continue;
            const auto& src = detail::standard_slice(I, j - i, cache);
            const auto& dst = detail::standard_slice(I, j - i + 1, cache);
            std::vector<SparseVec> columns;
            columns.reserve(cols[i]);
            for (const auto& S : subsets[i]) {
                for (size_t w = 0; w < src.monos.size(); ++w) {
                    SparseVec column;
                    int sign = 1;
                    for (size_t pos = 0; pos < S.size(); ++pos) {
                        const int k = S[pos];
                        Monomial v = times_var(src.monos[w], k);
                        auto it = dst.index.find(v.e);
                        if (it != dst.index.end()) {
                            std::vector<int> Sminus;
                            for (size_t t = 0; t < S.size(); ++t)
                                if (t != pos) Sminus.push_back(S[t]);
                            const long row = subset_index[Sminus] * static_cast<long>(dst.monos.size()) +
                                             it->second;
                            column.emplace_back(row, Int(sign));
                        }
                        sign = -sign;
                    }
                    std::sort(column.begin(), column.end(),
                              [](const auto& a, const auto& b) { return a.first < b.first; });
                    columns.push_back(std::move(column));
                }
            }
            rank[i] = sparse_rank(std::move(columns));
        }

        for (int i = 0; i <= imax; ++i) {
            const Int beta = Int(cols[i] - rank[i]) - rank[i + 1];
            B.add(i, j, beta);
        }
    }
    return B;
}

// ============================================================
//  Depth dispatch
// ============================================================

/// Projective dimension of A/I: closed form when stable, Koszul otherwise.
inline int proj_dim_any(const MonomialIdeal& I, long col_limit = kDefaultColLimit) {
    if (is_stable(I)) return proj_dim_stable(I);
    return koszul_betti(I, std::nullopt, col_limit).proj_dim_quotient();
}

/// depth A/I = n - proj dim A/I.
inline int depth_any(const MonomialIdeal& I, long col_limit = kDefaultColLimit) {
    return I.n - proj_dim_any(I, col_limit);
}

/// The generator-count bound: proj dim A/I never exceeds |G(I)|.
inline long taylor_bound(const MonomialIdeal& I) { return I.delta(); }

}  // namespace lexdepth
