#pragma once

#include <algorithm>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lexdepth/arith.hpp"

namespace lexdepth {

/// One sparse vector: (index, value) pairs sorted by index, values nonzero.
using SparseVec = std::vector<std::pair<long, Int>>;

namespace detail {

/// result = a * u - b * v, merged by index, zeros dropped.
inline SparseVec sparse_combine(const SparseVec& u, const Int& a, const SparseVec& v, const Int& b) {
    SparseVec out;
    out.reserve(u.size() + v.size());
    size_t i = 0, j = 0;
    while (i < u.size() || j < v.size()) {
        if (j == v.size() || (i < u.size() && u[i].first < v[j].first)) {
            out.emplace_back(u[i].first, a * u[i].second);
            ++i;
        } else if (i == u.size() || v[j].first < u[i].first) {
            out.emplace_back(v[j].first, -b * v[j].second);
            ++j;
        } else {
            Int val = a * u[i].second - b * v[j].second;
            if (val != 0) out.emplace_back(u[i].first, std::move(val));
            ++i;
            ++j;
        }
    }
    return out;
}

/// Divides the row by the gcd of its entries and normalizes the leading sign.
inline void strip_content(SparseVec& r) {
    if (r.empty()) return;
    Int g(0);
    for (const auto& [idx, val] : r) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), val.get_mpz_t());
        if (g == 1) break;
    }
    if (g > 1)
        for (auto& [idx, val] : r) val /= g;
    if (r.front().second < 0)
        for (auto& [idx, val] : r) val = -val;
}

}  // namespace detail

/**
 * Rank of a sparse integer matrix over the rationals, given as a list of
 * sparse vectors (rank is transpose-invariant, so rows and columns are
 * interchangeable).
 *
 * Two structural peeling rules run first and cost no arithmetic: a vector
 * with a single entry contributes one to the rank and deletes its index
 * everywhere, and an index carried by a single vector contributes one to the
 * rank and deletes that vector.  The remaining core is eliminated
 * fraction-free (cross-multiplication followed by content stripping), which
 * keeps entries integral while preserving the row space up to scaling.
 */
inline long sparse_rank(std::vector<SparseVec> rows) {
    long rank = 0;
    rows.erase(std::remove_if(rows.begin(), rows.end(),
                              [](const SparseVec& r) { return r.empty(); }),
               rows.end());

    bool peeled = true;
    while (peeled) {
        peeled = false;

        // vectors with a single entry: their index leaves the matrix
        std::vector<long> single_cols;
        for (auto& r : rows)
            if (r.size() == 1) single_cols.push_back(r.front().first);
        if (!single_cols.empty()) {
            std::sort(single_cols.begin(), single_cols.end());
            single_cols.erase(std::unique(single_cols.begin(), single_cols.end()),
                              single_cols.end());
            rank += static_cast<long>(single_cols.size());
            for (auto& r : rows) {
                r.erase(std::remove_if(r.begin(), r.end(),
                                       [&](const std::pair<long, Int>& p) {
                                           return std::binary_search(single_cols.begin(),
                                                                     single_cols.end(), p.first);
                                       }),
                        r.end());
            }
            rows.erase(std::remove_if(rows.begin(), rows.end(),
                                      [](const SparseVec& r) { return r.empty(); }),
                       rows.end());
            peeled = true;
            continue;
        }

        // indices carried by exactly one vector: that vector leaves the matrix
        std::unordered_map<long, long> count;
        for (const auto& r : rows)
            for (const auto& [idx, val] : r) ++count[idx];
        std::vector<char> remove(rows.size(), 0);
        for (size_t k = 0; k < rows.size(); ++k) {
            for (const auto& [idx, val] : rows[k]) {
                if (count[idx] == 1) {
                    remove[k] = 1;
                    break;
                }
            }
        }
        size_t removed = 0;
        for (char m : remove)
            if (m) ++removed;
        if (removed > 0) {
            std::vector<SparseVec> kept;
            kept.reserve(rows.size() - removed);
            for (size_t k = 0; k < rows.size(); ++k)
                if (!remove[k]) kept.push_back(std::move(rows[k]));
            rank += static_cast<long>(removed);
            rows = std::move(kept);
            peeled = true;
        }
    }

    // fraction-free elimination on the remaining core
    while (!rows.empty()) {
        std::unordered_map<long, long> count;
        for (const auto& r : rows)
            for (const auto& [idx, val] : r) ++count[idx];

        size_t best = 0;
        long best_cost = -1;
        long best_col = -1;
        for (size_t k = 0; k < rows.size(); ++k) {
            long col = -1, col_count = -1;
            for (const auto& [idx, val] : rows[k]) {
                if (col_count < 0 || count[idx] < col_count) {
                    col = idx;
                    col_count = count[idx];
                }
            }
            const long cost = (static_cast<long>(rows[k].size()) - 1) * (col_count - 1);
            if (best_cost < 0 || cost < best_cost) {
                best_cost = cost;
                best = k;
                best_col = col;
            }
        }

        SparseVec pivot = std::move(rows[best]);
        rows.erase(rows.begin() + best);
        ++rank;
        Int pval(0);
        for (const auto& [idx, val] : pivot)
            if (idx == best_col) pval = val;

        std::vector<SparseVec> next;
        next.reserve(rows.size());
        for (auto& r : rows) {
            Int b(0);
            for (const auto& [idx, val] : r)
                if (idx == best_col) b = val;
            if (b == 0) {
                next.push_back(std::move(r));
                continue;
            }
            SparseVec combined = detail::sparse_combine(r, pval, pivot, b);
            detail::strip_content(combined);
            if (!combined.empty()) next.push_back(std::move(combined));
        }
        rows = std::move(next);
    }
    return rank;
}

}  // namespace lexdepth
