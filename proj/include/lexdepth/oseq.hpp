#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "lexdepth/arith.hpp"
#include "lexdepth/errors.hpp"

namespace lexdepth {

// ============================================================
//  Macaulay binomial calculus
// ============================================================

struct MacaulayTerm {
    Int top;
    long level;
};

/**
 * The unique expansion a = C(a_q, q) + C(a_{q-1}, q-1) + ... + C(a_j, j)
 * with a_q > a_{q-1} > ... > a_j >= j >= 1.  Terms are stored with levels
 * strictly descending and consecutive from `level` down.
 */
struct MacaulayRep {
    long level = 0;
    std::vector<MacaulayTerm> terms;

    Int total() const {
        Int s(0);
        for (const auto& t : terms) s += binomial(t.top, t.level);
        return s;
    }
};

inline MacaulayRep macaulay_rep(const Int& a, long q) {
    if (q < 1) throw DomainError("macaulay_rep: level must be at least 1");
    if (a < 0) throw DomainError("macaulay_rep: value must be nonnegative");
    MacaulayRep rep;
    rep.level = q;
    Int r = a;
    for (long level = q; level >= 1 && r > 0; --level) {
        Int top;
        if (level == 1) {
            top = r;
        } else {
            // largest top with C(top, level) <= r, found by doubling + bisection
            Int lo(level), hi(level + 1);
            while (binomial(hi, level) <= r) {
                lo = hi;
                hi *= 2;
            }
            while (hi - lo > 1) {
                Int mid = (lo + hi) / 2;
                if (binomial(mid, level) <= r) lo = mid;
                else hi = mid;
            }
            top = lo;
        }
        r -= binomial(top, level);
        rep.terms.push_back({std::move(top), level});
    }
    return rep;
}

/**
 * Macaulay growth bound a^<q>: shift every term of the representation of a
 * at level q from C(a_i, i) to C(a_i + 1, i + 1) and sum.
 */
inline Int macaulay_bound(const Int& a, long q) {
    if (a == 0) return Int(0);
    MacaulayRep rep = macaulay_rep(a, q);
    Int b(0);
    for (const auto& t : rep.terms) b += binomial(t.top + 1, t.level + 1);
    return b;
}

// ============================================================
//  Windowed numerical sequences
// ============================================================

enum class Tail { MaxGrowth, Zero };

/**
 * A candidate Hilbert function of a graded quotient of a polynomial ring in
 * n variables, stored as the finite window h(0..D) plus a tail convention.
 * MaxGrowth continues with h(q+1) = h(q)^<q> beyond the window (equivalently,
 * the lexification acquires no generators beyond D); Zero truncates to 0.
 */
struct OSequence {
    int n = 0;
    std::vector<Int> values;
    Tail tail = Tail::MaxGrowth;

    long window_end() const { return static_cast<long>(values.size()) - 1; }
};

struct OSeqViolation {
    long q = 0;
    Int value;
    Int bound;
    std::string reason;  // "window", "h0", "negative", "linear", "growth"
};

struct OSeqReport {
    bool ok = false;
    std::optional<OSeqViolation> violation;

    explicit operator bool() const { return ok; }

    std::string message() const {
        if (ok) return "valid";
        const auto& v = *violation;
        std::ostringstream os;
        if (v.reason == "window") {
            os << "window is empty";
        } else if (v.reason == "h0") {
            os << "h(0) must equal 1, got " << v.value;
        } else if (v.reason == "negative") {
            os << "h(" << v.q << ") is negative: " << v.value;
        } else if (v.reason == "linear") {
            os << "h(1) = " << v.value << " exceeds the variable count " << v.bound;
        } else {
            os << "h(" << v.q + 1 << ") = " << v.value
               << " exceeds the growth bound " << v.bound << " from h(" << v.q << ")";
        }
        return os.str();
    }
};

/**
 * Macaulay's criterion on the stored window: h(0) = 1, h(1) <= n, all values
 * nonnegative, and h(q+1) <= h(q)^<q> for every consecutive pair.  Either tail
 * convention satisfies the criterion beyond the window by construction, so the
 * finite check decides the infinite condition.  On failure reports the
 * smallest offending degree; the "growth" reason carries the left index q of
 * the violated pair together with the offending value h(q+1).
 */
inline OSeqReport is_o_sequence(const OSequence& H) {
    OSeqReport rep;
    const long D = H.window_end();
    if (D < 0) {
        rep.violation = OSeqViolation{0, Int(0), Int(0), "window"};
        return rep;
    }
    for (long q = 0; q <= D; ++q) {
        const Int& v = H.values[q];
        if (v < 0) {
            rep.violation = OSeqViolation{q, v, Int(0), "negative"};
            return rep;
        }
        if (q == 0 && v != 1) {
            rep.violation = OSeqViolation{0, v, Int(1), "h0"};
            return rep;
        }
        if (q == 1 && v > H.n) {
            rep.violation = OSeqViolation{1, v, Int(H.n), "linear"};
            return rep;
        }
        if (q >= 2) {
            Int bound = macaulay_bound(H.values[q - 1], q - 1);
            if (v > bound) {
                rep.violation = OSeqViolation{q - 1, v, std::move(bound), "growth"};
                return rep;
            }
        }
    }
    rep.ok = true;
    return rep;
}

namespace detail {
/// One step of the maximal-growth extension; q = 0 tops out at the full ring.
inline Int grow_step(int n, const Int& v, long q) {
    if (v <= 0) return Int(0);
    if (q == 0) return Int(n);
    return macaulay_bound(v, q);
}
}  // namespace detail

/// Value at q, reading past the window through the tail convention.
inline Int oseq_value(const OSequence& H, long q) {
    if (q < 0) throw DomainError("oseq_value: degree must be nonnegative");
    const long D = H.window_end();
    if (D < 0) throw DomainError("oseq_value: empty window");
    if (q <= D) return H.values[q];
    if (H.tail == Tail::Zero) return Int(0);
    Int v = H.values[D];
    for (long t = D; t < q; ++t) v = detail::grow_step(H.n, v, t);
    return v;
}

/// Values h(0..horizon) with the tail materialized.
inline std::vector<Int> oseq_materialize(const OSequence& H, long horizon) {
    if (horizon < 0) throw DomainError("oseq_materialize: horizon must be nonnegative");
    const long D = H.window_end();
    if (D < 0) throw DomainError("oseq_materialize: empty window");
    std::vector<Int> out;
    out.reserve(horizon + 1);
    for (long q = 0; q <= std::min(D, horizon); ++q) out.push_back(H.values[q]);
    for (long q = D; q < horizon; ++q) {
        if (H.tail == Tail::Zero) out.push_back(Int(0));
        else out.push_back(detail::grow_step(H.n, out.back(), q));
    }
    return out;
}

/**
 * First difference over one fewer variable: g(0) = 1, g(q) = h(q) - h(q-1).
 * The window is extended by two degrees before differencing; past that point
 * the difference of either tail is itself in exact maximal growth, so the
 * result's declared MaxGrowth tail stays truthful.
 */
inline OSequence differential(const OSequence& H) {
    if (H.n <= 0) throw DomainError("differential: requires at least one ambient variable");
    const long D = H.window_end();
    if (D < 0) throw DomainError("differential: empty window");
    const long E = D + 2;
    std::vector<Int> ext = oseq_materialize(H, E);
    std::vector<Int> g(E + 1);
    g[0] = 1;
    for (long q = 1; q <= E; ++q) g[q] = ext[q] - ext[q - 1];
    return OSequence{H.n - 1, std::move(g), Tail::MaxGrowth};
}

/// p-fold first difference; p = 0 returns the input unchanged.
inline OSequence pth_differential(const OSequence& H, int p) {
    if (p < 0) throw DomainError("pth_differential: order must be nonnegative");
    if (p > H.n) throw DomainError("pth_differential: order exceeds the variable count");
    OSequence cur = H;
    for (int i = 0; i < p; ++i) cur = differential(cur);
    return cur;
}

}  // namespace lexdepth
