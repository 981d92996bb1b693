#pragma once

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "lexdepth/hilbert.hpp"
#include "lexdepth/monomial.hpp"
#include "lexdepth/oseq.hpp"
#include "lexdepth/resolution.hpp"

namespace lexdepth {

// ============================================================
//  Monomial syntax: x1^2*x2, with "1" for the unit
// ============================================================

inline std::string monomial_to_string(const Monomial& u) {
    if (u.degree() == 0) return "1";
    std::ostringstream os;
    bool first = true;
    for (int i = 0; i < u.vars(); ++i) {
        if (u.e[i] == 0) continue;
        if (!first) os << "*";
        os << "x" << (i + 1);
        if (u.e[i] > 1) os << "^" << u.e[i];
        first = false;
    }
    return os.str();
}

namespace detail {

inline std::string strip_spaces(const std::string& s) {
    std::string out;
    for (char c : s)
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    return out;
}

inline long parse_positive(const std::string& s, size_t& pos, const std::string& what) {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
        throw ParseError("expected " + what + " in monomial '" + s + "'");
    long v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
        v = v * 10 + (s[pos] - '0');
        if (v > 1'000'000) throw ParseError(what + " out of range in monomial '" + s + "'");
        ++pos;
    }
    return v;
}

}  // namespace detail

inline Monomial parse_monomial(const std::string& text, int n) {
    const std::string s = detail::strip_spaces(text);
    if (s.empty()) throw ParseError("empty monomial");
    if (s == "1") return Monomial::unit(n);
    Monomial u = Monomial::unit(n);
    size_t pos = 0;
    while (pos < s.size()) {
        if (s[pos] != 'x') throw ParseError("expected 'x' in monomial '" + s + "'");
        ++pos;
        const long idx = detail::parse_positive(s, pos, "variable index");
        if (idx < 1 || idx > n)
            throw ParseError("variable x" + std::to_string(idx) + " outside ambient ring with " +
                             std::to_string(n) + " variables");
        long exp = 1;
        if (pos < s.size() && s[pos] == '^') {
            ++pos;
            exp = detail::parse_positive(s, pos, "exponent");
            if (exp < 1) throw ParseError("exponent must be positive in '" + s + "'");
        }
        u.e[idx - 1] += static_cast<int>(exp);
        if (pos < s.size()) {
            if (s[pos] != '*') throw ParseError("expected '*' in monomial '" + s + "'");
            ++pos;
            if (pos == s.size()) throw ParseError("trailing '*' in monomial '" + s + "'");
        }
    }
    return u;
}

// ============================================================
//  Ideal files: "n=<N>" header, one generator per line, # comments
// ============================================================

inline MonomialIdeal parse_ideal_text(std::istream& in, const std::string& origin) {
    std::string line;
    int n = -1;
    std::vector<Monomial> gens;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const std::string s = detail::strip_spaces(line);
        if (s.empty()) continue;
        if (n < 0) {
            if (s.rfind("n=", 0) != 0)
                throw ParseError(origin + ":" + std::to_string(lineno) +
                                 ": expected header 'n=<count>' before generators");
            size_t pos = 2;
            n = static_cast<int>(detail::parse_positive(s, pos, "variable count"));
            if (pos != s.size() || n < 1)
                throw ParseError(origin + ":" + std::to_string(lineno) + ": malformed header '" + s + "'");
            continue;
        }
        try {
            Monomial u = parse_monomial(s, n);
            if (u.degree() == 0)
                throw ParseError("the unit monomial cannot generate a proper ideal");
            gens.push_back(std::move(u));
        } catch (const ParseError& e) {
            throw ParseError(origin + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (n < 0) throw ParseError(origin + ": missing 'n=<count>' header");
    return MonomialIdeal{n, minimalize(gens, n)};
}

inline MonomialIdeal read_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open ideal file '" + path + "'");
    return parse_ideal_text(in, path);
}

inline std::string ideal_to_string(const MonomialIdeal& I) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < I.gens.size(); ++i) {
        if (i) os << ", ";
        os << monomial_to_string(I.gens[i]);
    }
    os << ")";
    return os.str();
}

// ============================================================
//  Value lists and tail modes
// ============================================================

inline std::vector<Int> parse_int_list(const std::string& text) {
    std::vector<Int> out;
    std::string cur;
    const std::string stripped = detail::strip_spaces(text);
    if (!stripped.empty() && stripped.back() == ',')
        throw ParseError("empty entry in value list '" + text + "'");
    std::istringstream in(stripped);
    while (std::getline(in, cur, ',')) {
        if (cur.empty()) throw ParseError("empty entry in value list '" + text + "'");
        size_t at = cur[0] == '-' ? 1 : 0;
        if (at == cur.size()) throw ParseError("bad entry '" + cur + "' in value list");
        for (; at < cur.size(); ++at)
            if (!std::isdigit(static_cast<unsigned char>(cur[at])))
                throw ParseError("bad entry '" + cur + "' in value list");
        out.emplace_back(cur);
    }
    if (out.empty()) throw ParseError("empty value list");
    return out;
}

inline Tail parse_tail(const std::string& s) {
    if (s == "max") return Tail::MaxGrowth;
    if (s == "zero") return Tail::Zero;
    throw ParseError("unknown tail mode '" + s + "' (expected 'max' or 'zero')");
}

inline std::string tail_to_string(Tail t) { return t == Tail::MaxGrowth ? "max" : "zero"; }

// ============================================================
//  K-polynomials and Betti tables
// ============================================================

inline std::string kpoly_to_string(const KPolynomial& K) {
    std::ostringstream os;
    bool first = true;
    for (long j = 0; j <= K.degree(); ++j) {
        const Int& c = K.coeffs[j];
        if (c == 0) continue;
        const Int mag = abs(c);
        if (first) {
            if (c < 0) os << "-";
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (j == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str();
            os << "t";
            if (j > 1) os << "^" << j;
        }
    }
    if (first) os << "0";
    return os.str();
}

inline std::string betti_to_string(const GradedBetti& B) {
    std::ostringstream os;
    os << "convention: " << (B.convention == BettiConvention::Quotient ? "quotient" : "ideal")
       << "\n";
    if (B.entries.empty()) {
        os << "(zero table)\n";
        return os.str();
    }
    int imax = 0;
    long smax = 0;
    for (const auto& [key, mult] : B.entries) {
        imax = std::max(imax, key.first);
        smax = std::max(smax, key.second - key.first);
    }
    std::vector<std::vector<std::string>> cells(smax + 2, std::vector<std::string>(imax + 2));
    cells[0][0] = "";
    for (int i = 0; i <= imax; ++i) cells[0][i + 1] = std::to_string(i);
    for (long s = 0; s <= smax; ++s) {
        cells[s + 1][0] = std::to_string(s) + ":";
        for (int i = 0; i <= imax; ++i) {
            const Int v = B.at(i, i + s);
            cells[s + 1][i + 1] = v == 0 ? "." : v.get_str();
        }
    }
    std::vector<size_t> width(imax + 2, 0);
    for (const auto& row : cells)
        for (int c = 0; c < static_cast<int>(row.size()); ++c)
            width[c] = std::max(width[c], row[c].size());
    for (const auto& row : cells) {
        std::string line;
        for (int c = 0; c < static_cast<int>(row.size()); ++c) {
            if (c) line.push_back(' ');
            line += std::string(width[c] - row[c].size(), ' ') + row[c];
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        os << line << "\n";
    }
    return os.str();
}

}  // namespace lexdepth
