#pragma once
// Test-side reference implementations, written straight from the textbook
// definitions and deliberately independent of the library's code paths.

#include <numeric>
#include <vector>

#include "detgb/field.hpp"
#include "detgb/monomial.hpp"
#include "detgb/poly.hpp"

namespace oracle {

using detgb::Monomial;

/// Reference graded reverse lex via the difference-vector formulation:
/// a > b iff deg a > deg b, or degrees tie and the last nonzero coordinate
/// of a - b (in ranking sequence) is negative.  Returns -1 / 0 / +1.
inline int grevlex_ref(const std::vector<int>& ranking, const Monomial& a, const Monomial& b) {
    long da = 0, db = 0;
    for (auto x : a.e) da += x;
    for (auto x : b.e) db += x;
    if (da != db) return da < db ? -1 : 1;
    std::vector<long> diff;
    diff.reserve(ranking.size());
    for (int v : ranking) diff.push_back(static_cast<long>(a.e[v]) - b.e[v]);
    for (auto it = diff.rbegin(); it != diff.rend(); ++it) {
        if (*it != 0) return *it < 0 ? 1 : -1;
    }
    return 0;
}

/// Reference lex: first differing coordinate in ranking sequence decides.
inline int lex_ref(const std::vector<int>& ranking, const Monomial& a, const Monomial& b) {
    for (int v : ranking) {
        if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? -1 : 1;
    }
    return 0;
}

/// Evaluate a rational polynomial at a point, computing each term from
/// scratch (no shared code with Poly::eval's pow loop shape).
inline mpq_class eval_ref(const detgb::Poly<detgb::FieldQ>& f, const std::vector<mpq_class>& pt) {
    mpq_class total = 0;
    for (const auto& t : f.terms()) {
        mpq_class prod = t.c;
        for (std::size_t v = 0; v < pt.size(); ++v) {
            for (int k = 0; k < t.m.e[v]; ++k) prod *= pt[v];
        }
        total += prod;
    }
    return total;
}

/// Random small monomial.
inline Monomial random_monomial(detgb::Rng& rng, int nvars, int max_exp = 3) {
    std::vector<std::int32_t> e(nvars);
    for (auto& x : e) x = static_cast<std::int32_t>(rng.range(0, max_exp));
    return Monomial(std::move(e));
}

}  // namespace oracle
