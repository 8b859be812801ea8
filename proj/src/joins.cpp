#include "detgb/joins.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "detgb/combinat.hpp"
#include "detgb/linalg.hpp"

namespace detgb {

namespace {

// Visit all size-k subsets of {0,...,n-1} in lexicographic order.
template <class Fn>
void for_each_subset(int n, int k, Fn&& fn) {
    if (k > n || k < 0) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        fn(idx);
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) return;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

Poly<FieldQ> signed_binomial(int nvars, const std::vector<mpz_class>& u) {
    Monomial plus(nvars), minus(nvars);
    for (int v = 0; v < nvars; ++v) {
        const long e = u[static_cast<std::size_t>(v)].get_si();
        if (e > 0) {
            plus.e[v] = static_cast<std::int32_t>(e);
            plus.deg += static_cast<std::int32_t>(e);
        } else if (e < 0) {
            minus.e[v] = static_cast<std::int32_t>(-e);
            minus.deg += static_cast<std::int32_t>(-e);
        }
    }
    if (canonical_cmp(plus, minus) < 0) std::swap(plus, minus);
    FieldQ Q;
    return Poly<FieldQ>::monomial_term(Q, Q.one(), std::move(plus)) -
           Poly<FieldQ>::monomial_term(Q, Q.one(), std::move(minus));
}

// Deterministic order on normalized binomials: by the positive monomial,
// then the negative one.
bool binomial_less(const Poly<FieldQ>& a, const Poly<FieldQ>& b) {
    const auto& at = a.terms();
    const auto& bt = b.terms();
    Monomial ap = at[0].m, an = at.size() > 1 ? at[1].m : Monomial(a.nvars());
    Monomial bp = bt[0].m, bn = bt.size() > 1 ? bt[1].m : Monomial(b.nvars());
    if (at[0].c < 0) std::swap(ap, an);
    if (bt[0].c < 0) std::swap(bp, bn);
    const int c = canonical_cmp(ap, bp);
    if (c != 0) return c < 0;
    return canonical_cmp(an, bn) < 0;
}

}  // namespace

PointConfiguration::PointConfiguration(int d, std::vector<std::vector<long long>> pts, Ring r)
    : dim(d), points(std::move(pts)), ring(std::move(r)) {
    if (dim < 1) throw DomainError("point configuration: dimension must be positive");
    if (ring.nvars() != static_cast<int>(points.size()))
        throw DomainError("point configuration: one variable per point required");
    for (const auto& p : points)
        if (static_cast<int>(p.size()) != dim)
            throw DomainError("point configuration: vector of wrong length");
}

std::vector<std::vector<mpz_class>> PointConfiguration::matrix() const {
    std::vector<std::vector<mpz_class>> m(static_cast<std::size_t>(dim),
                                          std::vector<mpz_class>(points.size()));
    for (std::size_t i = 0; i < points.size(); ++i)
        for (int k = 0; k < dim; ++k)
            m[static_cast<std::size_t>(k)][i] =
                static_cast<long>(points[i][static_cast<std::size_t>(k)]);
    return m;
}

PointConfiguration PointConfiguration::segre(int m, int n) {
    if (m < 1 || n < 1) throw DomainError("segre configuration: sides must be positive");
    std::vector<std::vector<long long>> pts;
    pts.reserve(static_cast<std::size_t>(m) * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            std::vector<long long> v(static_cast<std::size_t>(m + n), 0);
            v[static_cast<std::size_t>(i)] = 1;
            v[static_cast<std::size_t>(m + j)] = 1;
            pts.push_back(std::move(v));
        }
    return PointConfiguration(m + n, std::move(pts), Ring::grid(m, n));
}

PointConfiguration PointConfiguration::from_json(const nlohmann::json& js) {
    if (!js.is_array() || js.empty() || !js[0].is_array())
        throw ParseError("point configuration: expected an array of integer rows");
    const int d = static_cast<int>(js.size());
    const int n = static_cast<int>(js[0].size());
    std::vector<std::vector<long long>> pts(static_cast<std::size_t>(n),
                                            std::vector<long long>(static_cast<std::size_t>(d)));
    for (int k = 0; k < d; ++k) {
        if (static_cast<int>(js[static_cast<std::size_t>(k)].size()) != n)
            throw ParseError("point configuration: ragged matrix");
        for (int i = 0; i < n; ++i) {
            const auto& cell = js[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
            if (!cell.is_number_integer())
                throw ParseError("point configuration: entries must be integers");
            pts[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] =
                cell.get<long long>();
        }
    }
    return PointConfiguration(d, std::move(pts), Ring::indexed("x", n));
}

std::vector<Poly<FieldQ>> circuits(const PointConfiguration& A) {
    const int n = A.count();
    std::vector<std::vector<mpq_class>> full(static_cast<std::size_t>(A.dim),
                                             std::vector<mpq_class>(static_cast<std::size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int k = 0; k < A.dim; ++k)
            full[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
                static_cast<long>(A.points[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)]);
    const int rank = mpq_rank(full);

    std::vector<Poly<FieldQ>> out;
    for (int s = 2; s <= rank + 1 && s <= n; ++s) {
        for_each_subset(n, s, [&](const std::vector<int>& cols) {
            std::vector<std::vector<mpq_class>> sub(
                static_cast<std::size_t>(A.dim),
                std::vector<mpq_class>(static_cast<std::size_t>(s)));
            for (int k = 0; k < A.dim; ++k)
                for (int j = 0; j < s; ++j)
                    sub[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)] =
                        full[static_cast<std::size_t>(k)]
                            [static_cast<std::size_t>(cols[static_cast<std::size_t>(j)])];
            auto null = mpq_nullspace(std::move(sub));
            if (null.size() != 1) return;
            for (const auto& x : null[0])
                if (x == 0) return;  // a dependency on a proper subset exists

            // clear denominators, make the entries coprime
            mpz_class scale = 1;
            for (const auto& x : null[0]) scale = lcm(scale, x.get_den());
            std::vector<mpz_class> u(static_cast<std::size_t>(n), 0);
            mpz_class g = 0;
            for (int j = 0; j < s; ++j) {
                mpq_class e = null[0][static_cast<std::size_t>(j)] * scale;
                u[static_cast<std::size_t>(cols[static_cast<std::size_t>(j)])] = e.get_num();
                g = gcd(g, e.get_num());
            }
            for (auto& e : u) e /= g;
            out.push_back(signed_binomial(n, u));
        });
    }
    std::sort(out.begin(), out.end(), binomial_less);
    return out;
}

bool is_unimodular(const PointConfiguration& A) {
    const int n = A.count();
    auto M = A.matrix();
    std::vector<std::vector<mpq_class>> q(static_cast<std::size_t>(A.dim),
                                          std::vector<mpq_class>(static_cast<std::size_t>(n)));
    for (int k = 0; k < A.dim; ++k)
        for (int i = 0; i < n; ++i)
            q[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)] =
                mpq_class(M[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]);
    const int r = mpq_rank(q);
    if (r == 0) return true;

    // lattice index of one column set: gcd of its maximal minors
    auto index_of = [&](const std::vector<int>& cols) {
        mpz_class g = 0;
        for_each_subset(A.dim, r, [&](const std::vector<int>& rows) {
            std::vector<std::vector<mpz_class>> sub(static_cast<std::size_t>(r),
                                                    std::vector<mpz_class>(static_cast<std::size_t>(r)));
            for (int a = 0; a < r; ++a)
                for (int b = 0; b < r; ++b)
                    sub[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
                        M[static_cast<std::size_t>(rows[static_cast<std::size_t>(a)])]
                         [static_cast<std::size_t>(cols[static_cast<std::size_t>(b)])];
            g = gcd(g, integer_det(std::move(sub)));
        });
        return g;
    };

    mpz_class whole = 0;
    std::vector<std::vector<int>> bases;
    for_each_subset(n, r, [&](const std::vector<int>& cols) {
        mpz_class idx = index_of(cols);
        if (idx == 0) return;  // not a column basis
        whole = gcd(whole, idx);
        bases.push_back(cols);
    });
    for (const auto& cols : bases)
        if (index_of(cols) != whole) return false;
    return true;
}

std::vector<Poly<FieldQ>> graver_bounded(const PointConfiguration& A, int degree_bound) {
    if (degree_bound < 1 || degree_bound > 6)
        throw DomainError("graver_bounded: degree bound must be between 1 and 6");
    const int n = A.count();

    // group exponent vectors of bounded degree by their image point
    std::map<std::vector<long long>, std::vector<std::vector<int>>> fibers;
    for (int deg = 1; deg <= degree_bound; ++deg)
        for_each_composition(deg, n, [&](const std::vector<int>& e) {
            std::vector<long long> key(static_cast<std::size_t>(A.dim), 0);
            for (int i = 0; i < n; ++i)
                for (int k = 0; k < A.dim; ++k)
                    key[static_cast<std::size_t>(k)] +=
                        static_cast<long long>(e[static_cast<std::size_t>(i)]) *
                        A.points[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            fibers[std::move(key)].push_back(e);
        });

    // kernel vectors with disjoint halves, as (positive, negative) pairs
    struct Pair {
        std::vector<int> pos, neg;
    };
    std::vector<Pair> cands;
    for (const auto& [key, list] : fibers) {
        (void)key;
        for (std::size_t a = 0; a < list.size(); ++a)
            for (std::size_t b = a + 1; b < list.size(); ++b) {
                bool disjoint = true;
                for (int v = 0; v < n && disjoint; ++v)
                    disjoint = list[a][static_cast<std::size_t>(v)] == 0 ||
                               list[b][static_cast<std::size_t>(v)] == 0;
                if (disjoint) cands.push_back({list[a], list[b]});
            }
    }

    auto leq = [n](const std::vector<int>& x, const std::vector<int>& y) {
        for (int v = 0; v < n; ++v)
            if (x[static_cast<std::size_t>(v)] > y[static_cast<std::size_t>(v)]) return false;
        return true;
    };

    std::vector<Poly<FieldQ>> out;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        bool primitive = true;
        for (std::size_t j = 0; j < cands.size() && primitive; ++j) {
            if (j == i) continue;
            if ((leq(cands[j].pos, cands[i].pos) && leq(cands[j].neg, cands[i].neg)) ||
                (leq(cands[j].pos, cands[i].neg) && leq(cands[j].neg, cands[i].pos)))
                primitive = false;
        }
        if (!primitive) continue;
        std::vector<mpz_class> u(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v)
            u[static_cast<std::size_t>(v)] = cands[i].pos[static_cast<std::size_t>(v)] -
                                             cands[i].neg[static_cast<std::size_t>(v)];
        out.push_back(signed_binomial(n, u));
    }
    std::sort(out.begin(), out.end(), binomial_less);
    return out;
}

}  // namespace detgb
