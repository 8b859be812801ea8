#include "detgb/linalg.hpp"

#include <stdexcept>

#include "detgb/common.hpp"

namespace detgb {

int gfp_rank(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p) {
    if (p < 2) throw DomainError("gfp_rank: modulus must be a prime >= 2");
    const std::size_t m = rows.size();
    if (m == 0) return 0;
    const std::size_t n = rows[0].size();
    for (auto& r : rows) {
        if (r.size() != n) throw DomainError("gfp_rank: ragged matrix");
        for (auto& x : r) x %= p;
    }

    auto mulmod = [p](std::uint32_t a, std::uint32_t b) {
        return static_cast<std::uint32_t>(std::uint64_t(a) * b % p);
    };
    auto invmod = [p, &mulmod](std::uint32_t a) {
        // Fermat: a^(p-2) mod p.
        std::uint32_t r = 1, base = a;
        for (std::uint64_t e = p - 2; e; e >>= 1) {
            if (e & 1) r = mulmod(r, base);
            base = mulmod(base, base);
        }
        return r;
    };

    int rank = 0;
    for (std::size_t col = 0; col < n && static_cast<std::size_t>(rank) < m; ++col) {
        std::size_t pivot = m;
        for (std::size_t r = rank; r < m; ++r)
            if (rows[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == m) continue;
        std::swap(rows[rank], rows[pivot]);
        const std::uint32_t inv = invmod(rows[rank][col]);
        for (std::size_t r = rank + 1; r < m; ++r) {
            if (rows[r][col] == 0) continue;
            const std::uint32_t f = mulmod(rows[r][col], inv);
            for (std::size_t c = col; c < n; ++c) {
                std::uint64_t v = rows[r][c] + std::uint64_t(p) -
                                  mulmod(f, rows[rank][c]);
                rows[r][c] = static_cast<std::uint32_t>(v % p);
            }
        }
        ++rank;
    }
    return rank;
}

mpz_class integer_det(std::vector<std::vector<mpz_class>> a) {
    const std::size_t n = a.size();
    for (const auto& r : a)
        if (r.size() != n) throw DomainError("integer_det: matrix must be square");
    if (n == 0) return 1;

    int sign = 1;
    mpz_class prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        std::size_t pivot = n;
        for (std::size_t r = k; r < n; ++r)
            if (a[r][k] != 0) {
                pivot = r;
                break;
            }
        if (pivot == n) return 0;
        if (pivot != k) {
            std::swap(a[pivot], a[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                // Bareiss: the division by the previous pivot is exact.
                mpz_divexact(a[i][j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

namespace {

// Row echelon form in place; returns the pivot column of each echelon row.
std::vector<std::size_t> mpq_echelon(std::vector<std::vector<mpq_class>>& a) {
    std::vector<std::size_t> pivots;
    if (a.empty()) return pivots;
    const std::size_t cols = a[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < a.size(); ++col) {
        std::size_t pivot = a.size();
        for (std::size_t r = row; r < a.size(); ++r)
            if (a[r][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot == a.size()) continue;
        std::swap(a[pivot], a[row]);
        const mpq_class inv = 1 / a[row][col];
        for (std::size_t j = col; j < cols; ++j) a[row][j] *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][col] == 0) continue;
            const mpq_class f = a[r][col];
            for (std::size_t j = col; j < cols; ++j) a[r][j] -= f * a[row][j];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

int mpq_rank(std::vector<std::vector<mpq_class>> a) {
    return static_cast<int>(mpq_echelon(a).size());
}

std::vector<std::vector<mpq_class>> mpq_nullspace(std::vector<std::vector<mpq_class>> a) {
    std::vector<std::vector<mpq_class>> basis;
    if (a.empty()) return basis;
    const std::size_t cols = a[0].size();
    auto pivots = mpq_echelon(a);
    std::vector<char> is_pivot(cols, 0);
    for (auto c : pivots) is_pivot[c] = 1;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<mpq_class> v(cols, 0);
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -a[r][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace detgb
