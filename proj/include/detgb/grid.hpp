#pragma once
// The componentwise partial order on grid positions, and the predicates that
// classify a term order by which minor term it selects: "diagonal" orders pick
// the main-diagonal product of every minor, "antidiagonal" orders pick the
// reversed one.

#include <vector>

#include "detgb/combinat.hpp"
#include "detgb/monomial.hpp"
#include "detgb/ring.hpp"
#include "detgb/term_order.hpp"

namespace detgb {

/// (i,j) <= (h,k) iff i <= h and j <= k (1-based grid positions).
inline bool grid_leq(std::pair<int, int> a, std::pair<int, int> b) {
    return a.first <= b.first && a.second <= b.second;
}

inline bool grid_comparable(std::pair<int, int> a, std::pair<int, int> b) {
    return grid_leq(a, b) || grid_leq(b, a);
}

/// Monomial x[r1,c(1)] * ... * x[rt,c(t)] for 1-based row/col lists.
inline Monomial grid_path_monomial(const Ring& grid, const std::vector<int>& rows,
                                   const std::vector<int>& cols_in_row_order) {
    Monomial m(grid.nvars());
    for (std::size_t k = 0; k < rows.size(); ++k) {
        int v = grid.grid_index(rows[k], cols_in_row_order[k]);
        m.e[v] += 1;
        m.deg += 1;
    }
    return m;
}

namespace grid_detail {

/// Check that for every square submatrix the expected term dominates the
/// other permutation products.  `anti` selects the reversed pairing.
inline bool selects_extreme_terms(const TermOrder& ord, int m, int n, bool anti) {
    Ring grid = Ring::grid(m, n);
    int tmax = std::min(m, n);
    for (int t = 1; t <= tmax; ++t) {
        auto rsets = combinations(m, t);
        auto csets = combinations(n, t);
        for (const auto& rs : rsets) {
            std::vector<int> rows(t);
            for (int k = 0; k < t; ++k) rows[k] = rs[k] + 1;
            for (const auto& cs : csets) {
                std::vector<int> diag_cols(t);
                for (int k = 0; k < t; ++k)
                    diag_cols[k] = anti ? cs[t - 1 - k] + 1 : cs[k] + 1;
                Monomial expected = grid_path_monomial(grid, rows, diag_cols);
                bool ok = true;
                std::vector<int> perm(t);
                for (int k = 0; k < t; ++k) perm[k] = k;
                do {
                    std::vector<int> cols(t);
                    for (int k = 0; k < t; ++k) cols[k] = cs[perm[k]] + 1;
                    Monomial other = grid_path_monomial(grid, rows, cols);
                    if (other == expected) continue;
                    if (!ord.greater(expected, other)) {
                        ok = false;
                        break;
                    }
                } while (std::next_permutation(perm.begin(), perm.end()));
                if (!ok) return false;
            }
        }
    }
    return true;
}

}  // namespace grid_detail

/// True iff under `ord` the leading term of every minor (all sizes up to
/// min(m,n)) is its main-diagonal product.
inline bool is_diagonal_order(const TermOrder& ord, int m, int n) {
    if (ord.nvars() != m * n) throw DomainError("order does not match grid ring");
    return grid_detail::selects_extreme_terms(ord, m, n, /*anti=*/false);
}

/// True iff the leading term of every minor is its antidiagonal product.
inline bool is_antidiagonal_order(const TermOrder& ord, int m, int n) {
    if (ord.nvars() != m * n) throw DomainError("order does not match grid ring");
    return grid_detail::selects_extreme_terms(ord, m, n, /*anti=*/true);
}

}  // namespace detgb
