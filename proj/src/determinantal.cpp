#include "detgb/determinantal.hpp"

#include <numeric>

namespace detgb {

std::string MinorIndex::to_string() const {
    std::string s = "[";
    for (std::size_t k = 0; k < rows.size(); ++k)
        s += (k ? "," : "") + std::to_string(rows[k]);
    s += "|";
    for (std::size_t k = 0; k < cols.size(); ++k)
        s += (k ? "," : "") + std::to_string(cols[k]);
    return s + "]";
}

std::string CircuitIndex::to_string() const {
    std::string s = "F_{";
    for (int i : I) s += std::to_string(i);
    s += ",";
    for (int j : J) s += std::to_string(j);
    return s + "}";
}

MonomialIdeal diagonal_ideal(int t, const Ring& grid, bool antidiagonal) {
    if (!grid.is_grid()) throw BadIndex("diagonal ideal: not a grid ring");
    if (t < 1) throw BadIndex("diagonal ideal: size must be >= 1");
    int m = grid.grid_m(), n = grid.grid_n();
    std::vector<Monomial> gens;
    if (t > std::min(m, n)) return MonomialIdeal(grid, std::move(gens));
    for (const auto& rs : combinations(m, t))
        for (const auto& cs : combinations(n, t)) {
            std::vector<int> rows(t), cols(t);
            for (int k = 0; k < t; ++k) {
                rows[k] = rs[k] + 1;
                cols[k] = antidiagonal ? cs[t - 1 - k] + 1 : cs[k] + 1;
            }
            gens.push_back(grid_path_monomial(grid, rows, cols));
        }
    return MonomialIdeal(grid, std::move(gens));
}

int dimension_formula(int m, int n, int t) {
    if (m < 1 || n < 1 || t < 1) throw BadIndex("dimension formula: positive arguments only");
    if (t > std::min(m, n)) return m * n;
    return (m + n - t + 1) * (t - 1);
}

std::vector<CircuitIndex> circuit_indices(int m, int n) {
    std::vector<CircuitIndex> out;
    int smax = std::min(m, n);
    for (int s = 2; s <= smax; ++s) {
        for (const auto& rset : combinations(m, s)) {
            for (const auto& cset : combinations(n, s)) {
                // row sequences anchored at the smallest selected row
                std::vector<int> rest(rset.begin() + 1, rset.end());
                std::sort(rest.begin(), rest.end());
                do {
                    std::vector<int> I = {rset[0] + 1};
                    for (int r : rest) I.push_back(r + 1);
                    // column sequences in the direction with j1 < j2
                    std::vector<int> cs(cset);
                    std::sort(cs.begin(), cs.end());
                    do {
                        if (s > 1 && cs[0] > cs[1]) continue;
                        std::vector<int> J;
                        for (int c : cs) J.push_back(c + 1);
                        out.push_back(CircuitIndex{I, J});
                    } while (std::next_permutation(cs.begin(), cs.end()));
                } while (std::next_permutation(rest.begin(), rest.end()));
            }
        }
    }
    return out;
}

std::vector<TermOrder> all_lex_orders(int nvars) {
    std::vector<TermOrder> out;
    for_each_permutation(nvars, [&](const std::vector<int>& p) { out.push_back(TermOrder::lex(p)); });
    return out;
}

std::vector<TermOrder> all_grevlex_orders(int nvars) {
    std::vector<TermOrder> out;
    for_each_permutation(nvars,
                         [&](const std::vector<int>& p) { out.push_back(TermOrder::grevlex(p)); });
    return out;
}

std::vector<TermOrder> random_weight_orders(int nvars, int count, std::uint64_t seed) {
    std::vector<TermOrder> out;
    out.reserve(count);
    Rng rng(seed);
    auto tie = TermOrder::grevlex_rowmajor(nvars);
    for (int k = 0; k < count; ++k) {
        std::vector<mpz_class> w(nvars);
        for (int v = 0; v < nvars; ++v) w[v] = static_cast<long>(1 + rng.below(10000));
        out.push_back(TermOrder::weight(std::move(w), tie));
    }
    return out;
}

}  // namespace detgb
