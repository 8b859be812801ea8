#include "detgb/symmetry.hpp"

#include <algorithm>

#include "detgb/combinat.hpp"

namespace detgb {

std::vector<std::vector<int>> grid_symmetries(int m, int n) {
    std::vector<std::vector<int>> group;
    auto add_maps = [&](bool transpose) {
        for_each_permutation(m, [&](const std::vector<int>& rp) {
            for_each_permutation(n, [&](const std::vector<int>& cp) {
                std::vector<int> g(m * n);
                for (int i = 0; i < m; ++i)
                    for (int j = 0; j < n; ++j) {
                        int v = i * n + j;
                        int image = transpose ? cp[j] * n + rp[i] : rp[i] * n + cp[j];
                        g[v] = image;
                    }
                group.push_back(std::move(g));
            });
        });
    };
    add_maps(false);
    if (m == n && m > 1) add_maps(true);
    return group;
}

std::vector<int> canonical_ranking(const std::vector<int>& ranking,
                                   const std::vector<std::vector<int>>& group) {
    std::vector<int> best;
    std::vector<int> cur(ranking.size());
    for (const auto& g : group) {
        for (std::size_t k = 0; k < ranking.size(); ++k) cur[k] = g[ranking[k]];
        if (best.empty() || cur < best) best = cur;
    }
    return best;
}

Monomial apply_symmetry(const Monomial& mono, const std::vector<int>& g) {
    Monomial r(mono.nvars());
    for (int v = 0; v < mono.nvars(); ++v) r.e[g[v]] = mono.e[v];
    r.deg = mono.deg;
    return r;
}

std::string canonical_ideal_key(const MonomialIdeal& M,
                                const std::vector<std::vector<int>>& group) {
    std::string best;
    for (const auto& g : group) {
        std::vector<Monomial> gens;
        gens.reserve(M.gens().size());
        for (const auto& mono : M.gens()) gens.push_back(apply_symmetry(mono, g));
        std::string key = MonomialIdeal(M.ring(), std::move(gens)).key();
        if (best.empty() || key < best) best = std::move(key);
    }
    return best;
}

}  // namespace detgb
