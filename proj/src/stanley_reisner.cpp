#include "detgb/stanley_reisner.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "detgb/determinantal.hpp"
#include "detgb/linalg.hpp"

namespace detgb {

namespace {

int popcount(std::uint64_t m) { return std::popcount(m); }

// Keep only inclusion-maximal masks, deduplicated, ascending.
std::vector<std::uint64_t> maximal_sets(std::vector<std::uint64_t> sets) {
    std::sort(sets.begin(), sets.end(),
              [](std::uint64_t a, std::uint64_t b) { return popcount(a) > popcount(b); });
    std::vector<std::uint64_t> keep;
    for (auto s : sets) {
        bool dominated = false;
        for (auto k : keep)
            if ((s & k) == s) {
                dominated = true;
                break;
            }
        if (!dominated) keep.push_back(s);
    }
    std::sort(keep.begin(), keep.end());
    return keep;
}

// Keep only inclusion-minimal masks, deduplicated, ascending.
std::vector<std::uint64_t> minimal_sets(std::vector<std::uint64_t> sets) {
    std::sort(sets.begin(), sets.end(),
              [](std::uint64_t a, std::uint64_t b) { return popcount(a) < popcount(b); });
    std::vector<std::uint64_t> keep;
    for (auto s : sets) {
        bool dominated = false;
        for (auto k : keep)
            if ((s & k) == k) {
                dominated = true;
                break;
            }
        if (!dominated) keep.push_back(s);
    }
    std::sort(keep.begin(), keep.end());
    return keep;
}

}  // namespace

SimplicialComplex SimplicialComplex::void_complex(int nv) { return {nv, {}}; }

SimplicialComplex SimplicialComplex::full_simplex(int nv) {
    if (nv < 0 || nv > 63) throw DomainError("simplicial complex: vertex count out of range");
    return {nv, {nv == 0 ? 0 : ((std::uint64_t{1} << nv) - 1)}};
}

SimplicialComplex SimplicialComplex::from_facets(int nv, std::vector<std::uint64_t> candidates) {
    if (nv < 0 || nv > 63) throw DomainError("simplicial complex: vertex count out of range");
    const std::uint64_t full = nv == 0 ? 0 : ((std::uint64_t{1} << nv) - 1);
    for (auto c : candidates)
        if ((c & ~full) != 0) throw DomainError("simplicial complex: facet exceeds vertex set");
    return {nv, maximal_sets(std::move(candidates))};
}

bool SimplicialComplex::has_face(std::uint64_t face) const {
    for (auto f : facets)
        if ((face & f) == face) return true;
    return false;
}

int SimplicialComplex::dimension() const {
    if (is_void()) return -2;
    int best = 0;
    for (auto f : facets) best = std::max(best, popcount(f));
    return best - 1;
}

bool SimplicialComplex::is_pure() const {
    for (auto f : facets)
        if (popcount(f) != popcount(facets.front())) return false;
    return true;
}

std::vector<std::uint64_t> SimplicialComplex::all_faces() const {
    std::unordered_set<std::uint64_t> seen;
    for (auto f : facets) {
        for (std::uint64_t sub = f;; sub = (sub - 1) & f) {
            seen.insert(sub);
            if (sub == 0) break;
        }
    }
    std::vector<std::uint64_t> faces(seen.begin(), seen.end());
    std::sort(faces.begin(), faces.end());
    return faces;
}

std::vector<long long> SimplicialComplex::f_vector() const {
    if (is_void()) return {};
    std::vector<long long> f(static_cast<std::size_t>(dimension()) + 2, 0);
    for (auto face : all_faces()) f[static_cast<std::size_t>(popcount(face))] += 1;
    return f;
}

SimplicialComplex SimplicialComplex::link(std::uint64_t face) const {
    std::vector<std::uint64_t> fs;
    for (auto f : facets)
        if ((face & f) == face) fs.push_back(f & ~face);
    return from_facets(nvertices, std::move(fs));
}

MonomialIdeal radical(const MonomialIdeal& M) {
    std::vector<Monomial> gens;
    gens.reserve(M.gens().size());
    for (const auto& g : M.gens()) {
        Monomial r(M.nvars());
        for (int v = 0; v < g.nvars(); ++v)
            if (g.e[v] > 0) {
                r.e[v] = 1;
                r.deg += 1;
            }
        gens.push_back(std::move(r));
    }
    return MonomialIdeal(M.ring(), std::move(gens));
}

SimplicialComplex complex_of(const MonomialIdeal& M) {
    if (M.nvars() > 63) throw DomainError("complex_of: too many vertices");
    if (!M.is_squarefree()) throw NotSquarefree("complex_of: ideal has a non-squarefree generator");
    if (M.is_unit()) return SimplicialComplex::void_complex(M.nvars());

    auto cx = SimplicialComplex::full_simplex(M.nvars());
    for (const auto& g : M.gens()) {
        std::uint64_t gm = 0;
        for (int v = 0; v < g.nvars(); ++v)
            if (g.e[v] > 0) gm |= std::uint64_t{1} << v;
        std::vector<std::uint64_t> next;
        for (auto f : cx.facets) {
            if ((gm & f) != gm) {
                next.push_back(f);
                continue;
            }
            for (std::uint64_t rest = gm; rest;) {
                const std::uint64_t bit = rest & (~rest + 1);
                next.push_back(f & ~bit);
                rest ^= bit;
            }
        }
        cx = SimplicialComplex::from_facets(M.nvars(), std::move(next));
    }
    return cx;
}

MonomialIdeal ideal_of(const SimplicialComplex& D, const Ring& ring) {
    if (ring.nvars() != D.nvertices)
        throw DomainError("ideal_of: ring does not match the vertex set");
    if (D.is_void()) return MonomialIdeal(ring, {Monomial(ring.nvars())});
    const std::uint64_t full =
        D.nvertices == 0 ? 0 : ((std::uint64_t{1} << D.nvertices) - 1);

    // Minimal non-faces = minimal hitting sets of the facet complements
    // (incremental Berge construction).
    std::vector<std::uint64_t> hitters = {0};
    for (auto f : D.facets) {
        const std::uint64_t comp = full & ~f;
        if (comp == 0) return MonomialIdeal(ring, {});  // full simplex: zero ideal
        std::vector<std::uint64_t> next;
        for (auto h : hitters) {
            if (h & comp) {
                next.push_back(h);
                continue;
            }
            for (std::uint64_t rest = comp; rest;) {
                const std::uint64_t bit = rest & (~rest + 1);
                next.push_back(h | bit);
                rest ^= bit;
            }
        }
        hitters = minimal_sets(std::move(next));
    }

    std::vector<Monomial> gens;
    gens.reserve(hitters.size());
    for (auto h : hitters) {
        Monomial g(ring.nvars());
        for (int v = 0; v < ring.nvars(); ++v)
            if (h & (std::uint64_t{1} << v)) {
                g.e[v] = 1;
                g.deg += 1;
            }
        gens.push_back(std::move(g));
    }
    return MonomialIdeal(ring, std::move(gens));
}

nlohmann::ordered_json complex_json(const SimplicialComplex& D, const Ring& grid) {
    if (!grid.is_grid()) throw DomainError("complex_json: not a grid ring");
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (auto f : D.facets) {
        nlohmann::ordered_json facet = nlohmann::ordered_json::array();
        for (int v = 0; v < D.nvertices; ++v)
            if (f & (std::uint64_t{1} << v)) {
                auto [i, j] = grid.grid_pos(v);
                facet.push_back({i, j});
            }
        out.push_back(std::move(facet));
    }
    return out;
}

mpz_class gv_degree(int m, int n, int t) {
    if (m < 1 || n < 1) throw DomainError("gv_degree: grid sides must be positive");
    if (t < 2 || t > std::min(m, n) + 1)
        throw DomainError("gv_degree: need 2 <= t <= min(m,n)+1");
    const int k = t - 1;
    std::vector<std::vector<mpz_class>> a(k, std::vector<mpz_class>(k));
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) a[i - 1][j - 1] = binomial(m - i + n - j, m - i);
    return integer_det(std::move(a));
}

std::vector<long long> reduced_homology(const SimplicialComplex& D, std::uint32_t p) {
    if (D.is_void()) return {};
    const int dim = D.dimension();
    std::vector<std::vector<std::uint64_t>> level(static_cast<std::size_t>(dim) + 2);
    for (auto face : D.all_faces()) level[static_cast<std::size_t>(popcount(face))].push_back(face);

    // ranks[s] = rank of the boundary map from size-s faces to size-(s-1)
    // faces; the empty face is the single size-0 face.
    std::vector<int> ranks(static_cast<std::size_t>(dim) + 3, 0);
    for (int s = 1; s <= dim + 1; ++s) {
        const auto& src = level[static_cast<std::size_t>(s)];
        const auto& dst = level[static_cast<std::size_t>(s - 1)];
        if (src.empty() || dst.empty()) continue;
        std::unordered_map<std::uint64_t, std::size_t> col;
        col.reserve(dst.size());
        for (std::size_t c = 0; c < dst.size(); ++c) col[dst[c]] = c;
        std::vector<std::vector<std::uint32_t>> mat(
            src.size(), std::vector<std::uint32_t>(dst.size(), 0));
        for (std::size_t r = 0; r < src.size(); ++r) {
            int sign = 0;
            for (std::uint64_t rest = src[r]; rest; ++sign) {
                const std::uint64_t bit = rest & (~rest + 1);
                mat[r][col.at(src[r] & ~bit)] = (sign % 2 == 0) ? 1 : p - 1;
                rest ^= bit;
            }
        }
        ranks[static_cast<std::size_t>(s)] = gfp_rank(std::move(mat), p);
    }

    std::vector<long long> h(static_cast<std::size_t>(dim) + 2, 0);
    for (int s = 0; s <= dim + 1; ++s)
        h[static_cast<std::size_t>(s)] =
            static_cast<long long>(level[static_cast<std::size_t>(s)].size()) -
            ranks[static_cast<std::size_t>(s)] - ranks[static_cast<std::size_t>(s) + 1];
    return h;
}

bool is_cm_reisner(const SimplicialComplex& D, std::uint32_t p) {
    if (D.is_void()) return true;
    auto faces = D.all_faces();
    std::stable_sort(faces.begin(), faces.end(), [](std::uint64_t a, std::uint64_t b) {
        return popcount(a) < popcount(b);
    });  // small faces first: failures usually sit at the empty face or a vertex
    for (auto face : faces) {
        const auto link = D.link(face);
        const int d = link.dimension();
        if (d <= 0) continue;  // nothing below dimension 0 but the reduced
                               // (-1) rank, which vanishes once a vertex exists
        // A vertex on every facet makes the link a cone, hence acyclic.
        std::uint64_t common = link.facets.front();
        for (auto f : link.facets) common &= f;
        if (common != 0) continue;
        const auto h = reduced_homology(link, p);
        for (int k = 0; k <= d; ++k)
            if (h[static_cast<std::size_t>(k)] != 0) return false;
    }
    return true;
}

MonomialIdeal polarize(const MonomialIdeal& M) {
    const int n = M.nvars();
    std::vector<int> copies(static_cast<std::size_t>(n), 1);
    for (const auto& g : M.gens())
        for (int v = 0; v < n; ++v)
            copies[static_cast<std::size_t>(v)] =
                std::max(copies[static_cast<std::size_t>(v)], static_cast<int>(g.e[v]));

    std::vector<int> base(static_cast<std::size_t>(n), 0);
    int total = 0;
    std::vector<std::string> names;
    for (int v = 0; v < n; ++v) {
        base[static_cast<std::size_t>(v)] = total;
        total += copies[static_cast<std::size_t>(v)];
        for (int k = 0; k < copies[static_cast<std::size_t>(v)]; ++k)
            names.push_back(k == 0 ? M.ring().name(v)
                                   : M.ring().name(v) + "#" + std::to_string(k));
    }

    Ring ring(total, std::move(names));
    std::vector<Monomial> gens;
    gens.reserve(M.gens().size());
    for (const auto& g : M.gens()) {
        Monomial h(total);
        for (int v = 0; v < n; ++v)
            for (std::int32_t k = 0; k < g.e[v]; ++k) {
                h.e[base[static_cast<std::size_t>(v)] + k] = 1;
                h.deg += 1;
            }
        gens.push_back(std::move(h));
    }
    return MonomialIdeal(std::move(ring), std::move(gens));
}

SimplicialComplex sr_secant(const SimplicialComplex& D, int r) {
    if (r < 1) throw DomainError("sr_secant: r must be >= 1");
    if (D.is_void() || r == 1) return D;
    const int take = std::min<int>(r, static_cast<int>(D.facets.size()));
    std::vector<std::uint64_t> unions;
    std::vector<int> idx;
    std::function<void(int, int, std::uint64_t)> rec = [&](int start, int left, std::uint64_t acc) {
        unions.push_back(acc);
        if (left == 0) return;
        for (int i = start; i < static_cast<int>(D.facets.size()); ++i)
            rec(i + 1, left - 1, acc | D.facets[static_cast<std::size_t>(i)]);
    };
    for (int i = 0; i < static_cast<int>(D.facets.size()); ++i)
        rec(i + 1, take - 1, D.facets[static_cast<std::size_t>(i)]);
    return SimplicialComplex::from_facets(D.nvertices, std::move(unions));
}

SimplicialComplex grid_chain_complex(const Ring& grid, int t) {
    return complex_of(diagonal_ideal(t, grid, /*antidiagonal=*/true));
}

Report dilworth_check(const Ring& grid, int t, const std::vector<std::pair<int, int>>& S) {
    if (!grid.is_grid()) throw DomainError("dilworth_check: not a grid ring");
    if (t < 1) throw DomainError("dilworth_check: t must be >= 1");
    std::vector<std::pair<int, int>> pts(S);
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (auto [i, j] : pts)
        if (i < 1 || i > grid.grid_m() || j < 1 || j > grid.grid_n())
            throw BadIndex("dilworth_check: position outside the grid");
    if (pts.size() > 20) throw DomainError("dilworth_check: subset too large for exhaustive search");
    const int N = static_cast<int>(pts.size());

    auto leq = [&](int a, int b) {
        return pts[static_cast<std::size_t>(a)].first <= pts[static_cast<std::size_t>(b)].first &&
               pts[static_cast<std::size_t>(a)].second <= pts[static_cast<std::size_t>(b)].second;
    };
    auto comparable = [&](int a, int b) { return leq(a, b) || leq(b, a); };

    // Largest antichain by backtracking over antichains only.
    int antichain = 0;
    std::vector<int> chosen;
    std::function<void(int)> extend = [&](int start) {
        antichain = std::max(antichain, static_cast<int>(chosen.size()));
        for (int v = start; v < N; ++v) {
            bool ok = true;
            for (int u : chosen) ok = ok && !comparable(u, v);
            if (!ok) continue;
            chosen.push_back(v);
            extend(v + 1);
            chosen.pop_back();
        }
    };
    extend(0);

    // Smallest chain cover = N - maximum matching on the strict order.
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(N));
    for (int u = 0; u < N; ++u)
        for (int v = 0; v < N; ++v)
            if (u != v && leq(u, v) && pts[static_cast<std::size_t>(u)] != pts[static_cast<std::size_t>(v)])
                adj[static_cast<std::size_t>(u)].push_back(v);
    std::vector<int> match(static_cast<std::size_t>(N), -1);
    std::vector<char> used;
    std::function<bool(int)> augment = [&](int u) {
        for (int v : adj[static_cast<std::size_t>(u)]) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = 1;
            if (match[static_cast<std::size_t>(v)] < 0 || augment(match[static_cast<std::size_t>(v)])) {
                match[static_cast<std::size_t>(v)] = u;
                return true;
            }
        }
        return false;
    };
    int matching = 0;
    for (int u = 0; u < N; ++u) {
        used.assign(static_cast<std::size_t>(N), 0);
        if (augment(u)) ++matching;
    }
    const int cover = N - matching;

    std::uint64_t mask = 0;
    for (auto [i, j] : pts) mask |= std::uint64_t{1} << grid.grid_index(i, j);
    const bool member = grid_chain_complex(grid, t).has_face(mask);
    const bool no_big_antichain = antichain < t;
    const bool few_chains = cover <= t - 1;

    Report rep;
    rep.claim = "largest antichain equals smallest chain cover and decides chain-union membership";
    rep.parameters["grid"] = std::to_string(grid.grid_m()) + "x" + std::to_string(grid.grid_n());
    rep.parameters["t"] = std::to_string(t);
    std::string subset;
    for (auto [i, j] : pts) subset += "(" + std::to_string(i) + "," + std::to_string(j) + ")";
    rep.parameters["subset"] = subset.empty() ? "empty" : subset;
    rep.parameters["antichain"] = std::to_string(antichain);
    rep.parameters["cover"] = std::to_string(cover);
    rep.parameters["member"] = member ? "true" : "false";
    rep.field = "none";
    rep.mode = "exhaustive";
    const bool ok = (antichain == cover) && (member == no_big_antichain) && (member == few_chains);
    rep.outcome = ok ? "confirmed" : "refuted";
    return rep;
}

}  // namespace detgb
