#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "detgb/determinantal.hpp"
#include "detgb/hilbert.hpp"
#include "detgb/stanley_reisner.hpp"

#include "oracle.hpp"

using namespace detgb;

namespace {

std::uint64_t mask_of(const std::vector<int>& verts) {
    std::uint64_t m = 0;
    for (int v : verts) m |= std::uint64_t{1} << v;
    return m;
}

// Membership straight from the definition: a set is a face iff no generator's
// support sits inside it.  Exhaustive over all 2^n subsets.
std::vector<char> face_table_oracle(const MonomialIdeal& M) {
    const int n = M.nvars();
    std::vector<std::uint64_t> supports;
    for (const auto& g : M.gens()) {
        std::uint64_t s = 0;
        for (int v = 0; v < n; ++v)
            if (g.e[v] > 0) s |= std::uint64_t{1} << v;
        supports.push_back(s);
    }
    std::vector<char> table(std::size_t{1} << n, 1);
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << n); ++sub)
        for (auto s : supports)
            if ((s & sub) == s) {
                table[sub] = 0;
                break;
            }
    return table;
}

// Largest antichain of grid cells inside `sub`, by subset search.
int antichain_oracle(const Ring& grid, std::uint64_t sub) {
    std::vector<std::pair<int, int>> cells;
    for (int v = 0; v < grid.nvars(); ++v)
        if (sub & (std::uint64_t{1} << v)) cells.push_back(grid.grid_pos(v));
    int best = 0;
    const int k = static_cast<int>(cells.size());
    for (unsigned pick = 0; pick < (1u << k); ++pick) {
        bool anti = true;
        for (int a = 0; a < k && anti; ++a)
            for (int b = a + 1; b < k && anti; ++b) {
                if (!(pick & (1u << a)) || !(pick & (1u << b))) continue;
                const bool le = cells[a].first <= cells[b].first && cells[a].second <= cells[b].second;
                const bool ge = cells[a].first >= cells[b].first && cells[a].second >= cells[b].second;
                if (le || ge) anti = false;
            }
        if (anti) best = std::max(best, std::popcount(pick));
    }
    return best;
}

// Reduced 0-th Betti number from the 1-skeleton by union-find; no chain
// complexes involved.
long long h0_oracle(const SimplicialComplex& D) {
    std::vector<int> parent(static_cast<std::size_t>(D.nvertices));
    for (int v = 0; v < D.nvertices; ++v) parent[static_cast<std::size_t>(v)] = v;
    std::function<int(int)> find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    std::vector<int> used;
    for (int v = 0; v < D.nvertices; ++v)
        if (D.has_face(std::uint64_t{1} << v)) used.push_back(v);
    for (int u : used)
        for (int v : used)
            if (u < v && D.has_face((std::uint64_t{1} << u) | (std::uint64_t{1} << v)))
                parent[static_cast<std::size_t>(find(u))] = find(v);
    std::set<int> roots;
    for (int v : used) roots.insert(find(v));
    return static_cast<long long>(roots.size()) - 1;
}

MonomialIdeal random_ideal(Rng& rng, int nvars, int ngens, int max_exp) {
    std::vector<Monomial> gens;
    for (int g = 0; g < ngens; ++g) {
        Monomial u = oracle::random_monomial(rng, nvars, max_exp);
        if (u.deg == 0) u = Monomial::variable(nvars, static_cast<int>(rng.below(static_cast<std::uint64_t>(nvars))), 1);
        gens.push_back(std::move(u));
    }
    return MonomialIdeal(nvars, std::move(gens));
}

MonomialIdeal random_squarefree(Rng& rng, int nvars, int ngens) {
    return radical(random_ideal(rng, nvars, ngens, 1));
}

SimplicialComplex random_complex(Rng& rng, int nvars, int nfacets) {
    std::vector<std::uint64_t> fs;
    for (int k = 0; k < nfacets; ++k)
        fs.push_back(1 + rng.below((std::uint64_t{1} << nvars) - 1));
    return SimplicialComplex::from_facets(nvars, std::move(fs));
}

Monomial power(const Monomial& u, int k) {
    Monomial r(u.nvars());
    for (int i = 0; i < k; ++i) r = r * u;
    return r;
}

std::vector<mpz_class> trimmed(std::vector<mpz_class> v) {
    while (!v.empty() && v.back() == 0) v.pop_back();
    return v;
}

}  // namespace

TEST_CASE("complex construction, faces, links") {
    auto full3 = SimplicialComplex::full_simplex(3);
    CHECK(full3.facets == std::vector<std::uint64_t>{7});
    CHECK(full3.dimension() == 2);
    CHECK(full3.f_vector() == std::vector<long long>{1, 3, 3, 1});
    CHECK(full3.all_faces().size() == 8);

    auto void3 = SimplicialComplex::void_complex(3);
    CHECK(void3.is_void());
    CHECK(void3.dimension() == -2);
    CHECK(void3.f_vector().empty());
    CHECK_FALSE(void3.has_face(0));

    auto empty3 = SimplicialComplex::from_facets(3, {0});
    CHECK(empty3.dimension() == -1);
    CHECK(empty3.f_vector() == std::vector<long long>{1});
    CHECK(empty3.has_face(0));
    CHECK_FALSE(empty3.has_face(1));

    // minimalization keeps only inclusion-maximal candidates
    auto d = SimplicialComplex::from_facets(3, {0b011, 0b001, 0b010, 0b011});
    CHECK(d.facets == std::vector<std::uint64_t>{0b011});

    auto tri = SimplicialComplex::from_facets(3, {0b011, 0b101, 0b110});  // hollow triangle
    CHECK(tri.dimension() == 1);
    CHECK(tri.is_pure());
    CHECK(tri.f_vector() == std::vector<long long>{1, 3, 3});
    CHECK(tri.all_faces().size() == 7);
    CHECK_FALSE(tri.has_face(0b111));

    // links: of the empty face the complex itself, of a vertex its neighbors,
    // of a non-face the void complex
    CHECK(tri.link(0) == tri);
    CHECK(tri.link(0b001) == SimplicialComplex::from_facets(3, {0b010, 0b100}));
    CHECK(tri.link(0b111).is_void());

    auto mixed = SimplicialComplex::from_facets(4, {0b0111, 0b1000});
    CHECK_FALSE(mixed.is_pure());
    CHECK(mixed.dimension() == 2);

    CHECK_THROWS_AS(SimplicialComplex::full_simplex(64), DomainError);
    CHECK_THROWS_AS(SimplicialComplex::from_facets(2, {0b100}), DomainError);
}

TEST_CASE("radical strips exponents, certified by powers") {
    Ring g22 = Ring::grid(2, 2);
    auto sq = radical(MonomialIdeal(g22, {power(Monomial::variable(4, 0, 1), 2)}));
    CHECK(sq == MonomialIdeal(g22, {Monomial::variable(4, 0, 1)}));

    CHECK(radical(MonomialIdeal(3, {})).is_zero());
    CHECK(radical(MonomialIdeal(3, {Monomial(3)})).is_unit());

    Rng rng(41507);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(4));
        auto M = random_ideal(rng, n, 1 + static_cast<int>(rng.below(4)), 3);
        auto R = radical(M);
        CHECK(R.is_squarefree());
        CHECK(radical(R) == R);
        // u lies in the radical exactly when a high power of u lies in M
        for (int probe = 0; probe < 20; ++probe) {
            auto u = oracle::random_monomial(rng, n, 2);
            CHECK(R.contains(u) == M.contains(power(u, 16)));
        }
    }
}

TEST_CASE("complex_of agrees with subset-by-subset membership") {
    Ring g22 = Ring::grid(2, 2);

    CHECK(complex_of(MonomialIdeal(g22, {})) == SimplicialComplex::full_simplex(4));
    CHECK(complex_of(MonomialIdeal(g22, {Monomial(4)})).is_void());

    // one generator x[1,1]*x[2,2]: the two facets drop one endpoint each
    Monomial diag(std::vector<std::int32_t>{1, 0, 0, 1});
    auto d = complex_of(MonomialIdeal(g22, {diag}));
    CHECK(d.facets == std::vector<std::uint64_t>{0b0111, 0b1110});

    CHECK_THROWS_AS(complex_of(MonomialIdeal(g22, {power(diag, 2)})), NotSquarefree);
    CHECK_THROWS_AS(complex_of(MonomialIdeal(64, {})), DomainError);

    Rng rng(90125);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(8));
        auto M = random_squarefree(rng, n, 1 + static_cast<int>(rng.below(5)));
        auto cx = complex_of(M);
        auto table = face_table_oracle(M);
        for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << n); ++sub)
            CHECK(cx.has_face(sub) == static_cast<bool>(table[sub]));
    }
}

TEST_CASE("ideal_of inverts complex_of and vice versa") {
    Ring r3 = Ring::indexed("x", 3);
    CHECK(ideal_of(SimplicialComplex::full_simplex(3), r3).is_zero());
    CHECK(ideal_of(SimplicialComplex::void_complex(3), r3).is_unit());
    // the empty-face-only complex kills every variable
    auto vars_only = ideal_of(SimplicialComplex::from_facets(3, {0}), r3);
    CHECK(vars_only.gens().size() == 3);
    for (const auto& g : vars_only.gens()) CHECK(g.deg == 1);

    CHECK_THROWS_AS(ideal_of(SimplicialComplex::full_simplex(3), Ring::indexed("x", 5)),
                    DomainError);

    Rng rng(60182);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(7));
        auto M = random_squarefree(rng, n, 1 + static_cast<int>(rng.below(5)));
        CHECK(ideal_of(complex_of(M), M.ring()) == M);

        auto D = random_complex(rng, n, 1 + static_cast<int>(rng.below(5)));
        CHECK(complex_of(ideal_of(D, Ring::indexed("x", n))) == D);
    }

    // on the motivating family the correspondence recovers the generators
    for (auto [m, n] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{3, 4}}) {
        Ring grid = Ring::grid(m, n);
        for (int t = 2; t <= std::min(m, n) + 1; ++t) {
            auto J = diagonal_ideal(t, grid, true);
            CHECK(ideal_of(grid_chain_complex(grid, t), grid) == J);
        }
    }
}

TEST_CASE("complex_json lists facets as grid coordinates") {
    Ring g22 = Ring::grid(2, 2);
    Monomial diag(std::vector<std::int32_t>{1, 0, 0, 1});
    auto d = complex_of(MonomialIdeal(g22, {diag}));
    auto js = complex_json(d, g22);
    REQUIRE(js.size() == 2);
    CHECK(js[0] == nlohmann::ordered_json({{1, 1}, {1, 2}, {2, 1}}));
    CHECK(js[1] == nlohmann::ordered_json({{1, 2}, {2, 1}, {2, 2}}));

    auto empty = complex_json(SimplicialComplex::from_facets(4, {0}), g22);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].empty());

    CHECK_THROWS_AS(complex_json(d, Ring::indexed("x", 4)), DomainError);
}

TEST_CASE("grid chain complex: faces have no large antichain") {
    for (auto [m, n] : {std::pair{3, 3}, std::pair{2, 4}}) {
        Ring grid = Ring::grid(m, n);
        for (int t = 1; t <= std::min(m, n) + 1; ++t) {
            auto cx = grid_chain_complex(grid, t);
            for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << (m * n)); ++sub)
                CHECK(cx.has_face(sub) == (antichain_oracle(grid, sub) < t));
        }
    }

    // t = 1 kills every vertex; t past the short side saturates
    Ring g33 = Ring::grid(3, 3);
    CHECK(grid_chain_complex(g33, 1) == SimplicialComplex::from_facets(9, {0}));
    CHECK(grid_chain_complex(g33, 5) == SimplicialComplex::full_simplex(9));

    // purity and dimension (m+n-t+1)(t-1) - 1 across small grids
    for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 3},
                        std::pair{3, 4}, std::pair{4, 4}}) {
        Ring grid = Ring::grid(m, n);
        for (int t = 2; t <= std::min(m, n) + 1; ++t) {
            auto cx = grid_chain_complex(grid, t);
            CHECK(cx.is_pure());
            CHECK(cx.dimension() == (m + n - t + 1) * (t - 1) - 1);
        }
    }
}

TEST_CASE("facet counts match the binomial determinant") {
    // one-chain case in closed form
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n)
            if (std::min(m, n) >= 1) CHECK(gv_degree(m, n, 2) == binomial(m + n - 2, m - 1));

    CHECK(gv_degree(2, 2, 2) == 2);
    CHECK(gv_degree(3, 3, 3) == 3);   // the 3x3 determinant hypersurface
    CHECK(gv_degree(4, 4, 4) == 4);
    CHECK(gv_degree(3, 3, 4) == 1);   // full simplex: a single facet
    CHECK(gv_degree(4, 4, 5) == 1);
    CHECK(gv_degree(4, 4, 3) == 20);

    for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{2, 4}, std::pair{3, 3},
                        std::pair{3, 4}, std::pair{4, 4}}) {
        Ring grid = Ring::grid(m, n);
        for (int t = 2; t <= std::min(m, n) + 1; ++t)
            CHECK(gv_degree(m, n, t) == static_cast<long>(grid_chain_complex(grid, t).facet_count()));
    }
    CHECK(gv_degree(5, 5, 2) == 70);
    CHECK(grid_chain_complex(Ring::grid(5, 5), 2).facet_count() == 70);

    CHECK_THROWS_AS(gv_degree(3, 3, 1), DomainError);
    CHECK_THROWS_AS(gv_degree(3, 3, 5), DomainError);
    CHECK_THROWS_AS(gv_degree(0, 3, 2), DomainError);
}

TEST_CASE("degree of the face ring counts facets when pure") {
    for (auto [m, n] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{3, 4}}) {
        Ring grid = Ring::grid(m, n);
        for (int t = 2; t <= std::min(m, n) + 1; ++t) {
            auto cx = grid_chain_complex(grid, t);
            auto hd = hilbert_data(ideal_of(cx, grid));
            CHECK(hd.degree == static_cast<long>(cx.facet_count()));
            CHECK(hd.dim == cx.dimension() + 1);
        }
    }

    // hypersurface case: the hollow 4-simplex
    auto hollow = complex_of(MonomialIdeal(5, {Monomial(std::vector<std::int32_t>{1, 1, 1, 1, 1})}));
    CHECK(hollow.facet_count() == 5);
    auto hd = hilbert_data(ideal_of(hollow, Ring::indexed("x", 5)));
    CHECK(hd.degree == 5);
    CHECK(hd.dim == 4);
}

TEST_CASE("reduced homology of standard spaces") {
    CHECK(reduced_homology(SimplicialComplex::void_complex(3)).empty());
    CHECK(reduced_homology(SimplicialComplex::from_facets(3, {0})) ==
          std::vector<long long>{1});
    CHECK(reduced_homology(SimplicialComplex::full_simplex(4)) ==
          std::vector<long long>{0, 0, 0, 0, 0});

    auto circle3 = SimplicialComplex::from_facets(3, {0b011, 0b101, 0b110});
    CHECK(reduced_homology(circle3) == std::vector<long long>{0, 0, 1});
    auto circle4 = SimplicialComplex::from_facets(
        4, {mask_of({0, 1}), mask_of({1, 2}), mask_of({2, 3}), mask_of({3, 0})});
    CHECK(reduced_homology(circle4) == std::vector<long long>{0, 0, 1});

    auto two_edges = SimplicialComplex::from_facets(4, {0b0011, 0b1100});
    CHECK(reduced_homology(two_edges) == std::vector<long long>{0, 1, 0});

    // hollow k-simplex is a (k-1)-sphere
    for (int k = 2; k <= 5; ++k) {
        std::vector<std::int32_t> e(static_cast<std::size_t>(k + 1), 1);
        auto sphere = complex_of(MonomialIdeal(k + 1, {Monomial(e)}));
        std::vector<long long> expect(static_cast<std::size_t>(k) + 1, 0);
        expect.back() = 1;
        CHECK(reduced_homology(sphere) == expect);
    }

    // sphere plus an isolated vertex: one extra component
    auto wedge = SimplicialComplex::from_facets(4, {0b0011, 0b0101, 0b0110, 0b1000});
    CHECK(reduced_homology(wedge) == std::vector<long long>{0, 1, 1});
}

TEST_CASE("homology torsion shows up only in the right characteristic") {
    // 6-vertex projective plane: 2-torsion, so ranks depend on the field
    std::vector<std::vector<int>> rp2 = {{0, 1, 4}, {0, 1, 5}, {0, 2, 3}, {0, 2, 5}, {0, 3, 4},
                                         {1, 2, 3}, {1, 3, 5}, {2, 4, 5}, {1, 2, 4}, {3, 4, 5}};
    std::vector<std::uint64_t> fs;
    for (const auto& f : rp2) fs.push_back(mask_of(f));
    auto D = SimplicialComplex::from_facets(6, fs);
    REQUIRE(D.f_vector() == std::vector<long long>{1, 6, 15, 10});

    CHECK(reduced_homology(D, 32003) == std::vector<long long>{0, 0, 0, 0});
    CHECK(reduced_homology(D, 3) == std::vector<long long>{0, 0, 0, 0});
    CHECK(reduced_homology(D, 2) == std::vector<long long>{0, 0, 1, 1});

    CHECK(is_cm_reisner(D, 32003));
    CHECK_FALSE(is_cm_reisner(D, 2));
}

TEST_CASE("connected components from the rank computation match union-find") {
    Rng rng(73500);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(6));
        auto D = random_complex(rng, n, 1 + static_cast<int>(rng.below(5)));
        auto h = reduced_homology(D);
        REQUIRE(static_cast<int>(h.size()) == D.dimension() + 2);
        if (D.dimension() >= 0) {
            CHECK(h[1] == h0_oracle(D));
            CHECK(reduced_homology(D, 2)[1] == h0_oracle(D));
        }
        // alternating sums of face counts and ranks agree
        auto f = D.f_vector();
        long long lhs = 0, rhs = 0;
        for (std::size_t s = 0; s < f.size(); ++s) {
            lhs += (s % 2 == 0 ? 1 : -1) * f[s];
            rhs += (s % 2 == 0 ? 1 : -1) * h[s];
        }
        CHECK(lhs == rhs);
    }
}

TEST_CASE("Reisner criterion on known complexes") {
    CHECK(is_cm_reisner(SimplicialComplex::void_complex(2)));
    CHECK(is_cm_reisner(SimplicialComplex::from_facets(3, {0})));
    CHECK(is_cm_reisner(SimplicialComplex::full_simplex(4)));
    CHECK(is_cm_reisner(SimplicialComplex::from_facets(2, {0b01, 0b10})));  // two points
    CHECK(is_cm_reisner(SimplicialComplex::from_facets(3, {0b011, 0b110})));  // path
    CHECK(is_cm_reisner(SimplicialComplex::from_facets(
        4, {mask_of({0, 1}), mask_of({1, 2}), mask_of({2, 3}), mask_of({3, 0})})));  // circle
    CHECK(is_cm_reisner(complex_of(MonomialIdeal(4, {Monomial(std::vector<std::int32_t>{1, 1, 1, 1})}))));

    // disconnected in positive dimension
    CHECK_FALSE(is_cm_reisner(SimplicialComplex::from_facets(4, {0b0011, 0b1100})));
    // two triangles joined at a vertex: the shared vertex has a bad link
    CHECK_FALSE(is_cm_reisner(SimplicialComplex::from_facets(5, {mask_of({0, 1, 2}), mask_of({2, 3, 4})})));
    // impure: triangle with a dangling edge
    CHECK_FALSE(is_cm_reisner(SimplicialComplex::from_facets(4, {mask_of({0, 1, 2}), mask_of({2, 3})})));

    for (auto [m, n] : {std::pair{2, 3}, std::pair{3, 3}, std::pair{3, 4}}) {
        Ring grid = Ring::grid(m, n);
        for (int t = 2; t <= std::min(m, n) + 1; ++t)
            CHECK(is_cm_reisner(grid_chain_complex(grid, t)));
    }
}

TEST_CASE("polarization: squarefree placeholders preserve the numerator") {
    Ring g22 = Ring::grid(2, 2);

    // squarefree ideals are fixed points, ring included
    auto sqfree = MonomialIdeal(g22, {Monomial(std::vector<std::int32_t>{1, 0, 0, 1})});
    CHECK(polarize(sqfree) == sqfree);
    CHECK(polarize(sqfree).ring() == g22);

    auto pure_square = polarize(MonomialIdeal(g22, {power(Monomial::variable(4, 0, 1), 2)}));
    CHECK(pure_square.ring().nvars() == 5);
    CHECK(pure_square.ring().name(0) == "x[1,1]");
    CHECK(pure_square.ring().name(1) == "x[1,1]#1");
    REQUIRE(pure_square.gens().size() == 1);
    CHECK(pure_square.gens()[0].e == std::vector<std::int32_t>{1, 1, 0, 0, 0});

    CHECK(polarize(MonomialIdeal(3, {})).is_zero());
    CHECK(polarize(MonomialIdeal(3, {Monomial(3)})).is_unit());

    Rng rng(55801);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(4));
        auto M = random_ideal(rng, n, 1 + static_cast<int>(rng.below(4)), 3);
        auto P = polarize(M);
        CHECK(P.is_squarefree());
        CHECK(polarize(P) == P);
        CHECK(trimmed(hilbert_numerator(P)) == trimmed(hilbert_numerator(M)));
        auto hm = hilbert_data(M);
        auto hp = hilbert_data(P);
        CHECK(hp.degree == hm.degree);
        CHECK(P.nvars() - hp.dim == M.nvars() - hm.dim);  // codimension survives
    }
}

TEST_CASE("facet unions: r = 1 is the identity, growth is monotone") {
    Rng rng(31280);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = 2 + static_cast<int>(rng.below(6));
        auto D = random_complex(rng, n, 1 + static_cast<int>(rng.below(5)));
        CHECK(sr_secant(D, 1) == D);
        std::uint64_t everything = 0;
        for (auto f : D.facets) everything |= f;
        auto prev = D;
        for (int r = 2; r <= static_cast<int>(D.facets.size()) + 1; ++r) {
            auto next = sr_secant(D, r);
            for (auto f : prev.facets) CHECK(next.has_face(f));
            prev = next;
        }
        CHECK(prev == SimplicialComplex::from_facets(n, {everything}));
    }

    auto full = SimplicialComplex::full_simplex(5);
    CHECK(sr_secant(full, 3) == full);
    CHECK_THROWS_AS(sr_secant(full, 0), DomainError);
    CHECK(sr_secant(SimplicialComplex::void_complex(3), 2).is_void());
}

TEST_CASE("facet unions of the one-chain complex give the t-chain complex") {
    for (auto [m, n] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}, std::pair{3, 4},
                        std::pair{4, 4}, std::pair{4, 5}}) {
        Ring grid = Ring::grid(m, n);
        auto chains = grid_chain_complex(grid, 2);
        for (int t = 2; t <= std::min(m, n) + 1; ++t)
            CHECK(sr_secant(chains, t - 1) == grid_chain_complex(grid, t));
    }

    // two chains cover a two-row grid completely
    CHECK(sr_secant(grid_chain_complex(Ring::grid(2, 3), 2), 2) ==
          SimplicialComplex::full_simplex(6));
}

TEST_CASE("antichain size, chain cover, and membership agree") {
    Ring g33 = Ring::grid(3, 3);

    auto chain = dilworth_check(g33, 2, {{1, 1}, {2, 2}, {3, 3}});
    CHECK(chain.outcome == "confirmed");
    CHECK(chain.parameters.at("antichain") == "1");
    CHECK(chain.parameters.at("cover") == "1");
    CHECK(chain.parameters.at("member") == "true");
    CHECK(chain.exit_code() == 0);

    Ring g22 = Ring::grid(2, 2);
    auto square = dilworth_check(g22, 2, {{1, 1}, {1, 2}, {2, 1}, {2, 2}});
    CHECK(square.outcome == "confirmed");
    CHECK(square.parameters.at("antichain") == "2");
    CHECK(square.parameters.at("cover") == "2");
    CHECK(square.parameters.at("member") == "false");
    CHECK(dilworth_check(g22, 3, {{1, 1}, {1, 2}, {2, 1}, {2, 2}}).parameters.at("member") ==
          "true");

    auto empty = dilworth_check(g33, 2, {});
    CHECK(empty.outcome == "confirmed");
    CHECK(empty.parameters.at("subset") == "empty");

    // duplicates collapse
    auto dup = dilworth_check(g33, 2, {{1, 1}, {1, 1}});
    CHECK(dup.parameters.at("antichain") == "1");

    // every subset of the 3x3 grid, both thresholds
    for (int t : {2, 3}) {
        for (std::uint64_t sub = 0; sub < 512; ++sub) {
            std::vector<std::pair<int, int>> pts;
            for (int v = 0; v < 9; ++v)
                if (sub & (std::uint64_t{1} << v)) pts.push_back(g33.grid_pos(v));
            auto rep = dilworth_check(g33, t, pts);
            CHECK(rep.outcome == "confirmed");
        }
    }

    CHECK_THROWS_AS(dilworth_check(g33, 2, {{0, 1}}), BadIndex);
    CHECK_THROWS_AS(dilworth_check(g33, 2, {{1, 4}}), BadIndex);
    CHECK_THROWS_AS(dilworth_check(g33, 0, {}), DomainError);
    CHECK_THROWS_AS(dilworth_check(Ring::indexed("x", 9), 2, {}), DomainError);

    auto js = chain.to_json();
    CHECK(js.contains("claim"));
    CHECK(js["outcome"] == "confirmed");
}
