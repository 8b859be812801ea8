#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "detgb/combinat.hpp"
#include "detgb/field.hpp"
#include "detgb/poly.hpp"
#include "detgb/rsk.hpp"

#include "oracle.hpp"

using namespace detgb;

namespace {

// Longest subsequence of positions strictly increasing in both coordinates,
// by explicit subset search.  Quadratic-free and insertion-free on purpose.
int width_oracle(const std::vector<std::pair<int, int>>& pos) {
    const int d = static_cast<int>(pos.size());
    int best = 0;
    for (unsigned mask = 0; mask < (1u << d); ++mask) {
        std::vector<std::pair<int, int>> sel;
        for (int k = 0; k < d; ++k)
            if (mask & (1u << k)) sel.push_back(pos[k]);
        std::sort(sel.begin(), sel.end());
        bool chain = true;
        for (std::size_t k = 0; k + 1 < sel.size(); ++k)
            if (sel[k].first >= sel[k + 1].first || sel[k].second >= sel[k + 1].second)
                chain = false;
        if (chain) best = std::max<int>(best, static_cast<int>(sel.size()));
    }
    return best;
}

// The dominance predicate re-derived from its definition, kept separate from
// the library routine.
bool leq_oracle(const MinorIndex& a, const MinorIndex& b) {
    if (a.size() < b.size()) return false;
    bool ok = true;
    for (int i = 0; i < b.size(); ++i) {
        ok = ok && a.rows[i] <= b.rows[i];
        ok = ok && a.cols[i] <= b.cols[i];
    }
    return ok;
}

Monomial grid_monomial(const Ring& grid, const std::vector<std::pair<int, int>>& pos) {
    Monomial u(grid.nvars());
    for (auto [i, j] : pos) {
        u.e[grid.grid_index(i, j)] += 1;
        u.deg += 1;
    }
    return u;
}

std::vector<Monomial> all_monomials(const Ring& ring, int degree) {
    std::vector<Monomial> out;
    for_each_composition(degree, ring.nvars(), [&](const std::vector<int>& exps) {
        out.emplace_back(std::vector<std::int32_t>(exps.begin(), exps.end()));
    });
    return out;
}

std::vector<MinorIndex> all_minors(int m, int n) {
    std::vector<MinorIndex> out;
    for (int s = 1; s <= std::min(m, n); ++s)
        for (const auto& r0 : combinations(m, s))
            for (const auto& c0 : combinations(n, s)) {
                std::vector<int> r(r0), c(c0);
                for (auto& v : r) ++v;
                for (auto& v : c) ++v;
                out.emplace_back(r, c);
            }
    return out;
}

}  // namespace

TEST_CASE("dominance order on minor indices") {
    MinorIndex big({1, 3, 4, 5}, {1, 2, 3, 6});
    MinorIndex mid({2, 3, 5}, {1, 4, 5});
    MinorIndex small({4}, {2});

    CHECK(minor_leq(big, mid));
    CHECK(minor_leq(mid, small));
    CHECK(minor_leq(big, small));
    CHECK_FALSE(minor_leq(mid, big));

    CHECK(minor_leq(big, big));
    CHECK(minor_leq(small, small));

    MinorIndex a({1}, {1}), b({1}, {2}), c({2}, {1});
    CHECK(minor_leq(a, b));
    CHECK_FALSE(minor_leq(b, a));
    CHECK_FALSE(minor_leq(b, c));
    CHECK_FALSE(minor_leq(c, b));

    // A shorter factor never dominates a longer one.
    CHECK_FALSE(minor_leq(small, mid));
    CHECK_FALSE(minor_leq(MinorIndex({1}, {1}), MinorIndex({1, 2}, {1, 2})));
    CHECK(minor_leq(MinorIndex({1, 2}, {1, 2}), MinorIndex({1}, {1})));
}

TEST_CASE("dominance order matches its definition and is a partial order") {
    const auto minors = all_minors(3, 3);
    REQUIRE(minors.size() == 19);

    for (const auto& a : minors)
        for (const auto& b : minors) CHECK(minor_leq(a, b) == leq_oracle(a, b));

    // Antisymmetry and transitivity, exhaustively on the 3x3 stock.
    for (const auto& a : minors)
        for (const auto& b : minors) {
            if (minor_leq(a, b) && minor_leq(b, a)) CHECK(a == b);
            for (const auto& c : minors)
                if (minor_leq(a, b) && minor_leq(b, c)) CHECK(minor_leq(a, c));
        }
}

TEST_CASE("bitableau text form round-trips") {
    const std::string text = "[1,3,4,5|1,2,3,6][2,3,5|1,4,5][4|2]";
    auto bt = Bitableau::parse(text);
    REQUIRE(bt.factors.size() == 3);
    CHECK(bt.degree() == 8);
    CHECK(bt.is_standard());
    CHECK(bt.to_string() == text);

    CHECK(Bitableau::parse("[]").empty());
    CHECK(Bitableau{}.to_string() == "[]");
    CHECK(Bitableau::parse(" [1|2] [2|3] ").to_string() == "[1|2][2|3]");

    CHECK_THROWS_AS(Bitableau::parse(""), ParseError);
    CHECK_THROWS_AS(Bitableau::parse("x"), ParseError);
    CHECK_THROWS_AS(Bitableau::parse("[1|"), ParseError);
    CHECK_THROWS_AS(Bitableau::parse("[1;2|3]"), ParseError);
    CHECK_THROWS_AS(Bitableau::parse("[] [1|1]"), ParseError);
    CHECK_THROWS_AS(Bitableau::parse("[1,2|1]"), BadIndex);
    CHECK_THROWS_AS(Bitableau::parse("[2,1|1,2]"), BadIndex);
    CHECK_THROWS_AS(Bitableau::parse("[0|1]"), BadIndex);
}

TEST_CASE("two-line array is the sorted position multiset") {
    auto R = Ring::grid(3, 3);
    auto u = grid_monomial(R, {{3, 1}, {1, 2}, {1, 2}, {2, 3}, {1, 1}});
    auto arr = TwoLineArray::of(R, u);
    std::vector<std::pair<int, int>> expect = {{1, 1}, {1, 2}, {1, 2}, {2, 3}, {3, 1}};
    CHECK(arr.entries == expect);
    CHECK(arr.monomial(R) == u);

    CHECK(TwoLineArray::of(R, Monomial(R.nvars())).entries.empty());
}

TEST_CASE("insertion on one-cell and empty monomials") {
    for (auto [m, n] : {std::pair{2, 2}, {3, 3}, {3, 4}}) {
        auto R = Ring::grid(m, n);
        CHECK(rsk_forward(R, Monomial(R.nvars())).empty());
        CHECK(rsk_backward(R, Bitableau{}) == Monomial(R.nvars()));
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= n; ++j) {
                auto bt = rsk_forward(R, Monomial::variable(R.nvars(), R.grid_index(i, j)));
                REQUIRE(bt.factors.size() == 1);
                CHECK(bt.factors[0] == MinorIndex({i}, {j}));
            }
    }
}

TEST_CASE("insertion sends a minor's diagonal monomial to that single minor") {
    auto R = Ring::grid(3, 4);
    for (const auto& idx : all_minors(3, 4)) {
        std::vector<std::pair<int, int>> diag;
        for (int k = 0; k < idx.size(); ++k) diag.emplace_back(idx.rows[k], idx.cols[k]);
        auto bt = rsk_forward(R, grid_monomial(R, diag));
        REQUIRE(bt.factors.size() == 1);
        CHECK(bt.factors[0] == idx);
    }
}

TEST_CASE("hand-worked images of every quadratic monomial on the 2x2 grid") {
    auto R = Ring::grid(2, 2);
    auto image = [&](std::vector<std::pair<int, int>> pos) {
        return rsk_forward(R, grid_monomial(R, pos)).to_string();
    };
    CHECK(image({{1, 1}, {1, 1}}) == "[1|1][1|1]");
    CHECK(image({{1, 1}, {1, 2}}) == "[1|1][1|2]");
    CHECK(image({{1, 1}, {2, 1}}) == "[1|1][2|1]");
    CHECK(image({{1, 1}, {2, 2}}) == "[1,2|1,2]");
    CHECK(image({{1, 2}, {1, 2}}) == "[1|2][1|2]");
    CHECK(image({{1, 2}, {2, 1}}) == "[1|1][2|2]");
    CHECK(image({{1, 2}, {2, 2}}) == "[1|2][2|2]");
    CHECK(image({{2, 1}, {2, 1}}) == "[2|1][2|1]");
    CHECK(image({{2, 1}, {2, 2}}) == "[2|1][2|2]");
    CHECK(image({{2, 2}, {2, 2}}) == "[2|2][2|2]");
}

TEST_CASE("hand-worked images in degree three") {
    auto R2 = Ring::grid(2, 2);
    auto R3 = Ring::grid(3, 3);
    auto image = [](const Ring& R, std::vector<std::pair<int, int>> pos) {
        return rsk_forward(R, grid_monomial(R, pos)).to_string();
    };
    CHECK(image(R2, {{1, 1}, {1, 1}, {2, 2}}) == "[1,2|1,2][1|1]");
    CHECK(image(R2, {{1, 1}, {1, 2}, {2, 2}}) == "[1,2|1,2][1|2]");
    CHECK(image(R2, {{1, 1}, {1, 2}, {2, 1}}) == "[1|1][1|1][2|2]");
    CHECK(image(R3, {{1, 1}, {2, 2}, {3, 3}}) == "[1,2,3|1,2,3]");
    CHECK(image(R3, {{1, 3}, {2, 2}, {3, 1}}) == "[1|1][2|2][3|3]");
    CHECK(image(R3, {{1, 2}, {2, 3}, {3, 1}}) == "[1,2|1,3][3|2]");
}

TEST_CASE("exhaustive round-trip, standardness and bijectivity in low degree") {
    for (auto [m, n] : {std::pair{3, 3}, {2, 4}}) {
        auto R = Ring::grid(m, n);
        for (int d = 0; d <= 4; ++d) {
            const auto monos = all_monomials(R, d);
            std::set<std::string> images;
            for (const auto& u : monos) {
                auto bt = rsk_forward(R, u);
                CHECK(bt.is_standard());
                CHECK(bt.degree() == d);
                CHECK(rsk_backward(R, bt) == u);
                images.insert(bt.to_string());
            }
            // Injective, and surjective by matching the standard count.
            CHECK(images.size() == monos.size());
            CHECK(enumerate_standard(R, d).size() == monos.size());
        }
    }
}

TEST_CASE("round-trip starting from the standard side") {
    auto R = Ring::grid(2, 4);
    for (int d = 0; d <= 3; ++d)
        for (const auto& bt : enumerate_standard(R, d)) {
            auto back = rsk_forward(R, rsk_backward(R, bt));
            CHECK(back == bt);
            CHECK(Bitableau::parse(bt.to_string()) == bt);
        }
}

TEST_CASE("width tracks the longest doubly increasing subsequence") {
    auto R2 = Ring::grid(2, 2);
    CHECK(schensted_width(R2, grid_monomial(R2, {{1, 1}, {2, 2}})) == 2);
    CHECK(schensted_width(R2, grid_monomial(R2, {{1, 2}, {2, 1}})) == 1);
    CHECK(schensted_width(R2, Monomial(R2.nvars())) == 0);

    auto R3 = Ring::grid(3, 3);
    CHECK(schensted_width(R3, grid_monomial(R3, {{1, 1}, {2, 2}})) == 2);
    CHECK(schensted_width(R3, grid_monomial(R3, {{1, 2}, {2, 1}})) == 1);
    CHECK(schensted_width(R3, grid_monomial(R3, {{1, 1}, {2, 2}, {3, 3}})) == 3);
    CHECK(schensted_width(R3, grid_monomial(R3, {{1, 3}, {2, 2}, {3, 1}})) == 1);

    for (int d = 0; d <= 4; ++d)
        for (const auto& u : all_monomials(R3, d))
            CHECK(schensted_width(R3, u) == width_oracle(TwoLineArray::of(R3, u).entries));

    // A few deeper spot checks on a wider grid.
    auto R34 = Ring::grid(3, 4);
    Rng rng(20260817);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<std::pair<int, int>> pos;
        for (int k = 0; k < 6; ++k)
            pos.emplace_back(1 + static_cast<int>(rng.below(3)), 1 + static_cast<int>(rng.below(4)));
        auto u = grid_monomial(R34, pos);
        CHECK(schensted_width(R34, u) == width_oracle(TwoLineArray::of(R34, u).entries));
    }
}

TEST_CASE("standard enumeration counts match monomial counts") {
    auto R = Ring::grid(3, 3);
    auto d0 = enumerate_standard(R, 0);
    REQUIRE(d0.size() == 1);
    CHECK(d0[0].empty());

    auto d1 = enumerate_standard(R, 1);
    std::set<std::string> singles;
    for (const auto& bt : d1) singles.insert(bt.to_string());
    CHECK(singles.size() == 9);
    CHECK(singles.count("[1|1]") == 1);
    CHECK(singles.count("[3|3]") == 1);

    for (int d = 0; d <= 4; ++d) {
        auto list = enumerate_standard(R, d);
        std::set<std::string> keys;
        for (const auto& bt : list) {
            CHECK(bt.is_standard());
            CHECK(bt.degree() == d);
            for (const auto& f : bt.factors) f.check(R);
            keys.insert(bt.to_string());
        }
        CHECK(keys.size() == list.size());
        CHECK(mpz_class(list.size()) == binomial(9 + d - 1, d));
    }

    auto R24 = Ring::grid(2, 4);
    std::vector<std::size_t> expect = {1, 8, 36, 120, 330};
    for (int d = 0; d <= 4; ++d) CHECK(enumerate_standard(R24, d).size() == expect[d]);

    auto two = enumerate_standard(Ring::grid(2, 2), 2);
    CHECK(two.size() == 10);
    bool has_minor = false;
    for (const auto& bt : two) has_minor = has_minor || bt.to_string() == "[1,2|1,2]";
    CHECK(has_minor);
}

TEST_CASE("first-factor size separates the diagonal-product ideal slice") {
    auto R = Ring::grid(3, 3);
    for (int t = 2; t <= 3; ++t) {
        auto J = diagonal_ideal(t, R, /*antidiagonal=*/false);
        for (int d = 0; d <= 4; ++d)
            for (const auto& bt : enumerate_standard(R, d)) {
                const bool wide = !bt.empty() && bt.factors.front().size() >= t;
                CHECK(J.contains(rsk_backward(R, bt)) == wide);
            }
    }
}

TEST_CASE("degree-slice verification reports") {
    auto R = Ring::grid(3, 3);

    SUBCASE("2-minors in degree two: the nine diagonal quadrics") {
        auto rep = verify_rsk_image(R, 2, 2);
        CHECK(rep.confirmed());
        CHECK(rep.exit_code() == 0);
        CHECK(rep.parameters.at("image_size") == "9");
        CHECK(rep.parameters.at("slice_size") == "9");
        CHECK(rep.mode == "exhaustive");

        std::set<std::vector<std::int32_t>> expect;
        for (const auto& r : combinations(3, 2))
            for (const auto& c : combinations(3, 2))
                expect.insert(
                    grid_monomial(R, {{r[0] + 1, c[0] + 1}, {r[1] + 1, c[1] + 1}}).e);
        std::set<std::vector<std::int32_t>> image;
        for (const auto& bt : enumerate_standard(R, 2))
            if (!bt.empty() && bt.factors.front().size() >= 2)
                image.insert(rsk_backward(R, bt).e);
        CHECK(image == expect);
    }

    SUBCASE("3-minors in degree three: exactly the main diagonal") {
        auto rep = verify_rsk_image(R, 3, 3);
        CHECK(rep.confirmed());
        CHECK(rep.parameters.at("image_size") == "1");

        std::set<std::vector<std::int32_t>> image;
        for (const auto& bt : enumerate_standard(R, 3))
            if (!bt.empty() && bt.factors.front().size() >= 3)
                image.insert(rsk_backward(R, bt).e);
        REQUIRE(image.size() == 1);
        CHECK(*image.begin() == grid_monomial(R, {{1, 1}, {2, 2}, {3, 3}}).e);
    }

    SUBCASE("1-minors fill every positive degree") {
        auto R23 = Ring::grid(2, 3);
        std::vector<std::string> sizes = {"0", "6", "21", "56"};
        for (int d = 0; d <= 3; ++d) {
            auto rep = verify_rsk_image(R23, 1, d);
            CHECK(rep.confirmed());
            CHECK(rep.parameters.at("image_size") == sizes[d]);
        }
    }

    SUBCASE("other slices on both test grids") {
        for (auto [m, n] : {std::pair{3, 3}, {2, 4}}) {
            auto G = Ring::grid(m, n);
            for (int t = 1; t <= std::min(m, n); ++t)
                for (int d = 0; d <= 4; ++d) CHECK(verify_rsk_image(G, t, d).confirmed());
        }
    }

    SUBCASE("report JSON carries no timings by default") {
        auto rep = verify_rsk_image(R, 2, 2);
        auto j = rep.to_json();
        CHECK(!j.contains("timings"));
        CHECK(j["field"] == "none");
    }
}

TEST_CASE("standard products are a linear basis per degree slice") {
    SUBCASE("degree one") {
        for (auto [m, n] : {std::pair{2, 3}, {3, 3}}) {
            auto rep = standard_basis_rank_check(Ring::grid(m, n), 1);
            CHECK(rep.confirmed());
            CHECK(rep.parameters.at("standard_count") == std::to_string(m * n));
            CHECK(rep.parameters.at("rank") == std::to_string(m * n));
        }
    }
    SUBCASE("degree zero edge") {
        auto rep = standard_basis_rank_check(Ring::grid(2, 2), 0);
        CHECK(rep.confirmed());
        CHECK(rep.parameters.at("rank") == "1");
    }
    SUBCASE("2x2 in degree two") {
        auto rep = standard_basis_rank_check(Ring::grid(2, 2), 2);
        CHECK(rep.confirmed());
        CHECK(rep.parameters.at("standard_count") == "10");
        CHECK(rep.parameters.at("monomial_count") == "10");
        CHECK(rep.parameters.at("rank") == "10");
    }
    SUBCASE("3x3 in degree three") {
        auto rep = standard_basis_rank_check(Ring::grid(3, 3), 3);
        CHECK(rep.confirmed());
        CHECK(rep.parameters.at("standard_count") == "165");
        CHECK(rep.parameters.at("rank") == "165");
        CHECK(rep.field == "GF(32003)");
    }
    SUBCASE("a different prime gives the same answer") {
        auto rep = standard_basis_rank_check(Ring::grid(2, 3), 2, 101);
        CHECK(rep.confirmed());
        CHECK(rep.parameters.at("rank") == "21");
        CHECK(rep.field == "GF(101)");
    }
}

TEST_CASE("backward insertion rejects bad input") {
    auto R = Ring::grid(2, 2);

    Bitableau order_violation;
    order_violation.factors = {MinorIndex({2}, {1}), MinorIndex({1}, {1})};
    CHECK_THROWS_AS(rsk_backward(R, order_violation), NotStandard);

    Bitableau size_violation;
    size_violation.factors = {MinorIndex({1}, {1}), MinorIndex({1, 2}, {1, 2})};
    CHECK_THROWS_AS(rsk_backward(R, size_violation), NotStandard);

    Bitableau off_grid;
    off_grid.factors = {MinorIndex({3}, {1})};
    CHECK_THROWS_AS(rsk_backward(R, off_grid), BadIndex);

    CHECK(!order_violation.is_standard());
    CHECK(!size_violation.is_standard());
}
