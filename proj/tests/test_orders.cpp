#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "detgb/grid.hpp"
#include "detgb/monomial.hpp"
#include "detgb/ring.hpp"
#include "detgb/term_order.hpp"

#include "oracle.hpp"

using namespace detgb;

namespace {

Monomial mono(std::vector<std::int32_t> e) { return Monomial(std::move(e)); }

int to_int(Cmp c) { return static_cast<int>(c); }

}  // namespace

TEST_CASE("lex on the 2x2 grid ranks x11*x22 above x12^2") {
    // variables row-major: x11, x12, x21, x22
    auto ord = TermOrder::lex_rowmajor(4);
    CHECK(ord.greater(mono({1, 0, 0, 1}), mono({0, 2, 0, 0})));
}

TEST_CASE("grevlex on the 2x2 grid ranks x12*x21 above x11*x22") {
    auto ord = TermOrder::grevlex_rowmajor(4);
    CHECK(ord.greater(mono({0, 1, 1, 0}), mono({1, 0, 0, 1})));
}

TEST_CASE("grevlex descending chain for degree 2 in three variables") {
    // classical ordering: x0^2 > x0x1 > x1^2 > x0x2 > x1x2 > x2^2
    auto ord = TermOrder::grevlex_rowmajor(3);
    std::vector<Monomial> chain = {mono({2, 0, 0}), mono({1, 1, 0}), mono({0, 2, 0}),
                                   mono({1, 0, 1}), mono({0, 1, 1}), mono({0, 0, 2})};
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) CHECK(ord.greater(chain[i], chain[i + 1]));
}

TEST_CASE("lex descending chain for degree 2 in three variables") {
    auto ord = TermOrder::lex_rowmajor(3);
    std::vector<Monomial> chain = {mono({2, 0, 0}), mono({1, 1, 0}), mono({1, 0, 1}),
                                   mono({0, 2, 0}), mono({0, 1, 1}), mono({0, 0, 2})};
    for (std::size_t i = 0; i + 1 < chain.size(); ++i) CHECK(ord.greater(chain[i], chain[i + 1]));
}

TEST_CASE("lex and grevlex agree with the reference comparators on random pairs") {
    Rng rng(20240601);
    for (int nv : {2, 4, 9, 16}) {
        std::vector<int> ranking(nv);
        for (int i = 0; i < nv; ++i) ranking[i] = i;
        rng.shuffle(ranking);
        auto lex = TermOrder::lex(ranking);
        auto grl = TermOrder::grevlex(ranking);
        for (int it = 0; it < 500; ++it) {
            Monomial a = oracle::random_monomial(rng, nv);
            Monomial b = oracle::random_monomial(rng, nv);
            CHECK(to_int(lex.compare(a, b)) == oracle::lex_ref(ranking, a, b));
            CHECK(to_int(grl.compare(a, b)) == oracle::grevlex_ref(ranking, a, b));
        }
    }
}

TEST_CASE("weight order with all-ones weights and lex tie is graded lex") {
    Rng rng(7);
    int nv = 4;
    std::vector<mpz_class> w(nv, 1);
    auto ord = TermOrder::weight(w, TermOrder::lex_rowmajor(nv));
    std::vector<int> id = {0, 1, 2, 3};
    for (int it = 0; it < 500; ++it) {
        Monomial a = oracle::random_monomial(rng, nv);
        Monomial b = oracle::random_monomial(rng, nv);
        int expect = a.deg != b.deg ? (a.deg < b.deg ? -1 : 1) : oracle::lex_ref(id, a, b);
        CHECK(to_int(ord.compare(a, b)) == expect);
    }
}

TEST_CASE("classical grevlex matrix realizes grevlex") {
    // rows: all ones, then -e4, -e3, -e2
    std::vector<std::vector<mpz_class>> rows = {
        {1, 1, 1, 1}, {0, 0, 0, -1}, {0, 0, -1, 0}, {0, -1, 0, 0}};
    auto mord = TermOrder::matrix(rows);
    auto grl = TermOrder::grevlex_rowmajor(4);
    Rng rng(99);
    for (int it = 0; it < 800; ++it) {
        Monomial a = oracle::random_monomial(rng, 4);
        Monomial b = oracle::random_monomial(rng, 4);
        CHECK(to_int(mord.compare(a, b)) == to_int(grl.compare(a, b)));
    }
}

TEST_CASE("invalid orders are rejected") {
    CHECK_THROWS_AS(TermOrder::lex({0, 0, 1}), InvalidOrder);
    CHECK_THROWS_AS(TermOrder::matrix({{1, 1}, {2, 2}}), InvalidOrder);      // rank 1
    CHECK_THROWS_AS(TermOrder::matrix({{-1, 0}, {0, 1}}), InvalidOrder);     // 1 not minimal
    CHECK_THROWS_AS(TermOrder::weight({mpz_class(-1), mpz_class(2)}, TermOrder::lex_rowmajor(2)),
                    InvalidOrder);
    CHECK_THROWS_AS(TermOrder::block({{0, 1}, {1, 2}}), InvalidOrder);       // not a partition
}

TEST_CASE("term order axioms hold on random triples for every family") {
    Rng rng(123456);
    int nv = 6;
    std::vector<int> ranking = {3, 1, 5, 0, 2, 4};
    std::vector<mpz_class> w;
    for (int i = 0; i < nv; ++i) w.push_back(mpz_class(1 + static_cast<long>(rng.below(50))));
    std::vector<TermOrder> fams;
    fams.push_back(TermOrder::lex(ranking));
    fams.push_back(TermOrder::grevlex(ranking));
    fams.push_back(TermOrder::weight(w, TermOrder::grevlex_rowmajor(nv)));
    fams.push_back(TermOrder::block({{1, 3}, {0, 2, 4, 5}}));
    {
        std::vector<std::vector<mpz_class>> rows;
        rows.push_back(std::vector<mpz_class>(nv, 1));
        for (int i = nv - 1; i >= 1; --i) {
            std::vector<mpz_class> r(nv, 0);
            r[i] = -1;
            rows.push_back(r);
        }
        fams.push_back(TermOrder::matrix(rows));
    }
    Monomial one(nv);
    for (const auto& ord : fams) {
        for (int it = 0; it < 300; ++it) {
            Monomial a = oracle::random_monomial(rng, nv);
            Monomial b = oracle::random_monomial(rng, nv);
            Monomial c = oracle::random_monomial(rng, nv);
            // totality & antisymmetry
            CHECK((ord.compare(a, b) == Cmp::EQ) == (a == b));
            CHECK(to_int(ord.compare(a, b)) == -to_int(ord.compare(b, a)));
            // transitivity on the sampled triple
            if (!ord.greater(a, b) && !ord.greater(b, c)) CHECK_FALSE(ord.greater(a, c));
            // multiplicativity
            if (ord.less(a, b)) CHECK(ord.less(a * c, b * c));
            // 1 is minimal
            if (!a.is_one()) CHECK(ord.less(one, a));
        }
    }
}

TEST_CASE("row-major lex is a diagonal order, row-major grevlex an antidiagonal order") {
    for (auto [m, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 3}, {3, 4}, {4, 4}}) {
        auto lex = TermOrder::lex_rowmajor(m * n);
        auto grl = TermOrder::grevlex_rowmajor(m * n);
        CHECK(is_diagonal_order(lex, m, n));
        CHECK_FALSE(is_antidiagonal_order(lex, m, n));
        CHECK(is_antidiagonal_order(grl, m, n));
        CHECK_FALSE(is_diagonal_order(grl, m, n));
    }
}

TEST_CASE("column-major lex is also diagonal; a mixed ranking is neither") {
    int m = 3, n = 3;
    // column-major ranking: x11 > x21 > x31 > x12 > ...
    std::vector<int> colmajor;
    Ring grid = Ring::grid(m, n);
    for (int j = 1; j <= n; ++j)
        for (int i = 1; i <= m; ++i) colmajor.push_back(grid.grid_index(i, j));
    CHECK(is_diagonal_order(TermOrder::lex(colmajor), m, n));
    // ranking that interleaves rows breaks both properties: put x22 first
    std::vector<int> bad = {4, 0, 1, 2, 3, 5, 6, 7, 8};
    CHECK_FALSE(is_diagonal_order(TermOrder::lex(bad), m, n));
    CHECK_FALSE(is_antidiagonal_order(TermOrder::lex(bad), m, n));
}

TEST_CASE("block orders eliminate their leading block") {
    auto ord = TermOrder::block({{0, 1}, {2, 3}});
    CHECK(ord.eliminates({0, 1}));
    CHECK_FALSE(ord.eliminates({2, 3}));
    // any monomial touching the first block dominates any monomial outside it
    Rng rng(5);
    for (int it = 0; it < 200; ++it) {
        Monomial a = oracle::random_monomial(rng, 4);
        Monomial b = oracle::random_monomial(rng, 4);
        if (a.e[0] + a.e[1] > 0 && b.e[0] + b.e[1] == 0) CHECK(ord.greater(a, b));
    }
    CHECK(TermOrder::lex_rowmajor(4).eliminates({0, 1}));
    CHECK_FALSE(TermOrder::grevlex_rowmajor(4).eliminates({0, 1}));
}

TEST_CASE("order descriptions are stable") {
    CHECK(TermOrder::lex_rowmajor(3).describe() == "lex:perm=0,1,2");
    CHECK(TermOrder::block({{1}, {0, 2}}).describe() == "block:1|0,2");
    std::vector<mpz_class> w = {2, 3};
    CHECK(TermOrder::weight(w, TermOrder::grevlex_rowmajor(2)).describe() ==
          "weight:w=2,3;tie=grevlex:perm=0,1");
}
