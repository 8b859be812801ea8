#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>

#include "detgb/groebner.hpp"
#include "detgb/hilbert.hpp"

#include "oracle.hpp"

using namespace detgb;

namespace {

// Brute-force Hilbert function: count degree-d monomials outside M by direct
// enumeration.  Exponential in nvars; fine for the small cases tested here.
long hf_by_enumeration(const MonomialIdeal& M, int d) {
    long count = 0;
    std::vector<int32_t> e(M.nvars(), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == M.nvars() - 1) {
            e[pos] = left;
            if (!M.contains(Monomial(e))) ++count;
            return;
        }
        for (int k = 0; k <= left; ++k) {
            e[pos] = k;
            rec(pos + 1, left - k);
        }
    };
    rec(0, d);
    return count;
}

MonomialIdeal random_monomial_ideal(Rng& rng, int nvars, int ngens, int max_exp) {
    std::vector<Monomial> gens;
    for (int i = 0; i < ngens; ++i) {
        auto m = oracle::random_monomial(rng, nvars, max_exp);
        if (m.deg > 0) gens.push_back(m);
    }
    return MonomialIdeal(nvars, gens);
}

}  // namespace

TEST_CASE("zero ideal: polynomial ring invariants") {
    MonomialIdeal M(4, {});
    auto hd = hilbert_data(M);
    CHECK(hd.dim == 4);
    CHECK(hd.degree == 1);
    REQUIRE(hd.numerator.size() == 1);
    CHECK(hd.numerator[0] == 1);
    auto hf = hilbert_function(M, 6);
    for (int d = 0; d <= 6; ++d)
        CHECK(hf[d] == binomial(3 + d, 3));
}

TEST_CASE("unit ideal: the zero ring") {
    MonomialIdeal M(3, {Monomial(3)});
    CHECK(M.is_unit());
    auto hd = hilbert_data(M);
    CHECK(hd.dim == -1);
    CHECK(hd.degree == 0);
    auto hf = hilbert_function(M, 3);
    CHECK(hf == std::vector<mpz_class>({0, 0, 0, 0}));
}

TEST_CASE("irrelevant ideal: a single point") {
    std::vector<Monomial> vars;
    for (int i = 0; i < 3; ++i) vars.push_back(Monomial::variable(3, i));
    MonomialIdeal M(3, vars);
    auto hd = hilbert_data(M);
    CHECK(hd.dim == 0);
    CHECK(hd.degree == 1);
    auto hf = hilbert_function(M, 5);
    CHECK(hf == std::vector<mpz_class>({1, 0, 0, 0, 0, 0}));
}

TEST_CASE("principal ideal (x11*x22) in the 2x2 grid ring") {
    // numerator 1 - t^2, hence dim 3 and degree 2 after stripping one factor
    Ring r = Ring::grid(2, 2);
    Monomial diag = Monomial::variable(4, r.grid_index(1, 1)) *
                    Monomial::variable(4, r.grid_index(2, 2));
    MonomialIdeal M(r, {diag});
    auto num = hilbert_numerator(M);
    REQUIRE(num.size() == 3);
    CHECK(num[0] == 1);
    CHECK(num[1] == 0);
    CHECK(num[2] == -1);
    auto hd = hilbert_data(M);
    CHECK(hd.dim == 3);
    CHECK(hd.degree == 2);
}

TEST_CASE("squarefree complete intersection: pairwise coprime fast path") {
    // (x0*x1, x2*x3, x4) -> numerator (1-t^2)^2 (1-t)
    std::vector<Monomial> gens = {
        Monomial::variable(5, 0) * Monomial::variable(5, 1),
        Monomial::variable(5, 2) * Monomial::variable(5, 3),
        Monomial::variable(5, 4),
    };
    MonomialIdeal M(5, gens);
    auto hd = hilbert_data(M);
    CHECK(hd.dim == 2);
    CHECK(hd.degree == 4);
    auto hf = hilbert_function(M, 8);
    for (int d = 0; d <= 8; ++d)
        CHECK(hf[d] == hf_by_enumeration(M, d));
}

TEST_CASE("enumeration oracle on random monomial ideals") {
    Rng rng(13371);
    for (int round = 0; round < 40; ++round) {
        int nv = 2 + static_cast<int>(rng.below(4));  // 2..5 vars
        auto M = random_monomial_ideal(rng, nv, 2 + static_cast<int>(rng.below(4)), 3);
        auto hf = hilbert_function(M, 6);
        for (int d = 0; d <= 6; ++d)
            CHECK(hf[d] == hf_by_enumeration(M, d));
    }
}

TEST_CASE("minimal generators are deduplicated and minimalized") {
    auto x = [](int i) { return Monomial::variable(3, i); };
    MonomialIdeal M(3, {x(0) * x(1), x(0) * x(1) * x(2), x(0) * x(1), x(2)});
    REQUIRE(M.gens().size() == 2);
    CHECK(M.contains(x(0) * x(1) * x(2)));
    CHECK(!M.contains(x(0)));
}

TEST_CASE("hilbert data is invariant under variable permutation") {
    Rng rng(777);
    for (int round = 0; round < 10; ++round) {
        int nv = 4;
        auto M = random_monomial_ideal(rng, nv, 4, 3);
        std::vector<int> perm = {2, 0, 3, 1};
        std::vector<Monomial> permuted;
        for (const auto& g : M.gens()) {
            std::vector<int32_t> e(nv);
            for (int i = 0; i < nv; ++i) e[perm[i]] = g.e[i];
            permuted.push_back(Monomial(e));
        }
        MonomialIdeal Mp(nv, permuted);
        auto a = hilbert_data(M);
        auto b = hilbert_data(Mp);
        CHECK(a.dim == b.dim);
        CHECK(a.degree == b.degree);
        CHECK(a.numerator == b.numerator);
    }
}

TEST_CASE("hilbert function of an initial ideal is order independent") {
    // dim_k (S/I)_d does not depend on the chosen order, so the Hilbert
    // functions of in(I) under different orders agree; 2x2 determinant ideal.
    Ring r = Ring::grid(2, 2);
    FieldQ Q;
    auto minor = parse_poly("x[1,1]*x[2,2] - x[1,2]*x[2,1]", r, Q);
    auto lex = TermOrder::lex_rowmajor(4);
    auto grev = TermOrder::grevlex_rowmajor(4);
    auto gb1 = buchberger<FieldQ>({minor}, lex);
    auto gb2 = buchberger<FieldQ>({minor}, grev);
    auto in1 = initial_ideal(gb1, r);
    auto in2 = initial_ideal(gb2, r);
    CHECK(in1.gens() != in2.gens());  // x11*x22 vs x12*x21
    auto hf1 = hilbert_function(in1, 8);
    auto hf2 = hilbert_function(in2, 8);
    CHECK(hf1 == hf2);
    auto a = hilbert_data(in1);
    auto b = hilbert_data(in2);
    CHECK(a.dim == b.dim);
    CHECK(a.degree == b.degree);
}
