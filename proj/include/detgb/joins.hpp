#pragma once
// Joins and secants of ideals by block elimination, kernels of polynomial
// maps, and toric machinery for integer point configurations: toric ideals
// via saturation, circuits by support enumeration, unimodularity through
// lattice indices of column bases, and degree-bounded Graver sets.
//
// Elimination-based operations work over any coefficient field; rationals
// are the intended default.  The integer-matrix operations (circuits,
// unimodularity, Graver) are field-free and emit rational binomials.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "detgb/groebner.hpp"
#include "detgb/monomial_ideal.hpp"
#include "detgb/poly.hpp"
#include "detgb/report.hpp"
#include "detgb/ring.hpp"
#include "detgb/stanley_reisner.hpp"

namespace detgb {

// ---------------------------------------------------------------------------
// Point configurations.

/// A finite list of integer vectors in Z^dim, the i-th labeled by the i-th
/// variable of `ring`.
struct PointConfiguration {
    int dim = 0;
    std::vector<std::vector<long long>> points;  // each of length dim
    Ring ring;

    PointConfiguration(int d, std::vector<std::vector<long long>> pts, Ring r);

    int count() const { return static_cast<int>(points.size()); }

    /// The dim x count matrix with the points as columns.
    std::vector<std::vector<mpz_class>> matrix() const;

    /// The vectors e_i + f_j in Z^{m+n}, one per cell of an m x n grid,
    /// labeled by the grid ring and listed row-major.
    static PointConfiguration segre(int m, int n);

    /// Columns-are-points integer matrix, e.g. [[1,0,1],[0,1,2]] for three
    /// points in Z^2.  Variables are named x[1..N].
    static PointConfiguration from_json(const nlohmann::json& js);
};

// ---------------------------------------------------------------------------
// Field-free lattice operations.

/// Support-minimal kernel binomials x^{u+} - x^{u-} of the configuration,
/// primitive and sign-normalized (the canonically larger monomial carries
/// the plus sign), sorted canonically.
std::vector<Poly<FieldQ>> circuits(const PointConfiguration& A);

/// True when every column basis of the configuration matrix generates the
/// full lattice spanned by the configuration: the gcd of the maximal minors
/// of each basis equals the gcd over the whole matrix.
bool is_unimodular(const PointConfiguration& A);

/// All primitive kernel binomials with both halves of degree at most
/// `degree_bound` (which must stay <= 6): every kernel vector u whose halves
/// are dominated by no other kernel vector's.  Same normalization and order
/// as circuits().
std::vector<Poly<FieldQ>> graver_bounded(const PointConfiguration& A, int degree_bound);

// ---------------------------------------------------------------------------
// Elimination helpers shared by the join-type operations.

namespace join_detail {

/// Reinterpret p in a ring with `total` variables, variable v becoming
/// offset + v.
template <class F>
Poly<F> shift_into(const F& field, const Poly<F>& p, int total, int offset) {
    std::vector<Term<F>> ts;
    ts.reserve(p.nterms());
    for (const auto& t : p.terms()) {
        Monomial m(total);
        for (int v = 0; v < p.nvars(); ++v)
            if (t.m.e[v] > 0) {
                m.e[offset + v] = t.m.e[v];
                m.deg += t.m.e[v];
            }
        ts.push_back({t.c, std::move(m)});
    }
    return Poly<F>::from_terms(field, total, std::move(ts));
}

/// Evaluate p at x_v -> x_v - x_{offset+v} inside a ring with `total`
/// variables: the substitution that turns generators in the x-block into
/// generators in the difference of the two blocks.
template <class F>
Poly<F> difference_substitute(const F& field, const Poly<F>& p, int total, int offset) {
    Poly<F> out = Poly<F>::zero(field, total);
    for (const auto& t : p.terms()) {
        Poly<F> prod = Poly<F>::constant(field, total, t.c);
        for (int v = 0; v < p.nvars(); ++v)
            for (std::int32_t k = 0; k < t.m.e[v]; ++k)
                prod = prod * (Poly<F>::variable(field, total, v) -
                               Poly<F>::variable(field, total, offset + v));
        out = out + prod;
    }
    return out;
}

/// Project a polynomial supported on the first n variables back down.
template <class F>
Poly<F> restrict_front(const F& field, const Poly<F>& p, int n) {
    std::vector<Term<F>> ts;
    ts.reserve(p.nterms());
    for (const auto& t : p.terms()) {
        Monomial m(n);
        for (int v = 0; v < n; ++v) {
            m.e[v] = t.m.e[v];
            m.deg += t.m.e[v];
        }
        ts.push_back({t.c, std::move(m)});
    }
    return Poly<F>::from_terms(field, n, std::move(ts));
}

}  // namespace join_detail

// ---------------------------------------------------------------------------
// Joins, secants, kernels.

/// The join of the two ideals: generators of I are rewritten in a mirror
/// block y, generators of J are evaluated at x - y, and the mirror block is
/// eliminated.  Returns the reduced basis of the result under graded reverse
/// lex on the original ring (empty = zero ideal, {1} = unit ideal).
template <class F>
std::vector<Poly<F>> join_ideal(const F& field, const Ring& ring, const std::vector<Poly<F>>& I,
                                const std::vector<Poly<F>>& J, const GBOptions& opts = {}) {
    const int n = ring.nvars();
    const int total = 2 * n;
    std::vector<Poly<F>> gens;
    gens.reserve(I.size() + J.size());
    for (const auto& g : I) gens.push_back(join_detail::shift_into(field, g, total, n));
    for (const auto& h : J) gens.push_back(join_detail::difference_substitute(field, h, total, n));
    std::vector<int> killed(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) killed[static_cast<std::size_t>(v)] = n + v;
    auto high = eliminate(gens, killed, total, opts);
    std::vector<Poly<F>> out;
    out.reserve(high.size());
    for (const auto& g : high) out.push_back(join_detail::restrict_front(field, g, n));
    return reduce_basis(out, TermOrder::grevlex_rowmajor(n));
}

/// Iterated join of an ideal with itself: r = 1 returns the reduced basis of
/// the input, r = k joins one more copy onto the (k-1)-st secant.
template <class F>
std::vector<Poly<F>> secant_ideal(const F& field, const Ring& ring,
                                  const std::vector<Poly<F>>& I, int r,
                                  const GBOptions& opts = {}) {
    if (r < 1) throw DomainError("secant_ideal: r must be >= 1");
    auto acc = buchberger(I, TermOrder::grevlex_rowmajor(ring.nvars()), opts).elements;
    for (int k = 2; k <= r; ++k) acc = join_ideal(field, ring, acc, I, opts);
    return acc;
}

/// Kernel of the ring map sending the i-th variable of `source` to
/// targets[i], a polynomial in the variables of `image`.  Computed by
/// eliminating the image block from (x_i - g_i); returns the reduced basis
/// under graded reverse lex on `source`.
template <class F>
std::vector<Poly<F>> kernel_of_map(const F& field, const Ring& source, const Ring& image,
                                   const std::vector<Poly<F>>& targets,
                                   const GBOptions& opts = {}) {
    const int n = source.nvars();
    const int d = image.nvars();
    if (static_cast<int>(targets.size()) != n)
        throw DomainError("kernel_of_map: need one target per source variable");
    const int total = n + d;
    std::vector<Poly<F>> gens;
    gens.reserve(targets.size());
    for (int i = 0; i < n; ++i) {
        if (targets[static_cast<std::size_t>(i)].nvars() != d)
            throw RingMismatch("kernel_of_map: target not in the image ring");
        gens.push_back(Poly<F>::variable(field, total, i) -
                       join_detail::shift_into(field, targets[static_cast<std::size_t>(i)], total, n));
    }
    std::vector<int> killed(static_cast<std::size_t>(d));
    for (int v = 0; v < d; ++v) killed[static_cast<std::size_t>(v)] = n + v;
    auto high = eliminate(gens, killed, total, opts);
    std::vector<Poly<F>> out;
    out.reserve(high.size());
    for (const auto& g : high) out.push_back(join_detail::restrict_front(field, g, n));
    return reduce_basis(out, TermOrder::grevlex_rowmajor(n));
}

/// Kernel of the monomial map x_i -> t^{a_i} with Laurent exponents allowed:
/// each point contributes x_i t^{a_i^-} - t^{a_i^+}, an extra variable u with
/// 1 - u*t_1...t_d makes the t-block invertible, and both are eliminated.
/// Returns the reduced basis under graded reverse lex on the label ring.
template <class F>
std::vector<Poly<F>> toric_ideal(const F& field, const PointConfiguration& A,
                                 const GBOptions& opts = {}) {
    const int n = A.count();
    const int d = A.dim;
    const int total = n + d + 1;
    std::vector<Poly<F>> gens;
    gens.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i) {
        Monomial lhs(total), rhs(total);
        lhs.e[i] = 1;
        lhs.deg = 1;
        for (int k = 0; k < d; ++k) {
            const long long a = A.points[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)];
            if (a < 0) {
                lhs.e[n + k] = static_cast<std::int32_t>(-a);
                lhs.deg += static_cast<std::int32_t>(-a);
            } else if (a > 0) {
                rhs.e[n + k] = static_cast<std::int32_t>(a);
                rhs.deg += static_cast<std::int32_t>(a);
            }
        }
        gens.push_back(Poly<F>::monomial_term(field, field.one(), std::move(lhs)) -
                       Poly<F>::monomial_term(field, field.one(), std::move(rhs)));
    }
    Monomial sat(total);
    for (int k = 0; k < d; ++k) sat.e[n + k] = 1;
    sat.e[total - 1] = 1;
    sat.deg = d + 1;
    gens.push_back(Poly<F>::constant(field, total, field.one()) -
                   Poly<F>::monomial_term(field, field.one(), std::move(sat)));

    std::vector<int> killed(static_cast<std::size_t>(d) + 1);
    for (int v = 0; v <= d; ++v) killed[static_cast<std::size_t>(v)] = n + v;
    auto high = eliminate(gens, killed, total, opts);
    std::vector<Poly<F>> out;
    out.reserve(high.size());
    for (const auto& g : high) out.push_back(join_detail::restrict_front(field, g, n));
    return reduce_basis(out, TermOrder::grevlex_rowmajor(n));
}

/// Compare the initial ideal of the r-th secant with the r-th facet-union
/// secant of the initial ideal, under one term order.  Confirmed when every
/// minimal generator of in(secant) lies in the monomial secant; the report
/// notes when the two agree exactly.  If in(I) is not squarefree the
/// monomial route does not apply and the outcome is "incomplete".
template <class F>
Report check_sec_in_monotone(const F& field, const Ring& ring, const std::vector<Poly<F>>& I,
                             int r, const TermOrder& order, const GBOptions& opts = {}) {
    if (r < 1) throw DomainError("check_sec_in_monotone: r must be >= 1");
    Report rep;
    rep.claim = "initial ideal of the r-th secant lies in the r-th secant of the initial ideal";
    rep.parameters["r"] = std::to_string(r);
    rep.parameters["generators"] = std::to_string(I.size());
    rep.parameters["order"] = order.describe();
    rep.field = field.describe();
    rep.orders_checked = 1;
    rep.mode = "exhaustive";

    if (I.empty()) {
        rep.parameters["secant_generators"] = "0";
        rep.outcome = "confirmed";
        rep.notes.push_back("zero ideal; containment is trivial");
        return rep;
    }
    auto gbI = buchberger(I, order, opts);
    auto inI = initial_ideal(gbI, ring);
    if (!inI.is_squarefree()) {
        rep.outcome = "incomplete";
        rep.notes.push_back("initial ideal is not squarefree; facet-union route unavailable");
        return rep;
    }

    auto sec = secant_ideal(field, ring, I, r, opts);
    rep.parameters["secant_generators"] = std::to_string(sec.size());
    MonomialIdeal inS(ring, {});
    if (sec.empty()) {
        rep.notes.push_back("secant is the zero ideal");
    } else {
        inS = initial_ideal(buchberger(sec, order, opts), ring);
    }
    auto mono = ideal_of(sr_secant(complex_of(inI), r), ring);
    bool inside = true;
    for (const auto& g : inS.gens()) inside = inside && mono.contains(g);
    rep.outcome = inside ? "confirmed" : "refuted";
    if (inside && mono == inS) rep.notes.push_back("containment is an equality here");
    return rep;
}

}  // namespace detgb
