#pragma once
// Squarefree monomial ideals viewed as simplicial complexes: radicals,
// polarization, facet combinatorics, reduced homology over GF(p) and the
// Reisner Cohen-Macaulay test, secant complexes, grid-poset chain/antichain
// counting, and the Gessel-Viennot binomial determinant for degrees.
//
// Complexes are stored facet-first (vertex subsets as 64-bit masks, kept as
// an inclusion antichain); faces are expanded from facets on demand, so the
// full 2^V lattice is never materialized.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include <gmpxx.h>

#include "detgb/common.hpp"
#include "detgb/monomial_ideal.hpp"
#include "detgb/report.hpp"
#include "detgb/ring.hpp"

namespace detgb {

struct SimplicialComplex {
    int nvertices = 0;
    // Ascending numeric order, mutually incomparable under inclusion.  An
    // empty list is the void complex (no faces at all); {0} is the complex
    // whose only face is the empty set.
    std::vector<std::uint64_t> facets;

    static SimplicialComplex void_complex(int nv);
    static SimplicialComplex full_simplex(int nv);
    /// Drops dominated candidates, deduplicates, sorts.
    static SimplicialComplex from_facets(int nv, std::vector<std::uint64_t> candidates);

    bool is_void() const { return facets.empty(); }
    bool has_face(std::uint64_t face) const;

    /// Largest face size minus one; -1 for {empty set}, -2 for the void complex.
    int dimension() const;
    bool is_pure() const;
    long long facet_count() const { return static_cast<long long>(facets.size()); }

    /// f[k] = number of faces of dimension k-1, so f[0] = 1 counts the empty
    /// face; length dimension()+2.  The void complex gives an empty vector.
    std::vector<long long> f_vector() const;

    /// Every face, the empty set included, ascending as masks.
    std::vector<std::uint64_t> all_faces() const;

    /// Faces disjoint from `face` whose union with it is a face.
    SimplicialComplex link(std::uint64_t face) const;

    bool operator==(const SimplicialComplex& o) const {
        return nvertices == o.nvertices && facets == o.facets;
    }
    bool operator!=(const SimplicialComplex& o) const { return !(*this == o); }
};

/// Generator-wise squarefree part, re-minimalized.  Fixed points are exactly
/// the radical (squarefree) ideals.
MonomialIdeal radical(const MonomialIdeal& M);

/// Faces = supports containing no generator's support.  Throws NotSquarefree
/// unless every minimal generator is squarefree, DomainError past 64 vertices.
SimplicialComplex complex_of(const MonomialIdeal& M);

/// Inverse of complex_of: the ideal of minimal non-faces, over `ring`.
MonomialIdeal ideal_of(const SimplicialComplex& D, const Ring& ring);

/// Facets as sorted grid-coordinate lists: [[[1,1],[2,2]], ...].
nlohmann::ordered_json complex_json(const SimplicialComplex& D, const Ring& grid);

/// det of the (t-1)x(t-1) matrix of binomials C(m-i+n-j, m-i); needs
/// 2 <= t <= min(m,n)+1.
mpz_class gv_degree(int m, int n, int t);

/// Reduced simplicial homology ranks over GF(p): entry k+1 is the rank in
/// dimension k, for k = -1 .. dimension().  Empty for the void complex.
std::vector<long long> reduced_homology(const SimplicialComplex& D, std::uint32_t p = 32003);

/// Reisner criterion at characteristic p: every face's link (the empty face
/// included) has vanishing reduced homology below its dimension.
bool is_cm_reisner(const SimplicialComplex& D, std::uint32_t p = 32003);

/// Standard polarization: exponent x_v^e spreads over e copies of v; every
/// variable keeps at least one copy, so codimension, degree and the Hilbert
/// numerator are preserved.  Copy k of v is named name(v) for k = 0 and
/// name(v)#k otherwise, grouped by v.
MonomialIdeal polarize(const MonomialIdeal& M);

/// Faces are unions of up to r faces of D (computed from facet unions).
SimplicialComplex sr_secant(const SimplicialComplex& D, int r);

/// The complex of t-antichain-free subsets of the m x n grid (faces are
/// unions of at most t-1 staircase chains).
SimplicialComplex grid_chain_complex(const Ring& grid, int t);

/// For a subset S of grid cells: largest antichain (backtracking), smallest
/// chain cover (bipartite matching), and membership of S in the t-antichain
/// -free complex, checked three ways against each other.
Report dilworth_check(const Ring& grid, int t, const std::vector<std::pair<int, int>>& S);

}  // namespace detgb
