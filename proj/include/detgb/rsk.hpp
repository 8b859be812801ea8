#pragma once
// Products of minors in normal form ("standard bitableaux"), the dominance
// order on minor indices, and the insertion bijection between those products
// and ordinary monomials on the grid variables.
//
// Convention (frozen).  The bijection is the dual Knuth correspondence:
// positions of a monomial are processed row by row, within a row from the
// rightmost column to the leftmost, and each column index is row-inserted
// with a weak bump (displace the leftmost entry >= it).  Both tableaux come
// out with strictly increasing rows and weakly increasing columns, and the
// k-th factor of the output is read off the k-th ROWS of the recording and
// insertion tableaux.  Under this convention:
//   * a single variable x[i,j] maps to the one-cell factor [i|j],
//   * a t-minor's index maps to the product of its main-diagonal entries,
//   * the largest factor size equals the longest subsequence of positions
//     strictly increasing in both coordinates (a chain in the grid order).
// The mirror convention (classic strict bumping, columns ascending) tracks
// antichains instead; the two are conjugate under reversing column labels.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "detgb/common.hpp"
#include "detgb/determinantal.hpp"
#include "detgb/monomial.hpp"
#include "detgb/report.hpp"
#include "detgb/ring.hpp"

namespace detgb {

/// Dominance order on minor indices: a <= b iff a has at least as many rows
/// and, position by position over b's length, a's row and column labels are
/// both dominated by b's.  Partial: [1|2] and [2|1] are incomparable.
bool minor_leq(const MinorIndex& a, const MinorIndex& b);

/// A product of minors delta_1 * ... * delta_v (v >= 0; empty = the constant
/// 1).  "Standard" means the factors weakly increase under minor_leq, which
/// forces the factor sizes to weakly decrease.
struct Bitableau {
    std::vector<MinorIndex> factors;

    int degree() const {
        int d = 0;
        for (const auto& f : factors) d += f.size();
        return d;
    }
    bool empty() const { return factors.empty(); }
    bool is_standard() const;

    bool operator==(const Bitableau& o) const { return factors == o.factors; }
    bool operator!=(const Bitableau& o) const { return !(*this == o); }

    /// "[1,3|1,2][2|4]"; the empty product prints as "[]".
    std::string to_string() const;
    /// Inverse of to_string.  Bad syntax -> ParseError; a syntactically valid
    /// but ill-formed index list (e.g. "[2,1|1,2]") -> BadIndex.
    static Bitableau parse(const std::string& text);
};

/// The multiset of grid positions of a monomial, sorted row-major (ties by
/// column).  The canonical flat encoding the insertion walks over.
struct TwoLineArray {
    std::vector<std::pair<int, int>> entries;  // (row, col), 1-based

    static TwoLineArray of(const Ring& grid, const Monomial& u);
    Monomial monomial(const Ring& grid) const;
};

/// Monomial -> standard bitableau of the same degree (bijective).
Bitableau rsk_forward(const Ring& grid, const Monomial& u);

/// Inverse of rsk_forward.  Throws NotStandard if the factors do not weakly
/// increase, BadIndex if an index exceeds the grid.
Monomial rsk_backward(const Ring& grid, const Bitableau& bt);

/// Size of the largest factor of rsk_forward(u); equivalently the longest
/// subsequence of the position array strictly increasing in both coordinates.
int schensted_width(const Ring& grid, const Monomial& u);

/// All standard bitableaux of the given total degree, in a fixed canonical
/// order.  Exponential in degree; intended for small slices.
std::vector<Bitableau> enumerate_standard(const Ring& grid, int degree);

/// Check, in one degree slice, that the insertion images of the standard
/// bitableaux whose first factor has size >= t are exactly the degree-d
/// monomials of the ideal generated by the t-minors' diagonal products.
Report verify_rsk_image(const Ring& grid, int t, int degree);

/// Check that the products of minors given by the standard bitableaux of one
/// degree are a linear basis of that degree slice: their count matches the
/// monomial count and their coefficient matrix has full rank over GF(p).
Report standard_basis_rank_check(const Ring& grid, int degree, std::uint32_t p = 32003);

}  // namespace detgb
