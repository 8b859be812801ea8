#pragma once
// Variable relabelings of a grid ring that fix the set of t-minors: row
// permutations x column permutations, plus transposition when the grid is
// square.  Used to cut exhaustive order searches down by the group size and to
// count initial ideals up to symmetry.

#include <string>
#include <vector>

#include "detgb/monomial_ideal.hpp"
#include "detgb/ring.hpp"

namespace detgb {

/// All symmetries as variable maps g: g[v] is the image of variable v
/// (row-major layout, as in Ring::grid).  Size m!·n!, doubled when m == n.
std::vector<std::vector<int>> grid_symmetries(int m, int n);

/// Least relabeling of a significance ranking: min over g of g∘ranking.
std::vector<int> canonical_ranking(const std::vector<int>& ranking,
                                   const std::vector<std::vector<int>>& group);

/// Apply a variable map to a monomial.
Monomial apply_symmetry(const Monomial& mono, const std::vector<int>& g);

/// Stable key of a monomial ideal up to the group: the least `key()` among
/// all relabeled images.  Two ideals get the same key iff some symmetry maps
/// one generator set onto the other.
std::string canonical_ideal_key(const MonomialIdeal& M,
                                const std::vector<std::vector<int>>& group);

}  // namespace detgb
