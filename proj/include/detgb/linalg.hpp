#pragma once
// Small dense exact linear algebra: rank over a prime field and integer
// determinants.  Everything here is O(n^3) Gaussian-style elimination; the
// matrices that show up (rank certificates, binomial determinants) are a few
// hundred rows at most.

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace detgb {

/// Rank of a dense matrix over GF(p).  Rows may have differing lengths only
/// if the matrix is empty; otherwise they must agree.
int gfp_rank(std::vector<std::vector<std::uint32_t>> rows, std::uint32_t p);

/// Exact determinant of a square integer matrix via fraction-free (Bareiss)
/// elimination with row pivoting.
mpz_class integer_det(std::vector<std::vector<mpz_class>> a);

/// Rank over the rationals.
int mpq_rank(std::vector<std::vector<mpq_class>> a);

/// Basis of { x : A x = 0 } over the rationals, one vector per free column.
std::vector<std::vector<mpq_class>> mpq_nullspace(std::vector<std::vector<mpq_class>> a);

}  // namespace detgb
