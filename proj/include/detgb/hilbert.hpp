#pragma once
// Hilbert series of quotients by monomial ideals, computed as the numerator
// K(t) with HS(S/M) = K(t) / (1-t)^n via the colon/sum pivot recursion
//   HS(S/M) = t * HS(S/(M:x)) + HS(S/(M+(x))),
// pivoting on the variable most frequent among the minimal generators.

#include <map>
#include <vector>

#include "detgb/common.hpp"
#include "detgb/monomial_ideal.hpp"

namespace detgb {

struct HilbertData {
    std::vector<mpz_class> numerator;  // K(t) coefficients, constant term first
    int dim = 0;                       // Krull dimension of S/M (-1 for the unit ideal)
    mpz_class degree = 0;              // multiplicity of S/M (0 for the unit ideal)
};

/// Numerator K(t) of the Hilbert series of S/M over (1-t)^nvars.
std::vector<mpz_class> hilbert_numerator(const MonomialIdeal& M);

/// Dimension and degree extracted from the numerator.
HilbertData hilbert_data(const MonomialIdeal& M);

/// Values HF(S/M, d) for d = 0..dmax.
std::vector<mpz_class> hilbert_function(const MonomialIdeal& M, int dmax);

}  // namespace detgb
