#pragma once
// Shared small utilities: errors, deterministic RNG, integer helpers.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace detgb {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An order description failed validation (bad permutation, rank-deficient
/// matrix, negative weights, blocks not covering the ring, ...).
struct InvalidOrder : Error {
    using Error::Error;
};

/// Two operands live over different coefficient fields (e.g. GF(p) vs GF(q)).
struct FieldMismatch : Error {
    using Error::Error;
};

/// Two operands live over different polynomial rings.
struct RingMismatch : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

/// Argument outside the documented domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

/// Leading term / leading coefficient requested from the zero polynomial.
struct ZeroPolynomial : Error {
    using Error::Error;
};

/// Operation requires a reduced basis but got an unreduced one.
struct NotReduced : Error {
    using Error::Error;
};

/// Row/column selection that does not fit inside the matrix.
struct BadIndex : Error {
    using Error::Error;
};

/// Order is neither diagonal nor antidiagonal where one is required.
struct OrderNotDiagonal : Error {
    using Error::Error;
};

/// Tableau pair violates the standardness (componentwise comparability) rules.
struct NotStandard : Error {
    using Error::Error;
};

/// Squarefree monomial input expected (Stanley-Reisner side).
struct NotSquarefree : Error {
    using Error::Error;
};

// ---------------------------------------------------------------------------
// Deterministic RNG.  We avoid std::uniform_int_distribution on purpose: its
// output is implementation-defined, and reports must be reproducible from a
// seed alone.  splitmix64 is tiny and has well-understood statistics.

class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, n) by rejection; n > 0.
    std::uint64_t below(std::uint64_t n) {
        // rejection sampling keeps the distribution exact
        std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t x;
        do {
            x = u64();
        } while (x >= limit);
        return x % n;
    }

    /// Uniform integer in [lo, hi] inclusive.
    long long range(long long lo, long long hi) {
        return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

// ---------------------------------------------------------------------------
// Integer helpers.

inline mpz_class binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline std::string to_string(const mpz_class& z) { return z.get_str(); }
inline std::string to_string(const mpq_class& q) { return q.get_str(); }

}  // namespace detgb
