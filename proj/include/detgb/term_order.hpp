#pragma once
// Term orders: lex / grevlex on a variable ranking, weight orders with a
// tie-break, integer matrix orders, and block (elimination) orders.
//
// Every constructor validates that the data actually defines a term order
// (total, multiplicative, 1 minimal) and throws InvalidOrder otherwise.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "detgb/common.hpp"
#include "detgb/monomial.hpp"

namespace detgb {

enum class Cmp : int { LT = -1, EQ = 0, GT = 1 };

class TermOrder {
public:
    enum class Kind { Lex, GrevLex, Weight, Matrix, Block };

    /// ranking[0] is the most significant variable, ranking.back() the least.
    static TermOrder lex(std::vector<int> ranking);
    static TermOrder grevlex(std::vector<int> ranking);

    /// Compare by w . a first; ties resolved by `tie`.  Weights must be
    /// non-negative (1-minimality); arbitrary precision is accepted.
    static TermOrder weight(std::vector<mpz_class> w, TermOrder tie);

    /// Compare successive rows of an integer matrix.  The matrix must have
    /// full column rank, and the first nonzero entry of every column must be
    /// positive (otherwise some variable would sort below 1).
    static TermOrder matrix(std::vector<std::vector<mpz_class>> rows);

    /// Elimination order: blocks are compared in sequence, graded reverse lex
    /// inside each block.  Blocks must partition {0..nvars-1}.  Monomials
    /// touching an earlier block dominate everything in later blocks.
    static TermOrder block(std::vector<std::vector<int>> blocks);

    /// Identity ranking convenience: x[1,1] > x[1,2] > ... row-major.
    static TermOrder lex_rowmajor(int nvars);
    static TermOrder grevlex_rowmajor(int nvars);

    Kind kind() const { return kind_; }
    int nvars() const { return nvars_; }

    Cmp compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::LT; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) == Cmp::GT; }

    /// True if no monomial in the killed set of variables can appear in a
    /// term that compares below one free of them, i.e. the order eliminates
    /// `block` (only Block orders constructed with that leading block claim it).
    bool eliminates(const std::vector<int>& killed) const;

    const std::vector<int>& ranking() const { return ranking_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<mpz_class>& weights() const { return weights_; }

    /// Stable, parseable one-line description (used in reports).
    std::string describe() const;

private:
    TermOrder() = default;

    Kind kind_ = Kind::Lex;
    int nvars_ = 0;
    std::vector<int> ranking_;                      // Lex / GrevLex
    std::vector<mpz_class> weights_;                // Weight
    std::vector<long long> weights_ll_;             // fast path mirror (valid if weights_small_)
    bool weights_small_ = false;
    std::shared_ptr<const TermOrder> tie_;          // Weight
    std::vector<std::vector<mpz_class>> rows_;      // Matrix
    std::vector<std::vector<long long>> rows_ll_;   // fast path mirror
    bool rows_small_ = false;
    std::vector<std::vector<int>> blocks_;          // Block

    static void check_ranking(const std::vector<int>& ranking);
};

/// Validation helpers shared with tests.
bool is_permutation(const std::vector<int>& v);

}  // namespace detgb
