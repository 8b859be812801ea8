#include "detgb/term_order.hpp"

#include <algorithm>
#include <sstream>

namespace detgb {

bool is_permutation(const std::vector<int>& v) {
    std::vector<char> seen(v.size(), 0);
    for (int x : v) {
        if (x < 0 || x >= static_cast<int>(v.size()) || seen[x]) return false;
        seen[x] = 1;
    }
    return true;
}

void TermOrder::check_ranking(const std::vector<int>& ranking) {
    if (ranking.empty() || !is_permutation(ranking))
        throw InvalidOrder("variable ranking is not a permutation");
}

TermOrder TermOrder::lex(std::vector<int> ranking) {
    check_ranking(ranking);
    TermOrder o;
    o.kind_ = Kind::Lex;
    o.nvars_ = static_cast<int>(ranking.size());
    o.ranking_ = std::move(ranking);
    return o;
}

TermOrder TermOrder::grevlex(std::vector<int> ranking) {
    check_ranking(ranking);
    TermOrder o;
    o.kind_ = Kind::GrevLex;
    o.nvars_ = static_cast<int>(ranking.size());
    o.ranking_ = std::move(ranking);
    return o;
}

TermOrder TermOrder::lex_rowmajor(int nvars) {
    std::vector<int> id(nvars);
    for (int i = 0; i < nvars; ++i) id[i] = i;
    return lex(std::move(id));
}

TermOrder TermOrder::grevlex_rowmajor(int nvars) {
    std::vector<int> id(nvars);
    for (int i = 0; i < nvars; ++i) id[i] = i;
    return grevlex(std::move(id));
}

TermOrder TermOrder::weight(std::vector<mpz_class> w, TermOrder tie) {
    if (w.empty() || static_cast<int>(w.size()) != tie.nvars())
        throw InvalidOrder("weight vector length does not match tie-break order");
    for (const auto& x : w)
        if (x < 0) throw InvalidOrder("weight orders require non-negative weights");
    TermOrder o;
    o.kind_ = Kind::Weight;
    o.nvars_ = static_cast<int>(w.size());
    o.weights_ = std::move(w);
    o.weights_small_ = true;
    for (const auto& x : o.weights_) {
        if (!x.fits_slong_p() || x.get_si() > (1LL << 40)) {
            o.weights_small_ = false;
            break;
        }
    }
    if (o.weights_small_) {
        o.weights_ll_.reserve(o.weights_.size());
        for (const auto& x : o.weights_) o.weights_ll_.push_back(x.get_si());
    }
    o.tie_ = std::make_shared<const TermOrder>(std::move(tie));
    return o;
}

TermOrder TermOrder::matrix(std::vector<std::vector<mpz_class>> rows) {
    if (rows.empty()) throw InvalidOrder("matrix order needs at least one row");
    const std::size_t n = rows[0].size();
    if (n == 0) throw InvalidOrder("matrix order needs at least one column");
    for (const auto& r : rows)
        if (r.size() != n) throw InvalidOrder("matrix order rows have unequal length");

    // 1-minimality: first nonzero entry of each column must be positive.
    for (std::size_t j = 0; j < n; ++j) {
        bool ok = false, found = false;
        for (const auto& r : rows) {
            if (r[j] != 0) {
                found = true;
                ok = r[j] > 0;
                break;
            }
        }
        if (!found || !ok)
            throw InvalidOrder("matrix order: first nonzero entry of each column must be positive");
    }

    // Full column rank over Q (fraction-free elimination on a copy).
    {
        std::vector<std::vector<mpq_class>> a(rows.size(), std::vector<mpq_class>(n));
        for (std::size_t i = 0; i < rows.size(); ++i)
            for (std::size_t j = 0; j < n; ++j) a[i][j] = rows[i][j];
        std::size_t rank = 0;
        for (std::size_t col = 0; col < n && rank < a.size(); ++col) {
            std::size_t piv = rank;
            while (piv < a.size() && a[piv][col] == 0) ++piv;
            if (piv == a.size()) continue;
            std::swap(a[piv], a[rank]);
            for (std::size_t i = rank + 1; i < a.size(); ++i) {
                if (a[i][col] == 0) continue;
                mpq_class f = a[i][col] / a[rank][col];
                for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[rank][j];
            }
            ++rank;
        }
        if (rank < n) throw InvalidOrder("matrix order: matrix does not have full column rank");
    }

    TermOrder o;
    o.kind_ = Kind::Matrix;
    o.nvars_ = static_cast<int>(n);
    o.rows_ = std::move(rows);
    o.rows_small_ = true;
    for (const auto& r : o.rows_)
        for (const auto& x : r)
            if (!x.fits_slong_p() || std::llabs(x.get_si()) > (1LL << 40)) o.rows_small_ = false;
    if (o.rows_small_) {
        o.rows_ll_.resize(o.rows_.size());
        for (std::size_t i = 0; i < o.rows_.size(); ++i)
            for (const auto& x : o.rows_[i]) o.rows_ll_[i].push_back(x.get_si());
    }
    return o;
}

TermOrder TermOrder::block(std::vector<std::vector<int>> blocks) {
    if (blocks.empty()) throw InvalidOrder("block order needs at least one block");
    int n = 0;
    for (const auto& b : blocks) n += static_cast<int>(b.size());
    std::vector<char> seen(n, 0);
    for (const auto& b : blocks) {
        if (b.empty()) throw InvalidOrder("block order: empty block");
        for (int v : b) {
            if (v < 0 || v >= n || seen[v]) throw InvalidOrder("block order: blocks must partition the variables");
            seen[v] = 1;
        }
    }
    TermOrder o;
    o.kind_ = Kind::Block;
    o.nvars_ = n;
    o.blocks_ = std::move(blocks);
    return o;
}

namespace {

inline Cmp cmp_int(long long a, long long b) {
    return a < b ? Cmp::LT : (a > b ? Cmp::GT : Cmp::EQ);
}

Cmp lex_cmp(const std::vector<int>& ranking, const Monomial& a, const Monomial& b) {
    for (int v : ranking) {
        if (a.e[v] != b.e[v]) return a.e[v] < b.e[v] ? Cmp::LT : Cmp::GT;
    }
    return Cmp::EQ;
}

Cmp grevlex_cmp(const std::vector<int>& ranking, const Monomial& a, const Monomial& b) {
    if (a.deg != b.deg) return a.deg < b.deg ? Cmp::LT : Cmp::GT;
    for (auto it = ranking.rbegin(); it != ranking.rend(); ++it) {
        int v = *it;
        if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? Cmp::LT : Cmp::GT;
    }
    return Cmp::EQ;
}

// grevlex restricted to a subset of variables (used by block orders)
Cmp grevlex_block_cmp(const std::vector<int>& block, const Monomial& a, const Monomial& b) {
    long long da = 0, db = 0;
    for (int v : block) {
        da += a.e[v];
        db += b.e[v];
    }
    if (da != db) return cmp_int(da, db);
    for (auto it = block.rbegin(); it != block.rend(); ++it) {
        int v = *it;
        if (a.e[v] != b.e[v]) return a.e[v] > b.e[v] ? Cmp::LT : Cmp::GT;
    }
    return Cmp::EQ;
}

}  // namespace

Cmp TermOrder::compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
        case Kind::Lex:
            return lex_cmp(ranking_, a, b);
        case Kind::GrevLex:
            return grevlex_cmp(ranking_, a, b);
        case Kind::Weight: {
            if (weights_small_) {
                long long da = 0, db = 0;
                for (int v = 0; v < nvars_; ++v) {
                    da += weights_ll_[v] * a.e[v];
                    db += weights_ll_[v] * b.e[v];
                }
                if (da != db) return cmp_int(da, db);
            } else {
                mpz_class da = 0, db = 0;
                for (int v = 0; v < nvars_; ++v) {
                    da += weights_[v] * a.e[v];
                    db += weights_[v] * b.e[v];
                }
                int c = cmp(da, db);
                if (c != 0) return c < 0 ? Cmp::LT : Cmp::GT;
            }
            return tie_->compare(a, b);
        }
        case Kind::Matrix: {
            if (rows_small_) {
                for (const auto& r : rows_ll_) {
                    long long da = 0, db = 0;
                    for (int v = 0; v < nvars_; ++v) {
                        da += r[v] * a.e[v];
                        db += r[v] * b.e[v];
                    }
                    if (da != db) return cmp_int(da, db);
                }
            } else {
                for (const auto& r : rows_) {
                    mpz_class da = 0, db = 0;
                    for (int v = 0; v < nvars_; ++v) {
                        da += r[v] * a.e[v];
                        db += r[v] * b.e[v];
                    }
                    int c = cmp(da, db);
                    if (c != 0) return c < 0 ? Cmp::LT : Cmp::GT;
                }
            }
            return Cmp::EQ;
        }
        case Kind::Block: {
            for (const auto& blk : blocks_) {
                Cmp c = grevlex_block_cmp(blk, a, b);
                if (c != Cmp::EQ) return c;
            }
            return Cmp::EQ;
        }
    }
    return Cmp::EQ;  // unreachable
}

bool TermOrder::eliminates(const std::vector<int>& killed) const {
    if (kind_ == Kind::Lex) {
        // lex eliminates a set iff the set is a prefix of the ranking
        std::vector<char> k(nvars_, 0);
        for (int v : killed) k[v] = 1;
        for (std::size_t i = 0; i < killed.size(); ++i)
            if (!k[ranking_[i]]) return false;
        return true;
    }
    if (kind_ == Kind::Block) {
        // killed variables must fill a prefix of blocks exactly
        std::vector<char> k(nvars_, 0);
        for (int v : killed) k[v] = 1;
        std::size_t remaining = killed.size();
        for (const auto& blk : blocks_) {
            if (remaining == 0) {
                for (int v : blk)
                    if (k[v]) return false;
                continue;
            }
            for (int v : blk) {
                if (!k[v]) return false;
                --remaining;
            }
        }
        return remaining == 0;
    }
    return false;
}

std::string TermOrder::describe() const {
    std::ostringstream os;
    switch (kind_) {
        case Kind::Lex:
        case Kind::GrevLex: {
            os << (kind_ == Kind::Lex ? "lex" : "grevlex") << ":perm=";
            for (std::size_t i = 0; i < ranking_.size(); ++i) {
                if (i) os << ",";
                os << ranking_[i];
            }
            break;
        }
        case Kind::Weight: {
            os << "weight:w=";
            for (std::size_t i = 0; i < weights_.size(); ++i) {
                if (i) os << ",";
                os << weights_[i].get_str();
            }
            os << ";tie=" << tie_->describe();
            break;
        }
        case Kind::Matrix: {
            os << "matrix:rows=";
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                if (i) os << "|";
                for (std::size_t j = 0; j < rows_[i].size(); ++j) {
                    if (j) os << ",";
                    os << rows_[i][j].get_str();
                }
            }
            break;
        }
        case Kind::Block: {
            os << "block:";
            for (std::size_t i = 0; i < blocks_.size(); ++i) {
                if (i) os << "|";
                for (std::size_t j = 0; j < blocks_[i].size(); ++j) {
                    if (j) os << ",";
                    os << blocks_[i][j];
                }
            }
            break;
        }
    }
    return os.str();
}

}  // namespace detgb
