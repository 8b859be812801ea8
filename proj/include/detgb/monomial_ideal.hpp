#pragma once
// Monomial ideals are kept as their unique minimal generating set, sorted in
// the canonical term order (ascending), so equality is plain comparison.

#include <algorithm>
#include <string>
#include <vector>

#include "detgb/monomial.hpp"
#include "detgb/ring.hpp"

namespace detgb {

class MonomialIdeal {
public:
    MonomialIdeal() = default;
    MonomialIdeal(Ring ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
        set_generators(std::move(gens));
    }
    MonomialIdeal(int nvars, std::vector<Monomial> gens)
        : MonomialIdeal(Ring::indexed("x", nvars), std::move(gens)) {}

    const Ring& ring() const { return ring_; }
    int nvars() const { return ring_.nvars(); }
    const std::vector<Monomial>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }

    /// Membership: some minimal generator divides m.
    bool contains(const Monomial& m) const {
        for (const auto& g : gens_)
            if (g.divides(m)) return true;
        return false;
    }

    bool contains(const MonomialIdeal& other) const {
        for (const auto& g : other.gens_)
            if (!contains(g)) return false;
        return true;
    }

    bool is_squarefree() const {
        return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.squarefree(); });
    }

    /// Largest exponent appearing in any generator.
    int max_exponent() const {
        int e = 0;
        for (const auto& g : gens_)
            for (auto x : g.e) e = std::max(e, static_cast<int>(x));
        return e;
    }

    bool operator==(const MonomialIdeal& o) const { return ring_ == o.ring_ && gens_ == o.gens_; }
    bool operator!=(const MonomialIdeal& o) const { return !(*this == o); }

    /// Stable string key (used for hashing/memoization and symmetry dedup).
    std::string key() const {
        std::string s;
        for (const auto& g : gens_) {
            for (int v = 0; v < g.nvars(); ++v) {
                if (g.e[v] == 0) continue;
                s += std::to_string(v);
                s += '^';
                s += std::to_string(g.e[v]);
                s += ' ';
            }
            s += ';';
        }
        return s;
    }

private:
    void set_generators(std::vector<Monomial> gens) {
        // drop duplicates and non-minimal generators, keep canonical sort
        std::sort(gens.begin(), gens.end(), canonical_less);
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::vector<Monomial> min;
        for (const auto& g : gens) {
            bool redundant = false;
            for (const auto& h : min) {
                if (h.divides(g)) {
                    redundant = true;
                    break;
                }
            }
            if (!redundant) min.push_back(g);
        }
        gens_ = std::move(min);
    }

    Ring ring_;
    std::vector<Monomial> gens_;
};

}  // namespace detgb
