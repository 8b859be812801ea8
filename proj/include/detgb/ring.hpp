#pragma once
// Polynomial ring descriptors.  A ring is a variable count plus printable
// names; grid rings additionally know their m x n layout so that determinantal
// helpers can address variables as x[i,j].

#include <string>
#include <vector>

#include "detgb/common.hpp"

namespace detgb {

class Ring {
public:
    Ring() = default;
    Ring(int nvars, std::vector<std::string> names) : nvars_(nvars), names_(std::move(names)) {
        if (nvars_ < 0 || names_.size() != static_cast<std::size_t>(nvars_))
            throw DomainError("ring: name list does not match variable count");
    }

    /// m x n grid of variables x[i,j], 1-based, enumerated row-major:
    /// x[1,1], x[1,2], ..., x[1,n], x[2,1], ..., x[m,n].
    static Ring grid(int m, int n) {
        if (m < 1 || n < 1) throw DomainError("ring: grid dimensions must be positive");
        std::vector<std::string> names;
        names.reserve(static_cast<std::size_t>(m) * n);
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= n; ++j)
                names.push_back("x[" + std::to_string(i) + "," + std::to_string(j) + "]");
        Ring r(m * n, std::move(names));
        r.grid_m_ = m;
        r.grid_n_ = n;
        return r;
    }

    /// n variables named prefix[1], ..., prefix[n].
    static Ring indexed(const std::string& prefix, int n) {
        std::vector<std::string> names;
        names.reserve(n);
        for (int i = 1; i <= n; ++i) names.push_back(prefix + "[" + std::to_string(i) + "]");
        return Ring(n, std::move(names));
    }

    /// Concatenation: variables of `a` first, then variables of `b`.
    static Ring concat(const Ring& a, const Ring& b) {
        std::vector<std::string> names = a.names_;
        names.insert(names.end(), b.names_.begin(), b.names_.end());
        return Ring(a.nvars_ + b.nvars_, std::move(names));
    }

    int nvars() const { return nvars_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& name(int v) const { return names_.at(v); }

    bool is_grid() const { return grid_m_ > 0; }
    int grid_m() const { return grid_m_; }
    int grid_n() const { return grid_n_; }

    /// Flat index of x[i,j] (1-based i, j).
    int grid_index(int i, int j) const {
        if (!is_grid() || i < 1 || i > grid_m_ || j < 1 || j > grid_n_)
            throw DomainError("ring: grid index out of range");
        return (i - 1) * grid_n_ + (j - 1);
    }

    std::pair<int, int> grid_pos(int v) const {
        if (!is_grid()) throw DomainError("ring: not a grid ring");
        return {v / grid_n_ + 1, v % grid_n_ + 1};
    }

    bool operator==(const Ring& o) const { return nvars_ == o.nvars_ && names_ == o.names_; }
    bool operator!=(const Ring& o) const { return !(*this == o); }

private:
    int nvars_ = 0;
    std::vector<std::string> names_;
    int grid_m_ = 0, grid_n_ = 0;
};

}  // namespace detgb
