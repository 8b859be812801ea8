#pragma once
// Tiny enumeration helpers used throughout: k-subsets and permutations.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

namespace detgb {

/// All k-element subsets of {0,...,n-1} in lexicographic order.
inline std::vector<std::vector<int>> combinations(int n, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > n) return out;
    std::vector<int> c(k);
    std::iota(c.begin(), c.end(), 0);
    for (;;) {
        out.push_back(c);
        int i = k - 1;
        while (i >= 0 && c[i] == n - k + i) --i;
        if (i < 0) break;
        ++c[i];
        for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
    }
    return out;
}

/// Visit all permutations of {0,...,n-1} in lexicographic order.
inline void for_each_permutation(int n, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        fn(p);
    } while (std::next_permutation(p.begin(), p.end()));
}

inline long long factorial(int n) {
    long long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

/// Visit every way of writing `total` as an ordered sum of `parts` nonnegative
/// integers (equivalently: every exponent vector of a fixed degree), in
/// lexicographic order on the vector.
inline void for_each_composition(int total, int parts,
                                 const std::function<void(const std::vector<int>&)>& fn) {
    if (parts <= 0) {
        if (total == 0) fn({});
        return;
    }
    std::vector<int> v(parts, 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == parts - 1) {
            v[pos] = left;
            fn(v);
            return;
        }
        for (int k = 0; k <= left; ++k) {
            v[pos] = k;
            rec(pos + 1, left - k);
        }
    };
    rec(0, total);
}

}  // namespace detgb
