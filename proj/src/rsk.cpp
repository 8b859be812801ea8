#include "detgb/rsk.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <unordered_map>

#include "detgb/combinat.hpp"
#include "detgb/field.hpp"
#include "detgb/linalg.hpp"
#include "detgb/poly.hpp"

namespace detgb {

bool minor_leq(const MinorIndex& a, const MinorIndex& b) {
    if (a.size() < b.size()) return false;
    for (int i = 0; i < b.size(); ++i)
        if (a.rows[i] > b.rows[i] || a.cols[i] > b.cols[i]) return false;
    return true;
}

bool Bitableau::is_standard() const {
    for (std::size_t k = 0; k + 1 < factors.size(); ++k)
        if (!minor_leq(factors[k], factors[k + 1])) return false;
    return true;
}

std::string Bitableau::to_string() const {
    if (factors.empty()) return "[]";
    std::string s;
    for (const auto& f : factors) s += f.to_string();
    return s;
}

namespace {

// Reads "n(,n)*" starting at i; stops before the first non-digit non-comma.
std::vector<int> parse_int_list(const std::string& s, std::size_t& i) {
    std::vector<int> out;
    for (;;) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i])))
            throw ParseError("bitableau: expected an index at position " + std::to_string(i));
        int v = 0;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
            v = v * 10 + (s[i++] - '0');
        out.push_back(v);
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i < s.size() && s[i] == ',') {
            ++i;
            continue;
        }
        return out;
    }
}

}  // namespace

Bitableau Bitableau::parse(const std::string& text) {
    std::size_t i = 0;
    auto skip = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip();
    Bitableau bt;
    // Lone "[]" denotes the empty product.
    if (i + 1 < text.size() && text[i] == '[' && text[i + 1] == ']') {
        i += 2;
        skip();
        if (i != text.size()) throw ParseError("bitableau: trailing input after []");
        return bt;
    }
    if (i == text.size()) throw ParseError("bitableau: empty input (the empty product is \"[]\")");
    while (i < text.size()) {
        if (text[i] != '[') throw ParseError("bitableau: expected '[' at position " + std::to_string(i));
        ++i;
        auto rows = parse_int_list(text, i);
        if (i >= text.size() || text[i] != '|')
            throw ParseError("bitableau: expected '|' at position " + std::to_string(i));
        ++i;
        auto cols = parse_int_list(text, i);
        if (i >= text.size() || text[i] != ']')
            throw ParseError("bitableau: expected ']' at position " + std::to_string(i));
        ++i;
        bt.factors.emplace_back(std::move(rows), std::move(cols));  // BadIndex on bad lists
        skip();
    }
    return bt;
}

TwoLineArray TwoLineArray::of(const Ring& grid, const Monomial& u) {
    if (!grid.is_grid()) throw DomainError("two-line array: not a grid ring");
    TwoLineArray a;
    a.entries.reserve(u.deg);
    for (int v = 0; v < u.nvars(); ++v) {
        auto [i, j] = grid.grid_pos(v);
        for (std::int32_t k = 0; k < u.e[v]; ++k) a.entries.emplace_back(i, j);
    }
    std::sort(a.entries.begin(), a.entries.end());
    return a;
}

Monomial TwoLineArray::monomial(const Ring& grid) const {
    Monomial u(grid.nvars());
    for (const auto& [i, j] : entries) {
        u.e[grid.grid_index(i, j)] += 1;
        u.deg += 1;
    }
    return u;
}

namespace {

// One dual-insertion step: x displaces the leftmost entry >= x of each row it
// passes (rows stay strictly increasing), and the row label i is recorded at
// the cell where the cascade settles.
void dual_insert(std::vector<std::vector<int>>& P, std::vector<std::vector<int>>& Q, int i, int x) {
    for (std::size_t r = 0;; ++r) {
        if (r == P.size()) {
            P.push_back({x});
            Q.push_back({i});
            return;
        }
        auto& row = P[r];
        auto pos = std::lower_bound(row.begin(), row.end(), x);
        if (pos == row.end()) {
            row.push_back(x);
            Q[r].push_back(i);
            return;
        }
        std::swap(x, *pos);
    }
}

}  // namespace

Bitableau rsk_forward(const Ring& grid, const Monomial& u) {
    const auto array = TwoLineArray::of(grid, u);
    std::vector<std::vector<int>> P, Q;
    // Within each row of positions, columns are inserted largest first.
    std::size_t lo = 0;
    while (lo < array.entries.size()) {
        std::size_t hi = lo;
        while (hi < array.entries.size() && array.entries[hi].first == array.entries[lo].first) ++hi;
        for (std::size_t k = hi; k > lo; --k)
            dual_insert(P, Q, array.entries[k - 1].first, array.entries[k - 1].second);
        lo = hi;
    }
    Bitableau bt;
    bt.factors.reserve(P.size());
    for (std::size_t r = 0; r < P.size(); ++r) bt.factors.emplace_back(Q[r], P[r]);
    return bt;
}

Monomial rsk_backward(const Ring& grid, const Bitableau& bt) {
    for (const auto& f : bt.factors) f.check(grid);
    if (!bt.is_standard()) throw NotStandard("bitableau factors do not weakly increase");

    std::vector<std::vector<int>> P, Q;
    P.reserve(bt.factors.size());
    Q.reserve(bt.factors.size());
    for (const auto& f : bt.factors) {
        Q.push_back(f.rows);
        P.push_back(f.cols);
    }

    TwoLineArray array;
    array.entries.reserve(bt.degree());
    while (!Q.empty()) {
        // The last-inserted cell: the bottommost occurrence of the largest
        // recorded label.  Strict rows put every occurrence at a row's end.
        int best = -1;
        std::size_t r = 0;
        for (std::size_t k = 0; k < Q.size(); ++k)
            if (Q[k].back() >= best) {
                best = Q[k].back();
                r = k;
            }
        const int i = Q[r].back();
        Q[r].pop_back();
        int y = P[r].back();
        P[r].pop_back();
        if (P[r].empty()) {
            P.erase(P.begin() + static_cast<std::ptrdiff_t>(r));
            Q.erase(Q.begin() + static_cast<std::ptrdiff_t>(r));
        }
        for (std::size_t rr = r; rr-- > 0;) {
            auto& row = P[rr];
            auto pos = std::upper_bound(row.begin(), row.end(), y);
            if (pos == row.begin()) throw NotStandard("bitableau does not come from an insertion");
            --pos;
            std::swap(y, *pos);
        }
        array.entries.emplace_back(i, y);
    }
    return array.monomial(grid);
}

int schensted_width(const Ring& grid, const Monomial& u) {
    const auto bt = rsk_forward(grid, u);
    return bt.empty() ? 0 : bt.factors.front().size();
}

std::vector<Bitableau> enumerate_standard(const Ring& grid, int degree) {
    if (degree < 0) throw DomainError("enumerate_standard: degree must be >= 0");
    const int m = grid.grid_m(), n = grid.grid_n();
    std::vector<MinorIndex> minors;
    for (int s = 1; s <= std::min(m, n); ++s)
        for (const auto& r0 : combinations(m, s))
            for (const auto& c0 : combinations(n, s)) {
                std::vector<int> r(r0), c(c0);
                for (auto& v : r) ++v;
                for (auto& v : c) ++v;
                minors.emplace_back(std::move(r), std::move(c));
            }

    std::vector<Bitableau> out;
    Bitableau cur;
    std::function<void(int)> grow = [&](int left) {
        if (left == 0) {
            out.push_back(cur);
            return;
        }
        for (const auto& g : minors) {
            if (g.size() > left) continue;
            if (!cur.factors.empty() && !minor_leq(cur.factors.back(), g)) continue;
            cur.factors.push_back(g);
            grow(left - g.size());
            cur.factors.pop_back();
        }
    };
    grow(degree);
    std::sort(out.begin(), out.end(), [](const Bitableau& a, const Bitableau& b) {
        return a.to_string() < b.to_string();
    });
    return out;
}

namespace {

std::string monomial_string(const Ring& grid, const Monomial& u) {
    if (u.is_one()) return "1";
    std::string s;
    for (int v = 0; v < u.nvars(); ++v) {
        if (u.e[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += grid.name(v);
        if (u.e[v] > 1) s += "^" + std::to_string(u.e[v]);
    }
    return s;
}

}  // namespace

Report verify_rsk_image(const Ring& grid, int t, int degree) {
    if (t < 1 || degree < 0) throw DomainError("verify_rsk_image: need t >= 1 and degree >= 0");

    Report rep;
    rep.claim = "insertion images of standard products with first factor of size >= t "
                "fill the degree slice of the diagonal-product ideal";
    rep.parameters["grid"] = std::to_string(grid.grid_m()) + "x" + std::to_string(grid.grid_n());
    rep.parameters["minors"] = std::to_string(t);
    rep.parameters["degree"] = std::to_string(degree);
    rep.field = "none";
    rep.mode = "exhaustive";

    std::set<std::vector<std::int32_t>> image;
    for (const auto& bt : enumerate_standard(grid, degree)) {
        if (bt.empty() || bt.factors.front().size() < t) continue;
        image.insert(rsk_backward(grid, bt).e);
    }

    const auto ideal = diagonal_ideal(t, grid, /*antidiagonal=*/false);
    std::set<std::vector<std::int32_t>> slice;
    for_each_composition(degree, grid.nvars(), [&](const std::vector<int>& exps) {
        Monomial u(std::vector<std::int32_t>(exps.begin(), exps.end()));
        if (ideal.contains(u)) slice.insert(u.e);
    });

    rep.parameters["image_size"] = std::to_string(image.size());
    rep.parameters["slice_size"] = std::to_string(slice.size());
    rep.outcome = image == slice ? "confirmed" : "refuted";
    if (image != slice) {
        for (const auto& e : image)
            if (!slice.count(e)) {
                rep.notes.push_back("image not in slice: " + monomial_string(grid, Monomial(e)));
                break;
            }
        for (const auto& e : slice)
            if (!image.count(e)) {
                rep.notes.push_back("slice not in image: " + monomial_string(grid, Monomial(e)));
                break;
            }
    }
    return rep;
}

Report standard_basis_rank_check(const Ring& grid, int degree, std::uint32_t p) {
    if (degree < 0) throw DomainError("standard_basis_rank_check: degree must be >= 0");
    const FieldP field(p);

    Report rep;
    rep.claim = "products of minors from standard bitableaux are a linear basis of the degree slice";
    rep.parameters["grid"] = std::to_string(grid.grid_m()) + "x" + std::to_string(grid.grid_n());
    rep.parameters["degree"] = std::to_string(degree);
    rep.field = field.describe();
    rep.mode = "exhaustive";

    std::unordered_map<Monomial, std::size_t, MonomialHash> column;
    for_each_composition(degree, grid.nvars(), [&](const std::vector<int>& exps) {
        Monomial u(std::vector<std::int32_t>(exps.begin(), exps.end()));
        const auto idx = column.size();
        column.emplace(std::move(u), idx);
    });

    const auto bts = enumerate_standard(grid, degree);
    std::vector<std::vector<std::uint32_t>> mat;
    mat.reserve(bts.size());
    for (const auto& bt : bts) {
        auto prod = Poly<FieldP>::constant(field, grid.nvars(), field.one());
        for (const auto& f : bt.factors) prod = prod * minor_poly(field, grid, f);
        std::vector<std::uint32_t> row(column.size(), 0);
        for (const auto& term : prod.terms()) row[column.at(term.m)] = term.c;
        mat.push_back(std::move(row));
    }

    const int rank = gfp_rank(mat, p);
    rep.parameters["standard_count"] = std::to_string(bts.size());
    rep.parameters["monomial_count"] = std::to_string(column.size());
    rep.parameters["rank"] = std::to_string(rank);
    rep.outcome = (bts.size() == column.size() && static_cast<std::size_t>(rank) == column.size())
                      ? "confirmed"
                      : "refuted";
    return rep;
}

}  // namespace detgb
