#include "detgb/hilbert.hpp"

#include <algorithm>
#include <unordered_map>

namespace detgb {

namespace {

using ZPoly = std::vector<mpz_class>;  // coefficients of a polynomial in t

void zp_add(ZPoly& a, const ZPoly& b) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
}

ZPoly zp_shift(const ZPoly& a, int k) {  // multiply by t^k
    ZPoly r(a.size() + k, 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i + k] = a[i];
    return r;
}

void zp_trim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

struct Key {
    std::vector<Monomial> gens;
    bool operator==(const Key& o) const { return gens == o.gens; }
};

struct KeyHash {
    std::size_t operator()(const Key& k) const {
        std::size_t h = 0x9e3779b97f4a7c15ULL;
        for (const auto& g : k.gens) {
            h ^= g.hash() + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return h;
    }
};

class NumeratorComputer {
public:
    explicit NumeratorComputer(int nvars) : nvars_(nvars) {}

    ZPoly run(std::vector<Monomial> gens) {
        minimalize(gens);
        return compute(std::move(gens));
    }

private:
    int nvars_;
    std::unordered_map<Key, ZPoly, KeyHash> memo_;

    static void minimalize(std::vector<Monomial>& gens) {
        std::sort(gens.begin(), gens.end(), canonical_less);
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        std::vector<Monomial> min;
        for (const auto& g : gens) {
            bool red = false;
            for (const auto& h : min)
                if (h.divides(g)) {
                    red = true;
                    break;
                }
            if (!red) min.push_back(g);
        }
        gens = std::move(min);
    }

    ZPoly compute(std::vector<Monomial> gens) {
        if (gens.empty()) return ZPoly{1};
        if (gens.size() == 1 && gens[0].is_one()) return ZPoly{};  // unit ideal: K = 0

        // pairwise coprime generators admit the closed form prod (1 - t^deg)
        bool coprime = true;
        for (std::size_t i = 0; i < gens.size() && coprime; ++i)
            for (std::size_t j = i + 1; j < gens.size(); ++j)
                if (!Monomial::coprime(gens[i], gens[j])) {
                    coprime = false;
                    break;
                }
        if (coprime) {
            ZPoly k{1};
            for (const auto& g : gens) {
                ZPoly f(static_cast<std::size_t>(g.deg) + 1, 0);
                f[0] = 1;
                f[g.deg] -= 1;
                // k *= f
                ZPoly r(k.size() + f.size() - 1, 0);
                for (std::size_t a = 0; a < k.size(); ++a)
                    for (std::size_t b = 0; b < f.size(); ++b) r[a + b] += k[a] * f[b];
                zp_trim(r);
                k = std::move(r);
            }
            return k;
        }

        Key key{gens};
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;

        // pivot: the variable occurring in the most minimal generators
        int pivot = -1, best = -1;
        for (int v = 0; v < nvars_; ++v) {
            int cnt = 0;
            for (const auto& g : gens)
                if (g.e[v] > 0) ++cnt;
            if (cnt > best) {
                best = cnt;
                pivot = v;
            }
        }

        // M : x  (divide generators by x where possible)
        std::vector<Monomial> colon;
        colon.reserve(gens.size());
        for (const auto& g : gens) {
            Monomial h = g;
            if (h.e[pivot] > 0) {
                h.e[pivot] -= 1;
                h.deg -= 1;
            }
            colon.push_back(std::move(h));
        }
        minimalize(colon);

        // M + (x)  (generators not involving x, plus x itself)
        std::vector<Monomial> plus;
        plus.reserve(gens.size() + 1);
        for (const auto& g : gens)
            if (g.e[pivot] == 0) plus.push_back(g);
        plus.push_back(Monomial::variable(nvars_, pivot));

        ZPoly result = zp_shift(compute(std::move(colon)), 1);
        zp_add(result, compute(std::move(plus)));
        zp_trim(result);

        memo_.emplace(std::move(key), result);
        return result;
    }
};

}  // namespace

std::vector<mpz_class> hilbert_numerator(const MonomialIdeal& M) {
    NumeratorComputer nc(M.ring().nvars());
    return nc.run(M.gens());
}

HilbertData hilbert_data(const MonomialIdeal& M) {
    HilbertData out;
    out.numerator = hilbert_numerator(M);
    int n = M.ring().nvars();
    if (out.numerator.empty()) {  // unit ideal
        out.dim = -1;
        out.degree = 0;
        return out;
    }
    // strip factors of (1-t): K(1) == 0 means divisible
    ZPoly k = out.numerator;
    int strips = 0;
    for (;;) {
        mpz_class at1 = 0;
        for (const auto& c : k) at1 += c;
        if (at1 != 0) {
            out.degree = at1;
            break;
        }
        // synthetic division by (1-t): if K = (1-t) Q then
        // q_i = k_0 + k_1 + ... + k_i accumulated with sign handling:
        // K(t) = Q(t) - t Q(t) => k_i = q_i - q_{i-1} => q_i = q_{i-1} + k_i
        ZPoly q(k.size() - 1, 0);
        mpz_class acc = 0;
        for (std::size_t i = 0; i + 1 < k.size(); ++i) {
            acc += k[i];
            q[i] = acc;
        }
        zp_trim(q);
        k = std::move(q);
        ++strips;
        if (k.empty()) throw Error("hilbert: numerator unexpectedly vanished");
    }
    out.dim = n - strips;
    return out;
}

std::vector<mpz_class> hilbert_function(const MonomialIdeal& M, int dmax) {
    ZPoly k = hilbert_numerator(M);
    int n = M.ring().nvars();
    std::vector<mpz_class> hf(static_cast<std::size_t>(dmax) + 1, 0);
    // HF(d) = sum_j k_j * C(n-1+d-j, n-1)
    for (int d = 0; d <= dmax; ++d) {
        mpz_class v = 0;
        for (std::size_t j = 0; j < k.size(); ++j) {
            if (static_cast<int>(j) > d) break;
            v += k[j] * binomial(n - 1 + d - static_cast<int>(j), n - 1);
        }
        hf[d] = v;
    }
    return hf;
}

}  // namespace detgb
