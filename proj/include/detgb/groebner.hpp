#pragma once
// Buchberger's algorithm with the Gebauer-Moeller pair update (coprimality
// and chain criteria), deterministic normal-strategy selection (minimal lcm
// degree first, FIFO among equals), full interreduction to the unique reduced
// basis, and block-order elimination on top.

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "detgb/monomial_ideal.hpp"
#include "detgb/poly.hpp"

namespace detgb {

struct BudgetExceeded : Error {
    using Error::Error;
};

struct GBStats {
    std::size_t pairs_created = 0;
    std::size_t pairs_reduced = 0;
    std::size_t skip_coprime = 0;
    std::size_t skip_chain = 0;
    std::size_t skip_lcm_multiple = 0;
    std::size_t reductions_to_zero = 0;
    std::size_t basis_size = 0;
};

struct GBOptions {
    double budget_seconds = 0;       // 0 = unlimited
    std::size_t max_basis = 0;       // 0 = unlimited
    std::vector<std::string>* trace = nullptr;  // line-oriented event log
    GBStats* stats = nullptr;
};

namespace gb_detail {

template <class F>
using TermVec = std::vector<Term<F>>;  // sorted descending under the active order

template <class F>
struct Entry {
    TermVec<F> t;
    Monomial lm;
    typename F::Elem lc;
    std::uint64_t mask = 0;
};

template <class F>
TermVec<F> to_working(const Poly<F>& p, const TermOrder& ord) {
    TermVec<F> v(p.terms().begin(), p.terms().end());
    std::sort(v.begin(), v.end(),
              [&ord](const Term<F>& a, const Term<F>& b) { return ord.greater(a.m, b.m); });
    return v;
}

template <class F>
Poly<F> to_poly(const F& field, int nvars, TermVec<F> v) {
    return Poly<F>::from_terms(field, nvars, std::move(v));
}

/// r := a[offset..] - c * x^s * b   (all vectors sorted descending under ord)
template <class F>
TermVec<F> subtract_shifted(const F& K, const TermOrder& ord, const TermVec<F>& a,
                            std::size_t offset, const typename F::Elem& c, const Monomial& s,
                            const TermVec<F>& b) {
    TermVec<F> neg;  // -c * x^s * b, shifted once up front
    neg.reserve(b.size());
    for (const auto& t : b) neg.push_back({K.neg(K.mul(c, t.c)), t.m * s});

    TermVec<F> r;
    r.reserve(a.size() - offset + neg.size());
    std::size_t i = offset, j = 0;
    while (i < a.size() || j < neg.size()) {
        if (j == neg.size()) {
            r.push_back(a[i++]);
        } else if (i == a.size()) {
            r.push_back(std::move(neg[j++]));
        } else {
            Cmp cc = ord.compare(a[i].m, neg[j].m);
            if (cc == Cmp::GT) {
                r.push_back(a[i++]);
            } else if (cc == Cmp::LT) {
                r.push_back(std::move(neg[j++]));
            } else {
                auto v = K.add(a[i].c, neg[j].c);
                if (!K.is_zero(v)) r.push_back({std::move(v), a[i].m});
                ++i;
                ++j;
            }
        }
    }
    return r;
}

/// Full normal form of h against the entries listed in `by` (indices into
/// `basis` tried in the given sequence for every term).
template <class F>
TermVec<F> reduce_full(const F& K, const TermOrder& ord, TermVec<F> h,
                       const std::vector<Entry<F>>& basis, const std::vector<std::size_t>& by) {
    TermVec<F> out;
    std::size_t cur = 0;
    while (cur < h.size()) {
        const Monomial& u = h[cur].m;
        std::uint64_t umask = u.support_mask();
        const Entry<F>* red = nullptr;
        for (std::size_t idx : by) {
            const Entry<F>& g = basis[idx];
            if ((g.mask & ~umask) != 0 || g.lm.deg > u.deg) continue;
            if (g.lm.divides(u)) {
                red = &g;
                break;
            }
        }
        if (!red) {
            out.push_back(std::move(h[cur]));
            ++cur;
            continue;
        }
        auto c = K.div(h[cur].c, red->lc);
        Monomial shift = u.divide(red->lm);
        h = subtract_shifted(K, ord, h, cur, c, shift, red->t);
        cur = 0;
    }
    return out;
}

}  // namespace gb_detail

/// A reduced Groebner basis: monic elements, sorted by leading monomial
/// ascending under `order`, no term of any element divisible by the leading
/// monomial of another.
template <class F>
struct GroebnerBasis {
    TermOrder order;
    std::vector<Poly<F>> elements;
};

template <class F>
class BuchbergerRun {
public:
    BuchbergerRun(F field, int nvars, const TermOrder& ord, GBOptions opts)
        : K_(field), nvars_(nvars), ord_(ord), opts_(opts) {
        if (opts_.budget_seconds > 0)
            deadline_ = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(opts_.budget_seconds));
    }

    std::vector<Poly<F>> run(const std::vector<Poly<F>>& gens) {
        for (const auto& g : gens) {
            if (g.is_zero()) continue;
            add_element(gb_detail::to_working(g, ord_));
        }
        while (!queue_.empty()) {
            check_budget();
            auto it = queue_.begin();
            auto [deg, seq] = *it;
            queue_.erase(it);
            auto pit = pair_by_seq_.find(seq);
            if (pit == pair_by_seq_.end()) continue;
            auto [i, j, lcm] = pit->second;
            pair_by_seq_.erase(pit);
            process_pair(i, j, lcm, deg);
        }
        return interreduce();
    }

    GBStats stats() const { return stats_; }

private:
    using Elem = typename F::Elem;
    using Entry = gb_detail::Entry<F>;

    F K_;
    int nvars_;
    const TermOrder& ord_;
    GBOptions opts_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;

    std::vector<Entry> basis_;
    std::vector<std::size_t> by_lm_;  // basis indices sorted by lm ascending
    std::set<std::pair<int, std::size_t>> queue_;  // (lcm degree, sequence)
    std::map<std::size_t, std::tuple<std::size_t, std::size_t, Monomial>> pair_by_seq_;
    std::size_t next_seq_ = 0;
    GBStats stats_;

    void check_budget() {
        if (deadline_ && std::chrono::steady_clock::now() > *deadline_)
            throw BudgetExceeded("basis computation exceeded its time budget");
        if (opts_.max_basis && basis_.size() > opts_.max_basis)
            throw BudgetExceeded("basis computation exceeded its size cap");
    }

    void trace(const std::string& line) {
        if (opts_.trace) opts_.trace->push_back(line);
    }

    void insert_sorted(std::size_t idx) {
        auto pos = std::lower_bound(by_lm_.begin(), by_lm_.end(), idx,
                                    [this](std::size_t a, std::size_t b) {
                                        return ord_.less(basis_[a].lm, basis_[b].lm);
                                    });
        by_lm_.insert(pos, idx);
    }

    void process_pair(std::size_t i, std::size_t j, const Monomial& lcm, int deg) {
        ++stats_.pairs_reduced;
        const Entry& fi = basis_[i];
        const Entry& fj = basis_[j];
        // S(i,j) = x^(L/lmi) fi / lci - x^(L/lmj) fj / lcj
        gb_detail::TermVec<F> s;
        {
            Monomial si = lcm.divide(fi.lm);
            Elem ci = K_.inv(fi.lc);
            s.reserve(fi.t.size());
            for (const auto& t : fi.t) s.push_back({K_.mul(t.c, ci), t.m * si});
            Monomial sj = lcm.divide(fj.lm);
            Elem cj = K_.inv(fj.lc);
            s = gb_detail::subtract_shifted(K_, ord_, s, 0, cj, sj, fj.t);
        }
        auto nf = gb_detail::reduce_full(K_, ord_, std::move(s), basis_, by_lm_);
        if (nf.empty()) {
            ++stats_.reductions_to_zero;
            trace("pair " + std::to_string(i) + " " + std::to_string(j) + " deg=" +
                  std::to_string(deg) + " zero");
            return;
        }
        trace("pair " + std::to_string(i) + " " + std::to_string(j) + " deg=" + std::to_string(deg) +
              " new=" + std::to_string(basis_.size()));
        add_element(std::move(nf));
    }

    void add_element(gb_detail::TermVec<F> t) {
        if (t.empty()) return;
        check_budget();
        Entry e;
        Elem inv = K_.inv(t.front().c);
        for (auto& term : t) term.c = K_.mul(term.c, inv);  // monic
        e.lm = t.front().m;
        e.lc = K_.one();
        e.mask = e.lm.support_mask();
        e.t = std::move(t);
        std::size_t k = basis_.size();
        basis_.push_back(std::move(e));
        insert_sorted(k);
        stats_.basis_size = basis_.size();
        update_pairs(k);
    }

    // Gebauer-Moeller update for new element k.
    void update_pairs(std::size_t k) {
        const Monomial& lmk = basis_[k].lm;

        struct Cand {
            std::size_t i;
            Monomial lcm;
            bool alive = true;
        };
        std::vector<Cand> cand;
        cand.reserve(k);
        for (std::size_t i = 0; i < k; ++i)
            cand.push_back({i, Monomial::lcm(basis_[i].lm, lmk)});

        // M criterion: drop (i,k) when another candidate's lcm properly divides its lcm.
        for (auto& a : cand) {
            for (const auto& b : cand) {
                if (a.i == b.i || !b.alive) continue;
                if (b.lcm != a.lcm && b.lcm.divides(a.lcm)) {
                    a.alive = false;
                    ++stats_.skip_lcm_multiple;
                    trace("pair " + std::to_string(a.i) + " " + std::to_string(k) + " skip-lcm");
                    break;
                }
            }
        }

        // F criterion: one representative per lcm value; coprime representative
        // kills the whole class (Buchberger's first criterion).
        std::map<std::string, std::vector<Cand*>> classes;
        for (auto& a : cand) {
            if (!a.alive) continue;
            std::string key;
            key.reserve(a.lcm.e.size() * 3);
            for (auto x : a.lcm.e) {
                key += std::to_string(x);
                key += ',';
            }
            classes[key].push_back(&a);
        }
        for (auto& [key, cls] : classes) {
            bool coprime = false;
            for (auto* a : cls)
                if (Monomial::coprime(basis_[a->i].lm, lmk)) {
                    coprime = true;
                    break;
                }
            if (coprime) {
                for (auto* a : cls) {
                    a->alive = false;
                    trace("pair " + std::to_string(a->i) + " " + std::to_string(k) + " skip-coprime");
                }
                stats_.skip_coprime += cls.size();
                continue;
            }
            for (std::size_t x = 1; x < cls.size(); ++x) {  // keep min index
                cls[x]->alive = false;
                ++stats_.skip_lcm_multiple;
                trace("pair " + std::to_string(cls[x]->i) + " " + std::to_string(k) + " skip-dup-lcm");
            }
        }

        // B (chain) criterion on surviving old pairs.
        for (auto it = pair_by_seq_.begin(); it != pair_by_seq_.end();) {
            auto& [i, j, lcm] = it->second;
            bool kill = lmk.divides(lcm) && Monomial::lcm(basis_[i].lm, lmk) != lcm &&
                        Monomial::lcm(basis_[j].lm, lmk) != lcm;
            if (kill) {
                ++stats_.skip_chain;
                trace("pair " + std::to_string(i) + " " + std::to_string(j) + " skip-chain");
                queue_.erase({lcm.deg, it->first});
                it = pair_by_seq_.erase(it);
            } else {
                ++it;
            }
        }

        for (const auto& a : cand) {
            if (!a.alive) continue;
            ++stats_.pairs_created;
            std::size_t seq = next_seq_++;
            queue_.insert({a.lcm.deg, seq});
            pair_by_seq_[seq] = {a.i, k, a.lcm};
        }
    }

    std::vector<Poly<F>> interreduce() {
        // discard elements whose lead is divisible by another lead
        std::vector<std::size_t> keep;
        for (std::size_t idx : by_lm_) {
            bool dominated = false;
            for (std::size_t other : keep) {
                if (basis_[other].lm.divides(basis_[idx].lm)) {
                    dominated = true;
                    break;
                }
            }
            if (!dominated) keep.push_back(idx);
        }
        // fully reduce every survivor against the others
        std::vector<Entry> reduced;
        for (std::size_t pos = 0; pos < keep.size(); ++pos) {
            std::vector<Entry> others;
            std::vector<std::size_t> by;
            for (std::size_t q = 0; q < keep.size(); ++q) {
                if (q == pos) continue;
                others.push_back(basis_[keep[q]]);
                by.push_back(others.size() - 1);
            }
            auto nf = gb_detail::reduce_full(K_, ord_, basis_[keep[pos]].t, others, by);
            if (nf.empty()) continue;  // redundant element
            Entry e;
            Elem inv = K_.inv(nf.front().c);
            for (auto& t : nf) t.c = K_.mul(t.c, inv);
            e.lm = nf.front().m;
            e.lc = K_.one();
            e.mask = e.lm.support_mask();
            e.t = std::move(nf);
            reduced.push_back(std::move(e));
        }
        std::sort(reduced.begin(), reduced.end(),
                  [this](const Entry& a, const Entry& b) { return ord_.less(a.lm, b.lm); });
        std::vector<Poly<F>> out;
        out.reserve(reduced.size());
        for (auto& e : reduced) out.push_back(gb_detail::to_poly(K_, nvars_, std::move(e.t)));
        return out;
    }
};

/// Reduced Groebner basis of the ideal generated by `gens`.
template <class F>
GroebnerBasis<F> buchberger(const std::vector<Poly<F>>& gens, const TermOrder& ord,
                            const GBOptions& opts = {}) {
    F field;
    int nvars = ord.nvars();
    bool found = false;
    for (const auto& g : gens) {
        if (g.nvars() != ord.nvars()) throw RingMismatch("generators do not match order's ring");
        if (found && !field.same(g.field())) throw FieldMismatch("generators over different fields");
        field = g.field();
        nvars = g.nvars();
        found = true;
    }
    if (!found) throw DomainError("buchberger: empty generator list");
    BuchbergerRun<F> run(field, nvars, ord, opts);
    GroebnerBasis<F> gb{ord, run.run(gens)};
    if (opts.stats) *opts.stats = run.stats();
    return gb;
}

/// Full normal form of f against the polynomials G (tried first-match in the
/// given sequence, per term).  For a reduced basis the sequence is its sorted
/// element order, which pins the reducer selection deterministically.
template <class F>
Poly<F> normal_form(const Poly<F>& f, const std::vector<Poly<F>>& G, const TermOrder& ord) {
    std::vector<gb_detail::Entry<F>> basis;
    std::vector<std::size_t> by;
    for (const auto& g : G) {
        if (g.is_zero()) continue;
        gb_detail::Entry<F> e;
        e.t = gb_detail::to_working(g, ord);
        e.lm = e.t.front().m;
        e.lc = e.t.front().c;
        e.mask = e.lm.support_mask();
        basis.push_back(std::move(e));
        by.push_back(basis.size() - 1);
    }
    auto nf = gb_detail::reduce_full(f.field(), ord, gb_detail::to_working(f, ord), basis, by);
    return gb_detail::to_poly(f.field(), f.nvars(), std::move(nf));
}

template <class F>
Poly<F> normal_form(const Poly<F>& f, const GroebnerBasis<F>& gb) {
    return normal_form(f, gb.elements, gb.order);
}

/// Buchberger's criterion as a test: every S-polynomial of the given set
/// reduces to zero (coprime-lead pairs are skipped soundly).
template <class F>
bool is_groebner_basis(const std::vector<Poly<F>>& G, const TermOrder& ord,
                       const GBOptions& opts = {}) {
    std::vector<const Poly<F>*> gs;
    for (const auto& g : G)
        if (!g.is_zero()) gs.push_back(&g);
    if (gs.size() <= 1) return true;

    auto deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(opts.budget_seconds));

    std::vector<gb_detail::Entry<F>> basis;
    std::vector<std::size_t> by;
    for (const auto* g : gs) {
        gb_detail::Entry<F> e;
        e.t = gb_detail::to_working(*g, ord);
        e.lm = e.t.front().m;
        e.lc = e.t.front().c;
        e.mask = e.lm.support_mask();
        basis.push_back(std::move(e));
        by.push_back(basis.size() - 1);
    }
    const F& K = gs.front()->field();
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (opts.budget_seconds > 0 && std::chrono::steady_clock::now() > deadline)
            throw BudgetExceeded("S-pair check ran over its time budget");
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (Monomial::coprime(basis[i].lm, basis[j].lm)) continue;
            Monomial lcm = Monomial::lcm(basis[i].lm, basis[j].lm);
            gb_detail::TermVec<F> s;
            Monomial si = lcm.divide(basis[i].lm);
            auto ci = K.inv(basis[i].lc);
            for (const auto& t : basis[i].t) s.push_back({K.mul(t.c, ci), t.m * si});
            Monomial sj = lcm.divide(basis[j].lm);
            auto cj = K.inv(basis[j].lc);
            s = gb_detail::subtract_shifted(K, ord, s, 0, cj, sj, basis[j].t);
            if (!gb_detail::reduce_full(K, ord, std::move(s), basis, by).empty()) return false;
        }
    }
    return true;
}

/// Interreduce an arbitrary generating set of an ideal *that is already known
/// to be a Groebner basis* into the unique reduced one.
template <class F>
std::vector<Poly<F>> reduce_basis(const std::vector<Poly<F>>& G, const TermOrder& ord,
                                  const GBOptions& = {}) {
    std::vector<Poly<F>> gs;
    for (const auto& g : G)
        if (!g.is_zero()) gs.push_back(g);
    // drop lead-dominated elements (stable: scan in ascending lead order)
    std::vector<std::size_t> idx(gs.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return ord.less(gs[a].leading_monomial(ord), gs[b].leading_monomial(ord));
    });
    std::vector<Poly<F>> kept;
    for (std::size_t i : idx) {
        bool dominated = false;
        for (const auto& h : kept)
            if (h.leading_monomial(ord).divides(gs[i].leading_monomial(ord))) {
                dominated = true;
                break;
            }
        if (!dominated) kept.push_back(gs[i]);
    }
    std::vector<Poly<F>> out;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<Poly<F>> others;
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        Poly<F> nf = normal_form(kept[i], others, ord);
        if (!nf.is_zero()) out.push_back(nf.monic(ord));
    }
    std::sort(out.begin(), out.end(), [&](const Poly<F>& a, const Poly<F>& b) {
        return ord.less(a.leading_monomial(ord), b.leading_monomial(ord));
    });
    return out;
}

/// Leading terms of a reduced basis, as a monomial ideal.
/// A reduced basis: every element monic, no term of any element divisible by
/// the lead of another.
template <class F>
bool is_reduced_basis(const std::vector<Poly<F>>& G, const TermOrder& ord) {
    if (G.empty()) return true;
    const auto& K = G.front().field();
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (G[i].is_zero()) return false;
        if (!K.equal(G[i].leading_term(ord).c, K.one())) return false;
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (i == j) continue;
            const auto& lmj = G[j].leading_monomial(ord);
            for (const auto& t : G[i].terms())
                if (lmj.divides(t.m)) return false;
        }
    }
    return true;
}

template <class F>
MonomialIdeal initial_ideal(const GroebnerBasis<F>& gb, const Ring& ring) {
    if (!is_reduced_basis(gb.elements, gb.order))
        throw NotReduced("initial_ideal expects a reduced basis");
    std::vector<Monomial> leads;
    leads.reserve(gb.elements.size());
    for (const auto& g : gb.elements) leads.push_back(g.leading_monomial(gb.order));
    return MonomialIdeal(ring, std::move(leads));
}

/// Generators of the intersection with the subring omitting `killed`:
/// computes a basis under the block order [killed | rest] and keeps the
/// elements free of killed variables.  The result is the reduced basis of the
/// elimination ideal under grevlex on the remaining block.
template <class F>
std::vector<Poly<F>> eliminate(const std::vector<Poly<F>>& gens, const std::vector<int>& killed,
                               int nvars, const GBOptions& opts = {}) {
    std::vector<char> is_killed(nvars, 0);
    for (int v : killed) {
        if (v < 0 || v >= nvars) throw DomainError("eliminate: variable out of range");
        is_killed[v] = 1;
    }
    std::vector<int> rest;
    for (int v = 0; v < nvars; ++v)
        if (!is_killed[v]) rest.push_back(v);
    std::vector<std::vector<int>> blocks;
    blocks.push_back(killed);
    if (!rest.empty()) blocks.push_back(rest);
    TermOrder ord = TermOrder::block(blocks);
    auto gb = buchberger(gens, ord, opts);
    std::vector<Poly<F>> out;
    for (const auto& g : gb.elements) {
        bool clean = true;
        for (const auto& t : g.terms()) {
            for (int v : killed)
                if (t.m.e[v] > 0) {
                    clean = false;
                    break;
                }
            if (!clean) break;
        }
        if (clean) out.push_back(g);
    }
    return out;
}

}  // namespace detgb
