#include "detgb/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <set>
#include <thread>

#include "detgb/combinat.hpp"
#include "detgb/determinantal.hpp"
#include "detgb/hilbert.hpp"
#include "detgb/joins.hpp"
#include "detgb/rsk.hpp"
#include "detgb/stanley_reisner.hpp"
#include "detgb/symmetry.hpp"

namespace detgb {

namespace {

// ---------------------------------------------------------------------------
// Field selection.

bool is_prime(unsigned long v) {
    if (v < 2) return false;
    for (unsigned long d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

struct FieldChoice {
    bool rational;
    std::uint32_t p;
};

FieldChoice parse_field(const std::string& desc) {
    if (desc == "q") return {true, 0};
    if (desc.rfind("p=", 0) == 0) {
        unsigned long v = 0;
        std::size_t used = 0;
        try {
            v = std::stoul(desc.substr(2), &used);
        } catch (const std::exception&) {
            throw DomainError("field: cannot read prime in '" + desc + "'");
        }
        if (used != desc.size() - 2 || v < 2 || v > 0x7fffffffUL || !is_prime(v))
            throw DomainError("field: '" + desc.substr(2) + "' is not a usable prime");
        return {false, static_cast<std::uint32_t>(v)};
    }
    throw DomainError("field: expected 'q' or 'p=<prime>', got '" + desc + "'");
}

template <class Fn>
Report with_field(const std::string& desc, Fn&& fn) {
    auto fc = parse_field(desc);
    if (fc.rational) return fn(FieldQ{});
    return fn(FieldP{fc.p});
}

// ---------------------------------------------------------------------------
// Small shared plumbing.

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

void stamp(Report& rep, const ExperimentSpec& spec, const std::string& field, long samples,
           double budget) {
    rep.parameters["experiment"] = spec.name;
    rep.parameters["seed"] = std::to_string(spec.seed);
    rep.parameters["samples"] = std::to_string(samples);
    rep.parameters["budget_seconds"] = format_double(budget);
    rep.field = field;
}

struct Deadline {
    std::chrono::steady_clock::time_point end;
    bool enabled;
    explicit Deadline(double seconds)
        : end(std::chrono::steady_clock::now() +
              std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                  std::chrono::duration<double>(seconds))),
          enabled(seconds > 0) {}
    bool expired() const { return enabled && std::chrono::steady_clock::now() >= end; }
};

// Worst-case merge: refuted beats incomplete beats confirmed.
int severity(const std::string& outcome) {
    if (outcome == "refuted") return 2;
    if (outcome == "incomplete") return 1;
    return 0;
}

void absorb(Report& agg, const Report& sub, const std::string& label) {
    agg.orders_checked += sub.orders_checked;
    if (severity(sub.outcome) > severity(agg.outcome)) agg.outcome = sub.outcome;
    if (!sub.confirmed()) {
        std::string line = label + ": " + sub.outcome;
        if (!sub.notes.empty()) line += " (" + sub.notes.front() + ")";
        agg.notes.push_back(line);
    }
}

std::string ranking_str(const std::vector<int>& ranking) {
    std::string s;
    for (std::size_t i = 0; i < ranking.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(ranking[i]);
    }
    return s;
}

std::string monomial_str(const Ring& ring, const Monomial& u) {
    std::string s;
    for (int v = 0; v < u.nvars(); ++v) {
        if (u.e[v] == 0) continue;
        if (!s.empty()) s += "*";
        s += ring.name(v);
        if (u.e[v] > 1) s += "^" + std::to_string(u.e[v]);
    }
    return s.empty() ? "1" : s;
}

// Trial rankings are drawn up front from one stream so that sampled searches
// are reproducible regardless of how the trials are scheduled.
std::vector<std::vector<int>> drawn_rankings(int nvars, long count, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::vector<int>> out(static_cast<std::size_t>(count));
    for (auto& r : out) {
        r.resize(static_cast<std::size_t>(nvars));
        std::iota(r.begin(), r.end(), 0);
        rng.shuffle(r);
    }
    return out;
}

// Bounded worker pool; results land by index, so assembly is deterministic.
int worker_count() {
    unsigned hw = std::thread::hardware_concurrency();
    return static_cast<int>(std::min(hw == 0 ? 1u : hw, 8u));
}

template <class T>
std::vector<T> pooled_map(long count, const std::function<T(long)>& task) {
    std::vector<T> results(static_cast<std::size_t>(count));
    int workers = std::min<long>(worker_count(), count);
    if (workers <= 1) {
        for (long i = 0; i < count; ++i) results[static_cast<std::size_t>(i)] = task(i);
        return results;
    }
    std::atomic<long> next{0};
    std::vector<std::thread> crew;
    crew.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w)
        crew.emplace_back([&] {
            for (long i = next.fetch_add(1); i < count; i = next.fetch_add(1))
                results[static_cast<std::size_t>(i)] = task(i);
        });
    for (auto& th : crew) th.join();
    return results;
}

void require_default_instance(const ExperimentSpec& spec, int m, int n, int t) {
    if ((spec.m && spec.m != m) || (spec.n && spec.n != n) || (spec.t && spec.t != t))
        throw DomainError(spec.name + " is a fixed " + std::to_string(m) + "x" +
                          std::to_string(n) + " t=" + std::to_string(t) + " instance");
}

// ---------------------------------------------------------------------------
// Sweep drivers over all small grids.

std::vector<std::tuple<int, int, int>> grid_sweep(const ExperimentSpec& spec, int cap) {
    std::vector<std::tuple<int, int, int>> out;
    if (spec.m) {
        int m = spec.m, n = spec.n ? spec.n : spec.m;
        int tmax = spec.t ? spec.t : std::min(m, n);
        int tmin = spec.t ? spec.t : 1;
        for (int t = tmin; t <= tmax; ++t) out.emplace_back(m, n, t);
        return out;
    }
    for (int m = 1; m <= cap; ++m)
        for (int n = 1; n <= cap; ++n)
            for (int t = 1; t <= std::min(m, n); ++t) out.emplace_back(m, n, t);
    return out;
}

Report run_main_theorem(const ExperimentSpec& spec) {
    std::string field = spec.field.empty() ? "p=32003" : spec.field;
    return with_field(field, [&](auto F) {
        Report rep;
        rep.claim = "minors of each size are a Groebner basis under diagonal and antidiagonal "
                    "orders, with the expected initial ideal";
        rep.mode = "exhaustive";
        rep.outcome = "confirmed";
        stamp(rep, spec, F.describe(), 0, spec.budget_seconds);
        auto instances = grid_sweep(spec, 4);
        rep.parameters["instances"] = std::to_string(instances.size());
        GBOptions opts;
        opts.budget_seconds = spec.budget_seconds;
        for (auto [m, n, t] : instances) {
            std::string label =
                std::to_string(m) + "x" + std::to_string(n) + " t=" + std::to_string(t);
            absorb(rep, verify_main_theorem(F, m, n, t, TermOrder::lex_rowmajor(m * n), opts),
                   label + " lex");
            absorb(rep, verify_main_theorem(F, m, n, t, TermOrder::grevlex_rowmajor(m * n), opts),
                   label + " grevlex");
        }
        return rep;
    });
}

Report run_gv_degree(const ExperimentSpec& spec) {
    std::string field = spec.field.empty() ? "p=32003" : spec.field;
    return with_field(field, [&](auto F) {
        Report rep;
        rep.claim = "degree and dimension of the initial quotient match the lattice-path "
                    "determinant and the facet count";
        rep.mode = "exhaustive";
        rep.outcome = "confirmed";
        stamp(rep, spec, F.describe(), 0, spec.budget_seconds);
        auto instances = grid_sweep(spec, 4);
        rep.parameters["instances"] = std::to_string(instances.size());
        GBOptions opts;
        opts.budget_seconds = spec.budget_seconds;
        for (auto [m, n, t] : instances) {
            Ring grid = Ring::grid(m, n);
            auto gb = buchberger(minors_ideal(F, grid, t), TermOrder::grevlex_rowmajor(m * n),
                                 opts);
            ++rep.orders_checked;
            auto hd = hilbert_data(initial_ideal(gb, grid));
            auto cx = grid_chain_complex(grid, t);
            bool ok = hd.degree == mpz_class(static_cast<long>(cx.facet_count())) &&
                      hd.dim == dimension_formula(m, n, t);
            if (ok && t >= 2) ok = hd.degree == gv_degree(m, n, t);
            if (!ok) {
                rep.outcome = "refuted";
                rep.notes.push_back("mismatch at " + std::to_string(m) + "x" + std::to_string(n) +
                                    " t=" + std::to_string(t) + ": degree " + hd.degree.get_str() +
                                    ", dim " + std::to_string(hd.dim) + ", facets " +
                                    std::to_string(cx.facet_count()));
            }
        }
        return rep;
    });
}

Report run_rsk_bijection(const ExperimentSpec& spec) {
    Report rep;
    rep.claim = "insertion is a degree-preserving bijection onto standard products and its "
                "width filtration cuts out the antichain ideals degreewise";
    rep.mode = "exhaustive";
    rep.outcome = "confirmed";
    stamp(rep, spec, "none", 0, spec.budget_seconds);
    std::vector<std::pair<int, int>> grids;
    if (spec.m)
        grids.emplace_back(spec.m, spec.n ? spec.n : spec.m);
    else
        grids = {{3, 3}, {2, 4}};
    int maxdeg = spec.t ? spec.t : 4;
    rep.parameters["max_degree"] = std::to_string(maxdeg);
    long checked = 0;
    for (auto [m, n] : grids) {
        Ring grid = Ring::grid(m, n);
        int nv = m * n;
        for (int d = 1; d <= maxdeg; ++d) {
            for_each_composition(d, nv, [&](const std::vector<int>& comp) {
                Monomial u(nv);
                u.e.assign(comp.begin(), comp.end());
                u.deg = d;
                auto bt = rsk_forward(grid, u);
                ++checked;
                if (bt.degree() != d || rsk_backward(grid, bt) != u) {
                    rep.outcome = "refuted";
                    rep.notes.push_back("round trip failed at " + monomial_str(grid, u));
                }
            });
            for (int t = 1; t <= std::min(m, n); ++t)
                absorb(rep, verify_rsk_image(grid, t, d),
                       std::to_string(m) + "x" + std::to_string(n) + " t=" + std::to_string(t) +
                           " d=" + std::to_string(d));
        }
    }
    rep.parameters["monomials_checked"] = std::to_string(checked);
    return rep;
}

Report run_max_minors_ugb(const ExperimentSpec& spec) {
    std::string field = spec.field.empty() ? "p=32003" : spec.field;
    long samples = spec.samples ? spec.samples : 200;
    return with_field(field, [&](auto F) {
        Report rep;
        rep.claim = "maximal minors remain a Groebner basis under every order tried";
        rep.outcome = "confirmed";
        stamp(rep, spec, F.describe(), samples, spec.budget_seconds);
        GBOptions opts;
        opts.budget_seconds = spec.budget_seconds;

        std::vector<std::pair<int, int>> instances;
        if (spec.m)
            instances.emplace_back(spec.m, spec.n ? spec.n : spec.m);
        else
            instances = {{2, 3}, {2, 4}, {3, 4}};
        rep.mode = "sampled";
        std::uint64_t next_seed = spec.seed;
        for (auto [m, n] : instances) {
            std::string label = std::to_string(m) + "x" + std::to_string(n);
            int nv = m * n;
            if (nv <= 6) {
                auto orders = all_lex_orders(nv);
                auto more = all_grevlex_orders(nv);
                orders.insert(orders.end(), more.begin(), more.end());
                absorb(rep, verify_max_minors_ugb(F, m, n, orders, "exhaustive", opts),
                       label + " exhaustive");
                if (instances.size() == 1) rep.mode = "exhaustive";
            } else {
                auto orders = random_weight_orders(nv, static_cast<int>(samples), next_seed++);
                absorb(rep, verify_max_minors_ugb(F, m, n, orders, "sampled", opts),
                       label + " sampled");
            }
        }
        return rep;
    });
}

Report run_revlex_2minors(const ExperimentSpec& spec) {
    std::string field = spec.field.empty() ? "p=32003" : spec.field;
    int m = spec.m ? spec.m : 3, n = spec.n ? spec.n : (spec.m ? spec.m : 3);
    long samples = spec.samples ? spec.samples : 500;
    return with_field(field, [&](auto F) {
        GBOptions opts;
        opts.budget_seconds = spec.budget_seconds;
        bool exhaustive = m * n <= 9;
        Report rep = verify_revlex_ugb_2minors(F, m, n,
                                               exhaustive ? SearchMode::exhaustive
                                                          : SearchMode::sampled,
                                               static_cast<int>(samples), spec.seed, opts);
        stamp(rep, spec, F.describe(), exhaustive ? 0 : samples, spec.budget_seconds);
        return rep;
    });
}

// ---------------------------------------------------------------------------
// The fifteen-binomial story on the 3x3 grid.

Report run_segre_circuits(const ExperimentSpec& spec) {
    require_default_instance(spec, 3, 3, 2);
    std::string field = spec.field.empty() ? "q" : spec.field;
    long samples = spec.samples ? spec.samples : 100;
    if (field != "q") throw DomainError("segre-circuits compares exact rational circuits");
    FieldQ Q;
    Ring grid = Ring::grid(3, 3);

    Report rep;
    rep.claim = "the fifteen cycle binomials are the circuits of the 3x3 product configuration "
                "and a universal Groebner basis, minimally so";
    rep.mode = "exhaustive";
    rep.outcome = "confirmed";
    stamp(rep, spec, Q.describe(), samples, spec.budget_seconds);
    rep.parameters["m"] = "3";
    rep.parameters["n"] = "3";

    auto canonical = circuits_segre(Q, grid);
    auto computed = circuits(PointConfiguration::segre(3, 3));
    long quad = 0, cubic = 0;
    for (const auto& f : canonical) (f.terms()[0].m.deg == 2 ? quad : cubic) += 1;
    rep.parameters["circuits"] = std::to_string(canonical.size());
    rep.parameters["quadratic"] = std::to_string(quad);
    rep.parameters["cubic"] = std::to_string(cubic);

    // the two routes must produce the same set up to the sign of each binomial
    auto exp_key = [](const Monomial& u) {
        std::string s;
        for (int v = 0; v < u.nvars(); ++v) s += std::to_string(u.e[v]) + ",";
        return s;
    };
    auto key_of = [&](const Poly<FieldQ>& f) {
        std::string a = exp_key(f.terms()[0].m), b = exp_key(f.terms()[1].m);
        return a < b ? a + "|" + b : b + "|" + a;
    };
    std::multiset<std::string> lhs, rhs;
    for (const auto& f : canonical) lhs.insert(key_of(f));
    for (const auto& f : computed) rhs.insert(key_of(f));
    if (lhs != rhs) {
        rep.outcome = "refuted";
        rep.notes.push_back("nullspace circuits differ from the cycle binomials");
        return rep;
    }

    // universal Groebner basis: all grevlex rankings up to symmetry, plus
    // seeded weight orders
    auto group = grid_symmetries(3, 3);
    std::vector<std::vector<int>> reps_list;
    for_each_permutation(9, [&](const std::vector<int>& ranking) {
        if (canonical_ranking(ranking, group) == ranking) reps_list.push_back(ranking);
    });
    rep.parameters["revlex_classes"] = std::to_string(reps_list.size());
    auto bad = pooled_map<int>(static_cast<long>(reps_list.size()), [&](long i) {
        return is_groebner_basis(canonical,
                                 TermOrder::grevlex(reps_list[static_cast<std::size_t>(i)]))
                   ? -1
                   : static_cast<int>(i);
    });
    for (int b : bad)
        if (b >= 0) {
            rep.outcome = "refuted";
            rep.notes.push_back("failing grevlex ranking: " +
                                ranking_str(reps_list[static_cast<std::size_t>(b)]));
            return rep;
        }
    rep.orders_checked += static_cast<long>(reps_list.size());
    for (const auto& ord : random_weight_orders(9, static_cast<int>(samples), spec.seed)) {
        ++rep.orders_checked;
        if (!is_groebner_basis(canonical, ord)) {
            rep.outcome = "refuted";
            rep.notes.push_back("failing weight order: " + ord.describe());
            return rep;
        }
    }

    // minimality: dropping any one binomial loses the property under some
    // sampled order
    Deadline deadline(spec.budget_seconds ? spec.budget_seconds : 600);
    long witnessed = 0;
    for (std::size_t drop = 0; drop < canonical.size(); ++drop) {
        std::vector<Poly<FieldQ>> rest;
        for (std::size_t i = 0; i < canonical.size(); ++i)
            if (i != drop) rest.push_back(canonical[i]);
        bool found = false;
        auto orders = random_weight_orders(9, 400, spec.seed + 1000 + drop);
        for (const auto& ord : orders) {
            ++rep.orders_checked;
            if (!is_groebner_basis(rest, ord)) {
                found = true;
                break;
            }
            if (deadline.expired()) break;
        }
        if (found) {
            ++witnessed;
        } else {
            rep.outcome = "incomplete";
            rep.notes.push_back("no failing order found after dropping binomial " +
                                std::to_string(drop));
        }
        if (deadline.expired() && witnessed < static_cast<long>(canonical.size())) {
            rep.outcome = "incomplete";
            rep.notes.push_back("budget exhausted during the minimality search");
            break;
        }
    }
    rep.parameters["minimality_witnesses"] = std::to_string(witnessed);
    return rep;
}

// ---------------------------------------------------------------------------
// Sampled survey of grevlex initial ideals of the 3-minors.

Report run_revlex_3minors_sample(const ExperimentSpec& spec) {
    std::string field = spec.field.empty() ? "p=32003" : spec.field;
    int m = spec.m ? spec.m : 4, n = spec.n ? spec.n : (spec.m ? spec.m : 4);
    int t = spec.t ? spec.t : 3;
    long samples = spec.samples ? spec.samples : 300;
    return with_field(field, [&](auto F) {
        Report rep;
        rep.claim = "every sampled grevlex initial ideal of the minor ideal is squarefree";
        rep.mode = "sampled";
        rep.outcome = "confirmed";
        stamp(rep, spec, F.describe(), samples, spec.budget_seconds);
        rep.parameters["m"] = std::to_string(m);
        rep.parameters["n"] = std::to_string(n);
        rep.parameters["t"] = std::to_string(t);
        Ring grid = Ring::grid(m, n);
        auto gens = minors_ideal(F, grid, t);
        auto group = grid_symmetries(m, n);
        auto rankings = drawn_rankings(m * n, samples, spec.seed);

        struct Draw {
            std::string key;
            bool squarefree = true, skipped = false;
        };
        GBOptions opts;
        opts.budget_seconds = spec.budget_seconds ? spec.budget_seconds / 10 : 30;
        auto draws = pooled_map<Draw>(samples, [&](long i) {
            Draw d;
            try {
                auto gb = buchberger(gens, TermOrder::grevlex(rankings[static_cast<std::size_t>(i)]),
                                     opts);
                auto in = initial_ideal(gb, grid);
                d.squarefree = in.is_squarefree();
                d.key = canonical_ideal_key(in, group);
            } catch (const BudgetExceeded&) {
                d.skipped = true;
            }
            return d;
        });

        std::set<std::string> classes;
        long skipped = 0;
        for (long i = 0; i < samples; ++i) {
            const auto& d = draws[static_cast<std::size_t>(i)];
            if (d.skipped) {
                ++skipped;
                continue;
            }
            ++rep.orders_checked;
            classes.insert(d.key);
            if (!d.squarefree) {
                rep.outcome = "refuted";
                rep.notes.push_back("non-squarefree initial ideal at ranking " +
                                    ranking_str(rankings[static_cast<std::size_t>(i)]));
            }
        }
        rep.parameters["distinct_classes"] = std::to_string(classes.size());
        if (skipped) {
            if (rep.outcome == "confirmed") rep.outcome = "incomplete";
            rep.notes.push_back(std::to_string(skipped) + " draws exceeded the per-basis budget");
        }
        return rep;
    });
}

// ---------------------------------------------------------------------------
// Witness hunts: non-squarefree initial ideals, and non-Cohen-Macaulay ones.

// Nonempty when S/M is certifiably not Cohen-Macaulay; "CM" when it is
// certifiably Cohen-Macaulay; empty when this toolkit cannot decide.
std::string noncm_obstruction(const MonomialIdeal& M) {
    auto hd = hilbert_data(M);
    for (std::size_t i = 0; i < hd.numerator.size(); ++i)
        if (hd.numerator[i] < 0)
            return "coefficient " + std::to_string(i) + " of the Hilbert numerator is negative";
    auto cx = complex_of(M.is_squarefree() ? M : polarize(M));
    int top = -1;
    bool pure = true;
    for (auto f : cx.facets) {
        int k = __builtin_popcountll(f);
        if (top < 0) top = k;
        pure = pure && k == top;
    }
    if (!pure) return "the face complex is not pure";
    if (cx.nvertices <= 16)
        return is_cm_reisner(cx) ? "CM" : "a face link has homology below its dimension";
    return "";
}

struct SearchInstance {
    int m, n, t;
    bool lex_family;
    bool require_noncm;
};

Report run_initial_ideal_search(const ExperimentSpec& spec, const SearchInstance& inst) {
    require_default_instance(spec, inst.m, inst.n, inst.t);
    std::string field = spec.field.empty() ? "p=32003" : spec.field;
    long samples = spec.samples ? spec.samples : (inst.require_noncm ? 300 : 500);
    double budget = spec.budget_seconds ? spec.budget_seconds : 1800;
    return with_field(field, [&](auto F) {
        Report rep;
        rep.claim = inst.require_noncm
                        ? "some variable ranking gives an initial ideal with non-Cohen-Macaulay "
                          "quotient and radical quotient"
                        : "some variable ranking gives a non-squarefree initial ideal";
        rep.mode = "sampled";
        rep.outcome = "incomplete";
        stamp(rep, spec, F.describe(), samples, budget);
        rep.parameters["m"] = std::to_string(inst.m);
        rep.parameters["n"] = std::to_string(inst.n);
        rep.parameters["t"] = std::to_string(inst.t);
        rep.parameters["order_family"] = inst.lex_family ? "lex" : "grevlex";

        Ring grid = Ring::grid(inst.m, inst.n);
        auto gens = minors_ideal(F, grid, inst.t);
        auto rankings = drawn_rankings(inst.m * inst.n, samples, spec.seed);
        Deadline deadline(budget);
        GBOptions opts;
        opts.budget_seconds = 30;
        long unresolved = 0;
        for (long i = 0; i < samples; ++i) {
            if (deadline.expired()) {
                rep.notes.push_back("budget exhausted after " + std::to_string(i) + " trials");
                break;
            }
            const auto& ranking = rankings[static_cast<std::size_t>(i)];
            auto ord = inst.lex_family ? TermOrder::lex(ranking) : TermOrder::grevlex(ranking);
            MonomialIdeal in;
            try {
                in = initial_ideal(buchberger(gens, ord, opts), grid);
            } catch (const BudgetExceeded&) {
                ++unresolved;
                continue;
            }
            ++rep.orders_checked;
            if (in.is_squarefree()) continue;

            if (!inst.require_noncm) {
                for (const auto& g : in.gens())
                    if (*std::max_element(g.e.begin(), g.e.end()) >= 2) {
                        rep.parameters["witness_generator"] = monomial_str(grid, g);
                        break;
                    }
                rep.parameters["witness_order"] = ranking_str(ranking);
                rep.parameters["trials_used"] = std::to_string(i + 1);
                rep.outcome = "confirmed";
                return rep;
            }

            std::string obJ = noncm_obstruction(in);
            std::string obR = noncm_obstruction(radical(in));
            if (obJ.empty() || obR.empty()) {
                ++unresolved;
                continue;
            }
            if (obJ == "CM" || obR == "CM") continue;
            rep.parameters["witness_order"] = ranking_str(ranking);
            rep.parameters["trials_used"] = std::to_string(i + 1);
            rep.notes.push_back("quotient: " + obJ);
            rep.notes.push_back("radical quotient: " + obR);
            rep.outcome = "confirmed";
            return rep;
        }
        if (unresolved) rep.notes.push_back(std::to_string(unresolved) + " trials undecided");
        if (rep.outcome == "incomplete")
            rep.notes.push_back("no witness among the drawn rankings; a witness may still exist");
        return rep;
    });
}

// ---------------------------------------------------------------------------
// Secant identities, Dilworth, and presentation kernels.

Report run_secant_identity(const ExperimentSpec& spec) {
    std::string field = spec.field.empty() ? "q" : spec.field;
    if (field != "q") throw DomainError("secant-identity eliminates over the rationals");
    FieldQ Q;
    Report rep;
    rep.claim = "iterated secants of the 2-minors equal the higher minors, for the ideals and "
                "their face complexes alike";
    rep.mode = "exhaustive";
    rep.outcome = "confirmed";
    stamp(rep, spec, Q.describe(), 0, spec.budget_seconds);
    GBOptions opts;
    opts.budget_seconds = spec.budget_seconds;

    std::vector<std::tuple<int, int, int>> instances;
    if (spec.m) {
        int m = spec.m, n = spec.n ? spec.n : spec.m;
        instances.emplace_back(m, n, spec.t ? spec.t : std::min(3, std::min(m, n)));
    } else {
        instances = {{3, 3, 3}, {3, 4, 3}, {4, 4, 3}};
    }
    long ideal_checks = 0;
    for (auto [m, n, t] : instances) {
        Ring grid = Ring::grid(m, n);
        auto sec = secant_ideal(Q, grid, minors_ideal(Q, grid, 2), t - 1, opts);
        auto target = reduce_basis(minors_ideal(Q, grid, t), TermOrder::grevlex_rowmajor(m * n),
                                   opts);
        ++ideal_checks;
        if (!(sec == target)) {
            rep.outcome = "refuted";
            rep.notes.push_back("ideal identity fails at " + std::to_string(m) + "x" +
                                std::to_string(n) + " t=" + std::to_string(t));
        }
    }
    rep.parameters["ideal_instances"] = std::to_string(ideal_checks);

    long complex_checks = 0;
    for (int m = 1; m <= 4; ++m)
        for (int n = m; n <= 5; ++n) {
            Ring grid = Ring::grid(m, n);
            auto base = grid_chain_complex(grid, 2);
            for (int t = 2; t <= 4; ++t) {
                ++complex_checks;
                if (!(sr_secant(base, t - 1) == grid_chain_complex(grid, t))) {
                    rep.outcome = "refuted";
                    rep.notes.push_back("complex identity fails at " + std::to_string(m) + "x" +
                                        std::to_string(n) + " t=" + std::to_string(t));
                }
            }
        }
    rep.parameters["complex_instances"] = std::to_string(complex_checks);

    Ring g33 = Ring::grid(3, 3);
    auto mono = check_sec_in_monotone(Q, g33, minors_ideal(Q, g33, 2), 2,
                                      TermOrder::grevlex_rowmajor(9), opts);
    absorb(rep, mono, "initial-ideal containment on 3x3");
    return rep;
}

Report run_dilworth(const ExperimentSpec& spec) {
    int m = spec.m ? spec.m : 3, n = spec.n ? spec.n : (spec.m ? spec.m : 3);
    if (m * n > 12) throw DomainError("dilworth sweep enumerates 2^(m*n) subsets; grid too big");
    Report rep;
    rep.claim = "largest antichain, smallest chain cover, and complex membership agree on "
                "every subset of the grid";
    rep.mode = "exhaustive";
    rep.outcome = "confirmed";
    stamp(rep, spec, "none", 0, spec.budget_seconds);
    rep.parameters["m"] = std::to_string(m);
    rep.parameters["n"] = std::to_string(n);
    Ring grid = Ring::grid(m, n);
    int tmin = spec.t ? spec.t : 2, tmax = spec.t ? spec.t : std::min(m, n);
    long checked = 0;
    for (int t = tmin; t <= tmax; ++t) {
        for (long mask = 0; mask < (1L << (m * n)); ++mask) {
            std::vector<std::pair<int, int>> subset;
            for (int v = 0; v < m * n; ++v)
                if (mask >> v & 1) subset.emplace_back(v / n + 1, v % n + 1);
            ++checked;
            auto sub = dilworth_check(grid, t, subset);
            if (!sub.confirmed()) {
                rep.outcome = "refuted";
                rep.notes.push_back("disagreement at t=" + std::to_string(t) + " mask=" +
                                    std::to_string(mask));
            }
        }
    }
    rep.parameters["subsets_checked"] = std::to_string(checked);
    return rep;
}

Report run_invariant_presentation(const ExperimentSpec& spec) {
    require_default_instance(spec, 0, 0, 0);
    std::string field = spec.field.empty() ? "q" : spec.field;
    if (field != "q") throw DomainError("invariant-presentation eliminates over the rationals");
    FieldQ Q;
    Report rep;
    rep.claim = "presentation kernels of the product parametrizations are the minor ideals";
    rep.mode = "exhaustive";
    rep.outcome = "confirmed";
    stamp(rep, spec, Q.describe(), 0, spec.budget_seconds);
    GBOptions opts;
    opts.budget_seconds = spec.budget_seconds;

    // x_ij -> y_i z_j for 2x3 and 3x3
    for (auto [m, n] : {std::pair{2, 3}, std::pair{3, 3}}) {
        Ring x = Ring::grid(m, n);
        Ring img = Ring::concat(Ring::indexed("y", m), Ring::indexed("z", n));
        std::vector<Poly<FieldQ>> targets;
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < n; ++j)
                targets.push_back(Poly<FieldQ>::variable(Q, m + n, i) *
                                  Poly<FieldQ>::variable(Q, m + n, m + j));
        auto ker = kernel_of_map(Q, x, img, targets, opts);
        bool ok = ker == reduce_basis(minors_ideal(Q, x, 2), TermOrder::grevlex_rowmajor(m * n),
                                      opts) &&
                  ker == toric_ideal(Q, PointConfiguration::segre(m, n), opts);
        ++rep.orders_checked;
        if (!ok) {
            rep.outcome = "refuted";
            rep.notes.push_back("product kernel differs from the 2-minors at " +
                                std::to_string(m) + "x" + std::to_string(n));
        }
    }

    // x_ij -> (YZ)_ij for generic 3x2 times 2x3
    {
        Ring x = Ring::grid(3, 3);
        Ring img = Ring::concat(Ring::indexed("y", 6), Ring::indexed("z", 6));
        std::vector<Poly<FieldQ>> targets;
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) {
                auto f = Poly<FieldQ>::zero(Q, 12);
                for (int k = 0; k < 2; ++k)
                    f = f + Poly<FieldQ>::variable(Q, 12, 2 * i + k) *
                                Poly<FieldQ>::variable(Q, 12, 6 + 3 * k + j);
                targets.push_back(f);
            }
        auto ker = kernel_of_map(Q, x, img, targets, opts);
        ++rep.orders_checked;
        if (!(ker == reduce_basis(minors_ideal(Q, x, 3), TermOrder::grevlex_rowmajor(9), opts))) {
            rep.outcome = "refuted";
            rep.notes.push_back("matrix-factorization kernel differs from the 3-minors");
        }
    }
    return rep;
}

}  // namespace

// ---------------------------------------------------------------------------
// Dispatch, order parsing, rendering.

const std::vector<std::string>& experiment_names() {
    static const std::vector<std::string> names = {
        "main-theorem",          "max-minors-ugb",
        "segre-circuits",        "revlex-2minors",
        "revlex-3minors-sample", "lex-3x4x4-nonradical",
        "lex-3x4x5-noncm",       "revlex-4x5x5-nonradical",
        "revlex-4x5x6-noncm",    "secant-identity",
        "dilworth",              "gv-degree",
        "rsk-bijection",         "invariant-presentation",
    };
    return names;
}

Report run_experiment(const ExperimentSpec& spec) {
    if (spec.name == "main-theorem") return run_main_theorem(spec);
    if (spec.name == "max-minors-ugb") return run_max_minors_ugb(spec);
    if (spec.name == "segre-circuits") return run_segre_circuits(spec);
    if (spec.name == "revlex-2minors") return run_revlex_2minors(spec);
    if (spec.name == "revlex-3minors-sample") return run_revlex_3minors_sample(spec);
    if (spec.name == "lex-3x4x4-nonradical")
        return run_initial_ideal_search(spec, {4, 4, 3, true, false});
    if (spec.name == "lex-3x4x5-noncm")
        return run_initial_ideal_search(spec, {4, 5, 3, true, true});
    if (spec.name == "revlex-4x5x5-nonradical")
        return run_initial_ideal_search(spec, {5, 5, 4, false, false});
    if (spec.name == "revlex-4x5x6-noncm")
        return run_initial_ideal_search(spec, {5, 6, 4, false, true});
    if (spec.name == "secant-identity") return run_secant_identity(spec);
    if (spec.name == "dilworth") return run_dilworth(spec);
    if (spec.name == "gv-degree") return run_gv_degree(spec);
    if (spec.name == "rsk-bijection") return run_rsk_bijection(spec);
    if (spec.name == "invariant-presentation") return run_invariant_presentation(spec);
    throw DomainError("unknown experiment '" + spec.name + "'");
}

TermOrder parse_order(const std::string& desc, int nvars) {
    auto colon = desc.find(':');
    std::string kind = desc.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : desc.substr(colon + 1);
    bool lex = kind == "lex", grevlex = kind == "grevlex";
    if (lex || grevlex) {
        if (args.empty() || args == "rowmajor")
            return lex ? TermOrder::lex_rowmajor(nvars) : TermOrder::grevlex_rowmajor(nvars);
        if (args.rfind("perm=", 0) == 0) {
            std::vector<int> ranking;
            std::string item;
            for (char c : args.substr(5) + ",") {
                if (c == ',') {
                    if (item.empty()) throw DomainError("order: empty entry in perm list");
                    ranking.push_back(std::stoi(item));
                    item.clear();
                } else if (std::isdigit(static_cast<unsigned char>(c))) {
                    item += c;
                } else {
                    throw DomainError("order: bad character in perm list");
                }
            }
            std::vector<int> sorted = ranking;
            std::sort(sorted.begin(), sorted.end());
            for (int i = 0; i < static_cast<int>(sorted.size()); ++i)
                if (sorted[static_cast<std::size_t>(i)] != i)
                    throw DomainError("order: perm must list each variable exactly once");
            if (static_cast<int>(ranking.size()) != nvars)
                throw DomainError("order: perm lists " + std::to_string(ranking.size()) +
                                  " variables, the ring has " + std::to_string(nvars));
            return lex ? TermOrder::lex(ranking) : TermOrder::grevlex(ranking);
        }
        throw DomainError("order: unknown arguments '" + args + "'");
    }
    if (kind == "weight") {
        if (args.rfind("seed=", 0) == 0) {
            unsigned long seed = 0;
            try {
                seed = std::stoul(args.substr(5));
            } catch (const std::exception&) {
                throw DomainError("order: cannot read weight seed");
            }
            return random_weight_orders(nvars, 1, seed)[0];
        }
        throw DomainError("order: weight orders need seed=<n>");
    }
    throw DomainError("order: unknown kind '" + kind + "'");
}

Report gb_report(int m, int n, int t, const std::string& order_desc,
                 const std::string& field_desc, double budget_seconds) {
    if (m < 1 || n < 1) throw DomainError("grid sides must be positive");
    if (t < 1) throw DomainError("minor size must be positive");
    return with_field(field_desc, [&](auto F) {
        Ring grid = Ring::grid(m, n);
        auto ord = parse_order(order_desc, m * n);
        Report rep;
        rep.claim = "reduced Groebner basis of the minor ideal";
        rep.mode = "single";
        rep.orders_checked = 1;
        rep.parameters = {{"grid", std::to_string(m) + "x" + std::to_string(n)},
                          {"minors", std::to_string(t)},
                          {"order", ord.describe()},
                          {"budget_seconds", format_double(budget_seconds)}};
        rep.field = F.describe();
        GBOptions opts;
        opts.budget_seconds = budget_seconds;
        auto gens = minors_ideal(F, grid, t);
        MonomialIdeal in(grid, {});
        std::size_t basis_size = 0;
        try {
            if (!gens.empty()) {
                auto basis = reduce_basis(gens, ord, opts);
                basis_size = basis.size();
                in = initial_ideal(GroebnerBasis<decltype(F)>{ord, basis}, grid);
            }
            rep.outcome = "confirmed";
        } catch (const BudgetExceeded&) {
            rep.outcome = "incomplete";
            rep.notes.push_back("basis computation exceeded its time budget");
            return rep;
        }
        auto hd = hilbert_data(in);
        rep.parameters["basis_size"] = std::to_string(basis_size);
        rep.parameters["initial_generators"] = std::to_string(in.gens().size());
        rep.parameters["squarefree"] = in.is_squarefree() ? "yes" : "no";
        rep.parameters["krull_dim"] = std::to_string(hd.dim);
        rep.parameters["degree"] = hd.degree.get_str();
        std::string num;
        for (std::size_t i = 0; i < hd.numerator.size(); ++i) {
            if (i) num += ",";
            num += hd.numerator[i].get_str();
        }
        rep.parameters["hilbert_numerator"] = num;
        return rep;
    });
}

std::string render_report(const nlohmann::json& j) {
    const char* required[] = {"schema", "claim",   "parameters",
                              "field",  "mode",    "outcome",
                              nullptr};
    for (int i = 0; required[i]; ++i)
        if (!j.contains(required[i]))
            throw ParseError(std::string("report is missing '") + required[i] + "'");
    if (!j["schema"].is_string() || j["schema"].get<std::string>() != Report::schema)
        throw ParseError("unsupported report schema");
    if (!j["parameters"].is_object() || !j.contains("orders_checked") ||
        !j["orders_checked"].is_number_integer())
        throw ParseError("report parameters are malformed");

    std::string out;
    auto outcome = j["outcome"].get<std::string>();
    std::transform(outcome.begin(), outcome.end(), outcome.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    out += "claim: " + j["claim"].get<std::string>() + "\n";
    out += "outcome: " + outcome + "\n";
    out += "field: " + j["field"].get<std::string>() + " | mode: " +
           j["mode"].get<std::string>() + " | orders checked: " +
           std::to_string(j["orders_checked"].get<long>()) + "\n";
    std::map<std::string, std::string> params;  // sorted regardless of input order
    for (auto it = j["parameters"].begin(); it != j["parameters"].end(); ++it) {
        if (!it.value().is_string()) throw ParseError("report parameters must be strings");
        params[it.key()] = it.value().get<std::string>();
    }
    if (!params.empty()) {
        out += "parameters:\n";
        for (const auto& [k, v] : params) out += "  " + k + " = " + v + "\n";
    }
    if (j.contains("notes")) {
        out += "notes:\n";
        for (const auto& nline : j["notes"]) out += "  - " + nline.get<std::string>() + "\n";
    }
    if (j.contains("timings")) {
        out += "timings:\n";
        for (auto it = j["timings"].begin(); it != j["timings"].end(); ++it) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "  %s = %.3fs\n", it.key().c_str(),
                          it.value().get<double>());
            out += buf;
        }
    }
    return out;
}

std::string render_report(const Report& rep) {
    return render_report(nlohmann::json::parse(rep.to_json().dump()));
}

}  // namespace detgb
