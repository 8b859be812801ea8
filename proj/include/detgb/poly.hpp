#pragma once
// Multivariate polynomials over a coefficient field F.
//
// Terms are always stored sorted by the fixed canonical order (grevlex on the
// ring's variable enumeration), largest first and with no zero coefficients,
// regardless of which term order a Groebner run happens to use.  That keeps
// equality, hashing and printing stable across the whole code base.

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "detgb/common.hpp"
#include "detgb/field.hpp"
#include "detgb/monomial.hpp"
#include "detgb/ring.hpp"
#include "detgb/term_order.hpp"

namespace detgb {

template <class F>
struct Term {
    typename F::Elem c;
    Monomial m;
};

template <class F>
class Poly {
public:
    using Elem = typename F::Elem;

    Poly() = default;
    explicit Poly(F field, int nvars) : field_(field), nvars_(nvars) {}

    static Poly zero(F field, int nvars) { return Poly(field, nvars); }

    static Poly constant(F field, int nvars, Elem c) {
        Poly p(field, nvars);
        if (!field.is_zero(c)) p.terms_.push_back({c, Monomial(nvars)});
        return p;
    }

    static Poly monomial_term(F field, Elem c, Monomial m) {
        Poly p(field, m.nvars());
        if (!field.is_zero(c)) p.terms_.push_back({std::move(c), std::move(m)});
        return p;
    }

    static Poly variable(F field, int nvars, int v) {
        return monomial_term(field, field.one(), Monomial::variable(nvars, v));
    }

    /// Build from an arbitrary term list (sorts, merges, drops zeros).
    static Poly from_terms(F field, int nvars, std::vector<Term<F>> ts) {
        Poly p(field, nvars);
        p.terms_ = std::move(ts);
        p.normalize();
        return p;
    }

    const F& field() const { return field_; }
    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t nterms() const { return terms_.size(); }
    const std::vector<Term<F>>& terms() const { return terms_; }

    /// Total degree (-1 for the zero polynomial).
    int degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.m.deg));
        return d;
    }

    bool operator==(const Poly& o) const {
        if (terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (terms_[i].m != o.terms_[i].m || !field_.equal(terms_[i].c, o.terms_[i].c))
                return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly operator+(const Poly& o) const { return merge(o, false); }
    Poly operator-(const Poly& o) const { return merge(o, true); }

    Poly operator-() const {
        Poly r(*this);
        for (auto& t : r.terms_) t.c = field_.neg(t.c);
        return r;
    }

    Poly operator*(const Poly& o) const {
        check_compat(o);
        Poly r(field_, nvars_);
        if (is_zero() || o.is_zero()) return r;
        std::vector<Term<F>> acc;
        acc.reserve(terms_.size() * o.terms_.size());
        for (const auto& a : terms_)
            for (const auto& b : o.terms_) acc.push_back({field_.mul(a.c, b.c), a.m * b.m});
        r.terms_ = std::move(acc);
        r.normalize();
        return r;
    }

    Poly scaled(const Elem& c) const {
        Poly r(field_, nvars_);
        if (field_.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({field_.mul(t.c, c), t.m});
        return r;
    }

    /// Multiply by a single term c * x^m.
    Poly term_multiplied(const Elem& c, const Monomial& m) const {
        Poly r(field_, nvars_);
        if (field_.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({field_.mul(t.c, c), t.m * m});
        return r;  // multiplying by a fixed monomial preserves the canonical sort
    }

    /// Exact division by a single term; throws DomainError if any monomial of
    /// *this is not divisible by m.
    Poly term_divided(const Elem& c, const Monomial& m) const {
        Poly r(field_, nvars_);
        Elem ci = field_.inv(c);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            if (!m.divides(t.m)) throw DomainError("term division is not exact");
            r.terms_.push_back({field_.mul(t.c, ci), t.m.divide(m)});
        }
        return r;
    }

    Poly pow(int k) const {
        if (k < 0) throw DomainError("negative power");
        Poly r = constant(field_, nvars_, field_.one());
        Poly b(*this);
        while (k > 0) {
            if (k & 1) r = r * b;
            b = b * b;
            k >>= 1;
        }
        return r;
    }

    /// Scale so the leading coefficient under `ord` becomes 1.
    Poly monic(const TermOrder& ord) const {
        if (is_zero()) return *this;
        return scaled(field_.inv(leading_term(ord).c));
    }

    /// Largest term under an arbitrary order (linear scan; the canonical
    /// storage order is generally different from `ord`).
    const Term<F>& leading_term(const TermOrder& ord) const {
        if (is_zero()) throw ZeroPolynomial("leading term of zero polynomial");
        std::size_t best = 0;
        for (std::size_t i = 1; i < terms_.size(); ++i)
            if (ord.greater(terms_[i].m, terms_[best].m)) best = i;
        return terms_[best];
    }

    const Monomial& leading_monomial(const TermOrder& ord) const { return leading_term(ord).m; }

    /// Coefficient of a specific monomial (zero if absent).
    Elem coeff(const Monomial& m) const {
        for (const auto& t : terms_)
            if (t.m == m) return t.c;
        return field_.zero();
    }

    /// Substitute values for all variables.
    Elem eval(const std::vector<Elem>& point) const {
        Elem acc = field_.zero();
        for (const auto& t : terms_) {
            Elem v = t.c;
            for (int i = 0; i < nvars_; ++i)
                for (int k = 0; k < t.m.e[i]; ++k) v = field_.mul(v, point[i]);
            acc = field_.add(acc, v);
        }
        return acc;
    }

    std::size_t hash() const {
        std::size_t h = 14695981039346656037ULL;
        for (const auto& t : terms_) {
            h ^= t.m.hash();
            h *= 1099511628211ULL;
        }
        return h;
    }

private:
    void check_compat(const Poly& o) const {
        if (!field_.same(o.field_)) throw FieldMismatch("polynomials over different fields");
        if (nvars_ != o.nvars_) throw RingMismatch("polynomials in different rings");
    }

    Poly merge(const Poly& o, bool subtract) const {
        check_compat(o);
        Poly r(field_, nvars_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() || j < o.terms_.size()) {
            if (j == o.terms_.size()) {
                r.terms_.push_back(terms_[i++]);
            } else if (i == terms_.size()) {
                Term<F> t = o.terms_[j++];
                if (subtract) t.c = field_.neg(t.c);
                r.terms_.push_back(std::move(t));
            } else {
                int c = canonical_cmp(terms_[i].m, o.terms_[j].m);
                if (c > 0) {
                    r.terms_.push_back(terms_[i++]);
                } else if (c < 0) {
                    Term<F> t = o.terms_[j++];
                    if (subtract) t.c = field_.neg(t.c);
                    r.terms_.push_back(std::move(t));
                } else {
                    Elem v = subtract ? field_.sub(terms_[i].c, o.terms_[j].c)
                                      : field_.add(terms_[i].c, o.terms_[j].c);
                    if (!field_.is_zero(v)) r.terms_.push_back({std::move(v), terms_[i].m});
                    ++i;
                    ++j;
                }
            }
        }
        return r;
    }

    void normalize() {
        std::sort(terms_.begin(), terms_.end(), [](const Term<F>& a, const Term<F>& b) {
            return canonical_cmp(a.m, b.m) > 0;
        });
        std::vector<Term<F>> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().m == t.m) {
                out.back().c = field_.add(out.back().c, t.c);
                if (field_.is_zero(out.back().c)) out.pop_back();
            } else if (!field_.is_zero(t.c)) {
                out.push_back(std::move(t));
            }
        }
        terms_ = std::move(out);
    }

    F field_;
    int nvars_ = 0;
    std::vector<Term<F>> terms_;
};

/// Entry-wise reduction QQ -> GF(p); throws DomainError if a denominator
/// vanishes mod p.
inline Poly<FieldP> reduce_mod(const Poly<FieldQ>& f, const FieldP& fp) {
    std::vector<Term<FieldP>> ts;
    ts.reserve(f.nterms());
    for (const auto& t : f.terms()) {
        auto c = fp.from_ratio(t.c.get_num(), t.c.get_den());
        if (c != 0) ts.push_back({c, t.m});
    }
    return Poly<FieldP>::from_terms(fp, f.nvars(), std::move(ts));
}

// ---------------------------------------------------------------------------
// Printing.  Canonical storage order makes output deterministic; coefficients
// print in field-native form (residues for GF(p), signed ratios for QQ).

template <class F>
std::string poly_to_string(const Poly<F>& f, const Ring& ring) {
    if (f.is_zero()) return "0";
    // display in lex order on the ring's own variable enumeration (leading
    // variables first), independent of the canonical storage order
    std::vector<const Term<F>*> view;
    view.reserve(f.terms().size());
    for (const auto& t : f.terms()) view.push_back(&t);
    std::sort(view.begin(), view.end(),
              [](const Term<F>* a, const Term<F>* b) { return b->m.e < a->m.e; });
    std::ostringstream os;
    bool first = true;
    for (const auto* tp : view) {
        const auto& t = *tp;
        std::string cs = f.field().to_string(t.c);
        bool negative = !cs.empty() && cs[0] == '-';
        if (first) {
            if (negative) {
                os << "-";
                cs = cs.substr(1);
            }
        } else {
            os << (negative ? " - " : " + ");
            if (negative) cs = cs.substr(1);
        }
        first = false;
        bool unit = (cs == "1");
        if (!unit || t.m.is_one()) os << cs;
        bool any = !unit || t.m.is_one();
        for (int v = 0; v < f.nvars(); ++v) {
            if (t.m.e[v] == 0) continue;
            if (any) os << "*";
            os << ring.name(v);
            if (t.m.e[v] > 1) os << "^" << t.m.e[v];
            any = true;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Parsing.  Accepts sums/differences of terms; a term is '*'-joined factors;
// a factor is a variable name (with optional ^exponent), an integer, or a
// ratio a/b.  Parentheses around a full expression are also accepted.

namespace parse_detail {

struct Lexer {
    const std::string& s;
    std::size_t i = 0;
    explicit Lexer(const std::string& str) : s(str) {}

    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool eof() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (i < s.size() && s[i] == c) {
            ++i;
            return true;
        }
        return false;
    }
    mpz_class integer() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
        if (start == i) throw ParseError("expected integer at position " + std::to_string(start));
        return mpz_class(s.substr(start, i - start));
    }
    /// Variable token: an identifier optionally followed by [a] or [a,b].
    std::string name() {
        skip_ws();
        std::size_t start = i;
        while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
        if (start == i) throw ParseError("expected variable at position " + std::to_string(start));
        std::string out = s.substr(start, i - start);
        if (i < s.size() && s[i] == '[') {
            std::size_t close = s.find(']', i);
            if (close == std::string::npos) throw ParseError("unterminated variable index");
            out += s.substr(i, close - i + 1);
            i = close + 1;
        }
        return out;
    }
};

}  // namespace parse_detail

template <class F>
Poly<F> parse_poly(const std::string& text, const Ring& ring, const F& field) {
    std::map<std::string, int> index;
    for (int v = 0; v < ring.nvars(); ++v) index[ring.name(v)] = v;

    parse_detail::Lexer lx(text);
    Poly<F> result = Poly<F>::zero(field, ring.nvars());

    bool expect_term = true;
    int sign = 1;
    while (!lx.eof()) {
        if (!expect_term) {
            if (lx.accept('+')) {
                sign = 1;
            } else if (lx.accept('-')) {
                sign = -1;
            } else {
                throw ParseError("expected '+' or '-' near position " + std::to_string(lx.i));
            }
            expect_term = true;
            continue;
        }
        while (lx.accept('-')) sign = -sign;
        lx.accept('+');

        typename F::Elem coeff = field.one();
        Monomial mono(ring.nvars());
        bool any_factor = false;
        for (;;) {
            char c = lx.peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                mpz_class num = lx.integer();
                if (lx.accept('/')) {
                    mpz_class den = lx.integer();
                    coeff = field.mul(coeff, field.from_ratio(num, den));
                } else {
                    coeff = field.mul(coeff, field.from_ratio(num, 1));
                }
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string nm = lx.name();
                auto it = index.find(nm);
                if (it == index.end()) throw ParseError("unknown variable '" + nm + "'");
                long expn = 1;
                if (lx.accept('^')) expn = lx.integer().get_si();
                if (expn < 0) throw ParseError("negative exponent");
                mono.e[it->second] += static_cast<std::int32_t>(expn);
                mono.deg += static_cast<std::int32_t>(expn);
            } else {
                throw ParseError(std::string("unexpected character '") + c + "' in term");
            }
            any_factor = true;
            if (!lx.accept('*')) break;
        }
        if (!any_factor) throw ParseError("empty term");
        if (sign < 0) coeff = field.neg(coeff);
        result = result + Poly<F>::monomial_term(field, coeff, std::move(mono));
        sign = 1;
        expect_term = false;
    }
    if (expect_term) throw ParseError("empty polynomial text");
    return result;
}

template <class F>
std::vector<Poly<F>> parse_polys(const std::vector<std::string>& lines, const Ring& ring, const F& field) {
    std::vector<Poly<F>> out;
    out.reserve(lines.size());
    for (const auto& l : lines) out.push_back(parse_poly(l, ring, field));
    return out;
}

}  // namespace detgb
