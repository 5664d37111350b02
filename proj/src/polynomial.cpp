#include "aluffi/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

#include "aluffi/util.hpp"

namespace aluffi {

// --- MonomialOrder ---------------------------------------------------------

MonomialOrder MonomialOrder::lex() { return {OrderKind::Lex, 0, nullptr}; }

MonomialOrder MonomialOrder::degrevlex() {
    return {OrderKind::DegRevLex, 0, nullptr};
}

MonomialOrder MonomialOrder::elimination(int front) {
    return elimination(front, degrevlex());
}

MonomialOrder MonomialOrder::elimination(int front, MonomialOrder inner) {
    if (front < 0) throw std::invalid_argument("elimination block must be >= 0");
    return {OrderKind::Elimination, front,
            std::make_shared<const MonomialOrder>(std::move(inner))};
}

const MonomialOrder& MonomialOrder::inner() const {
    static const MonomialOrder drl = degrevlex();
    return inner_ ? *inner_ : drl;
}

namespace {

int cmp_lex(const int* u, const int* v, int n) {
    for (int i = 0; i < n; ++i)
        if (u[i] != v[i]) return u[i] > v[i] ? 1 : -1;
    return 0;
}

int cmp_degrevlex(const int* u, const int* v, int n) {
    long du = 0, dv = 0;
    for (int i = 0; i < n; ++i) {
        du += u[i];
        dv += v[i];
    }
    if (du != dv) return du > dv ? 1 : -1;
    for (int i = n - 1; i >= 0; --i)
        if (u[i] != v[i]) return u[i] > v[i] ? -1 : 1;
    return 0;
}

}  // namespace

int MonomialOrder::compare(std::span<const int> u, std::span<const int> v) const {
    if (u.size() != v.size())
        throw std::invalid_argument("monomial length mismatch in compare");
    int n = static_cast<int>(u.size());
    switch (kind_) {
        case OrderKind::Lex:
            return cmp_lex(u.data(), v.data(), n);
        case OrderKind::DegRevLex:
            return cmp_degrevlex(u.data(), v.data(), n);
        case OrderKind::Elimination: {
            int k = std::min(front_, n);
            if (int c = cmp_degrevlex(u.data(), v.data(), k)) return c;
            return inner().compare(u.subspan(k), v.subspan(k));
        }
    }
    return 0;
}

bool MonomialOrder::operator==(const MonomialOrder& o) const {
    if (kind_ != o.kind_) return false;
    if (kind_ != OrderKind::Elimination) return true;
    return front_ == o.front_ && inner() == o.inner();
}

std::string MonomialOrder::key() const {
    switch (kind_) {
        case OrderKind::Lex:
            return "lex";
        case OrderKind::DegRevLex:
            return "degrevlex";
        case OrderKind::Elimination:
            return "elim(" + std::to_string(front_) + ";" + inner().key() + ")";
    }
    return "?";
}

// --- Monomial ---------------------------------------------------------------

Monomial::Monomial(std::vector<int> exps) : e_(std::move(exps)) {
    for (int x : e_) {
        if (x < 0) throw std::invalid_argument("negative exponent");
        deg_ += x;
    }
}

Monomial Monomial::one(int nvars) { return Monomial(std::vector<int>(nvars, 0)); }

Monomial Monomial::variable(int index, int nvars, int power) {
    std::vector<int> e(nvars, 0);
    if (index < 0 || index >= nvars)
        throw std::invalid_argument("variable index out of range");
    e[index] = power;
    return Monomial(std::move(e));
}

bool Monomial::divides(const Monomial& m) const {
    if (size() != m.size()) throw std::invalid_argument("monomial length mismatch");
    if (deg_ > m.deg_) return false;
    for (int i = 0; i < size(); ++i)
        if (e_[i] > m.e_[i]) return false;
    return true;
}

bool Monomial::coprime(const Monomial& m) const {
    for (int i = 0; i < size(); ++i)
        if (e_[i] && m.e_[i]) return false;
    return true;
}

Monomial Monomial::mul(const Monomial& m) const {
    std::vector<int> r(e_);
    for (int i = 0; i < size(); ++i) r[i] += m.e_[i];
    return Monomial(std::move(r));
}

Monomial Monomial::div(const Monomial& m) const {
    std::vector<int> r(e_);
    for (int i = 0; i < size(); ++i) {
        r[i] -= m.e_[i];
        if (r[i] < 0) throw std::invalid_argument("monomial division not exact");
    }
    return Monomial(std::move(r));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    std::vector<int> r(a.e_);
    for (int i = 0; i < b.size(); ++i) r[i] = std::max(r[i], b.e_[i]);
    return Monomial(std::move(r));
}

// --- RingContext ------------------------------------------------------------

int RingContext::var_index(std::string_view name) const {
    for (int i = 0; i < num_vars(); ++i)
        if (var_names[i] == name) return i;
    return -1;
}

RingPtr RingContext::make(std::vector<std::string> names, MonomialOrder order) {
    if (names.empty()) throw std::invalid_argument("ring needs at least one variable");
    std::unordered_set<std::string> seen;
    for (const auto& n : names) {
        if (n.empty() || !std::isalpha(static_cast<unsigned char>(n[0])))
            throw std::invalid_argument("bad variable name: '" + n + "'");
        for (char c : n)
            if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_')
                throw std::invalid_argument("bad variable name: '" + n + "'");
        if (!seen.insert(n).second)
            throw std::invalid_argument("duplicate variable name: '" + n + "'");
    }
    auto ctx = std::make_shared<RingContext>();
    ctx->var_names = std::move(names);
    ctx->order = std::move(order);
    return ctx;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->var_names == b->var_names && a->order == b->order;
}

namespace {

void require_same_ring(const Polynomial& f, const Polynomial& g) {
    if (!same_ring(f.ring(), g.ring()))
        throw std::invalid_argument("ring context mismatch");
}

}  // namespace

// --- Polynomial --------------------------------------------------------------

Polynomial Polynomial::zero(RingPtr ring) {
    return from_terms(std::move(ring), {});
}

Polynomial Polynomial::constant(RingPtr ring, const Rational& c) {
    int n = ring->num_vars();
    return from_terms(std::move(ring), {Term{c, Monomial::one(n)}});
}

Polynomial Polynomial::variable(RingPtr ring, int index) {
    int n = ring->num_vars();
    return from_terms(std::move(ring), {Term{1, Monomial::variable(index, n)}});
}

Polynomial Polynomial::term(RingPtr ring, const Rational& c, Monomial m) {
    return from_terms(std::move(ring), {Term{c, std::move(m)}});
}

Polynomial Polynomial::from_terms(RingPtr ring, std::vector<Term> terms) {
    if (!ring) throw std::invalid_argument("null ring");
    for (const Term& t : terms)
        if (t.mono.size() != ring->num_vars())
            throw std::invalid_argument("exponent vector length mismatch");
    const MonomialOrder& o = ring->order;
    std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
        return o.compare(a.mono.exponents(), b.mono.exponents()) > 0;
    });
    std::vector<Term> merged;
    merged.reserve(terms.size());
    for (Term& t : terms) {
        if (!merged.empty() && merged.back().mono == t.mono)
            merged.back().coeff += t.coeff;
        else
            merged.push_back(std::move(t));
        if (!merged.empty() && merged.back().coeff == 0) merged.pop_back();
    }
    Polynomial p;
    p.ring_ = std::move(ring);
    p.terms_ = std::move(merged);
    return p;
}

int Polynomial::degree() const {
    int d = -1;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = terms_[0].mono.degree();
    for (const Term& t : terms_)
        if (t.mono.degree() != d) return false;
    return true;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

const Term& Polynomial::leading_term() const {
    if (terms_.empty()) throw std::domain_error("zero polynomial has no leading term");
    return terms_[0];
}

Polynomial Polynomial::operator+(const Polynomial& g) const {
    require_same_ring(*this, g);
    const MonomialOrder& o = ring_->order;
    std::vector<Term> out;
    out.reserve(terms_.size() + g.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < g.terms_.size()) {
        int c = o.compare(terms_[i].mono.exponents(), g.terms_[j].mono.exponents());
        if (c > 0) {
            out.push_back(terms_[i++]);
        } else if (c < 0) {
            out.push_back(g.terms_[j++]);
        } else {
            Rational s = terms_[i].coeff + g.terms_[j].coeff;
            if (s != 0) out.push_back(Term{std::move(s), terms_[i].mono});
            ++i;
            ++j;
        }
    }
    for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
    for (; j < g.terms_.size(); ++j) out.push_back(g.terms_[j]);
    Polynomial p;
    p.ring_ = ring_;
    p.terms_ = std::move(out);
    return p;
}

Polynomial Polynomial::operator-() const { return scaled(-1); }

Polynomial Polynomial::operator-(const Polynomial& g) const { return *this + (-g); }

Polynomial Polynomial::mul_term(const Rational& c, const Monomial& m) const {
    if (c == 0) return zero(ring_);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) out.push_back(Term{t.coeff * c, t.mono.mul(m)});
    Polynomial p;
    p.ring_ = ring_;
    p.terms_ = std::move(out);
    return p;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (terms_.empty() || c == 1) return *this;
    return mul_term(c, Monomial::one(ring_->num_vars()));
}

Polynomial Polynomial::monic() const {
    if (terms_.empty()) return *this;
    return scaled(1 / terms_[0].coeff);
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
    require_same_ring(*this, g);
    std::vector<Term> out;
    out.reserve(terms_.size() * g.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : g.terms_)
            out.push_back(Term{a.coeff * b.coeff, a.mono.mul(b.mono)});
    return from_terms(ring_, std::move(out));
}

Polynomial Polynomial::pow(int k) const {
    if (k < 0) throw std::invalid_argument("negative power");
    Polynomial r = constant(ring_, 1);
    for (int i = 0; i < k; ++i) r = r * (*this);
    return r;
}

bool Polynomial::operator==(const Polynomial& g) const {
    if (!same_ring(ring_, g.ring_)) return false;
    if (terms_.size() != g.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
        if (!(terms_[i].mono == g.terms_[i].mono) ||
            terms_[i].coeff != g.terms_[i].coeff)
            return false;
    return true;
}

Polynomial poly_add(const Polynomial& f, const Polynomial& g) { return f + g; }
Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

Polynomial partial_derivative(const Polynomial& f, int var) {
    if (var < 0 || var >= f.ring()->num_vars())
        throw std::invalid_argument("variable index out of range");
    std::vector<Term> out;
    for (const Term& t : f.terms()) {
        int e = t.mono[var];
        if (e == 0) continue;
        std::vector<int> exps = t.mono.exponents();
        exps[var] -= 1;
        out.push_back(Term{t.coeff * e, Monomial(std::move(exps))});
    }
    return Polynomial::from_terms(f.ring(), std::move(out));
}

bool poly_canonical_less(const Polynomial& a, const Polynomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    const MonomialOrder& o = a.ring()->order;
    std::size_t n = std::min(a.terms().size(), b.terms().size());
    for (std::size_t i = 0; i < n; ++i) {
        int c = o.compare(a.terms()[i].mono.exponents(), b.terms()[i].mono.exponents());
        if (c != 0) return c < 0;
        if (a.terms()[i].coeff != b.terms()[i].coeff)
            return a.terms()[i].coeff < b.terms()[i].coeff;
    }
    return a.terms().size() < b.terms().size();
}

// --- printing ----------------------------------------------------------------

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const Term& t : terms_) {
        Rational c = t.coeff;
        bool neg = c < 0;
        if (first) {
            if (neg) os << "-";
        } else {
            os << (neg ? " - " : " + ");
        }
        first = false;
        Rational a = neg ? Rational(-c) : c;
        bool coeff_shown = (a != 1) || t.mono.is_one();
        if (coeff_shown) os << a.get_str();
        bool need_star = coeff_shown;
        for (int i = 0; i < t.mono.size(); ++i) {
            int e = t.mono[i];
            if (e == 0) continue;
            if (need_star) os << "*";
            os << ring_->var_names[i];
            if (e > 1) os << "^" << e;
            need_star = true;
        }
    }
    return os.str();
}

// --- parsing -----------------------------------------------------------------

namespace {

struct Parser {
    const RingPtr& ring;
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    [[noreturn]] void fail(const std::string& msg) {
        throw std::invalid_argument("parse error at position " + std::to_string(pos) +
                                    ": " + msg + " in '" + std::string(s) + "'");
    }

    mpz_class integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return mpz_class(std::string(s.substr(start, pos - start)), 10);
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos])))
            fail("expected identifier");
        ++pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return std::string(s.substr(start, pos - start));
    }

    // factor := ident ('^' nat)?
    void factor(std::vector<int>& exps) {
        std::string name = ident();
        int idx = ring->var_index(name);
        if (idx < 0) fail("unknown variable '" + name + "'");
        int e = 1;
        if (peek() == '^') {
            ++pos;
            mpz_class z = integer();
            if (!z.fits_sint_p()) fail("exponent too large");
            e = static_cast<int>(z.get_si());
        }
        exps[idx] += e;
    }

    // term := number ('*'? factor ('*'? factor)*)? | factor ('*'? factor)*
    Term term() {
        Rational coeff = 1;
        std::vector<int> exps(ring->num_vars(), 0);
        bool saw_number = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            mpz_class num = integer();
            if (peek() == '/') {
                ++pos;
                mpz_class den = integer();
                if (den == 0) fail("zero denominator");
                coeff = Rational(num, den);
                coeff.canonicalize();
            } else {
                coeff = Rational(num);
            }
            saw_number = true;
        }
        bool saw_factor = false;
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos;
                factor(exps);
                saw_factor = true;
            } else if (std::isalpha(static_cast<unsigned char>(c))) {
                factor(exps);
                saw_factor = true;
            } else {
                break;
            }
        }
        if (!saw_number && !saw_factor) fail("expected term");
        return Term{std::move(coeff), Monomial(std::move(exps))};
    }

    Polynomial poly() {
        std::vector<Term> terms;
        bool neg = false;
        char c = peek();
        if (c == '+' || c == '-') {
            neg = (c == '-');
            ++pos;
        }
        for (;;) {
            Term t = term();
            if (neg) t.coeff = -t.coeff;
            terms.push_back(std::move(t));
            if (eof()) break;
            char op = peek();
            if (op == '+' || op == '-') {
                neg = (op == '-');
                ++pos;
            } else {
                fail("expected '+' or '-'");
            }
        }
        return Polynomial::from_terms(ring, std::move(terms));
    }
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
    Parser p{ring, text};
    if (p.eof()) p.fail("empty polynomial");
    Polynomial r = p.poly();
    if (!p.eof()) p.fail("trailing input");
    return r;
}

// --- ring morphisms -----------------------------------------------------------

RingPtr prepend_vars(const RingPtr& ring, const std::vector<std::string>& front,
                     MonomialOrder order) {
    std::vector<std::string> names = front;
    names.insert(names.end(), ring->var_names.begin(), ring->var_names.end());
    return RingContext::make(std::move(names), std::move(order));
}

Polynomial map_vars(const Polynomial& f, const RingPtr& target,
                    const std::vector<int>& image) {
    int n = f.ring()->num_vars();
    if (static_cast<int>(image.size()) != n)
        throw std::invalid_argument("variable image has wrong length");
    int m = target->num_vars();
    std::vector<Term> out;
    out.reserve(f.terms().size());
    for (const Term& t : f.terms()) {
        std::vector<int> exps(m, 0);
        for (int i = 0; i < n; ++i) {
            int e = t.mono[i];
            if (e == 0) continue;
            if (image[i] < 0)
                throw std::invalid_argument("polynomial uses a dropped variable");
            exps[image[i]] += e;
        }
        out.push_back(Term{t.coeff, Monomial(std::move(exps))});
    }
    return Polynomial::from_terms(target, std::move(out));
}

Polynomial substitute(const Polynomial& f, int var, const Polynomial& value) {
    if (var < 0 || var >= f.ring()->num_vars())
        throw std::invalid_argument("variable index out of range");
    require_same_ring(f, value);
    Polynomial result = Polynomial::zero(f.ring());
    for (const Term& t : f.terms()) {
        std::vector<int> exps = t.mono.exponents();
        int e = exps[var];
        exps[var] = 0;
        Polynomial piece = Polynomial::term(f.ring(), t.coeff, Monomial(std::move(exps)));
        result = result + piece * value.pow(e);
    }
    return result;
}

std::string fresh_name(const RingPtr& ring, std::string base) {
    while (ring->var_index(base) >= 0) base += "_";
    return base;
}

}  // namespace aluffi
