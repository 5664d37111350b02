#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace aluffi {

using Rational = mpq_class;

enum class OrderKind { Lex, DegRevLex, Elimination };

// A monomial order on exponent vectors: total, multiplicative, well-founded.
// Elimination(k, inner) is the block order that compares the first k
// exponents by degrevlex and breaks ties with `inner` on the rest, so any
// monomial meeting the first k variables outranks every monomial that avoids
// them.
class MonomialOrder {
public:
    static MonomialOrder lex();
    static MonomialOrder degrevlex();
    static MonomialOrder elimination(int front);
    static MonomialOrder elimination(int front, MonomialOrder inner);

    OrderKind kind() const { return kind_; }
    int front() const { return front_; }
    const MonomialOrder& inner() const;

    // >0 if u comes strictly after v in the order (u "greater"), 0 if equal.
    int compare(std::span<const int> u, std::span<const int> v) const;

    // Canonical key, used for Groebner-basis caches.
    std::string key() const;
    bool operator==(const MonomialOrder& o) const;

private:
    MonomialOrder(OrderKind k, int front, std::shared_ptr<const MonomialOrder> in)
        : kind_(k), front_(front), inner_(std::move(in)) {}

    OrderKind kind_ = OrderKind::DegRevLex;
    int front_ = 0;
    std::shared_ptr<const MonomialOrder> inner_;
};

class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::vector<int> exps);
    static Monomial one(int nvars);
    static Monomial variable(int index, int nvars, int power = 1);

    int size() const { return static_cast<int>(e_.size()); }
    int degree() const { return deg_; }
    int operator[](int i) const { return e_[i]; }
    const std::vector<int>& exponents() const { return e_; }
    bool is_one() const { return deg_ == 0; }

    bool divides(const Monomial& m) const;
    bool coprime(const Monomial& m) const;
    Monomial mul(const Monomial& m) const;
    // Exact quotient *this / m; requires m.divides(*this).
    Monomial div(const Monomial& m) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& m) const { return e_ == m.e_; }

private:
    std::vector<int> e_;
    int deg_ = 0;
};

struct RingContext;
using RingPtr = std::shared_ptr<const RingContext>;

// The ambient polynomial ring Q[x_1..x_n] with a fixed display/default order.
struct RingContext {
    std::vector<std::string> var_names;
    MonomialOrder order = MonomialOrder::degrevlex();

    int num_vars() const { return static_cast<int>(var_names.size()); }
    int var_index(std::string_view name) const;

    static RingPtr make(std::vector<std::string> names,
                        MonomialOrder order = MonomialOrder::degrevlex());
};

// Structural ring identity: same variable names and same order.
bool same_ring(const RingPtr& a, const RingPtr& b);

struct Term {
    Rational coeff;
    Monomial mono;

    bool operator==(const Term& o) const {
        return mono == o.mono && coeff == o.coeff;
    }
};

// Immutable normalized polynomial: terms strictly descending in the ring's
// order, no zero coefficients, no repeated monomials. Empty term list is the
// zero polynomial.
class Polynomial {
public:
    Polynomial() = default;

    static Polynomial zero(RingPtr ring);
    static Polynomial constant(RingPtr ring, const Rational& c);
    static Polynomial variable(RingPtr ring, int index);
    static Polynomial term(RingPtr ring, const Rational& c, Monomial m);
    static Polynomial from_terms(RingPtr ring, std::vector<Term> terms);

    const RingPtr& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Total degree; -1 for the zero polynomial.
    int degree() const;
    bool is_homogeneous() const;
    bool is_constant() const;
    bool is_monomial() const { return terms_.size() == 1; }
    const Term& leading_term() const;

    Polynomial operator+(const Polynomial& g) const;
    Polynomial operator-(const Polynomial& g) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& g) const;
    Polynomial mul_term(const Rational& c, const Monomial& m) const;
    Polynomial scaled(const Rational& c) const;
    Polynomial monic() const;
    Polynomial pow(int k) const;

    bool operator==(const Polynomial& g) const;
    bool operator!=(const Polynomial& g) const { return !(*this == g); }

    std::string str() const;

private:
    RingPtr ring_;
    std::vector<Term> terms_;
};

Polynomial poly_add(const Polynomial& f, const Polynomial& g);
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);
Polynomial partial_derivative(const Polynomial& f, int var);

// Text syntax: rational coefficients ("3", "-1/2"), '^' powers, optional '*',
// identifiers from the ring's var_names. The printer's output re-parses to an
// equal polynomial bit-exactly.
Polynomial parse_polynomial(const RingPtr& ring, std::string_view text);

// Deterministic total order on polynomials of one ring (degree, then leading
// monomials, then coefficients); used for canonical generator lists.
bool poly_canonical_less(const Polynomial& a, const Polynomial& b);

// --- ring morphisms -------------------------------------------------------

// New ring with `front` fresh names prepended, keeping the original names.
RingPtr prepend_vars(const RingPtr& ring, const std::vector<std::string>& front,
                     MonomialOrder order);

// Maps variable i of f's ring to variable image[i] of `target`; image[i] < 0
// asserts the variable does not occur in f.
Polynomial map_vars(const Polynomial& f, const RingPtr& target,
                    const std::vector<int>& image);

// Substitutes `value` (same ring) for variable `var`.
Polynomial substitute(const Polynomial& f, int var, const Polynomial& value);

// A name not colliding with any existing variable (appends '_').
std::string fresh_name(const RingPtr& ring, std::string base);

}  // namespace aluffi
