#pragma once

#include <span>
#include <vector>

#include "aluffi/polynomial.hpp"

namespace aluffi {

// A reduced Groebner basis: elements monic, no term of any element divisible
// by the leading monomial of another, every S-polynomial reduces to zero.
// `leading[i]` is the leading monomial of `elements[i]` under `order`
// (elements themselves store terms in the ring's display order).
struct GroebnerBasis {
    RingPtr ring;
    MonomialOrder order = MonomialOrder::degrevlex();
    std::vector<Polynomial> elements;
    std::vector<Monomial> leading;

    bool empty() const { return elements.empty(); }
};

struct ReduceResult {
    Polynomial normal_form;
    std::vector<Polynomial> quotients;  // f = sum quotients[i]*basis[i] + normal_form
};

// Multivariate division of f by `basis` under `order`. No term of the normal
// form is divisible by any basis leading monomial.
ReduceResult reduce(const Polynomial& f, std::span<const Polynomial> basis,
                    const MonomialOrder& order);

// Normal form without quotient bookkeeping (faster).
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

// Buchberger's algorithm with the normal selection strategy and
// Gebauer-Moeller pair pruning; returns the unique reduced basis.
GroebnerBasis buchberger(std::vector<Polynomial> gens, const MonomialOrder& order);

bool ideal_member(const Polynomial& f, const GroebnerBasis& gb);

// Minimal monomial generators of the initial ideal.
std::vector<Monomial> leading_term_ideal(const GroebnerBasis& gb);

// Ideal-preserving simplification of a generator list under the ring's
// default order: each generator fully reduced against the others, zeros
// dropped, results monic, deterministic order.
std::vector<Polynomial> interreduce(std::vector<Polynomial> gens);

}  // namespace aluffi
