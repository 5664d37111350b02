#pragma once

#include <iosfwd>
#include <map>
#include <mutex>
#include <optional>
#include <vector>

#include "aluffi/groebner.hpp"
#include "aluffi/polynomial.hpp"

namespace aluffi {

// An ideal of its ring, carried by a normalized generator list. Reduced
// Groebner bases are cached per monomial order behind a mutex, so Ideal
// values are cheap to copy and safe to share across threads.
class Ideal {
public:
    Ideal() = default;
    Ideal(RingPtr ring, std::vector<Polynomial> gens);

    const RingPtr& ring() const { return state_->ring; }
    const std::vector<Polynomial>& generators() const { return state_->gens; }
    bool is_zero() const { return state_->gens.empty(); }

    const GroebnerBasis& groebner() const&;  // ring's default order
    const GroebnerBasis& groebner(const MonomialOrder& order) const&;
    // Binding the cached basis to a temporary ideal would dangle.
    const GroebnerBasis& groebner() const&& = delete;
    const GroebnerBasis& groebner(const MonomialOrder&) const&& = delete;

    bool contains(const Polynomial& f) const;
    bool contains(const Ideal& other) const;
    bool equals(const Ideal& other) const;
    bool is_proper() const;

private:
    struct State {
        RingPtr ring;
        std::vector<Polynomial> gens;
        mutable std::mutex lock;
        mutable std::map<std::string, GroebnerBasis> cache;
    };
    std::shared_ptr<State> state_;

    friend Ideal ideal_with_basis(RingPtr, std::vector<Polynomial>, GroebnerBasis);
};

// Internal constructor that seeds the Groebner cache (the basis must be the
// reduced basis of the generated ideal under its own order).
Ideal ideal_with_basis(RingPtr ring, std::vector<Polynomial> gens, GroebnerBasis gb);

Ideal zero_ideal(RingPtr ring);
Ideal principal_ideal(const Polynomial& f);
Ideal variable_power_ideal(const RingPtr& ring, int power);  // m^power

// All exponent vectors of one total degree (ordered deterministically).
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_power(const Ideal& a, int t);
Ideal intersect(const Ideal& a, const Ideal& b);
Ideal colon(const Ideal& a, const Polynomial& f);
Ideal eliminate(const Ideal& a, int front_vars);

// Height of a proper ideal: num_vars - dim(S/A), computed on the initial
// ideal as the minimum vertex cover of the generator supports.
int codimension(const Ideal& a);
int dimension(const Ideal& a);

bool is_m_primary(const Ideal& a);
bool equals_m_power(const Ideal& a, int r);

// Drops generators lying in the ideal of the ones kept before them
// (ascending degree, deterministic order). The ideal is unchanged.
std::vector<Polynomial> minimalize_generators(std::vector<Polynomial> gens);

// --- symbolic matrices -----------------------------------------------------

struct SymbolicMatrix {
    RingPtr ring;
    int rows = 0, cols = 0;
    std::vector<Polynomial> entries;  // row-major

    static SymbolicMatrix zero(RingPtr ring, int rows, int cols);
    const Polynomial& at(int r, int c) const { return entries[r * cols + c]; }
    Polynomial& at(int r, int c) { return entries[r * cols + c]; }
};

// Rows indexed by variables, columns by generators: entry (i,j) = d g_j / d x_i.
SymbolicMatrix jacobian_matrix(const std::vector<Polynomial>& gens);

// All r x r minors, expanded and normalized; zero minors dropped.
std::vector<Polynomial> minors(const SymbolicMatrix& m, int r);

Polynomial matrix_determinant(const SymbolicMatrix& m);

// (J, I_r(Theta)) with r = codimension(J), Theta the Jacobian of J's
// generators; generator list minimalized.
Ideal jacobian_ideal(const Ideal& j);

// --- Hilbert series ----------------------------------------------------------

// N(v)/(1-v)^e in canonical form: N not divisible by (1-v). e equals the
// Krull dimension of the graded quotient.
class HilbertSeries {
public:
    HilbertSeries(std::vector<mpz_class> numerator, int denominator_exponent);

    const std::vector<mpz_class>& numerator() const { return num_; }
    int denominator_exponent() const { return den_; }

    std::vector<mpz_class> coefficients(int up_to_degree) const;
    HilbertSeries operator-(const HilbertSeries& o) const;
    bool operator==(const HilbertSeries& o) const;
    std::string str() const;  // "(1+2v)/(1-v)^2"

    static HilbertSeries of_monomial_quotient(int num_vars,
                                              const std::vector<Monomial>& min_gens);

private:
    std::vector<mpz_class> num_;
    int den_ = 0;
};

// Hilbert series of S/A for homogeneous A, via the initial ideal.
HilbertSeries hilbert_series(const Ideal& a);

// --- Rees algebra ------------------------------------------------------------

// Defining ideal of the Rees algebra of A (modulo `modulo` when given) in the
// ring [T1..Tm, original vars]: kernel of T_i -> f_i, computed by adjoining u
// and eliminating it from (T_i - u f_i) + modulo.
Ideal rees_ideal(const Ideal& a, const std::optional<Ideal>& modulo = {});

// Maximum T-degree in a minimal T-homogeneous generating set of
// rees_ideal(I, modulo=J); 1 means linear type.
int relation_type(const Ideal& j, const Ideal& i);

// --- text formats --------------------------------------------------------------

// "ring: x,y,z" header, then one generator per line.
Ideal parse_ideal(std::istream& in);
Ideal parse_ideal_file(const std::string& path);
std::string ideal_to_text(const Ideal& a);

}  // namespace aluffi
