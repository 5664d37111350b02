#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "aluffi/ideal.hpp"

using namespace aluffi;

namespace {

RingPtr xyz() { return RingContext::make({"x", "y", "z"}); }
RingPtr xy() { return RingContext::make({"x", "y"}); }

Polynomial P(const RingPtr& r, const char* s) { return parse_polynomial(r, s); }

Ideal I(const RingPtr& r, std::initializer_list<const char*> gens) {
    std::vector<Polynomial> v;
    for (const char* s : gens) v.push_back(P(r, s));
    return Ideal(r, std::move(v));
}

std::mt19937 rng(90125);

Polynomial random_poly(const RingPtr& r, int max_terms, int max_deg) {
    std::uniform_int_distribution<int> nt(0, max_terms);
    std::uniform_int_distribution<int> coef(-3, 3);
    std::uniform_int_distribution<int> expo(0, max_deg);
    std::vector<Term> terms;
    int k = nt(rng);
    for (int i = 0; i < k; ++i) {
        std::vector<int> e(r->num_vars());
        int budget = max_deg;
        for (int& x : e) {
            x = std::min(expo(rng), budget);
            budget -= x;
        }
        terms.push_back(Term{coef(rng), Monomial(std::move(e))});
    }
    return Polynomial::from_terms(r, std::move(terms));
}

// Independent count of standard monomials of one degree.
long count_standard_monomials(int nvars, int degree, const std::vector<Monomial>& lt) {
    long count = 0;
    for (const Monomial& m : monomials_of_degree(nvars, degree)) {
        bool divisible = false;
        for (const Monomial& g : lt)
            if (g.divides(m)) {
                divisible = true;
                break;
            }
        if (!divisible) ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("sum, product, power basics") {
    auto r = xyz();
    CHECK(ideal_sum(I(r, {"x"}), I(r, {"y"})).equals(I(r, {"x", "y"})));
    CHECK(ideal_product(I(r, {"x"}), I(r, {"y"})).equals(I(r, {"x*y"})));
    CHECK(ideal_power(I(r, {"x", "y"}), 2).equals(I(r, {"x^2", "x*y", "y^2"})));
    Ideal a = I(r, {"x^2 - y", "z"});
    CHECK(ideal_power(a, 1).equals(a));
    CHECK_THROWS_AS(ideal_power(a, 0), std::invalid_argument);
    auto r2 = xy();
    CHECK(ideal_power(I(r2, {"x", "y"}), 3)
              .equals(I(r2, {"x^3", "x^2*y", "x*y^2", "y^3"})));
}

TEST_CASE("product of curve generators lands in the product ideal") {
    auto r = xyz();
    Ideal j = I(r, {"x^4 - y*z", "y^2 - x*z", "x^3*y - z^2"});
    Ideal i = I(r, {"x^4", "x^3*y", "y^2", "x*z", "y*z", "z^2"});
    Ideal ji = ideal_product(j, i);
    CHECK(ji.contains(P(r, "x^4") * P(r, "x^4 - y*z")));
}

TEST_CASE("intersection basics") {
    auto r = xyz();
    CHECK(intersect(I(r, {"x"}), I(r, {"y"})).equals(I(r, {"x*y"})));
    Ideal a = I(r, {"x^2 - y", "z^2"});
    CHECK(intersect(a, a).equals(a));
    CHECK(intersect(a, zero_ideal(r)).is_zero());
}

TEST_CASE("intersection soundness on random ideals") {
    auto r = xyz();
    for (int it = 0; it < 25; ++it) {
        std::vector<Polynomial> ga, gb;
        for (int k = 0; k < 2; ++k) {
            ga.push_back(random_poly(r, 2, 2));
            gb.push_back(random_poly(r, 2, 2));
        }
        Ideal a(r, ga), b(r, gb);
        if (a.is_zero() || b.is_zero()) continue;
        Ideal meet = intersect(a, b);
        for (const Polynomial& g : meet.generators()) {
            CHECK(a.contains(g));
            CHECK(b.contains(g));
        }
        // Products of generators lie in both, hence in the intersection.
        for (const Polynomial& f : a.generators())
            for (const Polynomial& g : b.generators()) CHECK(meet.contains(f * g));
    }
}

TEST_CASE("colon basics and soundness") {
    auto r = xyz();
    CHECK(colon(I(r, {"x*y"}), P(r, "x")).equals(I(r, {"y"})));
    CHECK(colon(I(r, {"x^2"}), P(r, "x")).equals(I(r, {"x"})));
    CHECK_THROWS_AS(colon(I(r, {"x"}), Polynomial::zero(r)), std::invalid_argument);

    for (int it = 0; it < 20; ++it) {
        Ideal a = I(r, {"x^2 - y*z", "y^2"});
        Polynomial f = random_poly(r, 2, 2);
        if (f.is_zero()) continue;
        Ideal q = colon(a, f);
        for (const Polynomial& g : q.generators()) CHECK(a.contains(g * f));
        Polynomial probe = random_poly(r, 2, 2);
        CHECK(q.contains(probe) == a.contains(probe * f));
    }
}

TEST_CASE("elimination") {
    auto r = xy();
    CHECK(eliminate(I(r, {"x - y"}), 1).is_zero());
    auto r3 = xyz();
    Ideal e = eliminate(I(r3, {"x^2 - y", "x^3 - z"}), 1);
    CHECK(e.contains(P(r3, "y^3 - z^2")));
    // The one-variable trick reproduces the intersection.
    auto big = prepend_vars(r3, {"t"}, MonomialOrder::elimination(1));
    Ideal mix(big, {parse_polynomial(big, "t*x"), parse_polynomial(big, "y - t*y")});
    Ideal elim = eliminate(mix, 1);
    for (const Polynomial& g : elim.generators())
        CHECK(intersect(I(r3, {"x"}), I(r3, {"y"}))
                  .contains(map_vars(g, r3, {-1, 0, 1, 2})));
}

TEST_CASE("codimension") {
    auto r = xyz();
    CHECK(codimension(I(r, {"x", "y"})) == 2);
    CHECK(codimension(I(r, {"x*y"})) == 1);
    CHECK(codimension(zero_ideal(r)) == 0);
    CHECK(dimension(I(r, {"x", "y", "z"})) == 0);
    CHECK_THROWS_AS(codimension(I(r, {"x", "x + 1"})), std::domain_error);
    // Pure powers cover every variable.
    for (int n = 2; n <= 4; ++n) {
        std::vector<std::string> names;
        for (int i = 0; i < n; ++i) names.push_back("x" + std::to_string(i + 1));
        RingPtr rn = RingContext::make(names);
        for (int k = 1; k <= 3; ++k)
            CHECK(codimension(variable_power_ideal(rn, k)) == n);
    }
}

TEST_CASE("m-primary and power-of-m tests") {
    auto r = xy();
    CHECK(is_m_primary(variable_power_ideal(r, 2)));
    CHECK(!is_m_primary(I(r, {"x"})));
    CHECK(equals_m_power(variable_power_ideal(r, 2), 2));
    CHECK(!equals_m_power(I(r, {"x^2", "y^2"}), 2));  // x*y missing
    CHECK(!equals_m_power(I(r, {"x"}), 2));           // x not in m^2
}

TEST_CASE("hilbert series") {
    auto r = xyz();
    CHECK(hilbert_series(zero_ideal(r)).str() == "(1)/(1-v)^3");
    CHECK(hilbert_series(I(r, {"x", "y", "z"})).str() == "(1)/(1-v)^0");
    CHECK_THROWS_AS(hilbert_series(I(r, {"x^2 - y"})), std::invalid_argument);

    // Twisted cubic: quadrics of the scroll pattern in 4 variables.
    RingPtr r4 = RingContext::make({"a", "b", "c", "d"});
    Ideal tw = I(r4, {"b^2 - a*c", "b*c - a*d", "c^2 - b*d"});
    HilbertSeries hs = hilbert_series(tw);
    CHECK(hs.str() == "(1+2v)/(1-v)^2");
    auto co = hs.coefficients(5);
    for (int d = 0; d <= 5; ++d) CHECK(co[d] == 3 * d + 1);
}

TEST_CASE("hilbert series matches brute-force dimension counts") {
    std::vector<Ideal> samples;
    auto r = xyz();
    samples.push_back(I(r, {"x^2", "x*y", "y^3"}));
    samples.push_back(I(r, {"x^2 - y*z", "y^2 - x*z"}));
    samples.push_back(variable_power_ideal(r, 3));
    RingPtr r4 = RingContext::make({"a", "b", "c", "d"});
    samples.push_back(I(r4, {"a*b", "b*c", "c*d", "a*d"}));
    for (const Ideal& a : samples) {
        HilbertSeries hs = hilbert_series(a);
        auto co = hs.coefficients(8);
        const auto& lt = a.groebner().leading;
        for (int d = 0; d <= 8; ++d)
            CHECK(co[d] == count_standard_monomials(a.ring()->num_vars(), d, lt));
    }
}

TEST_CASE("jacobian matrix layout") {
    auto r = xyz();
    std::vector<Polynomial> gens{P(r, "x^4 - y*z"), P(r, "y^2 - x*z"),
                                 P(r, "x^3*y - z^2")};
    SymbolicMatrix theta = jacobian_matrix(gens);
    CHECK(theta.rows == 3);
    CHECK(theta.cols == 3);
    CHECK(theta.at(0, 0) == P(r, "4*x^3"));
    CHECK(theta.at(1, 0) == P(r, "0 - z"));
    CHECK(theta.at(2, 0) == P(r, "0 - y"));

    SymbolicMatrix id = jacobian_matrix({P(r, "x"), P(r, "y"), P(r, "z")});
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(id.at(i, j) ==
                  (i == j ? Polynomial::constant(r, 1) : Polynomial::zero(r)));

    // Monomial generators give monomial entries.
    SymbolicMatrix mono = jacobian_matrix({P(r, "x^2*y"), P(r, "y*z")});
    for (const Polynomial& e : mono.entries) CHECK(e.terms().size() <= 1);
}

TEST_CASE("minors") {
    RingPtr r4 = RingContext::make({"x", "y", "z", "w"});
    SymbolicMatrix m = SymbolicMatrix::zero(r4, 2, 2);
    m.at(0, 0) = P(r4, "x");
    m.at(0, 1) = P(r4, "y");
    m.at(1, 0) = P(r4, "z");
    m.at(1, 1) = P(r4, "w");
    auto mins = minors(m, 2);
    REQUIRE(mins.size() == 1);
    CHECK(mins[0] == P(r4, "x*w - y*z"));
    CHECK(minors(m, 1).size() == 4);
    CHECK_THROWS_AS(minors(m, 3), std::invalid_argument);
    CHECK(matrix_determinant(m) == P(r4, "x*w - y*z"));
}

TEST_CASE("jacobian ideal") {
    auto r = xyz();
    // (x^2, y^2): the only 2-minor of the Jacobian is 4xy, so the Jacobian
    // ideal is m^2 restricted to x,y.
    auto r2 = xy();
    Ideal j2 = I(r2, {"x^2", "y^2"});
    CHECK(jacobian_ideal(j2).equals(I(r2, {"x^2", "x*y", "y^2"})));

    Ideal j = I(r, {"x^4 - y*z", "y^2 - x*z", "x^3*y - z^2"});
    CHECK(codimension(j) == 2);
    Ideal i = jacobian_ideal(j);
    CHECK(i.equals(I(r, {"x^4", "x^3*y", "y^2", "x*z", "y*z", "z^2"})));
    CHECK(i.contains(P(r, "y*z")));

    // Quadric generators give homogeneous r-minors of degree r.
    Ideal q = I(r, {"x*y", "y*z", "x*z"});
    int rr = codimension(q);
    for (const Polynomial& p : minors(jacobian_matrix(q.generators()), rr)) {
        CHECK(p.is_homogeneous());
        if (!p.is_zero()) CHECK(p.degree() == rr);
    }
}

TEST_CASE("minimalize_generators keeps the ideal and drops redundancy") {
    auto r = xyz();
    std::vector<Polynomial> gens{P(r, "x"), P(r, "x^2"), P(r, "y"), P(r, "x + y")};
    auto min = minimalize_generators(gens);
    Ideal a(r, min);
    CHECK(a.equals(I(r, {"x", "y"})));
    CHECK(min.size() == 2);
}

TEST_CASE("rees ideal") {
    auto r2 = xy();
    // Principal ideals are of linear type.
    Ideal pr = rees_ideal(I(r2, {"x"}));
    CHECK(pr.is_zero());

    // Koszul syzygy of a regular sequence.
    Ideal koszul = rees_ideal(I(r2, {"x", "y"}));
    REQUIRE(koszul.generators().size() == 1);
    CHECK(koszul.generators()[0] == parse_polynomial(koszul.ring(), "x*T2 - y*T1"));

    CHECK(relation_type(zero_ideal(r2), I(r2, {"x", "y"})) == 1);
    Ideal j = I(r2, {"x^3"});
    Ideal i = I(r2, {"x^3", "y^3"});
    CHECK(relation_type(j, i) == 1);  // regular sequence modulo J
    CHECK_THROWS_AS(relation_type(I(r2, {"y^2"}), I(r2, {"x"})), std::domain_error);
}

TEST_CASE("lemma: forms of one degree meet high powers of m inside J*m^..") {
    auto r2 = xy();
    Ideal j = I(r2, {"x^2", "x*y"});  // degree-2 forms
    for (int rr = 2; rr <= 3; ++rr) {
        for (int t = 2; t <= 3; ++t) {
            Ideal lhs = intersect(j, variable_power_ideal(r2, rr * t));
            Ideal rhs = ideal_product(j, variable_power_ideal(r2, rr * (t - 1)));
            CHECK(rhs.contains(lhs));
        }
    }
}

TEST_CASE("ideal text format round-trips") {
    auto r = xyz();
    Ideal a = I(r, {"x^4 - y*z", "y^2 - x*z"});
    std::string text = ideal_to_text(a);
    std::istringstream in(text);
    Ideal b = parse_ideal(in);
    CHECK(same_ring(a.ring(), b.ring()));
    CHECK(a.equals(b));
    std::istringstream bad("x + y\n");
    CHECK_THROWS_AS(parse_ideal(bad), std::invalid_argument);
}

TEST_CASE("groebner cache is per order and consistent") {
    auto r = xyz();
    Ideal a = I(r, {"x^2 - y", "x^3 - z"});
    const GroebnerBasis& drl = a.groebner();
    const GroebnerBasis& lex = a.groebner(MonomialOrder::lex());
    CHECK(&a.groebner() == &drl);
    for (const Polynomial& g : lex.elements) CHECK(ideal_member(g, drl));
    for (const Polynomial& g : drl.elements) CHECK(ideal_member(g, lex));
}
