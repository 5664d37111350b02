#include "aluffi/ideal.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "aluffi/util.hpp"

namespace aluffi {

// --- Ideal -------------------------------------------------------------------

Ideal::Ideal(RingPtr ring, std::vector<Polynomial> gens) {
    if (!ring) throw std::invalid_argument("null ring");
    std::vector<Polynomial> kept;
    kept.reserve(gens.size());
    for (Polynomial& g : gens) {
        if (g.is_zero()) continue;
        if (!same_ring(ring, g.ring()))
            throw std::invalid_argument("generator from a different ring");
        kept.push_back(std::move(g));
    }
    state_ = std::make_shared<State>();
    state_->ring = std::move(ring);
    state_->gens = std::move(kept);
}

Ideal ideal_with_basis(RingPtr ring, std::vector<Polynomial> gens, GroebnerBasis gb) {
    Ideal a(std::move(ring), std::move(gens));
    std::lock_guard<std::mutex> hold(a.state_->lock);
    a.state_->cache.emplace(gb.order.key(), std::move(gb));
    return a;
}

const GroebnerBasis& Ideal::groebner() const& { return groebner(state_->ring->order); }

const GroebnerBasis& Ideal::groebner(const MonomialOrder& order) const& {
    std::lock_guard<std::mutex> hold(state_->lock);
    std::string key = order.key();
    auto it = state_->cache.find(key);
    if (it != state_->cache.end()) return it->second;
    GroebnerBasis gb = buchberger(state_->gens, order);
    if (!gb.ring) gb.ring = state_->ring;
    return state_->cache.emplace(key, std::move(gb)).first->second;
}

bool Ideal::contains(const Polynomial& f) const {
    if (f.is_zero()) return true;
    if (is_zero()) return false;
    return ideal_member(f, groebner());
}

bool Ideal::contains(const Ideal& other) const {
    for (const Polynomial& g : other.generators())
        if (!contains(g)) return false;
    return true;
}

bool Ideal::equals(const Ideal& other) const {
    return contains(other) && other.contains(*this);
}

bool Ideal::is_proper() const {
    if (is_zero()) return true;
    const GroebnerBasis& gb = groebner();
    for (const Monomial& m : gb.leading)
        if (m.is_one()) return false;
    return true;
}

Ideal zero_ideal(RingPtr ring) { return Ideal(std::move(ring), {}); }

Ideal principal_ideal(const Polynomial& f) { return Ideal(f.ring(), {f}); }

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
    std::vector<Monomial> out;
    std::vector<int> exps(nvars, 0);
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == nvars - 1) {
            exps[var] = remaining;
            out.push_back(Monomial(exps));
            exps[var] = 0;
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            exps[var] = e;
            self(self, var + 1, remaining - e);
        }
        exps[var] = 0;
    };
    if (nvars == 0) return out;
    rec(rec, 0, degree);
    return out;
}

Ideal variable_power_ideal(const RingPtr& ring, int power) {
    if (power < 1) throw std::invalid_argument("power must be >= 1");
    std::vector<Polynomial> gens;
    for (Monomial& m : monomials_of_degree(ring->num_vars(), power))
        gens.push_back(Polynomial::term(ring, 1, std::move(m)));
    return Ideal(ring, std::move(gens));
}

namespace {

void require_same_ring(const Ideal& a, const Ideal& b) {
    if (!same_ring(a.ring(), b.ring()))
        throw std::invalid_argument("ideal ring context mismatch");
}

}  // namespace

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    require_same_ring(a, b);
    std::vector<Polynomial> gens = a.generators();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return Ideal(a.ring(), interreduce(std::move(gens)));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    require_same_ring(a, b);
    std::vector<Polynomial> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const Polynomial& f : a.generators())
        for (const Polynomial& g : b.generators()) gens.push_back(f * g);
    return Ideal(a.ring(), interreduce(std::move(gens)));
}

Ideal ideal_power(const Ideal& a, int t) {
    if (t < 1) throw std::invalid_argument("ideal power requires t >= 1");
    Ideal r = a;
    for (int i = 1; i < t; ++i) r = ideal_product(r, a);
    return r;
}

Ideal intersect(const Ideal& a, const Ideal& b) {
    require_same_ring(a, b);
    const RingPtr& ring = a.ring();
    if (a.is_zero() || b.is_zero()) return zero_ideal(ring);

    std::string w = fresh_name(ring, "w");
    MonomialOrder order = MonomialOrder::elimination(1, ring->order);
    RingPtr ext = prepend_vars(ring, {w}, order);
    int n = ring->num_vars();
    std::vector<int> up(n);
    for (int i = 0; i < n; ++i) up[i] = i + 1;

    Polynomial wp = Polynomial::variable(ext, 0);
    Polynomial one_minus_w = Polynomial::constant(ext, 1) - wp;
    std::vector<Polynomial> gens;
    gens.reserve(a.generators().size() + b.generators().size());
    for (const Polynomial& f : a.generators()) gens.push_back(wp * map_vars(f, ext, up));
    for (const Polynomial& g : b.generators())
        gens.push_back(one_minus_w * map_vars(g, ext, up));

    GroebnerBasis egb = buchberger(std::move(gens), ext->order);

    std::vector<int> down(ext->num_vars());
    down[0] = -1;
    for (int i = 0; i < n; ++i) down[i + 1] = i;
    std::vector<Polynomial> kept;
    GroebnerBasis seed;
    seed.ring = ring;
    seed.order = ring->order;
    for (std::size_t i = 0; i < egb.elements.size(); ++i) {
        bool has_w = false;
        for (const Term& t : egb.elements[i].terms())
            if (t.mono[0] > 0) {
                has_w = true;
                break;
            }
        if (has_w) continue;
        Polynomial mapped = map_vars(egb.elements[i], ring, down);
        seed.leading.push_back(mapped.is_zero() ? Monomial::one(n)
                                                : mapped.leading_term().mono);
        seed.elements.push_back(mapped);
        kept.push_back(std::move(mapped));
    }
    return ideal_with_basis(ring, std::move(kept), std::move(seed));
}

Ideal colon(const Ideal& a, const Polynomial& f) {
    if (f.is_zero()) throw std::invalid_argument("colon by zero polynomial");
    if (a.is_zero()) return zero_ideal(a.ring());
    if (!same_ring(a.ring(), f.ring()))
        throw std::invalid_argument("ideal ring context mismatch");
    Ideal meet = intersect(a, principal_ideal(f));
    std::vector<Polynomial> divisor{f};
    std::vector<Polynomial> gens;
    gens.reserve(meet.generators().size());
    for (const Polynomial& g : meet.generators()) {
        ReduceResult rr = reduce(g, divisor, a.ring()->order);
        if (!rr.normal_form.is_zero())
            throw std::logic_error("colon: intersection element not divisible");
        gens.push_back(rr.quotients[0]);
    }
    return Ideal(a.ring(), interreduce(std::move(gens)));
}

Ideal eliminate(const Ideal& a, int front_vars) {
    int n = a.ring()->num_vars();
    if (front_vars < 0 || front_vars > n)
        throw std::invalid_argument("eliminate: variable count out of range");
    if (front_vars == 0 || a.is_zero()) return a;
    const GroebnerBasis& gb = a.groebner(MonomialOrder::elimination(front_vars));
    std::vector<Polynomial> kept;
    for (const Polynomial& g : gb.elements) {
        bool uses_front = false;
        for (const Term& t : g.terms())
            for (int i = 0; i < front_vars && !uses_front; ++i)
                if (t.mono[i] > 0) uses_front = true;
        if (!uses_front) kept.push_back(g);
    }
    return Ideal(a.ring(), std::move(kept));
}

// --- codimension ---------------------------------------------------------------

namespace {

int min_vertex_cover(const std::vector<std::uint64_t>& supports, int nvars) {
    int best = nvars;
    auto rec = [&](auto&& self, std::uint64_t cover, int count) -> void {
        if (count >= best) return;
        const std::uint64_t* uncovered = nullptr;
        for (const std::uint64_t& s : supports)
            if (!(s & cover)) {
                uncovered = &s;
                break;
            }
        if (!uncovered) {
            best = count;
            return;
        }
        std::uint64_t s = *uncovered;
        while (s) {
            std::uint64_t bit = s & (~s + 1);
            self(self, cover | bit, count + 1);
            s ^= bit;
        }
    };
    rec(rec, 0, 0);
    return best;
}

}  // namespace

int codimension(const Ideal& a) {
    if (!a.is_proper()) throw std::domain_error("codimension of the unit ideal");
    if (a.is_zero()) return 0;
    int n = a.ring()->num_vars();
    if (n > 64) throw std::invalid_argument("too many variables for cover search");
    const GroebnerBasis& gb = a.groebner();
    std::vector<std::uint64_t> supports;
    supports.reserve(gb.leading.size());
    for (const Monomial& m : gb.leading) {
        std::uint64_t s = 0;
        for (int i = 0; i < n; ++i)
            if (m[i] > 0) s |= std::uint64_t(1) << i;
        supports.push_back(s);
    }
    return min_vertex_cover(supports, n);
}

int dimension(const Ideal& a) { return a.ring()->num_vars() - codimension(a); }

bool is_m_primary(const Ideal& a) {
    if (!a.is_proper()) throw std::domain_error("is_m_primary of the unit ideal");
    if (a.is_zero()) return a.ring()->num_vars() == 0;
    const GroebnerBasis& gb = a.groebner();
    int n = a.ring()->num_vars();
    for (int v = 0; v < n; ++v) {
        bool pure = false;
        for (const Monomial& m : gb.leading) {
            if (m[v] == m.degree() && m.degree() > 0) {
                pure = true;
                break;
            }
        }
        if (!pure) return false;
    }
    return true;
}

bool equals_m_power(const Ideal& a, int r) {
    if (r < 1) throw std::invalid_argument("equals_m_power requires r >= 1");
    for (const Polynomial& g : a.generators())
        for (const Term& t : g.terms())
            if (t.mono.degree() < r) return false;
    const RingPtr& ring = a.ring();
    if (a.is_zero()) return false;
    const GroebnerBasis& gb = a.groebner();
    for (Monomial& m : monomials_of_degree(ring->num_vars(), r)) {
        util::poll_deadline();
        if (!ideal_member(Polynomial::term(ring, 1, std::move(m)), gb)) return false;
    }
    return true;
}

std::vector<Polynomial> minimalize_generators(std::vector<Polynomial> gens) {
    std::erase_if(gens, [](const Polynomial& p) { return p.is_zero(); });
    if (gens.empty()) return gens;
    std::sort(gens.begin(), gens.end(), poly_canonical_less);
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());

    std::vector<Polynomial> kept;
    GroebnerBasis gb;
    for (Polynomial& g : gens) {
        util::poll_deadline();
        if (!kept.empty() && ideal_member(g, gb)) continue;
        kept.push_back(g);
        std::vector<Polynomial> seed = gb.elements;
        seed.push_back(std::move(g));
        gb = buchberger(std::move(seed), kept.front().ring()->order);
    }
    return kept;
}

// --- symbolic matrices -----------------------------------------------------------

SymbolicMatrix SymbolicMatrix::zero(RingPtr ring, int rows, int cols) {
    SymbolicMatrix m;
    m.rows = rows;
    m.cols = cols;
    m.entries.assign(static_cast<std::size_t>(rows) * cols, Polynomial::zero(ring));
    m.ring = std::move(ring);
    return m;
}

SymbolicMatrix jacobian_matrix(const std::vector<Polynomial>& gens) {
    if (gens.empty()) throw std::invalid_argument("jacobian of empty generator list");
    RingPtr ring = gens.front().ring();
    int n = ring->num_vars();
    int s = static_cast<int>(gens.size());
    SymbolicMatrix m = SymbolicMatrix::zero(ring, n, s);
    for (int j = 0; j < s; ++j) {
        if (!same_ring(ring, gens[j].ring()))
            throw std::invalid_argument("jacobian generators from different rings");
        for (int i = 0; i < n; ++i) m.at(i, j) = partial_derivative(gens[j], i);
    }
    return m;
}

namespace {

Polynomial det_expand(const RingPtr& ring,
                      const std::vector<std::vector<const Polynomial*>>& m) {
    std::size_t k = m.size();
    if (k == 1) return *m[0][0];
    util::poll_deadline();
    // Expand along the column with the most zero entries.
    std::size_t best_col = 0, best_zeros = 0;
    for (std::size_t c = 0; c < k; ++c) {
        std::size_t zeros = 0;
        for (std::size_t r = 0; r < k; ++r)
            if (m[r][c]->is_zero()) ++zeros;
        if (zeros >= best_zeros) {
            best_zeros = zeros;
            best_col = c;
        }
        if (zeros == k) return Polynomial::zero(ring);
    }
    Polynomial acc = Polynomial::zero(ring);
    for (std::size_t r = 0; r < k; ++r) {
        const Polynomial* e = m[r][best_col];
        if (e->is_zero()) continue;
        std::vector<std::vector<const Polynomial*>> sub;
        sub.reserve(k - 1);
        for (std::size_t rr = 0; rr < k; ++rr) {
            if (rr == r) continue;
            std::vector<const Polynomial*> row;
            row.reserve(k - 1);
            for (std::size_t cc = 0; cc < k; ++cc)
                if (cc != best_col) row.push_back(m[rr][cc]);
            sub.push_back(std::move(row));
        }
        Polynomial cofactor = *e * det_expand(ring, sub);
        if ((r + best_col) % 2 == 1) cofactor = -cofactor;
        acc = acc + cofactor;
    }
    return acc;
}

}  // namespace

Polynomial matrix_determinant(const SymbolicMatrix& m) {
    if (m.rows != m.cols) throw std::invalid_argument("determinant of non-square matrix");
    std::vector<std::vector<const Polynomial*>> rows(m.rows);
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c) rows[r].push_back(&m.at(r, c));
    return det_expand(m.ring, rows);
}

std::vector<Polynomial> minors(const SymbolicMatrix& m, int r) {
    if (r < 1 || r > std::min(m.rows, m.cols))
        throw std::invalid_argument("minor size out of range");
    std::vector<Polynomial> out;
    std::vector<int> rowsel(r), colsel(r);
    for (int i = 0; i < r; ++i) rowsel[i] = i;
    auto next_comb = [](std::vector<int>& c, int n) {
        int k = static_cast<int>(c.size());
        for (int i = k - 1; i >= 0; --i) {
            if (c[i] < n - k + i) {
                ++c[i];
                for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
                return true;
            }
        }
        return false;
    };
    do {
        for (int i = 0; i < r; ++i) colsel[i] = i;
        do {
            util::poll_deadline();
            std::vector<std::vector<const Polynomial*>> sub(r);
            for (int i = 0; i < r; ++i)
                for (int j = 0; j < r; ++j) sub[i].push_back(&m.at(rowsel[i], colsel[j]));
            Polynomial d = det_expand(m.ring, sub);
            if (!d.is_zero()) out.push_back(std::move(d));
        } while (next_comb(colsel, m.cols));
    } while (next_comb(rowsel, m.rows));
    return out;
}

Ideal jacobian_ideal(const Ideal& j) {
    if (j.is_zero()) throw std::invalid_argument("jacobian ideal of the zero ideal");
    if (!j.is_proper()) throw std::domain_error("jacobian ideal of the unit ideal");
    int r = codimension(j);
    SymbolicMatrix theta = jacobian_matrix(j.generators());
    std::vector<Polynomial> mins = minors(theta, r);
    for (Polynomial& p : mins) p = p.monic();
    std::vector<Polynomial> gens = j.generators();
    gens.insert(gens.end(), std::make_move_iterator(mins.begin()),
                std::make_move_iterator(mins.end()));
    return Ideal(j.ring(), minimalize_generators(std::move(gens)));
}

// --- Hilbert series ---------------------------------------------------------------

namespace {

using ZPoly = std::vector<mpz_class>;  // dense, index = degree

void trim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

ZPoly add(const ZPoly& a, const ZPoly& b) {
    ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    trim(r);
    return r;
}

ZPoly shift(ZPoly p, int k) {
    if (p.empty()) return p;
    p.insert(p.begin(), k, mpz_class(0));
    return p;
}

ZPoly mul_one_minus_v(const ZPoly& p) {
    if (p.empty()) return {};
    ZPoly r(p.size() + 1, mpz_class(0));
    for (std::size_t i = 0; i < p.size(); ++i) {
        r[i] += p[i];
        r[i + 1] -= p[i];
    }
    trim(r);
    return r;
}

mpz_class eval_at_one(const ZPoly& p) {
    mpz_class s = 0;
    for (const mpz_class& c : p) s += c;
    return s;
}

// Exact division by (1-v); requires p(1) == 0.
ZPoly div_one_minus_v(const ZPoly& p) {
    if (p.empty()) return {};
    ZPoly q(p.size() - 1, mpz_class(0));
    mpz_class carry = 0;
    for (std::size_t i = 0; i + 1 < p.size(); ++i) {
        carry += p[i];
        q[i] = carry;
    }
    trim(q);
    return q;
}

std::vector<Monomial> minimalize_monomials(std::vector<Monomial> gens) {
    std::vector<Monomial> out;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i == j) continue;
            if (gens[j].divides(gens[i]) && !(gens[i] == gens[j] && j > i))
                redundant = true;
        }
        if (!redundant) out.push_back(gens[i]);
    }
    return out;
}

// Numerator of HS(S/M) over (1-v)^n for a monomial ideal M given by minimal
// generators; standard pivot-variable recursion.
ZPoly hilbert_numerator(std::vector<Monomial> gens) {
    if (gens.empty()) return {1};
    for (const Monomial& g : gens)
        if (g.is_one()) return {};
    int n = gens.front().size();

    std::vector<int> count(n, 0);
    for (const Monomial& g : gens)
        for (int i = 0; i < n; ++i)
            if (g[i] > 0) ++count[i];
    int pivot = -1, best = 1;
    for (int i = 0; i < n; ++i)
        if (count[i] > best) {
            best = count[i];
            pivot = i;
        }

    if (pivot < 0) {
        // Pairwise coprime generators.
        ZPoly r{1};
        for (const Monomial& g : gens) {
            ZPoly factor(g.degree() + 1, mpz_class(0));
            factor[0] = 1;
            factor[g.degree()] = -1;
            ZPoly next(r.size() + factor.size() - 1, mpz_class(0));
            for (std::size_t i = 0; i < r.size(); ++i)
                for (std::size_t j = 0; j < factor.size(); ++j)
                    next[i + j] += r[i] * factor[j];
            trim(next);
            r = std::move(next);
        }
        return r;
    }

    std::vector<Monomial> with_pivot{Monomial::variable(pivot, n)};
    std::vector<Monomial> colon;
    for (const Monomial& g : gens) {
        if (g[pivot] == 0) {
            with_pivot.push_back(g);
            colon.push_back(g);
        } else {
            std::vector<int> e = g.exponents();
            e[pivot] -= 1;
            colon.push_back(Monomial(std::move(e)));
        }
    }
    ZPoly a = hilbert_numerator(minimalize_monomials(std::move(with_pivot)));
    ZPoly b = hilbert_numerator(minimalize_monomials(std::move(colon)));
    return add(a, shift(std::move(b), 1));
}

}  // namespace

HilbertSeries::HilbertSeries(std::vector<mpz_class> numerator, int denominator_exponent)
    : num_(std::move(numerator)), den_(denominator_exponent) {
    if (den_ < 0) throw std::invalid_argument("negative denominator exponent");
    trim(num_);
    while (den_ > 0 && !num_.empty() && eval_at_one(num_) == 0) {
        num_ = div_one_minus_v(num_);
        --den_;
    }
    if (num_.empty()) den_ = 0;
}

std::vector<mpz_class> HilbertSeries::coefficients(int up_to_degree) const {
    std::vector<mpz_class> out(up_to_degree + 1, mpz_class(0));
    for (int j = 0; j <= up_to_degree; ++j) {
        mpz_class s = 0;
        for (std::size_t i = 0; i < num_.size() && static_cast<int>(i) <= j; ++i) {
            if (den_ == 0) {
                if (static_cast<int>(i) == j) s += num_[i];
            } else {
                s += num_[i] * util::binomial(den_ - 1 + j - static_cast<int>(i), den_ - 1);
            }
        }
        out[j] = s;
    }
    return out;
}

HilbertSeries HilbertSeries::operator-(const HilbertSeries& o) const {
    int e = std::max(den_, o.den_);
    ZPoly a = num_, b = o.num_;
    for (int i = 0; i < e - den_; ++i) a = mul_one_minus_v(a);
    for (int i = 0; i < e - o.den_; ++i) b = mul_one_minus_v(b);
    ZPoly d(std::max(a.size(), b.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) d[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) d[i] -= b[i];
    trim(d);
    return HilbertSeries(std::move(d), e);
}

bool HilbertSeries::operator==(const HilbertSeries& o) const {
    return den_ == o.den_ && num_ == o.num_;
}

std::string HilbertSeries::str() const {
    std::ostringstream os;
    os << "(";
    if (num_.empty()) {
        os << "0";
    } else {
        bool first = true;
        for (std::size_t i = 0; i < num_.size(); ++i) {
            if (num_[i] == 0) continue;
            mpz_class c = num_[i];
            bool neg = c < 0;
            if (first) {
                if (neg) os << "-";
            } else {
                os << (neg ? "-" : "+");
            }
            first = false;
            mpz_class a = abs(c);
            if (a != 1 || i == 0) os << a.get_str();
            if (i >= 1) {
                os << "v";
                if (i >= 2) os << "^" << i;
            }
        }
    }
    os << ")/(1-v)^" << den_;
    return os.str();
}

HilbertSeries HilbertSeries::of_monomial_quotient(int num_vars,
                                                  const std::vector<Monomial>& min_gens) {
    return HilbertSeries(hilbert_numerator(minimalize_monomials(min_gens)), num_vars);
}

HilbertSeries hilbert_series(const Ideal& a) {
    for (const Polynomial& g : a.generators())
        if (!g.is_homogeneous())
            throw std::invalid_argument("hilbert_series requires a homogeneous ideal");
    int n = a.ring()->num_vars();
    if (a.is_zero()) return HilbertSeries({1}, n);
    if (!a.is_proper()) return HilbertSeries({}, 0);
    return HilbertSeries::of_monomial_quotient(n, a.groebner().leading);
}

// --- Rees algebra -------------------------------------------------------------------

Ideal rees_ideal(const Ideal& a, const std::optional<Ideal>& modulo) {
    if (a.is_zero()) throw std::invalid_argument("rees ideal of the zero ideal");
    if (modulo) require_same_ring(a, *modulo);
    const RingPtr& ring = a.ring();
    int n = ring->num_vars();
    int m = static_cast<int>(a.generators().size());

    std::vector<std::string> front;
    front.push_back(fresh_name(ring, "u"));
    for (int i = 1; i <= m; ++i) front.push_back(fresh_name(ring, "T" + std::to_string(i)));
    RingPtr ext = prepend_vars(ring, front, MonomialOrder::elimination(1));
    std::vector<int> up(n);
    for (int i = 0; i < n; ++i) up[i] = m + 1 + i;

    Polynomial u = Polynomial::variable(ext, 0);
    std::vector<Polynomial> gens;
    for (int i = 0; i < m; ++i)
        gens.push_back(Polynomial::variable(ext, i + 1) -
                       u * map_vars(a.generators()[i], ext, up));
    if (modulo)
        for (const Polynomial& g : modulo->generators())
            gens.push_back(map_vars(g, ext, up));

    GroebnerBasis egb = buchberger(std::move(gens), ext->order);

    std::vector<std::string> tx_names(front.begin() + 1, front.end());
    for (const std::string& x : ring->var_names) tx_names.push_back(x);
    RingPtr tx = RingContext::make(std::move(tx_names), MonomialOrder::degrevlex());

    std::vector<int> down(ext->num_vars());
    down[0] = -1;
    for (int i = 1; i < ext->num_vars(); ++i) down[i] = i - 1;

    std::vector<Polynomial> kept;
    GroebnerBasis seed;
    seed.ring = tx;
    seed.order = tx->order;
    for (const Polynomial& g : egb.elements) {
        bool has_u = false;
        for (const Term& t : g.terms())
            if (t.mono[0] > 0) {
                has_u = true;
                break;
            }
        if (has_u) continue;
        Polynomial mapped = map_vars(g, tx, down);
        seed.leading.push_back(mapped.leading_term().mono);
        seed.elements.push_back(mapped);
        kept.push_back(std::move(mapped));
    }
    return ideal_with_basis(tx, std::move(kept), std::move(seed));
}

namespace {

// T-degree of a T-homogeneous polynomial in a [T1..Tm, x..] ring.
int t_degree(const Polynomial& p, int m) {
    if (p.is_zero()) return 0;
    int d = -1;
    for (const Term& t : p.terms()) {
        int td = 0;
        for (int i = 0; i < m; ++i) td += t.mono[i];
        if (d < 0)
            d = td;
        else if (d != td)
            throw std::logic_error("rees ideal element not T-homogeneous");
    }
    return d;
}

}  // namespace

int relation_type(const Ideal& j, const Ideal& i) {
    require_same_ring(j, i);
    if (!i.contains(j)) throw std::domain_error("relation_type requires J contained in I");
    Ideal rees = rees_ideal(i, j.is_zero() ? std::optional<Ideal>{} : std::optional<Ideal>{j});
    int m = static_cast<int>(i.generators().size());

    struct Cand {
        int tdeg;
        Polynomial p;
    };
    std::vector<Cand> cands;
    for (const Polynomial& g : rees.generators()) cands.push_back({t_degree(g, m), g});
    std::stable_sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.tdeg != b.tdeg) return a.tdeg < b.tdeg;
        return poly_canonical_less(a.p, b.p);
    });
    int max_level = cands.empty() ? 1 : cands.back().tdeg;

    // The sub-ideal of elements with T-degree < d is generated by the
    // candidates of T-degree < d, so one basis per level decides redundancy
    // for the whole level.
    std::vector<Polynomial> lower;
    std::size_t next = 0;
    while (next < cands.size() && cands[next].tdeg <= 1) lower.push_back(cands[next++].p);
    GroebnerBasis gb;
    if (!lower.empty()) gb = buchberger(lower, rees.ring()->order);

    int rtype = 1;
    for (int level = 2; level <= max_level; ++level) {
        std::vector<Polynomial> here;
        while (next < cands.size() && cands[next].tdeg == level)
            here.push_back(cands[next++].p);
        if (here.empty()) continue;
        for (const Polynomial& c : here) {
            util::poll_deadline();
            if (lower.empty() || !ideal_member(c, gb)) {
                rtype = level;
                break;
            }
        }
        if (next < cands.size()) {
            lower = gb.elements;
            lower.insert(lower.end(), here.begin(), here.end());
            gb = buchberger(lower, rees.ring()->order);
        }
    }
    return rtype;
}

// --- text formats ---------------------------------------------------------------------

Ideal parse_ideal(std::istream& in) {
    std::string line;
    RingPtr ring;
    std::vector<Polynomial> gens;
    while (std::getline(in, line)) {
        std::size_t a = line.find_first_not_of(" \t\r\n");
        if (a == std::string::npos) continue;
        std::size_t b = line.find_last_not_of(" \t\r\n");
        std::string body = line.substr(a, b - a + 1);
        if (body.empty() || body[0] == '#') continue;
        if (!ring) {
            if (body.rfind("ring:", 0) != 0)
                throw std::invalid_argument("ideal file must start with 'ring: ...'");
            std::vector<std::string> names;
            std::string rest = body.substr(5);
            std::string cur;
            for (char c : rest + ",") {
                if (c == ',') {
                    std::size_t x = cur.find_first_not_of(" \t");
                    if (x != std::string::npos) {
                        std::size_t y = cur.find_last_not_of(" \t");
                        names.push_back(cur.substr(x, y - x + 1));
                    }
                    cur.clear();
                } else {
                    cur += c;
                }
            }
            ring = RingContext::make(std::move(names));
        } else {
            gens.push_back(parse_polynomial(ring, body));
        }
    }
    if (!ring) throw std::invalid_argument("empty ideal file");
    return Ideal(ring, std::move(gens));
}

Ideal parse_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open ideal file: " + path);
    return parse_ideal(in);
}

std::string ideal_to_text(const Ideal& a) {
    std::ostringstream os;
    os << "ring: ";
    const auto& names = a.ring()->var_names;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) os << ",";
        os << names[i];
    }
    os << "\n";
    for (const Polynomial& g : a.generators()) os << g.str() << "\n";
    return os.str();
}

}  // namespace aluffi
