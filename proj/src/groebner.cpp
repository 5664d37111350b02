#include "aluffi/groebner.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "aluffi/util.hpp"

namespace aluffi {

namespace {

// Working representation: term vector sorted strictly descending under the
// active order (which may differ from the ring's display order).
using TermVec = std::vector<Term>;

TermVec to_working(const Polynomial& p, const MonomialOrder& order, bool resort) {
    TermVec t = p.terms();
    if (resort)
        std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) {
            return order.compare(a.mono.exponents(), b.mono.exponents()) > 0;
        });
    return t;
}

// a - c * x^m * b, both sorted; result sorted. The shifted monomial of b is
// compared through a reusable scratch vector and only materialized when a
// term is emitted.
TermVec sub_scaled(std::span<const Term> a, const Rational& c, const Monomial& m,
                   std::span<const Term> b, const MonomialOrder& order) {
    TermVec out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    std::vector<int> scratch(m.size());
    bool scratch_fresh = false;
    auto load_scratch = [&](const Monomial& bm) {
        if (scratch_fresh) return;
        for (int k = 0; k < m.size(); ++k) scratch[k] = bm[k] + m[k];
        scratch_fresh = true;
    };
    while (i < a.size() && j < b.size()) {
        load_scratch(b[j].mono);
        int cmp = order.compare(a[i].mono.exponents(), scratch);
        if (cmp > 0) {
            out.push_back(a[i++]);
        } else if (cmp < 0) {
            out.push_back(Term{-(c * b[j].coeff), Monomial(scratch)});
            scratch_fresh = false;
            ++j;
        } else {
            Rational s = a[i].coeff - c * b[j].coeff;
            if (s != 0) out.push_back(Term{std::move(s), a[i].mono});
            scratch_fresh = false;
            ++i;
            ++j;
        }
    }
    for (; i < a.size(); ++i) out.push_back(a[i]);
    for (; j < b.size(); ++j)
        out.push_back(Term{-(c * b[j].coeff), b[j].mono.mul(m)});
    return out;
}

void make_monic(TermVec& f) {
    if (f.empty() || f[0].coeff == 1) return;
    Rational inv = 1 / f[0].coeff;
    for (Term& t : f) t.coeff *= inv;
}

struct BasisView {
    const TermVec* poly;
    const Monomial* lead;
};

// Full normal form of f against `basis`; every term of the result is
// irreducible. First matching divisor in basis order wins. Irreducible head
// terms are moved out once and never rescanned.
TermVec reduce_terms(TermVec f, std::span<const BasisView> basis,
                     const MonomialOrder& order,
                     std::vector<TermVec>* quotients = nullptr) {
    TermVec nf;
    std::size_t head = 0;
    while (head < f.size()) {
        util::poll_deadline();
        const Term& lt = f[head];
        bool reduced = false;
        for (std::size_t k = 0; k < basis.size(); ++k) {
            if (!basis[k].lead || !basis[k].lead->divides(lt.mono)) continue;
            Monomial q = lt.mono.div(*basis[k].lead);
            Rational c = lt.coeff / (*basis[k].poly)[0].coeff;
            if (quotients) {
                TermVec add{Term{c, q}};
                (*quotients)[k] = sub_scaled((*quotients)[k], -1, Monomial::one(q.size()),
                                             add, order);
            }
            f = sub_scaled(std::span<const Term>(f).subspan(head), c, q,
                           *basis[k].poly, order);
            head = 0;
            reduced = true;
            break;
        }
        if (!reduced) {
            nf.push_back(std::move(f[head]));
            ++head;
        }
    }
    return nf;
}

// In-place interreduction: each element fully reduced against the others,
// zeros dropped, monic. Result is the unique reduced list when the input
// generates with Groebner property.
void interreduce_working(std::vector<TermVec>& polys, const MonomialOrder& order) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i < polys.size(); ++i) {
            if (polys[i].empty()) continue;
            std::vector<BasisView> views;
            views.reserve(polys.size());
            for (std::size_t j = 0; j < polys.size(); ++j) {
                if (j == i || polys[j].empty()) continue;
                views.push_back(BasisView{&polys[j], &polys[j][0].mono});
            }
            TermVec nf = reduce_terms(polys[i], views, order);
            if (nf != polys[i]) {
                polys[i] = std::move(nf);
                changed = true;
            }
        }
    }
    std::erase_if(polys, [](const TermVec& t) { return t.empty(); });
    for (TermVec& p : polys) make_monic(p);
    std::sort(polys.begin(), polys.end(), [&](const TermVec& a, const TermVec& b) {
        return order.compare(a[0].mono.exponents(), b[0].mono.exponents()) < 0;
    });
}

}  // namespace

ReduceResult reduce(const Polynomial& f, std::span<const Polynomial> basis,
                    const MonomialOrder& order) {
    for (const Polynomial& g : basis) {
        if (!same_ring(f.ring(), g.ring()))
            throw std::invalid_argument("ring context mismatch in reduce");
        if (g.is_zero())
            throw std::invalid_argument("zero divisor polynomial in reduce");
    }
    bool resort = !(order == f.ring()->order);
    TermVec work = to_working(f, order, resort);
    std::vector<TermVec> divisors;
    divisors.reserve(basis.size());
    for (const Polynomial& g : basis) divisors.push_back(to_working(g, order, resort));
    std::vector<BasisView> views;
    views.reserve(divisors.size());
    for (const TermVec& d : divisors) views.push_back(BasisView{&d, &d[0].mono});

    std::vector<TermVec> quot(basis.size());
    TermVec nf = reduce_terms(std::move(work), views, order, &quot);

    ReduceResult r;
    r.normal_form = Polynomial::from_terms(f.ring(), std::move(nf));
    r.quotients.reserve(basis.size());
    for (TermVec& q : quot)
        r.quotients.push_back(Polynomial::from_terms(f.ring(), std::move(q)));
    return r;
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    if (!same_ring(f.ring(), gb.ring))
        throw std::invalid_argument("ring context mismatch in normal_form");
    if (gb.elements.empty()) return f;
    bool resort = !(gb.order == gb.ring->order);
    TermVec work = to_working(f, gb.order, resort);
    std::vector<TermVec> divisors;
    divisors.reserve(gb.elements.size());
    for (const Polynomial& g : gb.elements)
        divisors.push_back(to_working(g, gb.order, resort));
    std::vector<BasisView> views;
    views.reserve(divisors.size());
    for (std::size_t i = 0; i < divisors.size(); ++i)
        views.push_back(BasisView{&divisors[i], &gb.leading[i]});
    TermVec nf = reduce_terms(std::move(work), views, gb.order);
    return Polynomial::from_terms(f.ring(), std::move(nf));
}

bool ideal_member(const Polynomial& f, const GroebnerBasis& gb) {
    return normal_form(f, gb).is_zero();
}

std::vector<Monomial> leading_term_ideal(const GroebnerBasis& gb) {
    return gb.leading;
}

namespace {

struct GEntry {
    TermVec poly;
    Monomial lead;
    bool redundant = false;
};

struct PairRec {
    int i, j;
    Monomial lcm;
    bool alive = true;
};

struct BuchbergerRun {
    const MonomialOrder& order;
    std::vector<GEntry> g;
    std::vector<PairRec> pairs;

    // Normal selection: minimal lcm degree first; deterministic tie-breaks.
    struct QEntry {
        int deg;
        std::size_t id;
    };
    struct QCmp {
        BuchbergerRun* run;
        bool operator()(const QEntry& a, const QEntry& b) const {
            if (a.deg != b.deg) return a.deg > b.deg;
            int c = run->order.compare(run->pairs[a.id].lcm.exponents(),
                                       run->pairs[b.id].lcm.exponents());
            if (c != 0) return c > 0;
            return a.id > b.id;
        }
    };
    std::priority_queue<QEntry, std::vector<QEntry>, QCmp> queue;

    explicit BuchbergerRun(const MonomialOrder& o) : order(o), queue(QCmp{this}) {}

    // Gebauer-Moeller update for a new basis element.
    void update(TermVec h) {
        make_monic(h);
        Monomial hl = h[0].mono;

        struct Cand {
            int j;
            Monomial lcm;
            bool coprime;
        };
        std::vector<Cand> cands;
        cands.reserve(g.size());
        for (int j = 0; j < static_cast<int>(g.size()); ++j) {
            if (g[j].poly.empty()) continue;
            cands.push_back(Cand{j, Monomial::lcm(hl, g[j].lead),
                                 hl.coprime(g[j].lead)});
        }

        // M criterion: drop candidates whose lcm is properly divisible by
        // another candidate's lcm.
        std::vector<bool> drop(cands.size(), false);
        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (drop[a]) continue;
            for (std::size_t b = 0; b < cands.size(); ++b) {
                if (a == b || drop[b]) continue;
                if (!(cands[b].lcm == cands[a].lcm) &&
                    cands[b].lcm.divides(cands[a].lcm)) {
                    drop[a] = true;
                    break;
                }
            }
        }
        // F criterion: one representative per lcm class; B1: if any member of
        // a class has coprime leading terms, the entire class goes.
        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (drop[a]) continue;
            bool coprime_in_class = cands[a].coprime;
            for (std::size_t b = a + 1; b < cands.size(); ++b) {
                if (drop[b] || !(cands[b].lcm == cands[a].lcm)) continue;
                coprime_in_class = coprime_in_class || cands[b].coprime;
                drop[b] = true;
            }
            if (coprime_in_class) drop[a] = true;
        }

        // B_k criterion on the older pending pairs.
        int hidx = static_cast<int>(g.size());
        for (PairRec& p : pairs) {
            if (!p.alive) continue;
            if (!hl.divides(p.lcm)) continue;
            if (Monomial::lcm(hl, g[p.i].lead) == p.lcm) continue;
            if (Monomial::lcm(hl, g[p.j].lead) == p.lcm) continue;
            p.alive = false;
        }

        for (std::size_t a = 0; a < cands.size(); ++a) {
            if (drop[a]) continue;
            std::size_t id = pairs.size();
            pairs.push_back(PairRec{cands[a].j, hidx, cands[a].lcm});
            queue.push(QEntry{cands[a].lcm.degree(), id});
        }

        for (GEntry& e : g)
            if (!e.redundant && hl.divides(e.lead)) e.redundant = true;
        g.push_back(GEntry{std::move(h), std::move(hl)});
    }

    TermVec normal_form_of(TermVec f) {
        std::vector<BasisView> views;
        views.reserve(g.size());
        for (const GEntry& e : g)
            if (!e.redundant) views.push_back(BasisView{&e.poly, &e.lead});
        return reduce_terms(std::move(f), views, order);
    }

    void run() {
        while (!queue.empty()) {
            util::poll_deadline();
            QEntry top = queue.top();
            queue.pop();
            PairRec& p = pairs[top.id];
            if (!p.alive) continue;
            p.alive = false;
            const GEntry& a = g[p.i];
            const GEntry& b = g[p.j];
            // S-polynomial of two monic elements.
            TermVec s = sub_scaled(
                sub_scaled(TermVec{}, -1, p.lcm.div(a.lead), a.poly, order), 1,
                p.lcm.div(b.lead), b.poly, order);
            TermVec h = normal_form_of(std::move(s));
            if (!h.empty()) update(std::move(h));
        }
    }
};

}  // namespace

GroebnerBasis buchberger(std::vector<Polynomial> gens, const MonomialOrder& order) {
    RingPtr ring;
    for (const Polynomial& p : gens) {
        if (p.is_zero()) continue;
        if (!ring)
            ring = p.ring();
        else if (!same_ring(ring, p.ring()))
            throw std::invalid_argument("ring context mismatch in buchberger");
    }
    GroebnerBasis gb;
    gb.order = order;
    if (!ring) {
        gb.ring = gens.empty() ? nullptr : gens.front().ring();
        return gb;
    }
    gb.ring = ring;

    bool resort = !(order == ring->order);
    std::vector<TermVec> work;
    for (const Polynomial& p : gens) {
        if (p.is_zero()) continue;
        work.push_back(to_working(p, order, resort));
    }
    interreduce_working(work, order);

    BuchbergerRun run(order);
    for (TermVec& w : work) {
        if (w.empty()) continue;
        TermVec h = run.normal_form_of(std::move(w));
        if (!h.empty()) run.update(std::move(h));
    }
    run.run();

    std::vector<TermVec> final_polys;
    for (GEntry& e : run.g)
        if (!e.redundant) final_polys.push_back(std::move(e.poly));
    interreduce_working(final_polys, order);

    gb.elements.reserve(final_polys.size());
    gb.leading.reserve(final_polys.size());
    for (TermVec& p : final_polys) {
        gb.leading.push_back(p[0].mono);
        gb.elements.push_back(Polynomial::from_terms(ring, std::move(p)));
    }
    return gb;
}

std::vector<Polynomial> interreduce(std::vector<Polynomial> gens) {
    RingPtr ring;
    for (const Polynomial& p : gens)
        if (!p.is_zero()) {
            ring = p.ring();
            break;
        }
    if (!ring) return {};
    const MonomialOrder& order = ring->order;
    std::vector<TermVec> work;
    for (const Polynomial& p : gens) {
        if (p.is_zero()) continue;
        if (!same_ring(ring, p.ring()))
            throw std::invalid_argument("ring context mismatch in interreduce");
        work.push_back(to_working(p, order, false));
    }
    interreduce_working(work, order);
    std::vector<Polynomial> out;
    out.reserve(work.size());
    for (TermVec& w : work) out.push_back(Polynomial::from_terms(ring, std::move(w)));
    return out;
}

}  // namespace aluffi
