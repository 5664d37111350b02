#include "aluffi/aluffi.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "aluffi/util.hpp"

namespace aluffi {

const char* to_string(TorsionStatus s) {
    switch (s) {
        case TorsionStatus::TorsionFree:
            return "TorsionFree";
        case TorsionStatus::NotTorsionFree:
            return "NotTorsionFree";
        case TorsionStatus::Inconclusive:
            return "Inconclusive";
    }
    return "?";
}

std::string AluffiVerdict::str() const {
    std::ostringstream os;
    switch (status) {
        case TorsionStatus::TorsionFree:
            os << "TorsionFree (certified with relation-type bound " << bound << ")";
            break;
        case TorsionStatus::NotTorsionFree:
            os << "NotTorsionFree at t=" << t;
            if (witness) os << ", witness: " << witness->str();
            break;
        case TorsionStatus::Inconclusive:
            os << "Inconclusive (no torsion up to t=" << bound << ")";
            break;
    }
    return os.str();
}

std::string AluffiVerdict::json() const {
    nlohmann::json j;
    j["status"] = to_string(status);
    j["t"] = t;
    j["witness"] = witness ? nlohmann::json(witness->str()) : nlohmann::json(nullptr);
    j["bound"] = bound;
    j["timings"] = {{"total_ms", elapsed_ms}};
    return j.dump();
}

namespace {

void require_contained(const Ideal& j, const Ideal& i) {
    if (!i.contains(j))
        throw std::domain_error("pair requires J contained in I");
}

VVComponent vv_from_parts(const Ideal& j, const Ideal& i_pow_t,
                          const Ideal& j_times_prev, int t) {
    VVComponent out;
    out.t = t;
    Ideal meet = intersect(j, i_pow_t);
    const GroebnerBasis& gb = j_times_prev.groebner();
    for (const Polynomial& g : meet.generators()) {
        util::poll_deadline();
        Polynomial nf = normal_form(g, gb);
        if (!nf.is_zero()) out.witnesses.push_back(nf.monic());
    }
    std::sort(out.witnesses.begin(), out.witnesses.end(), poly_canonical_less);
    out.witnesses.erase(std::unique(out.witnesses.begin(), out.witnesses.end()),
                        out.witnesses.end());
    out.is_zero = out.witnesses.empty();
    return out;
}

}  // namespace

VVComponent vv_component(const Ideal& j, const Ideal& i, int t) {
    if (t < 2) throw std::invalid_argument("vv_component requires t >= 2");
    require_contained(j, i);
    Ideal prev = ideal_power(i, t - 1);
    Ideal cur = ideal_product(prev, i);
    return vv_from_parts(j, cur, ideal_product(j, prev), t);
}

AluffiVerdict aluffi_torsion_free(const Ideal& j, const Ideal& i,
                                  std::optional<int> max_t, bool certify) {
    auto start = std::chrono::steady_clock::now();
    require_contained(j, i);

    AluffiVerdict v;
    int bound = certify ? -1 : std::max(2, max_t.value_or(4));
    int rtype = 0;
    Ideal prev = i;  // I^{t-1}
    for (int t = 2;; ++t) {
        Ideal cur = ideal_product(prev, i);
        VVComponent vv = vv_from_parts(j, cur, ideal_product(j, prev), t);
        if (!vv.is_zero) {
            v.status = TorsionStatus::NotTorsionFree;
            v.t = t;
            v.witness = vv.witnesses.front();
            break;
        }
        if (certify && bound < 0) {
            rtype = relation_type(j, i);
            bound = std::max(2, rtype);
        }
        if (t >= bound) {
            if (certify) {
                v.status = TorsionStatus::TorsionFree;
                v.bound = rtype;
            } else {
                v.status = TorsionStatus::Inconclusive;
                v.bound = bound;
            }
            break;
        }
        prev = std::move(cur);
    }
    v.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    return v;
}

ConjectureEvidence conjecture_evidence(const Ideal& j) {
    if (j.is_zero()) throw std::invalid_argument("conjecture check needs a nonzero ideal");
    for (const Polynomial& g : j.generators()) {
        if (!g.is_homogeneous() || g.degree() != 2)
            throw std::invalid_argument("conjecture check requires quadric generators");
    }
    ConjectureEvidence e;
    e.r = codimension(j);
    if (e.r < 2) throw std::domain_error("conjecture check requires height >= 2");
    SymbolicMatrix theta = jacobian_matrix(j.generators());
    std::vector<Polynomial> mins = minors(theta, e.r);
    for (Polynomial& p : mins) p = p.monic();
    Ideal a(j.ring(), minimalize_generators(std::move(mins)));
    e.m_primary = a.is_zero() ? false : is_m_primary(a);
    e.equals_power = equals_m_power(a, e.r);
    e.consistent = (e.m_primary == e.equals_power);
    return e;
}

}  // namespace aluffi
