#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aluffi/ideal.hpp"

namespace aluffi {

// Graded piece (J cap I^t)/(J I^{t-1}) of the Valabrega-Valla module:
// vanishing for all t >= 2 characterizes the Aluffi torsion-free property of
// the pair J inside I. Witnesses are intersection generators outside
// J I^{t-1}, reduced to their normal form modulo it.
struct VVComponent {
    int t = 0;
    std::vector<Polynomial> witnesses;
    bool is_zero = false;
};

enum class TorsionStatus { TorsionFree, NotTorsionFree, Inconclusive };

struct AluffiVerdict {
    TorsionStatus status = TorsionStatus::Inconclusive;
    int t = 0;                         // degree of the torsion found
    std::optional<Polynomial> witness;
    int bound = 0;                     // TorsionFree: certified relation-type
                                       // bound; Inconclusive: degrees checked
    double elapsed_ms = 0;

    std::string str() const;
    // Stable machine-readable record {status, t, witness, bound, timings}.
    std::string json() const;
};

const char* to_string(TorsionStatus s);

VVComponent vv_component(const Ideal& j, const Ideal& i, int t);

// Checks VV components for t = 2,3,...; stops at the first nonzero
// (NotTorsionFree). With certify, computes relation_type(J,I) = N and returns
// TorsionFree(N) once all t <= max(2,N) vanish; otherwise Inconclusive after
// max_t clean rounds (default 4).
AluffiVerdict aluffi_torsion_free(const Ideal& j, const Ideal& i,
                                  std::optional<int> max_t = {}, bool certify = true);

// Instance report for the two conditions conjectured equivalent for a
// quadric-generated ideal J of height r >= 2: I_r(Theta) = m^r versus
// I_r(Theta) m-primary.
struct ConjectureEvidence {
    int r = 0;
    bool m_primary = false;
    bool equals_power = false;
    bool consistent = false;
};

ConjectureEvidence conjecture_evidence(const Ideal& j);

}  // namespace aluffi
