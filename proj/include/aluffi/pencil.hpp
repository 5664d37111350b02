#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aluffi/aluffi.hpp"
#include "aluffi/ideal.hpp"

namespace aluffi {

// One block of a 2 x n matrix of linear forms in Kronecker-Weierstrass normal
// form. A nilpotent block of parameter n spans n+1 columns in n variables, a
// Jordan block of length m spans m columns in m variables, a scroll block of
// length l spans l columns in l+1 variables.
struct Block {
    enum class Kind { Nilpotent, Jordan, Scroll };
    Kind kind = Kind::Scroll;
    int length = 1;
    Rational eigenvalue = 0;  // Jordan only

    static Block nilpotent(int n);
    static Block jordan(int m, const Rational& eigenvalue);
    static Block scroll(int l);

    int columns() const;
    int variables() const;
    std::string str() const;  // "N(2)", "J(2;0)", "S(3)"
};

struct PencilSpec {
    std::vector<Block> blocks;

    int columns() const;
    int variables() const;
    std::string str() const;
    // "N(2) J(2;0) S(3)": kind letter, length, eigenvalue after ';'.
    static PencilSpec parse(std::string_view text);
};

// The 2 x n matrix of the spec with deterministic block-local variable names
// (x<i>_<j> nilpotent, y<i>_<j> Jordan, z<i>_<j> scroll; scroll j starts at 0).
SymbolicMatrix build_matrix(const PencilSpec& spec);

Ideal two_minor_ideal(const SymbolicMatrix& m);

// Height of I_2(M) predicted from the block data alone.
int predicted_height(const PencilSpec& spec);

// Block criterion for the pair I_2(M) in its Jacobian ideal: torsion-free iff
// no Jordan block, or only nilpotent blocks and Jordan blocks of length 1.
// Requires predicted height > 1.
bool predicted_atf(const PencilSpec& spec);

struct Theorem24Record {
    int r = 0;
    bool a = false;            // I_r(Theta) = m^r
    bool b = false;            // block criterion
    AluffiVerdict c_verdict;   // Valabrega-Valla check
    bool c = false;            // no torsion found
    bool consistent = false;
};

// Computes the three conditions independently; c via the VV components up to
// max_t without certification (torsion in this family shows at t=2).
Theorem24Record verify_theorem24(const PencilSpec& spec, int max_t = 2);

// Concatenation of n x n generic Hankel blocks in disjoint variables; all
// entries must have the same n (>= 2).
SymbolicMatrix build_generalized_hankel(const std::vector<int>& sizes);

// Tests that I_2(M) : y1 equals the ideal of second-row variables, where y1
// is the first variable of the shortest zero-eigenvalue Jordan block.
bool check_colon_lemma(const PencilSpec& spec);

// All block multisets (canonical order) with at most max_columns columns and
// Jordan eigenvalues drawn from the given list.
std::vector<PencilSpec> enumerate_specs(int max_columns,
                                        const std::vector<Rational>& eigenvalues);

// Variables with a nonzero coefficient somewhere in row `row`.
std::vector<int> row_variables(const SymbolicMatrix& m, int row);

}  // namespace aluffi
