#pragma once

#include <string>
#include <vector>

#include "pirep/envelope.hpp"
#include "pirep/linrep.hpp"

namespace pirep {

/// Levi-type decomposition of rho(L): G a maximal semisimple subalgebra,
/// R the solvable radical, rho(L) = G (+) R; inside R, S is a G-invariant
/// complement of rho(L) ^ J(A) with [G, S] = 0.
struct LeviData {
    Subspace g{0};
    Subspace r{0};
    Subspace s{0};
    Subspace l_cap_j{0};
};

LeviData levi_decompose(const LinearRep &rep, const Envelope &env);

/// Splitting a_i = b_i + c_i with b_i in J(A), the c_i pairwise commuting
/// diagonalizable matrices built from one lifted system of orthogonal
/// idempotents.
struct WmSplit {
    std::vector<RatMatrix> inputs;
    std::vector<RatMatrix> nilpotent_parts;
    std::vector<RatMatrix> semisimple_parts;
};

WmSplit wm_split(const Envelope &env, const std::vector<RatMatrix> &elements);

struct LemmaReport {
    bool lr = true;         // [rho(L), R] inside J(A)
    bool rs_shape = true;   // R = S (+) (rho(L)^J(A)) and [G,S] = 0
    bool irr_scalar = true; // S acts on every radical-killed chain factor by a scalar
    bool ann_gs = true;     // Ann_rho(factor) = Ann_G + Ann_S + rho(L)^J(A)
    std::vector<std::string> failures;
    bool all() const { return lr && rs_shape && irr_scalar && ann_gs; }
};

LemmaReport verify_lemmas(const LinearRep &rep, const Envelope &env, const LeviData &levi);

} // namespace pirep
