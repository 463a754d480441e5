#pragma once

#include <cstdint>
#include <vector>

#include "pirep/envelope.hpp"
#include "pirep/liestruct.hpp"
#include "pirep/linrep.hpp"

namespace pirep {

/// One chain factor (B_k, B_{k+1}) with a G-invariant complement T of B_{k+1}
/// in B_k and the annihilator of the factor in rho(L).
struct FactorChoice {
    std::size_t k = 0;
    Subspace ideal_i{0};
    Subspace ideal_j{0};
    Subspace complement{0};
    Subspace ann{0};
    FactorKind kind = FactorKind::irreducible;
    /// dim of the space of G-equivariant maps T -> B_{k+1}; nonzero means the
    /// complement is not unique as a G-module splitting.
    std::size_t hom_dim = 0;
};

/// G-invariant complement of B_{k+1} in B_k under left multiplication,
/// canonical (echelon complement when G = 0, canonical equivariant-projection
/// kernel otherwise).
Subspace invariant_complement(const Envelope &env, const LeviData &levi, std::size_t k);

std::vector<FactorChoice> factor_choices(const LinearRep &rep, const Envelope &env,
                                         const LeviData &levi);

/// Span test for T_1 q_1 T_2 ... q_{r-1} T_r != 0 with q ranging over a basis
/// of A plus the formal unit.
bool condition2_reachable(const Envelope &env, const std::vector<FactorChoice> &choices);

struct ExponentOptions {
    std::size_t state_cap = 100000;
    std::uint64_t seed = 1;
    bool check_alternative_complements = true;
};

struct ExponentResult {
    std::size_t d = 0;
    std::vector<std::size_t> witness; // chain indices, empty when d = 0
    Subspace final_ann{0};
    std::size_t states_visited = 0;
    bool lower_bound_only = false;        // state cap hit; d is only a lower bound
    bool complement_disagreement = false; // alternative G-complements changed d
};

/// Breadth-first reachability over (product span, annihilator intersection)
/// states; d = max dim rho(L) - dim N over reachable states with nonzero span.
ExponentResult pi_exponent(const LinearRep &rep, const Envelope &env, const LeviData &levi,
                           const ExponentOptions &opts = {});

} // namespace pirep
