#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pirep/linrep.hpp"
#include "pirep/subspace.hpp"

namespace pirep {

enum class FactorKind { irreducible, one_dimensional };
std::string factor_kind_name(FactorKind k);

/// Associative envelope A of rho(L) in End(V): product-closed span of the
/// representation (no unit adjoined), its radical J with nilpotency index p,
/// and a fixed maximal chain of left ideals A = B_0 > B_1 > ... > B_theta = 0
/// refining the powers of J, each quotient a simple A-module or a
/// 1-dimensional space with zero induced action.
struct Envelope {
    std::size_t dim_v = 0;
    std::size_t dim_a = 0;
    std::vector<RatMatrix> basis;
    Subspace span{0};

    Subspace radical{0};
    std::size_t p = 1;

    std::vector<Subspace> chain; // B_0 .. B_theta (theta+1 members)
    std::size_t theta = 0;
    std::vector<FactorKind> factor_kinds;
    std::uint64_t chain_seed = 0;
};

/// Product closure only (basis, dim, span).
Envelope generate_envelope(const LinearRep &rep);

/// Trace-form radical J = {x in A : tr(x*y) = 0 for all basis y} and the
/// least p with J^p = 0 (p = 1 when J = 0).
std::pair<Subspace, std::size_t> jacobson_radical(const Envelope &env);

/// Fixed composition chain of left ideals; splitting inside semisimple layers
/// uses seeded spectral projections. Throws nonsplit_error when a layer's
/// endomorphism algebra is a proper field extension of Q.
void compute_composition_chain(Envelope &env, std::uint64_t seed);

/// generate + radical + chain.
Envelope build_envelope(const LinearRep &rep, std::uint64_t seed);

/// {x in rho(L) : x * B_k lies in B_{k+1}}, canonical.
Subspace annihilator_in_rho(const LinearRep &rep, const Envelope &env, std::size_t k);

/// Largest k with a in B_k; height(0) = theta. Throws input_error if a is
/// outside A.
std::size_t height(const Envelope &env, const RatMatrix &a);

/// Shared helpers (used by the Wedderburn-Malcev splitting as well).
std::vector<RatMatrix> closure_under_product(const std::vector<RatMatrix> &gens,
                                             std::size_t dim_v);
Subspace trace_form_radical(const std::vector<RatMatrix> &alg_basis, std::size_t dim_v);
/// span{x*y : x in a, y in b} for subspaces of dim_v x dim_v matrices.
Subspace subspace_product(const Subspace &a, const Subspace &b, std::size_t dim_v);

/// Scalar by which `a` acts on each chain factor by left multiplication
/// (valid for elements acting scalar on every factor; one coset
/// representative per factor is probed).
std::vector<Rat> factor_scalars(const Envelope &env, const RatMatrix &a);

} // namespace pirep
