#pragma once

#include <vector>

#include "pirep/matrix.hpp"
#include "pirep/subspace.hpp"

namespace pirep {

/// A matrix Lie algebra rho(L) inside gl(V): the canonical echelon basis of a
/// bracket-closed subspace of dim_v x dim_v matrices. eval_basis carries the
/// same matrices rescaled to primitive integer form (same span, so the same
/// identities); all evaluation paths substitute these.
struct LinearRep {
    std::size_t dim_v = 0;
    std::size_t dim_l = 0;
    std::vector<RatMatrix> basis;
    std::vector<RatMatrix> eval_basis;
    Subspace span{0};
};

/// Smallest bracket-closed subspace containing the generators, canonical
/// echelon basis. Throws input_error on non-square or mixed-size generators.
LinearRep close_under_bracket(const std::vector<RatMatrix> &generators, std::size_t dim_v);

/// Rebuilds the canonical LinearRep from an explicit spanning set that is
/// already known to be bracket-closed (validated).
LinearRep rep_from_span(const std::vector<RatMatrix> &spanning, std::size_t dim_v);

} // namespace pirep
