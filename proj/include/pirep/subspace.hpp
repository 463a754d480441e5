#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "pirep/matrix.hpp"

namespace pirep {

/// Reduced row echelon form of a list of row vectors. Zero rows are dropped,
/// rows are ordered by pivot column, pivots are 1 with zeros above and below.
/// The result is a canonical basis of the row span.
std::vector<std::vector<Rat>> rref(std::vector<std::vector<Rat>> rows);

/// Subspace of Q^ambient held as a canonical reduced-echelon basis, one basis
/// vector per row. Two subspaces are equal iff their bases are bit-identical.
class Subspace {
  public:
    explicit Subspace(std::size_t ambient_dim);

    static Subspace span_of(const std::vector<std::vector<Rat>> &vectors, std::size_t ambient_dim);
    static Subspace span_of_matrices(const std::vector<RatMatrix> &mats);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }

    const std::vector<std::vector<Rat>> &basis() const { return basis_; }
    const std::vector<std::size_t> &pivots() const { return pivots_; }
    /// Basis row reinterpreted as an r x c matrix (r*c == ambient).
    RatMatrix basis_matrix(std::size_t i, std::size_t mat_rows, std::size_t mat_cols) const;

    /// Residual of v after eliminating along the basis pivots; zero iff v lies
    /// in the subspace.
    std::vector<Rat> reduce(std::vector<Rat> v) const;
    bool contains(const std::vector<Rat> &v) const;
    bool contains(const RatMatrix &m) const { return contains(m.to_vector()); }
    bool contains_subspace(const Subspace &other) const;

    /// Coordinates of v in the echelon basis; nullopt when v is outside.
    std::optional<std::vector<Rat>> coordinates(const std::vector<Rat> &v) const;

    Subspace sum(const Subspace &other) const;
    Subspace intersect(const Subspace &other) const;

    /// Canonical basis of a complement of `inner` inside *this (requires
    /// inner to be contained in *this): reduced residuals of this basis.
    std::vector<std::vector<Rat>> complement_basis_within(const Subspace &inner) const;

    bool operator==(const Subspace &other) const = default;

    /// Total order used for deterministic sorting of subspace collections.
    static int compare(const Subspace &a, const Subspace &b);

  private:
    std::size_t ambient_;
    std::vector<std::vector<Rat>> basis_;
    std::vector<std::size_t> pivots_;
    void recompute_pivots();
};

} // namespace pirep
