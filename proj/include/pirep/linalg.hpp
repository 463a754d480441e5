#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "pirep/matrix.hpp"
#include "pirep/subspace.hpp"

namespace pirep {

/// Rank over Q by fraction-free (Bareiss) elimination. Rows are pre-scaled to
/// integers; intermediate entries stay minors of the scaled matrix.
std::size_t rank_exact(const RatMatrix &m);

struct LinSolveResult {
    /// One particular solution X with a*X = rhs (free variables zero), or
    /// nullopt when the system is inconsistent.
    std::optional<RatMatrix> particular;
    /// Kernel of a, canonical basis.
    Subspace kernel;
};

/// Solves a*X = rhs exactly. Throws input_error when a.rows != rhs.rows.
LinSolveResult solve_linear(const RatMatrix &a, const RatMatrix &rhs);

/// Deterministic distinct primes in (2^60, 2^62) drawn from the seed.
std::vector<std::uint64_t> draw_primes(std::size_t count, std::uint64_t seed);

struct ModularRankReport {
    std::size_t rank = 0;
    std::vector<std::uint64_t> primes;
};

/// Incremental Gaussian elimination over F_p; rows are folded in one at a
/// time, so sources can stream without materializing the matrix.
class FpEchelon {
  public:
    FpEchelon(std::size_t width, std::uint64_t p) : width_(width), p_(p) {}
    void add_row(const std::vector<std::uint64_t> &row);
    std::size_t rank() const { return rows_.size(); }
    std::size_t width() const { return width_; }

  private:
    std::size_t width_;
    std::uint64_t p_;
    std::vector<std::vector<std::uint64_t>> rows_; // pivot-normalized
    std::vector<std::size_t> pivot_cols_;          // ascending
};

/// Streams the rows of the matrix once per prime, already reduced mod p.
/// `emit` must be called with rows of exactly `width` entries.
using ModularRowSource = std::function<void(
    std::uint64_t prime, const std::function<void(const std::vector<std::uint64_t> &)> &emit)>;

/// Max of the ranks modulo `num_primes` distinct random primes; a certified
/// lower bound on the rational rank, equal to it unless every chosen prime
/// divides one fixed nonzero minor. Deterministic in (input, primes, seed).
ModularRankReport rank_modular(std::size_t width, const ModularRowSource &rows,
                               std::size_t num_primes, std::uint64_t seed,
                               std::size_t threads = 1);

/// Integer-row streaming variant: rows are arbitrary-precision integers and
/// get reduced per prime. The source is re-invoked once per prime.
ModularRankReport rank_modular_int_stream(
    std::size_t width,
    const std::function<void(const std::function<void(const std::vector<Int> &)> &emit)> &stream,
    std::size_t num_primes, std::uint64_t seed, std::size_t threads = 1);

/// Convenience wrapper for a fully materialized matrix with integer entries.
ModularRankReport rank_modular_matrix(const RatMatrix &m, std::size_t num_primes,
                                      std::uint64_t seed, std::size_t threads = 1);

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p);
inline std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

/// Reduction of an exact rational mod p (denominator inverted mod p).
std::uint64_t rat_mod(const Rat &r, std::uint64_t p);
std::uint64_t int_mod(const Int &z, std::uint64_t p);

} // namespace pirep
