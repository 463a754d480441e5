#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pirep/errors.hpp"

namespace pirep {

using Rat = mpq_class;
using Int = mpz_class;

/// Parses an exact rational written as "p", "-p" or "p/q". No floats.
Rat rat_from_string(const std::string &s);
std::string rat_to_string(const Rat &r);

/// Dense matrix of exact rationals, row-major.
class RatMatrix {
  public:
    RatMatrix() : rows_(0), cols_(0) {}
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), entries_(rows * cols, Rat(0)) {}

    static RatMatrix identity(std::size_t n);
    /// Reinterprets an ambient vector of length rows*cols as a matrix.
    static RatMatrix from_vector(const std::vector<Rat> &v, std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rat &at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const Rat &at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    const std::vector<Rat> &entries() const { return entries_; }
    std::vector<Rat> to_vector() const { return entries_; }

    RatMatrix operator*(const RatMatrix &other) const;
    RatMatrix operator+(const RatMatrix &other) const;
    RatMatrix operator-(const RatMatrix &other) const;
    RatMatrix scaled(const Rat &c) const;
    RatMatrix transpose() const;
    /// [a, b] = a*b - b*a
    RatMatrix commutator_with(const RatMatrix &other) const;

    Rat trace() const;
    bool is_zero() const;
    bool operator==(const RatMatrix &other) const = default;

    /// Scales by the lcm of denominators and divides by the gcd of
    /// numerators; leading nonzero entry made positive. Zero matrix unchanged.
    RatMatrix primitive_integer_scaled() const;

    std::string to_string() const;

  private:
    std::size_t rows_, cols_;
    std::vector<Rat> entries_;
};

/// Minimal polynomial of a square matrix (monic, ascending coefficients).
std::vector<Rat> minimal_polynomial(const RatMatrix &m);

/// True when gcd(p, p') is constant.
bool is_squarefree_poly(const std::vector<Rat> &poly);

} // namespace pirep
