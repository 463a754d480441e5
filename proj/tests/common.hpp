#pragma once

#include <random>
#include <vector>

#include "pirep/linrep.hpp"
#include "pirep/matrix.hpp"

namespace testutil {

using pirep::Int;
using pirep::LinearRep;
using pirep::Rat;
using pirep::RatMatrix;

inline RatMatrix unit(std::size_t n, std::size_t i, std::size_t j) {
    RatMatrix m(n, n);
    m.at(i, j) = 1;
    return m;
}

inline RatMatrix mat2(long a, long b, long c, long d) {
    RatMatrix m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

inline RatMatrix mat3(std::initializer_list<long> vals) {
    RatMatrix m(3, 3);
    std::size_t k = 0;
    for (long v : vals)
        m.at(k / 3, k % 3) = v, ++k;
    return m;
}

// ---- bundled representations -------------------------------------------

inline LinearRep zero_rep(std::size_t dim_v = 2) {
    return pirep::close_under_bracket({}, dim_v);
}

inline LinearRep scalar_rep() {
    RatMatrix one(1, 1);
    one.at(0, 0) = 1;
    return pirep::close_under_bracket({one}, 1);
}

inline LinearRep sl2_natural() {
    return pirep::close_under_bracket({unit(2, 0, 1), unit(2, 1, 0), mat2(1, 0, 0, -1)}, 2);
}

inline LinearRep sl2_adjoint() {
    RatMatrix ad_e = mat3({0, 0, -2, 0, 0, 0, 0, 1, 0});
    RatMatrix ad_f = mat3({0, 0, 0, 0, 0, 2, -1, 0, 0});
    RatMatrix ad_h = mat3({2, 0, 0, 0, -2, 0, 0, 0, 0});
    return pirep::close_under_bracket({ad_e, ad_f, ad_h}, 3);
}

inline LinearRep gl2() {
    return pirep::close_under_bracket(
        {unit(2, 0, 0), unit(2, 0, 1), unit(2, 1, 0), unit(2, 1, 1)}, 2);
}

inline LinearRep borel2() { // span{E11, E12}
    return pirep::close_under_bracket({unit(2, 0, 0), unit(2, 0, 1)}, 2);
}

inline LinearRep e12_rep() { // span{E12}
    return pirep::close_under_bracket({unit(2, 0, 1)}, 2);
}

inline LinearRep heisenberg3() { // strictly upper triangular gl_3
    return pirep::close_under_bracket({unit(3, 0, 1), unit(3, 1, 2), unit(3, 0, 2)}, 3);
}

/// gl_2 block plus the third column: nonzero G, S and rho(L)^J(A) at once,
/// with a radical of derived length 2.
inline LinearRep parabolic3() {
    return pirep::close_under_bracket({unit(3, 0, 0), unit(3, 0, 1), unit(3, 1, 0),
                                       unit(3, 1, 1), unit(3, 0, 2), unit(3, 1, 2)},
                                      3);
}

// ---- independent oracles (deliberately naive) ---------------------------

/// Plain rational Gauss elimination; no Bareiss, no echelon reuse.
inline std::size_t naive_rank(RatMatrix m) {
    std::size_t nr = m.rows(), nc = m.cols(), r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t p = r;
        while (p < nr && m.at(p, c) == 0)
            ++p;
        if (p == nr)
            continue;
        for (std::size_t j = 0; j < nc; ++j)
            std::swap(m.at(p, j), m.at(r, j));
        for (std::size_t i = r + 1; i < nr; ++i) {
            if (m.at(i, c) == 0)
                continue;
            Rat f = m.at(i, c) / m.at(r, c);
            for (std::size_t j = c; j < nc; ++j)
                m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

inline RatMatrix random_int_matrix(std::mt19937_64 &gen, std::size_t rows, std::size_t cols,
                                   long lo = -9, long hi = 9) {
    std::uniform_int_distribution<long> dist(lo, hi);
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
            m.at(i, j) = dist(gen);
    return m;
}

/// Random invertible rational matrix (retries until nonzero determinant,
/// checked through naive elimination).
inline RatMatrix random_invertible(std::mt19937_64 &gen, std::size_t n) {
    while (true) {
        RatMatrix m = random_int_matrix(gen, n, n, -3, 3);
        if (naive_rank(m) == n)
            return m;
    }
}

inline RatMatrix inverse_of(const RatMatrix &m) {
    std::size_t n = m.rows();
    RatMatrix aug(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            aug.at(i, j) = m.at(i, j);
        aug.at(i, n + i) = 1;
    }
    for (std::size_t c = 0, r = 0; c < n; ++c) {
        std::size_t p = r;
        while (p < n && aug.at(p, c) == 0)
            ++p;
        if (p == n)
            throw std::runtime_error("inverse_of: singular");
        for (std::size_t j = 0; j < 2 * n; ++j)
            std::swap(aug.at(p, j), aug.at(r, j));
        Rat inv = Rat(1) / aug.at(r, c);
        for (std::size_t j = 0; j < 2 * n; ++j)
            aug.at(r, j) *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == r || aug.at(i, c) == 0)
                continue;
            Rat f = aug.at(i, c);
            for (std::size_t j = 0; j < 2 * n; ++j)
                aug.at(i, j) -= f * aug.at(r, j);
        }
        ++r;
    }
    RatMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.at(i, j) = aug.at(i, n + j);
    return out;
}

} // namespace testutil
