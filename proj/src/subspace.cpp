#include "pirep/subspace.hpp"

#include <algorithm>

namespace pirep {

std::vector<std::vector<Rat>> rref(std::vector<std::vector<Rat>> rows) {
    if (rows.empty())
        return rows;
    std::size_t w = rows[0].size();
    for (const auto &r : rows)
        if (r.size() != w)
            throw internal_error("rref: ragged rows");
    std::size_t r = 0;
    for (std::size_t c = 0; c < w && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && rows[p][c] == 0)
            ++p;
        if (p == rows.size())
            continue;
        std::swap(rows[p], rows[r]);
        Rat inv = Rat(1) / rows[r][c];
        for (std::size_t j = c; j < w; ++j)
            if (rows[r][j] != 0)
                rows[r][j] *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0)
                continue;
            Rat f = rows[i][c];
            for (std::size_t j = c; j < w; ++j)
                if (rows[r][j] != 0)
                    rows[i][j] -= f * rows[r][j];
        }
        ++r;
    }
    rows.resize(r);
    return rows;
}

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

Subspace Subspace::span_of(const std::vector<std::vector<Rat>> &vectors, std::size_t ambient_dim) {
    for (const auto &v : vectors)
        if (v.size() != ambient_dim)
            throw internal_error("Subspace::span_of: vector length mismatch");
    Subspace s(ambient_dim);
    s.basis_ = rref(vectors);
    s.recompute_pivots();
    return s;
}

Subspace Subspace::span_of_matrices(const std::vector<RatMatrix> &mats) {
    if (mats.empty())
        throw internal_error("span_of_matrices: need ambient dimension");
    std::size_t amb = mats[0].rows() * mats[0].cols();
    std::vector<std::vector<Rat>> rows;
    rows.reserve(mats.size());
    for (const auto &m : mats) {
        if (m.rows() * m.cols() != amb)
            throw internal_error("span_of_matrices: mixed shapes");
        rows.push_back(m.to_vector());
    }
    return span_of(rows, amb);
}

void Subspace::recompute_pivots() {
    pivots_.clear();
    for (const auto &row : basis_) {
        std::size_t c = 0;
        while (c < ambient_ && row[c] == 0)
            ++c;
        pivots_.push_back(c);
    }
}

RatMatrix Subspace::basis_matrix(std::size_t i, std::size_t mat_rows, std::size_t mat_cols) const {
    return RatMatrix::from_vector(basis_[i], mat_rows, mat_cols);
}

std::vector<Rat> Subspace::reduce(std::vector<Rat> v) const {
    if (v.size() != ambient_)
        throw internal_error("Subspace::reduce: length mismatch");
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        const Rat &coef = v[pivots_[i]];
        if (coef == 0)
            continue;
        Rat f = coef; // pivot entries are 1
        for (std::size_t j = pivots_[i]; j < ambient_; ++j)
            if (basis_[i][j] != 0)
                v[j] -= f * basis_[i][j];
    }
    return v;
}

bool Subspace::contains(const std::vector<Rat> &v) const {
    std::vector<Rat> resid = reduce(v);
    for (const Rat &e : resid)
        if (e != 0)
            return false;
    return true;
}

bool Subspace::contains_subspace(const Subspace &other) const {
    if (other.ambient_ != ambient_)
        return false;
    for (const auto &row : other.basis_)
        if (!contains(row))
            return false;
    return true;
}

std::optional<std::vector<Rat>> Subspace::coordinates(const std::vector<Rat> &v) const {
    if (!contains(v))
        return std::nullopt;
    // rows are reduced echelon: coordinate i is just v at the i-th pivot
    std::vector<Rat> coords(basis_.size());
    for (std::size_t i = 0; i < basis_.size(); ++i)
        coords[i] = v[pivots_[i]];
    return coords;
}

Subspace Subspace::sum(const Subspace &other) const {
    if (other.ambient_ != ambient_)
        throw internal_error("Subspace::sum: ambient mismatch");
    std::vector<std::vector<Rat>> rows = basis_;
    rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
    return span_of(rows, ambient_);
}

Subspace Subspace::intersect(const Subspace &other) const {
    if (other.ambient_ != ambient_)
        throw internal_error("Subspace::intersect: ambient mismatch");
    // Zassenhaus: echelonize [u|u; v|0], rows with zero left half carry the
    // intersection in their right half.
    std::size_t w = 2 * ambient_;
    std::vector<std::vector<Rat>> rows;
    for (const auto &u : basis_) {
        std::vector<Rat> r(w, Rat(0));
        for (std::size_t j = 0; j < ambient_; ++j) {
            r[j] = u[j];
            r[ambient_ + j] = u[j];
        }
        rows.push_back(std::move(r));
    }
    for (const auto &v : other.basis_) {
        std::vector<Rat> r(w, Rat(0));
        for (std::size_t j = 0; j < ambient_; ++j)
            r[j] = v[j];
        rows.push_back(std::move(r));
    }
    rows = rref(rows);
    std::vector<std::vector<Rat>> inter;
    for (const auto &r : rows) {
        bool left_zero = true;
        for (std::size_t j = 0; j < ambient_; ++j)
            if (r[j] != 0) {
                left_zero = false;
                break;
            }
        if (left_zero)
            inter.emplace_back(r.begin() + static_cast<long>(ambient_), r.end());
    }
    return span_of(inter, ambient_);
}

std::vector<std::vector<Rat>> Subspace::complement_basis_within(const Subspace &inner) const {
    if (!contains_subspace(inner))
        throw internal_error("complement_basis_within: inner not contained");
    std::vector<std::vector<Rat>> resids;
    for (const auto &row : basis_) {
        std::vector<Rat> r = inner.reduce(row);
        bool zero = true;
        for (const Rat &e : r)
            if (e != 0) {
                zero = false;
                break;
            }
        if (!zero)
            resids.push_back(std::move(r));
    }
    return rref(resids);
}

int Subspace::compare(const Subspace &a, const Subspace &b) {
    if (a.dim() != b.dim())
        return a.dim() < b.dim() ? -1 : 1;
    if (a.ambient_ != b.ambient_)
        return a.ambient_ < b.ambient_ ? -1 : 1;
    for (std::size_t i = 0; i < a.basis_.size(); ++i)
        for (std::size_t j = 0; j < a.ambient_; ++j) {
            int c = cmp(a.basis_[i][j], b.basis_[i][j]);
            if (c != 0)
                return c;
        }
    return 0;
}

} // namespace pirep
