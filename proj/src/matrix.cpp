#include "pirep/matrix.hpp"

#include <sstream>

#include "pirep/subspace.hpp"

namespace pirep {

Rat rat_from_string(const std::string &s) {
    if (s.empty())
        throw input_error("empty rational literal");
    std::size_t slash = s.find('/');
    std::string num = (slash == std::string::npos) ? s : s.substr(0, slash);
    std::string den = (slash == std::string::npos) ? "1" : s.substr(slash + 1);
    auto valid_int = [](const std::string &t) {
        if (t.empty())
            return false;
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size())
            return false;
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                return false;
        return true;
    };
    if (!valid_int(num) || !valid_int(den))
        throw input_error("malformed rational '" + s + "' (expected p or p/q)");
    Int n(num), d(den);
    if (d == 0)
        throw input_error("zero denominator in '" + s + "'");
    Rat r(n, d);
    r.canonicalize();
    return r;
}

std::string rat_to_string(const Rat &r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = 1;
    return m;
}

RatMatrix RatMatrix::from_vector(const std::vector<Rat> &v, std::size_t rows, std::size_t cols) {
    if (v.size() != rows * cols)
        throw internal_error("from_vector: length mismatch");
    RatMatrix m(rows, cols);
    m.entries_ = v;
    return m;
}

RatMatrix RatMatrix::operator*(const RatMatrix &other) const {
    if (cols_ != other.rows_)
        throw input_error("matrix product: inner dimension mismatch");
    RatMatrix out(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Rat &aik = at(i, k);
            if (aik == 0)
                continue;
            for (std::size_t j = 0; j < other.cols_; ++j) {
                const Rat &bkj = other.at(k, j);
                if (bkj != 0)
                    out.at(i, j) += aik * bkj;
            }
        }
    return out;
}

RatMatrix RatMatrix::operator+(const RatMatrix &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw input_error("matrix sum: shape mismatch");
    RatMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = entries_[i] + other.entries_[i];
    return out;
}

RatMatrix RatMatrix::operator-(const RatMatrix &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw input_error("matrix difference: shape mismatch");
    RatMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = entries_[i] - other.entries_[i];
    return out;
}

RatMatrix RatMatrix::scaled(const Rat &c) const {
    RatMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < entries_.size(); ++i)
        out.entries_[i] = entries_[i] * c;
    return out;
}

RatMatrix RatMatrix::transpose() const {
    RatMatrix out(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j)
            out.at(j, i) = at(i, j);
    return out;
}

RatMatrix RatMatrix::commutator_with(const RatMatrix &other) const {
    return (*this) * other - other * (*this);
}

Rat RatMatrix::trace() const {
    Rat t = 0;
    std::size_t n = rows_ < cols_ ? rows_ : cols_;
    for (std::size_t i = 0; i < n; ++i)
        t += at(i, i);
    return t;
}

bool RatMatrix::is_zero() const {
    for (const Rat &e : entries_)
        if (e != 0)
            return false;
    return true;
}

RatMatrix RatMatrix::primitive_integer_scaled() const {
    Int den_lcm = 1, num_gcd = 0;
    for (const Rat &e : entries_) {
        if (e == 0)
            continue;
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), e.get_den().get_mpz_t());
    }
    RatMatrix scaled_m = scaled(Rat(den_lcm));
    for (const Rat &e : scaled_m.entries_) {
        if (e == 0)
            continue;
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), e.get_num().get_mpz_t());
    }
    if (num_gcd == 0)
        return scaled_m; // zero matrix
    // flip sign so the first nonzero entry is positive
    for (const Rat &e : scaled_m.entries_) {
        if (e != 0) {
            if (e < 0)
                num_gcd = -num_gcd;
            break;
        }
    }
    return scaled_m.scaled(Rat(Int(1), num_gcd));
}

std::string RatMatrix::to_string() const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? "; " : "");
        for (std::size_t j = 0; j < cols_; ++j)
            os << (j ? " " : "") << at(i, j);
    }
    os << "]";
    return os.str();
}

namespace {

// Polynomial helpers on ascending coefficient vectors.
void poly_trim(std::vector<Rat> &p) {
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

std::vector<Rat> poly_derivative(const std::vector<Rat> &p) {
    std::vector<Rat> d;
    for (std::size_t i = 1; i < p.size(); ++i)
        d.push_back(p[i] * Rat(static_cast<long>(i)));
    poly_trim(d);
    return d;
}

std::vector<Rat> poly_mod(std::vector<Rat> a, const std::vector<Rat> &b) {
    poly_trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rat f = a.back() / b.back();
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[off + i] -= f * b[i];
        poly_trim(a);
    }
    return a;
}

} // namespace

std::vector<Rat> minimal_polynomial(const RatMatrix &m) {
    if (m.rows() != m.cols())
        throw internal_error("minimal_polynomial: non-square matrix");
    std::size_t n = m.rows();
    if (n == 0)
        return {Rat(0), Rat(1)}; // conventional: x
    std::size_t amb = n * n;
    // Krylov: powers I, m, m^2, ... until the next power depends on the rest.
    std::vector<std::vector<Rat>> powers_flat;
    RatMatrix cur = RatMatrix::identity(n);
    while (true) {
        std::vector<Rat> flat = cur.to_vector();
        Subspace sp = Subspace::span_of(powers_flat, amb);
        if (!powers_flat.empty() && sp.contains(flat)) {
            // solve sum c_i * p_i = p_k on the pivot coordinates (square system,
            // invertible since the lower powers are independent)
            std::size_t d = powers_flat.size();
            const auto &piv = sp.pivots();
            std::vector<std::vector<Rat>> sys(d, std::vector<Rat>(d + 1, Rat(0)));
            for (std::size_t r = 0; r < d; ++r) {
                for (std::size_t c = 0; c < d; ++c)
                    sys[r][c] = powers_flat[c][piv[r]];
                sys[r][d] = flat[piv[r]];
            }
            for (std::size_t c = 0, r = 0; c < d && r < d; ++c) {
                std::size_t p = r;
                while (p < d && sys[p][c] == 0)
                    ++p;
                if (p == d)
                    continue;
                std::swap(sys[p], sys[r]);
                Rat inv = Rat(1) / sys[r][c];
                for (std::size_t j = c; j <= d; ++j)
                    sys[r][j] *= inv;
                for (std::size_t i = 0; i < d; ++i) {
                    if (i == r || sys[i][c] == 0)
                        continue;
                    Rat f = sys[i][c];
                    for (std::size_t j = c; j <= d; ++j)
                        sys[i][j] -= f * sys[r][j];
                }
                ++r;
            }
            std::vector<Rat> poly(d + 1, Rat(0));
            for (std::size_t c = 0; c < d; ++c)
                poly[c] = -sys[c][d];
            poly[d] = 1;
            return poly;
        }
        powers_flat.push_back(std::move(flat));
        if (powers_flat.size() > n + 1)
            throw internal_error("minimal_polynomial: no dependence found");
        cur = cur * m;
    }
}

bool is_squarefree_poly(const std::vector<Rat> &poly) {
    std::vector<Rat> p = poly;
    poly_trim(p);
    if (p.size() <= 2)
        return true;
    std::vector<Rat> a = p, b = poly_derivative(p);
    // Euclid
    while (!b.empty()) {
        std::vector<Rat> r = poly_mod(a, b);
        a = b;
        b = r;
    }
    return a.size() == 1;
}

} // namespace pirep
