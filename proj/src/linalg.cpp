#include "pirep/linalg.hpp"

#include <algorithm>
#include <random>
#include <thread>

namespace pirep {

std::size_t rank_exact(const RatMatrix &m) {
    std::size_t nr = m.rows(), nc = m.cols();
    if (nr == 0 || nc == 0)
        return 0;
    // scale each row to integers
    std::vector<std::vector<Int>> a(nr, std::vector<Int>(nc));
    for (std::size_t i = 0; i < nr; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < nc; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (std::size_t j = 0; j < nc; ++j) {
            Rat scaled = m.at(i, j) * Rat(l);
            a[i][j] = scaled.get_num();
        }
    }
    // Bareiss fraction-free elimination with exact divisions
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < nc && r < nr; ++c) {
        std::size_t p = r;
        while (p < nr && a[p][c] == 0)
            ++p;
        if (p == nr)
            continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < nr; ++i) {
            for (std::size_t j = c + 1; j < nc; ++j) {
                Int t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
                mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            a[i][c] = 0;
        }
        prev = a[r][c];
        ++r;
    }
    return r;
}

LinSolveResult solve_linear(const RatMatrix &a, const RatMatrix &rhs) {
    if (a.rows() != rhs.rows())
        throw input_error("solve_linear: row count mismatch");
    std::size_t nr = a.rows(), nc = a.cols(), nrhs = rhs.cols();
    std::size_t w = nc + nrhs;
    std::vector<std::vector<Rat>> rows(nr, std::vector<Rat>(w, Rat(0)));
    for (std::size_t i = 0; i < nr; ++i) {
        for (std::size_t j = 0; j < nc; ++j)
            rows[i][j] = a.at(i, j);
        for (std::size_t j = 0; j < nrhs; ++j)
            rows[i][nc + j] = rhs.at(i, j);
    }
    rows = rref(rows);

    LinSolveResult out{std::nullopt, Subspace(nc)};

    std::vector<std::size_t> pivot_col;
    bool consistent = true;
    for (const auto &row : rows) {
        std::size_t c = 0;
        while (c < w && row[c] == 0)
            ++c;
        if (c >= nc) {
            consistent = false; // pivot in the rhs block
            break;
        }
        pivot_col.push_back(c);
    }

    // kernel of a from the same echelon (columns < nc)
    std::vector<bool> is_pivot(nc, false);
    for (std::size_t c : pivot_col)
        if (c < nc)
            is_pivot[c] = true;
    std::vector<std::vector<Rat>> kernel_rows;
    for (std::size_t f = 0; f < nc; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Rat> v(nc, Rat(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = -rows[i][f];
        kernel_rows.push_back(std::move(v));
    }
    out.kernel = Subspace::span_of(kernel_rows, nc);

    if (consistent) {
        RatMatrix x(nc, nrhs);
        for (std::size_t i = 0; i < pivot_col.size(); ++i)
            for (std::size_t j = 0; j < nrhs; ++j)
                x.at(pivot_col[i], j) = rows[i][nc + j];
        out.particular = std::move(x);
    }
    return out;
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t r = 1;
    base %= p;
    while (exp) {
        if (exp & 1)
            r = mulmod(r, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return r;
}

std::uint64_t int_mod(const Int &z, std::uint64_t p) {
    return mpz_fdiv_ui(z.get_mpz_t(), p);
}

std::uint64_t rat_mod(const Rat &r, std::uint64_t p) {
    std::uint64_t num = int_mod(r.get_num(), p);
    std::uint64_t den = int_mod(r.get_den(), p);
    if (den == 0)
        throw internal_error("rat_mod: denominator divisible by prime");
    return mulmod(num, invmod(den, p), p);
}

std::vector<std::uint64_t> draw_primes(std::size_t count, std::uint64_t seed) {
    std::vector<std::uint64_t> primes;
    std::mt19937_64 gen(seed);
    const std::uint64_t lo = 1ULL << 60, hi = 1ULL << 62;
    while (primes.size() < count) {
        std::uint64_t x = lo + gen() % (hi - lo);
        x |= 1;
        Int z(0);
        mpz_import(z.get_mpz_t(), 1, 1, sizeof(x), 0, 0, &x);
        if (!mpz_probab_prime_p(z.get_mpz_t(), 30))
            continue;
        if (std::find(primes.begin(), primes.end(), x) != primes.end())
            continue;
        primes.push_back(x);
    }
    return primes;
}

void FpEchelon::add_row(const std::vector<std::uint64_t> &row) {
    if (row.size() != width_)
        throw input_error("FpEchelon: row width mismatch");
    std::vector<std::uint64_t> v = row;
    for (auto &e : v)
        e %= p_;
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::size_t c = pivot_cols_[i];
        std::uint64_t f = v[c];
        if (f == 0)
            continue;
        std::uint64_t neg = p_ - f;
        const auto &pr = rows_[i];
        for (std::size_t j = c; j < width_; ++j) {
            if (pr[j])
                v[j] = (v[j] + mulmod(neg, pr[j], p_)) % p_;
        }
    }
    std::size_t c = 0;
    while (c < width_ && v[c] == 0)
        ++c;
    if (c == width_)
        return;
    std::uint64_t inv = invmod(v[c], p_);
    for (std::size_t j = c; j < width_; ++j)
        if (v[j])
            v[j] = mulmod(v[j], inv, p_);
    auto pos = std::lower_bound(pivot_cols_.begin(), pivot_cols_.end(), c);
    std::size_t idx = static_cast<std::size_t>(pos - pivot_cols_.begin());
    pivot_cols_.insert(pos, c);
    rows_.insert(rows_.begin() + static_cast<long>(idx), std::move(v));
}

ModularRankReport rank_modular(std::size_t width, const ModularRowSource &rows,
                               std::size_t num_primes, std::uint64_t seed, std::size_t threads) {
    ModularRankReport rep;
    rep.primes = draw_primes(num_primes, seed);
    if (width == 0 || num_primes == 0)
        return rep;
    std::vector<std::size_t> ranks(num_primes, 0);
    auto run_one = [&](std::size_t i) {
        FpEchelon ech(width, rep.primes[i]);
        rows(rep.primes[i], [&](const std::vector<std::uint64_t> &r) { ech.add_row(r); });
        ranks[i] = ech.rank();
    };
    if (threads <= 1 || num_primes == 1) {
        for (std::size_t i = 0; i < num_primes; ++i)
            run_one(i);
    } else {
        std::vector<std::thread> pool;
        std::size_t nt = std::min(threads, num_primes);
        for (std::size_t t = 0; t < nt; ++t)
            pool.emplace_back([&, t]() {
                for (std::size_t i = t; i < num_primes; i += nt)
                    run_one(i);
            });
        for (auto &th : pool)
            th.join();
    }
    rep.rank = *std::max_element(ranks.begin(), ranks.end());
    return rep;
}

ModularRankReport rank_modular_int_stream(
    std::size_t width,
    const std::function<void(const std::function<void(const std::vector<Int> &)> &emit)> &stream,
    std::size_t num_primes, std::uint64_t seed, std::size_t threads) {
    return rank_modular(
        width,
        [&](std::uint64_t p, const std::function<void(const std::vector<std::uint64_t> &)> &emit) {
            std::vector<std::uint64_t> buf(width);
            stream([&](const std::vector<Int> &row) {
                if (row.size() != width)
                    throw input_error("rank_modular: streamed row width mismatch");
                for (std::size_t j = 0; j < width; ++j)
                    buf[j] = int_mod(row[j], p);
                emit(buf);
            });
        },
        num_primes, seed, threads);
}

ModularRankReport rank_modular_matrix(const RatMatrix &m, std::size_t num_primes,
                                      std::uint64_t seed, std::size_t threads) {
    for (const Rat &e : m.entries())
        if (e.get_den() != 1)
            throw input_error("rank_modular: matrix entries must be integers");
    return rank_modular_int_stream(
        m.cols(),
        [&](const std::function<void(const std::vector<Int> &)> &emit) {
            std::vector<Int> row(m.cols());
            for (std::size_t i = 0; i < m.rows(); ++i) {
                for (std::size_t j = 0; j < m.cols(); ++j)
                    row[j] = m.at(i, j).get_num();
                emit(row);
            }
        },
        num_primes, seed, threads);
}

} // namespace pirep
