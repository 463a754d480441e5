#include "pirep/multilin.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace pirep {

namespace {

unsigned long long checked_row_cells(std::size_t n, std::size_t width) {
    Int cells = 1;
    for (std::size_t i = 2; i <= n; ++i)
        cells *= static_cast<unsigned long>(i);
    cells *= static_cast<unsigned long>(width);
    if (!cells.fits_ulong_p())
        return ~0ULL;
    return cells.get_ui();
}

void mat_mul_int(const std::vector<Int> &a, const std::vector<Int> &b, std::vector<Int> &out,
                 std::size_t dv) {
    for (std::size_t i = 0; i < dv; ++i)
        for (std::size_t j = 0; j < dv; ++j) {
            Int acc = 0;
            for (std::size_t k = 0; k < dv; ++k)
                acc += a[i * dv + k] * b[k * dv + j];
            out[i * dv + j] = acc;
        }
}

} // namespace

EvalTable::EvalTable(const LinearRep &rep, std::size_t n)
    : n_(n), dim_l_(rep.dim_l), dv_(rep.dim_v), dv2_(rep.dim_v * rep.dim_v) {
    if (n == 0)
        throw input_error("EvalTable: degree must be at least 1");
    pow_.resize(n + 1);
    pow_[0] = 1;
    for (std::size_t k = 1; k <= n; ++k)
        pow_[k] = pow_[k - 1] * dim_l_;
    tuples_ = pow_[n];
    if (dim_l_ == 0)
        return;

    std::vector<std::vector<Int>> basis_int(dim_l_, std::vector<Int>(dv2_));
    for (std::size_t b = 0; b < dim_l_; ++b)
        for (std::size_t t = 0; t < dv2_; ++t)
            basis_int[b][t] = rep.eval_basis[b].entries()[t].get_num();

    // shared prefix products: level k holds every length-k sequence product
    std::vector<Int> prev;
    std::vector<Int> cur(dim_l_ * dv2_);
    for (std::size_t b = 0; b < dim_l_; ++b)
        for (std::size_t t = 0; t < dv2_; ++t)
            cur[b * dv2_ + t] = basis_int[b][t];
    std::vector<Int> buf(dv2_), pmv(dv2_);
    for (std::size_t k = 2; k <= n; ++k) {
        prev = std::move(cur);
        cur.assign(pow_[k] * dv2_, Int(0));
        for (std::size_t sp = 0; sp < pow_[k - 1]; ++sp) {
            for (std::size_t t = 0; t < dv2_; ++t)
                pmv[t] = prev[sp * dv2_ + t];
            for (std::size_t d = 0; d < dim_l_; ++d) {
                mat_mul_int(pmv, basis_int[d], buf, dv_);
                std::size_t idx = (sp * dim_l_ + d) * dv2_;
                for (std::size_t t = 0; t < dv2_; ++t)
                    cur[idx + t] = buf[t];
            }
        }
    }
    table_ = std::move(cur);
}

unsigned long long EvalTable::row_cells() const { return checked_row_cells(n_, width()); }

std::size_t EvalTable::seq_index(const Perm &sigma, std::size_t tuple_idx) const {
    // s[j] = t[sigma[j]]: digit of the tuple at position sigma[j]
    std::size_t idx = 0;
    for (std::size_t j = 0; j < n_; ++j) {
        std::size_t pos = static_cast<std::size_t>(sigma[j]);
        std::size_t digit = (tuple_idx / pow_[n_ - 1 - pos]) % dim_l_;
        idx = idx * dim_l_ + digit;
    }
    return idx;
}

void EvalTable::row_exact(const Perm &sigma, std::vector<Rat> &out) const {
    out.assign(width(), Rat(0));
    for (std::size_t t = 0; t < tuples_; ++t) {
        std::size_t s = seq_index(sigma, t);
        for (std::size_t e = 0; e < dv2_; ++e)
            out[t * dv2_ + e] = Rat(table_[s * dv2_ + e]);
    }
}

void EvalTable::eval_exact(const GroupAlgebraElement &g, std::vector<Rat> &out) const {
    out.assign(width(), Rat(0));
    for (const auto &[perm, coeff] : g.terms)
        for (std::size_t t = 0; t < tuples_; ++t) {
            std::size_t s = seq_index(perm, t);
            for (std::size_t e = 0; e < dv2_; ++e) {
                const Int &v = table_[s * dv2_ + e];
                if (v != 0)
                    out[t * dv2_ + e] += coeff * Rat(v);
            }
        }
}

RatMatrix EvalTable::eval_on_tuple(const GroupAlgebraElement &g,
                                   const std::vector<int> &tuple) const {
    if (tuple.size() != n_)
        throw input_error("eval_on_tuple: tuple length mismatch");
    std::size_t tuple_idx = 0;
    for (int b : tuple) {
        if (b < 0 || static_cast<std::size_t>(b) >= dim_l_)
            throw input_error("eval_on_tuple: basis index out of range");
        tuple_idx = tuple_idx * dim_l_ + static_cast<std::size_t>(b);
    }
    RatMatrix out(dv_, dv_);
    for (const auto &[perm, coeff] : g.terms) {
        std::size_t s = seq_index(perm, tuple_idx);
        for (std::size_t e = 0; e < dv2_; ++e) {
            const Int &v = table_[s * dv2_ + e];
            if (v != 0)
                out.at(e / dv_, e % dv_) += coeff * Rat(v);
        }
    }
    return out;
}

EvalTable::ModContext EvalTable::make_mod_context(std::uint64_t p) const {
    ModContext ctx;
    ctx.p = p;
    ctx.table.resize(table_.size());
    for (std::size_t i = 0; i < table_.size(); ++i)
        ctx.table[i] = int_mod(table_[i], p);
    return ctx;
}

void EvalTable::row_mod(const ModContext &ctx, const Perm &sigma,
                        std::vector<std::uint64_t> &out) const {
    out.assign(width(), 0);
    for (std::size_t t = 0; t < tuples_; ++t) {
        std::size_t s = seq_index(sigma, t);
        for (std::size_t e = 0; e < dv2_; ++e)
            out[t * dv2_ + e] = ctx.table[s * dv2_ + e];
    }
}

void EvalTable::eval_mod(const ModContext &ctx, const GroupAlgebraElement &g,
                         std::vector<std::uint64_t> &out) const {
    out.assign(width(), 0);
    for (const auto &[perm, coeff] : g.terms) {
        std::uint64_t c = rat_mod(coeff, ctx.p);
        if (c == 0)
            continue;
        for (std::size_t t = 0; t < tuples_; ++t) {
            std::size_t s = seq_index(perm, t);
            for (std::size_t e = 0; e < dv2_; ++e) {
                std::uint64_t v = ctx.table[s * dv2_ + e];
                if (v)
                    out[t * dv2_ + e] = (out[t * dv2_ + e] + mulmod(c, v, ctx.p)) % ctx.p;
            }
        }
    }
}

namespace {

bool use_modular(RankMethod method, std::size_t n, unsigned long long cells) {
    switch (method) {
    case RankMethod::exact:
        return false;
    case RankMethod::modular:
        return true;
    case RankMethod::automatic:
        return n >= 5 || cells > 1'000'000ULL;
    }
    return true;
}

void guard_budget(const char *what, unsigned long long cells, const EvalOptions &opts) {
    if (cells > opts.cell_budget && !opts.force)
        throw budget_error(std::string(what) + ": evaluation matrix exceeds the cell budget (" +
                               std::to_string(cells) + " > " + std::to_string(opts.cell_budget) +
                               ")",
                           cells, opts.cell_budget);
}

/// Rank of the matrix whose sigma-indexed rows evaluate element_of(sigma)
/// (plain monomial rows when element_of returns null).
std::size_t eval_rank(const EvalTable &table, const std::vector<Perm> &perms,
                      const std::function<const GroupAlgebraElement *(const Perm &)> &element_of,
                      bool modular, const EvalOptions &opts,
                      std::vector<std::uint64_t> *primes_out) {
    if (table.width() == 0)
        return 0;
    if (!modular) {
        RatMatrix m(perms.size(), table.width());
        std::vector<Rat> row;
        for (std::size_t i = 0; i < perms.size(); ++i) {
            const GroupAlgebraElement *g = element_of(perms[i]);
            if (g)
                table.eval_exact(*g, row);
            else
                table.row_exact(perms[i], row);
            for (std::size_t j = 0; j < table.width(); ++j)
                m.at(i, j) = row[j];
        }
        return rank_exact(m);
    }
    auto report = rank_modular(
        table.width(),
        [&](std::uint64_t p, const std::function<void(const std::vector<std::uint64_t> &)> &emit) {
            EvalTable::ModContext ctx = table.make_mod_context(p);
            std::vector<std::uint64_t> row;
            for (const Perm &sigma : perms) {
                const GroupAlgebraElement *g = element_of(sigma);
                if (g)
                    table.eval_mod(ctx, *g, row);
                else
                    table.row_mod(ctx, sigma, row);
                emit(row);
            }
        },
        opts.primes, opts.seed, opts.threads);
    if (primes_out)
        *primes_out = report.primes;
    return report.rank;
}

} // namespace

CodimResult codimension(const LinearRep &rep, std::size_t n, const EvalOptions &opts) {
    if (n < 1)
        throw input_error("codimension: n must be at least 1");
    CodimResult res;
    res.n = n;
    res.seed = opts.seed;
    if (rep.dim_l == 0) {
        res.method_used = "exact";
        res.value = 0;
        return res;
    }
    EvalTable table(rep, n);
    unsigned long long cells = table.row_cells();
    guard_budget("codimension", cells, opts);
    bool modular = use_modular(opts.method, n, cells);
    res.method_used = modular ? "modular" : "exact";
    auto perms = all_perms(static_cast<int>(n));
    res.value = eval_rank(
        table, perms, [](const Perm &) -> const GroupAlgebraElement * { return nullptr; }, modular,
        opts, &res.primes);
    return res;
}

bool is_identity(const GroupAlgebraElement &f, const LinearRep &rep) {
    if (f.n < 1)
        throw input_error("is_identity: degree must be at least 1");
    if (rep.dim_l == 0 || f.is_zero())
        return true;
    EvalTable table(rep, static_cast<std::size_t>(f.n));
    std::vector<Rat> row;
    table.eval_exact(f, row);
    return std::all_of(row.begin(), row.end(), [](const Rat &e) { return e == 0; });
}

Int CocharTable::multiplicity_dim_sum() const {
    Int total = 0;
    for (const auto &r : rows)
        total += Int(static_cast<unsigned long>(r.m)) * r.dim;
    return total;
}

bool CocharTable::consistent() const {
    return multiplicity_dim_sum() == Int(static_cast<unsigned long>(c_n));
}

CocharTable cocharacter_multiplicities(const LinearRep &rep, std::size_t n,
                                       const EvalOptions &opts, bool genuine_vanishing_check) {
    CocharTable out;
    out.n = n;
    out.c_n = codimension(rep, n, opts).value;
    std::optional<EvalTable> table;
    std::vector<Perm> perms;
    if (rep.dim_l > 0) {
        table.emplace(rep, n);
        guard_budget("cocharacter_multiplicities", table->row_cells(), opts);
        perms = all_perms(static_cast<int>(n));
    }
    for (const auto &lam : partitions_of(static_cast<int>(n))) {
        CocharRow row;
        row.lambda = lam;
        row.dim = hook_dimension(lam);
        bool too_tall = lam.num_rows() > rep.dim_l;
        if (rep.dim_l == 0 || (too_tall && !genuine_vanishing_check)) {
            row.m = 0;
        } else {
            GroupAlgebraElement estar = young_symmetrizer_star(Tableau::row_major(lam));
            bool modular = use_modular(opts.method, n, table->row_cells());
            GroupAlgebraElement product;
            row.m = eval_rank(
                *table, perms,
                [&](const Perm &sigma) -> const GroupAlgebraElement * {
                    product = estar * GroupAlgebraElement::single(static_cast<int>(n), sigma);
                    return &product;
                },
                modular, opts, nullptr);
            if (too_tall && row.m != 0)
                throw internal_error("cocharacter: nonzero multiplicity for a shape with more "
                                     "rows than dim rho(L)");
        }
        out.rows.push_back(std::move(row));
    }
    return out;
}

GroupAlgebraElement alternate(const GroupAlgebraElement &f, const std::vector<int> &vars) {
    std::vector<int> v = vars;
    std::sort(v.begin(), v.end());
    if (std::unique(v.begin(), v.end()) != v.end())
        throw input_error("alternate: repeated variable");
    for (int x : v)
        if (x < 1 || x > f.n)
            throw input_error("alternate: variable out of range");
    GroupAlgebraElement alt;
    alt.n = f.n;
    std::vector<int> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    do {
        Perm tau = perm_identity(f.n);
        for (std::size_t i = 0; i < v.size(); ++i)
            tau[v[i] - 1] = v[static_cast<std::size_t>(idx[i])] - 1;
        alt.terms[tau] += perm_sign(tau);
    } while (std::next_permutation(idx.begin(), idx.end()));
    alt.prune();
    return alt * f;
}

} // namespace pirep
