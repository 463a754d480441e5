#include "pirep/envelope.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "pirep/linalg.hpp"

namespace pirep {

std::string factor_kind_name(FactorKind k) {
    return k == FactorKind::irreducible ? "irreducible" : "one_dimensional";
}

std::vector<RatMatrix> closure_under_product(const std::vector<RatMatrix> &gens,
                                             std::size_t dim_v) {
    std::size_t amb = dim_v * dim_v;
    std::vector<std::vector<Rat>> vecs;
    for (const auto &g : gens) {
        if (g.rows() != dim_v || g.cols() != dim_v)
            throw input_error("closure_under_product: matrix is not dim_v x dim_v");
        vecs.push_back(g.to_vector());
    }
    Subspace span = Subspace::span_of(vecs, amb);
    while (true) {
        std::vector<RatMatrix> mats;
        for (std::size_t i = 0; i < span.dim(); ++i)
            mats.push_back(span.basis_matrix(i, dim_v, dim_v));
        std::vector<std::vector<Rat>> add;
        for (std::size_t i = 0; i < mats.size(); ++i)
            for (std::size_t j = 0; j < mats.size(); ++j) {
                RatMatrix p = mats[i] * mats[j];
                if (!span.contains(p))
                    add.push_back(p.to_vector());
            }
        if (add.empty())
            break;
        for (std::size_t i = 0; i < span.dim(); ++i)
            add.push_back(span.basis()[i]);
        span = Subspace::span_of(add, amb);
    }
    std::vector<RatMatrix> out;
    for (std::size_t i = 0; i < span.dim(); ++i)
        out.push_back(span.basis_matrix(i, dim_v, dim_v));
    return out;
}

Envelope generate_envelope(const LinearRep &rep) {
    Envelope env;
    env.dim_v = rep.dim_v;
    env.basis = closure_under_product(rep.basis, rep.dim_v);
    env.dim_a = env.basis.size();
    std::size_t amb = rep.dim_v * rep.dim_v;
    env.span = env.basis.empty() ? Subspace(amb) : Subspace::span_of_matrices(env.basis);
    env.radical = Subspace(amb);
    env.chain = {env.span};
    env.theta = 0;
    return env;
}

Subspace trace_form_radical(const std::vector<RatMatrix> &alg_basis, std::size_t dim_v) {
    std::size_t amb = dim_v * dim_v, d = alg_basis.size();
    if (d == 0)
        return Subspace(amb);
    RatMatrix gram(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            gram.at(i, j) = (alg_basis[i] * alg_basis[j]).trace();
    auto res = solve_linear(gram, RatMatrix(d, 1));
    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 0; i < res.kernel.dim(); ++i) {
        const auto &coef = res.kernel.basis()[i];
        std::vector<Rat> v(amb, Rat(0));
        for (std::size_t k = 0; k < d; ++k) {
            if (coef[k] == 0)
                continue;
            const auto &b = alg_basis[k].entries();
            for (std::size_t t = 0; t < amb; ++t)
                v[t] += coef[k] * b[t];
        }
        rows.push_back(std::move(v));
    }
    return Subspace::span_of(rows, amb);
}

Subspace subspace_product(const Subspace &a, const Subspace &b, std::size_t dim_v) {
    std::size_t amb = dim_v * dim_v;
    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            rows.push_back(
                (a.basis_matrix(i, dim_v, dim_v) * b.basis_matrix(j, dim_v, dim_v)).to_vector());
    return Subspace::span_of(rows, amb);
}

std::pair<Subspace, std::size_t> jacobson_radical(const Envelope &env) {
    Subspace j = trace_form_radical(env.basis, env.dim_v);
    std::size_t p = 1;
    Subspace power = j;
    while (!power.is_zero()) {
        power = subspace_product(power, j, env.dim_v);
        ++p;
    }
    return {j, p};
}

namespace {

// ---- layer module machinery -----------------------------------------------

std::vector<Rat> apply_mat(const RatMatrix &m, const std::vector<Rat> &v) {
    std::vector<Rat> out(m.rows(), Rat(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != 0 && v[j] != 0)
                out[i] += m.at(i, j) * v[j];
    return out;
}

RatMatrix restrict_action(const RatMatrix &act, const Subspace &sub) {
    std::size_t d = sub.dim();
    RatMatrix out(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Rat> img = apply_mat(act, sub.basis()[j]);
        auto coords = sub.coordinates(img);
        if (!coords)
            throw internal_error("restrict_action: subspace not invariant");
        for (std::size_t i = 0; i < d; ++i)
            out.at(i, j) = (*coords)[i];
    }
    return out;
}

bool is_scalar_matrix(const RatMatrix &m) {
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (i == j && m.at(i, j) != m.at(0, 0))
                return false;
            if (i != j && m.at(i, j) != 0)
                return false;
        }
    return true;
}

std::vector<Int> divisors_bounded(Int n, std::size_t cap) {
    // trial division; an unfactored cofactor is treated as prime, so the list
    // may be incomplete for huge inputs (callers just move on to the next
    // candidate element)
    std::vector<std::pair<Int, unsigned>> fac;
    if (n < 0)
        n = -n;
    for (Int p = 2; p * p <= n && p < 1000000; p += (p == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            n /= p;
            ++e;
        }
        if (e)
            fac.emplace_back(p, e);
    }
    if (n > 1)
        fac.emplace_back(n, 1);
    std::vector<Int> divs{Int(1)};
    for (const auto &[p, e] : fac) {
        std::size_t sz = divs.size();
        Int pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t i = 0; i < sz; ++i) {
                divs.push_back(divs[i] * pk);
                if (divs.size() > cap)
                    return divs;
            }
        }
    }
    return divs;
}

Rat poly_eval(const std::vector<Rat> &poly, const Rat &x) {
    Rat acc = 0;
    for (std::size_t i = poly.size(); i-- > 0;)
        acc = acc * x + poly[i];
    return acc;
}

std::vector<Rat> rational_roots(std::vector<Rat> poly) {
    while (!poly.empty() && poly.back() == 0)
        poly.pop_back();
    std::vector<Rat> roots;
    if (poly.empty())
        return roots;
    std::size_t low = 0;
    while (low < poly.size() && poly[low] == 0)
        ++low;
    if (low > 0) {
        roots.push_back(Rat(0));
        poly.erase(poly.begin(), poly.begin() + static_cast<long>(low));
    }
    if (poly.size() <= 1)
        return roots;
    Int den = 1;
    for (const Rat &c : poly)
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    std::vector<Int> ip;
    for (const Rat &c : poly)
        ip.push_back(Rat(c * Rat(den)).get_num());
    std::vector<Int> nums = divisors_bounded(ip.front(), 4096);
    std::vector<Int> dens = divisors_bounded(ip.back(), 4096);
    std::set<Rat> seen;
    for (const Int &p : nums)
        for (const Int &q : dens) {
            for (int sign = 0; sign < 2; ++sign) {
                Rat cand(sign ? -p : p, q);
                cand.canonicalize();
                if (seen.count(cand))
                    continue;
                seen.insert(cand);
                if (poly_eval(poly, cand) == 0)
                    roots.push_back(cand);
            }
        }
    std::sort(roots.begin(), roots.end());
    return roots;
}

RatMatrix mat_pow(const RatMatrix &m, std::size_t e) {
    RatMatrix acc = RatMatrix::identity(m.rows());
    for (std::size_t i = 0; i < e; ++i)
        acc = acc * m;
    return acc;
}

Subspace kernel_subspace(const RatMatrix &m) {
    return solve_linear(m, RatMatrix(m.rows(), 1)).kernel;
}

Subspace image_subspace(const RatMatrix &m) {
    std::vector<std::vector<Rat>> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) {
        std::vector<Rat> c(m.rows());
        for (std::size_t i = 0; i < m.rows(); ++i)
            c[i] = m.at(i, j);
        cols.push_back(std::move(c));
    }
    return Subspace::span_of(cols, m.rows());
}

/// Lifts a subspace given in coordinates of `frame` rows back to the frame's
/// ambient space.
Subspace lift_through(const Subspace &coords_space, const std::vector<std::vector<Rat>> &frame,
                      std::size_t ambient) {
    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 0; i < coords_space.dim(); ++i) {
        const auto &c = coords_space.basis()[i];
        std::vector<Rat> v(ambient, Rat(0));
        for (std::size_t k = 0; k < frame.size(); ++k) {
            if (c[k] == 0)
                continue;
            for (std::size_t t = 0; t < ambient; ++t)
                v[t] += c[k] * frame[k][t];
        }
        rows.push_back(std::move(v));
    }
    return Subspace::span_of(rows, ambient);
}

struct SplitContext {
    const std::vector<RatMatrix> *acts = nullptr; // layer actions, m x m
    std::mt19937_64 rng;
    std::size_t layer_index = 0;
};

std::vector<Subspace> split_module(const Subspace &module, SplitContext &ctx);

std::vector<Subspace> split_by_commutant_element(const Subspace &module, const RatMatrix &z,
                                                 SplitContext &ctx) {
    std::size_t d = z.rows();
    auto roots = rational_roots(minimal_polynomial(z));
    if (roots.empty())
        return {};
    std::vector<Subspace> parts; // in module-internal coordinates
    RatMatrix rest_op = RatMatrix::identity(d);
    for (const Rat &lam : roots) {
        RatMatrix power = mat_pow(z - RatMatrix::identity(d).scaled(lam), d);
        Subspace ker = kernel_subspace(power);
        if (!ker.is_zero())
            parts.push_back(ker);
        rest_op = rest_op * power;
    }
    Subspace rest = image_subspace(rest_op);
    if (!rest.is_zero())
        parts.push_back(rest);
    if (parts.size() < 2)
        return {};
    std::vector<Subspace> out;
    for (const Subspace &part_coords : parts) {
        Subspace part = lift_through(part_coords, module.basis(), module.ambient_dim());
        auto sub = split_module(part, ctx);
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

std::vector<Subspace> split_module(const Subspace &module, SplitContext &ctx) {
    std::size_t d = module.dim();
    if (d == 0)
        return {};
    if (d == 1)
        return {module};
    std::vector<RatMatrix> racts;
    for (const auto &a : *ctx.acts)
        racts.push_back(restrict_action(a, module));
    // commutant: X with X*ra = ra*X for every generator
    std::size_t unknowns = d * d;
    std::vector<std::vector<Rat>> cond_rows;
    for (const auto &ra : racts) {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                std::vector<Rat> row(unknowns, Rat(0));
                for (std::size_t k = 0; k < d; ++k) {
                    row[i * d + k] += ra.at(k, j);
                    row[k * d + j] -= ra.at(i, k);
                }
                cond_rows.push_back(std::move(row));
            }
    }
    RatMatrix cond(cond_rows.size(), unknowns);
    for (std::size_t i = 0; i < cond_rows.size(); ++i)
        for (std::size_t j = 0; j < unknowns; ++j)
            cond.at(i, j) = cond_rows[i][j];
    Subspace comm = solve_linear(cond, RatMatrix(cond.rows(), 1)).kernel;
    if (comm.dim() <= 1)
        return {module}; // scalar commutant: simple with split endomorphisms

    std::vector<RatMatrix> comm_basis;
    for (std::size_t i = 0; i < comm.dim(); ++i)
        comm_basis.push_back(comm.basis_matrix(i, d, d));

    // deterministic candidates first, seeded random combinations as fallback
    std::vector<RatMatrix> candidates;
    for (const auto &zb : comm_basis)
        candidates.push_back(zb);
    for (std::size_t i = 0; i < comm_basis.size(); ++i)
        for (std::size_t j = i + 1; j < comm_basis.size() && candidates.size() < 40; ++j)
            candidates.push_back(comm_basis[i] + comm_basis[j]);
    for (std::size_t i = 0; i < comm_basis.size(); ++i)
        for (std::size_t j = 0; j < comm_basis.size() && candidates.size() < 60; ++j)
            if (i != j)
                candidates.push_back(comm_basis[i] * comm_basis[j]);
    std::uniform_int_distribution<long> coef(-4, 4);
    for (int t = 0; t < 60; ++t) {
        RatMatrix z(d, d);
        for (const auto &zb : comm_basis) {
            long c = coef(ctx.rng);
            if (c != 0)
                z = z + zb.scaled(Rat(c));
        }
        candidates.push_back(z);
    }
    for (const auto &z : candidates) {
        if (is_scalar_matrix(z))
            continue;
        auto parts = split_by_commutant_element(module, z, ctx);
        if (!parts.empty())
            return parts;
    }
    throw nonsplit_error("composition chain: endomorphism algebra of layer " +
                             std::to_string(ctx.layer_index) +
                             " appears to be a proper extension of Q (non-split input)",
                         ctx.layer_index);
}

} // namespace

void compute_composition_chain(Envelope &env, std::uint64_t seed) {
    std::size_t dv = env.dim_v, amb = dv * dv;
    env.chain_seed = seed;
    env.chain.clear();
    env.factor_kinds.clear();
    if (env.dim_a == 0) {
        env.chain = {Subspace(amb)};
        env.theta = 0;
        return;
    }

    // coarse chain A >= J >= J^2 >= ... >= 0, strictly decreasing
    std::vector<Subspace> coarse{env.span};
    Subspace power = env.radical;
    while (!power.is_zero()) {
        if (power.dim() < coarse.back().dim())
            coarse.push_back(power);
        power = subspace_product(power, env.radical, dv);
    }
    coarse.push_back(Subspace(amb));

    // left identity of A modulo J (zero matrix when A = J)
    RatMatrix unit_mat(dv, dv);
    {
        std::size_t da = env.dim_a;
        std::vector<std::vector<Rat>> rows;
        std::vector<Rat> rhs_flat;
        for (std::size_t j = 0; j < da; ++j) {
            std::vector<std::vector<Rat>> cols;
            for (std::size_t i = 0; i < da; ++i)
                cols.push_back(env.radical.reduce((env.basis[i] * env.basis[j]).to_vector()));
            std::vector<Rat> target = env.radical.reduce(env.basis[j].to_vector());
            for (std::size_t t = 0; t < amb; ++t) {
                std::vector<Rat> row(da);
                for (std::size_t i = 0; i < da; ++i)
                    row[i] = cols[i][t];
                rows.push_back(std::move(row));
                rhs_flat.push_back(target[t]);
            }
        }
        RatMatrix a(rows.size(), da), rhs(rows.size(), 1);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t j = 0; j < da; ++j)
                a.at(i, j) = rows[i][j];
            rhs.at(i, 0) = rhs_flat[i];
        }
        auto res = solve_linear(a, rhs);
        if (!res.particular)
            throw internal_error("envelope: no left identity modulo the radical");
        for (std::size_t i = 0; i < da; ++i)
            if (res.particular->at(i, 0) != 0)
                unit_mat = unit_mat + env.basis[i].scaled(res.particular->at(i, 0));
    }

    env.chain.push_back(coarse[0]);
    std::mt19937_64 rng(seed);
    for (std::size_t layer = 0; layer + 1 < coarse.size(); ++layer) {
        const Subspace &top = coarse[layer];
        const Subspace &bot = coarse[layer + 1];
        auto comp_rows = top.complement_basis_within(bot);
        std::size_t m = comp_rows.size();
        Subspace frame = Subspace::span_of(comp_rows, amb);

        auto proj_coords = [&](const RatMatrix &x) {
            std::vector<Rat> resid = bot.reduce(x.to_vector());
            auto coords = frame.coordinates(resid);
            if (!coords)
                throw internal_error("composition chain: element escapes its layer");
            return *coords;
        };
        auto action_on_layer = [&](const RatMatrix &g) {
            RatMatrix act(m, m);
            for (std::size_t j = 0; j < m; ++j) {
                auto c = proj_coords(g * RatMatrix::from_vector(comp_rows[j], dv, dv));
                for (std::size_t i = 0; i < m; ++i)
                    act.at(i, j) = c[i];
            }
            return act;
        };
        std::vector<RatMatrix> acts;
        for (const auto &g : env.basis)
            acts.push_back(action_on_layer(g));
        RatMatrix e = action_on_layer(unit_mat);
        if (!(e * e == e))
            throw internal_error("composition chain: unit action is not idempotent");

        std::vector<std::pair<Subspace, FactorKind>> pieces; // in layer coords
        Subspace zero_part = kernel_subspace(e);
        for (std::size_t i = 0; i < zero_part.dim(); ++i)
            pieces.emplace_back(Subspace::span_of({zero_part.basis()[i]}, m),
                                FactorKind::one_dimensional);
        Subspace unital_part = image_subspace(e);
        if (!unital_part.is_zero()) {
            SplitContext ctx{&acts, std::mt19937_64(rng()), layer};
            for (auto &piece : split_module(unital_part, ctx))
                pieces.emplace_back(std::move(piece), FactorKind::irreducible);
        }
        std::sort(pieces.begin(), pieces.end(), [](const auto &a, const auto &b) {
            return Subspace::compare(a.first, b.first) < 0;
        });
        std::vector<Subspace> lifted;
        for (const auto &[pc, kind] : pieces)
            lifted.push_back(lift_through(pc, comp_rows, amb));
        for (std::size_t l = 0; l < pieces.size(); ++l) {
            Subspace member = bot;
            for (std::size_t j = l + 1; j < pieces.size(); ++j)
                member = member.sum(lifted[j]);
            env.chain.push_back(member);
            env.factor_kinds.push_back(pieces[l].second);
        }
        if (!(env.chain.back() == bot))
            throw internal_error("composition chain: refinement misses the layer bottom");
    }
    env.theta = env.chain.size() - 1;
}

Envelope build_envelope(const LinearRep &rep, std::uint64_t seed) {
    Envelope env = generate_envelope(rep);
    auto [j, p] = jacobson_radical(env);
    env.radical = j;
    env.p = p;
    compute_composition_chain(env, seed);
    return env;
}

Subspace annihilator_in_rho(const LinearRep &rep, const Envelope &env, std::size_t k) {
    if (k >= env.theta)
        throw input_error("annihilator_in_rho: chain index out of range");
    std::size_t dv = env.dim_v, amb = dv * dv, dl = rep.dim_l;
    const Subspace &bk = env.chain[k];
    const Subspace &bk1 = env.chain[k + 1];
    if (dl == 0)
        return Subspace(amb);
    std::vector<std::vector<Rat>> rows;
    for (std::size_t bi = 0; bi < bk.dim(); ++bi) {
        RatMatrix bmat = bk.basis_matrix(bi, dv, dv);
        std::vector<std::vector<Rat>> cols;
        for (std::size_t i = 0; i < dl; ++i)
            cols.push_back(bk1.reduce((rep.basis[i] * bmat).to_vector()));
        for (std::size_t t = 0; t < amb; ++t) {
            std::vector<Rat> row(dl);
            for (std::size_t i = 0; i < dl; ++i)
                row[i] = cols[i][t];
            rows.push_back(std::move(row));
        }
    }
    RatMatrix a(rows.size(), dl);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < dl; ++j)
            a.at(i, j) = rows[i][j];
    Subspace ker = solve_linear(a, RatMatrix(a.rows(), 1)).kernel;
    std::vector<std::vector<Rat>> out_rows;
    for (std::size_t i = 0; i < ker.dim(); ++i) {
        const auto &c = ker.basis()[i];
        std::vector<Rat> v(amb, Rat(0));
        for (std::size_t t = 0; t < dl; ++t) {
            if (c[t] == 0)
                continue;
            const auto &b = rep.basis[t].entries();
            for (std::size_t s = 0; s < amb; ++s)
                v[s] += c[t] * b[s];
        }
        out_rows.push_back(std::move(v));
    }
    return Subspace::span_of(out_rows, amb);
}

std::size_t height(const Envelope &env, const RatMatrix &a) {
    if (a.is_zero())
        return env.theta;
    if (!env.span.contains(a.to_vector()))
        throw input_error("height: element is outside the envelope");
    for (std::size_t k = env.theta + 1; k-- > 0;)
        if (env.chain[k].contains(a.to_vector()))
            return k;
    throw internal_error("height: element not contained in B_0");
}

std::vector<Rat> factor_scalars(const Envelope &env, const RatMatrix &a) {
    std::vector<Rat> out;
    std::size_t dv = env.dim_v, amb = dv * dv;
    for (std::size_t k = 0; k < env.theta; ++k) {
        auto comp = env.chain[k].complement_basis_within(env.chain[k + 1]);
        Subspace frame = Subspace::span_of(comp, amb);
        RatMatrix u = RatMatrix::from_vector(comp[0], dv, dv);
        std::vector<Rat> resid = env.chain[k + 1].reduce((a * u).to_vector());
        auto coords = frame.coordinates(resid);
        if (!coords)
            throw internal_error("factor_scalars: action leaves the layer");
        out.push_back((*coords)[0]);
    }
    return out;
}

} // namespace pirep
