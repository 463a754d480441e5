#include "pirep/liestruct.hpp"

#include <algorithm>

#include "pirep/linalg.hpp"

namespace pirep {

namespace {

Subspace bracket_span(const Subspace &a, const Subspace &b, std::size_t dv) {
    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            rows.push_back(
                a.basis_matrix(i, dv, dv).commutator_with(b.basis_matrix(j, dv, dv)).to_vector());
    return Subspace::span_of(rows, dv * dv);
}

/// Solvable radical via the trace form against the derived subalgebra (valid
/// for matrix Lie algebras in characteristic 0).
Subspace trace_form_lie_radical(const Subspace &lie, std::size_t dv) {
    std::size_t amb = dv * dv, d = lie.dim();
    if (d == 0)
        return Subspace(amb);
    Subspace derived = bracket_span(lie, lie, dv);
    if (derived.is_zero())
        return lie; // abelian: everything is radical
    RatMatrix cond(derived.dim(), d);
    for (std::size_t y = 0; y < derived.dim(); ++y)
        for (std::size_t i = 0; i < d; ++i)
            cond.at(y, i) = (lie.basis_matrix(i, dv, dv) * derived.basis_matrix(y, dv, dv)).trace();
    Subspace ker = solve_linear(cond, RatMatrix(cond.rows(), 1)).kernel;
    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 0; i < ker.dim(); ++i) {
        const auto &c = ker.basis()[i];
        std::vector<Rat> v(amb, Rat(0));
        for (std::size_t k = 0; k < d; ++k)
            if (c[k] != 0)
                for (std::size_t t = 0; t < amb; ++t)
                    v[t] += c[k] * lie.basis()[k][t];
        rows.push_back(std::move(v));
    }
    return Subspace::span_of(rows, amb);
}

/// One lifting stage: from a subalgebra M with radical N produce a subalgebra
/// M' with M' + N = M and M' ^ N = [N, N], correcting a vector-space
/// complement by a map psi: complement -> N solved for modulo [N, N].
Subspace levi_stage(const Subspace &m, const Subspace &n, std::size_t dv) {
    std::size_t amb = dv * dv;
    Subspace nprime = bracket_span(n, n, dv);
    auto comp_rows = m.complement_basis_within(n);
    std::size_t nc = comp_rows.size(), nn = n.dim();
    Subspace cframe = Subspace::span_of(comp_rows, amb);
    std::vector<RatMatrix> cmats, nmats;
    for (const auto &r : comp_rows)
        cmats.push_back(RatMatrix::from_vector(r, dv, dv));
    for (std::size_t i = 0; i < nn; ++i)
        nmats.push_back(n.basis_matrix(i, dv, dv));

    std::size_t unknowns = nn * nc; // psi(C_j) = sum_k Psi[k][j] N_k
    auto uidx = [&](std::size_t k, std::size_t j) { return k * nc + j; };

    std::vector<std::vector<RatMatrix>> cn(nc); // [C_i, N_k]
    for (std::size_t i = 0; i < nc; ++i)
        for (std::size_t k = 0; k < nn; ++k)
            cn[i].push_back(cmats[i].commutator_with(nmats[k]));

    std::vector<std::vector<Rat>> sys_rows;
    std::vector<Rat> sys_rhs;
    for (std::size_t i = 0; i < nc; ++i)
        for (std::size_t j = i + 1; j < nc; ++j) {
            RatMatrix br = cmats[i].commutator_with(cmats[j]);
            std::vector<Rat> brv = br.to_vector();
            std::vector<Rat> cpart = n.reduce(brv);
            auto ccoords = cframe.coordinates(cpart);
            if (!ccoords)
                throw internal_error("levi_stage: bracket escapes the subalgebra");
            std::vector<Rat> npart(amb);
            for (std::size_t t = 0; t < amb; ++t)
                npart[t] = brv[t] - cpart[t];

            // ambient coefficient vector per unknown, then reduce mod [N,N]
            std::vector<std::vector<Rat>> coef(unknowns);
            auto add_to = [&](std::size_t u, const std::vector<Rat> &vec, const Rat &scale) {
                if (coef[u].empty())
                    coef[u].assign(amb, Rat(0));
                for (std::size_t t = 0; t < amb; ++t)
                    if (vec[t] != 0)
                        coef[u][t] += scale * vec[t];
            };
            for (std::size_t k = 0; k < nn; ++k) {
                add_to(uidx(k, j), cn[i][k].to_vector(), Rat(1));
                add_to(uidx(k, i), cn[j][k].to_vector(), Rat(-1));
            }
            for (std::size_t t = 0; t < nc; ++t) {
                if ((*ccoords)[t] == 0)
                    continue;
                for (std::size_t k = 0; k < nn; ++k)
                    add_to(uidx(k, t), nmats[k].to_vector(), -(*ccoords)[t]);
            }
            std::vector<Rat> rhs_red = nprime.reduce(npart);
            std::vector<std::vector<Rat>> coef_red(unknowns);
            for (std::size_t u = 0; u < unknowns; ++u)
                coef_red[u] =
                    coef[u].empty() ? std::vector<Rat>(amb, Rat(0)) : nprime.reduce(coef[u]);
            for (std::size_t s = 0; s < amb; ++s) {
                std::vector<Rat> row(unknowns, Rat(0));
                bool nonzero = false;
                for (std::size_t u = 0; u < unknowns; ++u) {
                    row[u] = coef_red[u][s];
                    if (row[u] != 0)
                        nonzero = true;
                }
                if (nonzero || rhs_red[s] != 0) {
                    sys_rows.push_back(std::move(row));
                    sys_rhs.push_back(-rhs_red[s]);
                }
            }
        }

    RatMatrix a(sys_rows.size(), unknowns), rhs(sys_rows.size(), 1);
    for (std::size_t i = 0; i < sys_rows.size(); ++i) {
        for (std::size_t u = 0; u < unknowns; ++u)
            a.at(i, u) = sys_rows[i][u];
        rhs.at(i, 0) = sys_rhs[i];
    }
    auto sol = solve_linear(a, rhs);
    if (!sol.particular)
        throw internal_error("levi_stage: correction system is inconsistent");

    std::vector<std::vector<Rat>> new_rows;
    for (std::size_t j = 0; j < nc; ++j) {
        std::vector<Rat> v = comp_rows[j];
        for (std::size_t k = 0; k < nn; ++k) {
            const Rat &coefv = sol.particular->at(uidx(k, j), 0);
            if (coefv == 0)
                continue;
            for (std::size_t t = 0; t < amb; ++t)
                v[t] += coefv * n.basis()[k][t];
        }
        new_rows.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < nprime.dim(); ++i)
        new_rows.push_back(nprime.basis()[i]);
    return Subspace::span_of(new_rows, amb);
}

std::vector<RatMatrix> basis_mats(const Subspace &s, std::size_t dv) {
    std::vector<RatMatrix> out;
    for (std::size_t i = 0; i < s.dim(); ++i)
        out.push_back(s.basis_matrix(i, dv, dv));
    return out;
}

/// Annihilator of the k-th chain factor inside an arbitrary subspace of A.
Subspace annihilator_in(const Subspace &space, const Envelope &env, std::size_t k) {
    std::size_t dv = env.dim_v, amb = dv * dv, d = space.dim();
    if (d == 0)
        return Subspace(amb);
    const Subspace &bk = env.chain[k];
    const Subspace &bk1 = env.chain[k + 1];
    std::vector<std::vector<Rat>> rows;
    for (std::size_t bi = 0; bi < bk.dim(); ++bi) {
        RatMatrix bmat = bk.basis_matrix(bi, dv, dv);
        std::vector<std::vector<Rat>> cols;
        for (std::size_t i = 0; i < d; ++i)
            cols.push_back(bk1.reduce((space.basis_matrix(i, dv, dv) * bmat).to_vector()));
        for (std::size_t t = 0; t < amb; ++t) {
            std::vector<Rat> row(d);
            for (std::size_t i = 0; i < d; ++i)
                row[i] = cols[i][t];
            rows.push_back(std::move(row));
        }
    }
    RatMatrix a(rows.size(), d);
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < d; ++j)
            a.at(i, j) = rows[i][j];
    Subspace ker = solve_linear(a, RatMatrix(a.rows(), 1)).kernel;
    std::vector<std::vector<Rat>> out_rows;
    for (std::size_t i = 0; i < ker.dim(); ++i) {
        const auto &c = ker.basis()[i];
        std::vector<Rat> v(amb, Rat(0));
        for (std::size_t t = 0; t < d; ++t)
            if (c[t] != 0)
                for (std::size_t s = 0; s < amb; ++s)
                    v[s] += c[t] * space.basis()[t][s];
        out_rows.push_back(std::move(v));
    }
    return Subspace::span_of(out_rows, amb);
}

bool radical_kills_factor(const Envelope &env, std::size_t k) {
    std::size_t dv = env.dim_v;
    for (std::size_t j = 0; j < env.radical.dim(); ++j)
        for (std::size_t b = 0; b < env.chain[k].dim(); ++b) {
            RatMatrix prod =
                env.radical.basis_matrix(j, dv, dv) * env.chain[k].basis_matrix(b, dv, dv);
            if (!env.chain[k + 1].contains(prod.to_vector()))
                return false;
        }
    return true;
}

} // namespace

LeviData levi_decompose(const LinearRep &rep, const Envelope &env) {
    std::size_t dv = rep.dim_v, amb = dv * dv;
    LeviData out{Subspace(amb), Subspace(amb), Subspace(amb), Subspace(amb)};
    out.r = trace_form_lie_radical(rep.span, dv);

    // Levi subalgebra by lifting through the derived series of the radical:
    // the defect rad(M) = M ^ R drops to [N, N] at every stage
    Subspace m = rep.span;
    std::size_t guard = out.r.dim() + 2;
    while (true) {
        Subspace n = m.intersect(out.r);
        if (n.is_zero())
            break;
        if (guard-- == 0)
            throw internal_error("levi_decompose: lifting did not terminate");
        m = levi_stage(m, n, dv);
    }
    out.g = m;

    out.l_cap_j = rep.span.intersect(env.radical);

    // S: kernel of a G-equivariant projection R -> rho(L)^J(A)
    std::size_t dr = out.r.dim(), dlj = out.l_cap_j.dim();
    if (dr == 0) {
        out.s = Subspace(amb);
    } else if (dlj == 0) {
        out.s = out.r;
    } else {
        auto gmats = basis_mats(out.g, dv);
        auto rmats = basis_mats(out.r, dv);
        auto ljmats = basis_mats(out.l_cap_j, dv);
        std::size_t unknowns = dlj * dr; // pi(R_j) = sum_k P[k][j] LJ_k
        auto uidx = [&](std::size_t k, std::size_t j) { return k * dr + j; };
        std::vector<std::vector<Rat>> rows;
        std::vector<Rat> rhs_flat;
        for (std::size_t i = 0; i < dlj; ++i) { // pi restricted to LJ is id
            auto coords = out.r.coordinates(out.l_cap_j.basis()[i]);
            if (!coords)
                throw internal_error("levi_decompose: rho(L)^J(A) not inside R");
            for (std::size_t k = 0; k < dlj; ++k) {
                std::vector<Rat> row(unknowns, Rat(0));
                for (std::size_t j = 0; j < dr; ++j)
                    row[uidx(k, j)] = (*coords)[j];
                rows.push_back(std::move(row));
                rhs_flat.push_back(k == i ? Rat(1) : Rat(0));
            }
        }
        for (const auto &g : gmats) { // pi commutes with ad g
            std::vector<std::vector<Rat>> adlj;
            for (std::size_t k = 0; k < dlj; ++k) {
                auto c = out.l_cap_j.coordinates(g.commutator_with(ljmats[k]).to_vector());
                if (!c)
                    throw internal_error("levi_decompose: [G, rho(L)^J(A)] escapes");
                adlj.push_back(*c);
            }
            for (std::size_t j = 0; j < dr; ++j) {
                auto alpha = out.r.coordinates(g.commutator_with(rmats[j]).to_vector());
                if (!alpha)
                    throw internal_error("levi_decompose: [G, R] escapes R");
                for (std::size_t k = 0; k < dlj; ++k) {
                    std::vector<Rat> row(unknowns, Rat(0));
                    for (std::size_t jp = 0; jp < dr; ++jp)
                        row[uidx(k, jp)] += (*alpha)[jp];
                    for (std::size_t kp = 0; kp < dlj; ++kp)
                        row[uidx(kp, j)] -= adlj[kp][k];
                    rows.push_back(std::move(row));
                    rhs_flat.push_back(Rat(0));
                }
            }
        }
        RatMatrix a(rows.size(), unknowns), rhs(rows.size(), 1);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t u = 0; u < unknowns; ++u)
                a.at(i, u) = rows[i][u];
            rhs.at(i, 0) = rhs_flat[i];
        }
        auto sol = solve_linear(a, rhs);
        if (!sol.particular)
            throw internal_error("levi_decompose: no equivariant projection onto rho(L)^J(A)");
        RatMatrix proj(dlj, dr);
        for (std::size_t k = 0; k < dlj; ++k)
            for (std::size_t j = 0; j < dr; ++j)
                proj.at(k, j) = sol.particular->at(uidx(k, j), 0);
        Subspace ker = solve_linear(proj, RatMatrix(dlj, 1)).kernel;
        std::vector<std::vector<Rat>> srows;
        for (std::size_t i = 0; i < ker.dim(); ++i) {
            const auto &c = ker.basis()[i];
            std::vector<Rat> v(amb, Rat(0));
            for (std::size_t j = 0; j < dr; ++j)
                if (c[j] != 0)
                    for (std::size_t t = 0; t < amb; ++t)
                        v[t] += c[j] * out.r.basis()[j][t];
            srows.push_back(std::move(v));
        }
        out.s = Subspace::span_of(srows, amb);
    }

    auto fail = [](const std::string &msg) { throw internal_error("levi_decompose: " + msg); };
    if (out.g.sum(out.r).dim() != rep.dim_l || !out.g.intersect(out.r).is_zero())
        fail("G (+) R does not reconstruct rho(L)");
    for (std::size_t i = 0; i < out.g.dim(); ++i)
        for (std::size_t j = i + 1; j < out.g.dim(); ++j)
            if (!out.g.contains(out.g.basis_matrix(i, dv, dv)
                                    .commutator_with(out.g.basis_matrix(j, dv, dv))
                                    .to_vector()))
                fail("computed G is not bracket-closed");
    if (out.s.sum(out.l_cap_j).dim() != out.r.dim() || !out.s.intersect(out.l_cap_j).is_zero())
        fail("R is not S (+) rho(L)^J(A)");
    for (std::size_t i = 0; i < out.g.dim(); ++i)
        for (std::size_t j = 0; j < out.s.dim(); ++j)
            if (!out.g.basis_matrix(i, dv, dv)
                     .commutator_with(out.s.basis_matrix(j, dv, dv))
                     .is_zero())
                fail("[G, S] != 0");
    return out;
}

WmSplit wm_split(const Envelope &env, const std::vector<RatMatrix> &elements) {
    WmSplit out;
    if (elements.empty())
        return out;
    std::size_t dv = env.dim_v, amb = dv * dv;
    for (const auto &a : elements)
        if (a.rows() != dv || a.cols() != dv ||
            (!a.is_zero() && !env.span.contains(a.to_vector())))
            throw input_error("wm_split: element is outside the envelope");
    out.inputs = elements;

    std::vector<RatMatrix> a1 = closure_under_product(elements, dv);
    Subspace a1span = a1.empty() ? Subspace(amb) : Subspace::span_of_matrices(a1);
    Subspace j1 = trace_form_radical(a1, dv);

    auto comp = a1span.complement_basis_within(j1);
    std::size_t q = comp.size();
    if (q == 0) {
        // nilpotent subalgebra: semisimple parts vanish
        for (const auto &a : elements) {
            if (!a.is_zero() && !env.radical.contains(a.to_vector()))
                throw internal_error("wm_split: nilpotent part escapes J(A)");
            out.nilpotent_parts.push_back(a);
            out.semisimple_parts.push_back(RatMatrix(dv, dv));
        }
        return out;
    }
    Subspace qframe = Subspace::span_of(comp, amb);
    auto qproj = [&](const RatMatrix &x) {
        auto c = qframe.coordinates(j1.reduce(x.to_vector()));
        if (!c)
            throw internal_error("wm_split: projection to the quotient failed");
        return *c;
    };
    auto qlift = [&](const std::vector<Rat> &v) {
        RatMatrix m(dv, dv);
        for (std::size_t k = 0; k < q; ++k)
            if (v[k] != 0)
                m = m + RatMatrix::from_vector(comp[k], dv, dv).scaled(v[k]);
        return m;
    };
    std::vector<std::vector<std::vector<Rat>>> mul(q, std::vector<std::vector<Rat>>(q));
    for (std::size_t i = 0; i < q; ++i)
        for (std::size_t j = 0; j < q; ++j)
            mul[i][j] = qproj(RatMatrix::from_vector(comp[i], dv, dv) *
                              RatMatrix::from_vector(comp[j], dv, dv));
    auto qmul = [&](const std::vector<Rat> &x, const std::vector<Rat> &y) {
        std::vector<Rat> r(q, Rat(0));
        for (std::size_t i = 0; i < q; ++i) {
            if (x[i] == 0)
                continue;
            for (std::size_t j = 0; j < q; ++j) {
                if (y[j] == 0)
                    continue;
                Rat f = x[i] * y[j];
                for (std::size_t k = 0; k < q; ++k)
                    if (mul[i][j][k] != 0)
                        r[k] += f * mul[i][j][k];
            }
        }
        return r;
    };
    auto is_zero_vec = [](const std::vector<Rat> &v) {
        return std::all_of(v.begin(), v.end(), [](const Rat &e) { return e == 0; });
    };

    // unit of the (semisimple commutative) quotient
    std::vector<Rat> unitbar(q);
    {
        std::vector<std::vector<Rat>> rows;
        std::vector<Rat> rhs_flat;
        for (std::size_t j = 0; j < q; ++j)
            for (std::size_t k = 0; k < q; ++k) {
                std::vector<Rat> row(q, Rat(0));
                for (std::size_t i = 0; i < q; ++i)
                    row[i] = mul[i][j][k];
                rows.push_back(std::move(row));
                rhs_flat.push_back(k == j ? Rat(1) : Rat(0));
            }
        RatMatrix a(rows.size(), q), rhs(rows.size(), 1);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            for (std::size_t u = 0; u < q; ++u)
                a.at(i, u) = rows[i][u];
            rhs.at(i, 0) = rhs_flat[i];
        }
        auto sol = solve_linear(a, rhs);
        if (!sol.particular)
            throw internal_error("wm_split: quotient has no unit");
        for (std::size_t i = 0; i < q; ++i)
            unitbar[i] = sol.particular->at(i, 0);
    }

    // refine the idempotent blocks of the quotient along each element
    std::vector<std::vector<Rat>> blocks{unitbar};
    std::vector<std::vector<Rat>> abars;
    for (const auto &a : elements)
        abars.push_back(qproj(a));
    for (std::size_t ei = 0; ei < elements.size(); ++ei) {
        std::vector<Rat> cands = factor_scalars(env, elements[ei]);
        cands.push_back(Rat(0));
        std::sort(cands.begin(), cands.end());
        cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

        std::vector<std::vector<Rat>> next;
        for (const auto &f : blocks) {
            std::vector<Rat> v = qmul(f, abars[ei]);
            // minimal polynomial of v inside f*Abar, f playing the unit
            std::vector<std::vector<Rat>> powers{f};
            std::vector<Rat> mu;
            while (true) {
                std::vector<Rat> nxt = qmul(powers.back(), v);
                Subspace sp = Subspace::span_of(powers, q);
                if (sp.contains(nxt)) {
                    std::size_t deg = powers.size();
                    const auto &piv = sp.pivots();
                    std::vector<std::vector<Rat>> sys(deg, std::vector<Rat>(deg + 1, Rat(0)));
                    for (std::size_t r = 0; r < deg; ++r) {
                        for (std::size_t c = 0; c < deg; ++c)
                            sys[r][c] = powers[c][piv[r]];
                        sys[r][deg] = nxt[piv[r]];
                    }
                    for (std::size_t c = 0, r = 0; c < deg && r < deg; ++c) {
                        std::size_t p = r;
                        while (p < deg && sys[p][c] == 0)
                            ++p;
                        if (p == deg)
                            continue;
                        std::swap(sys[p], sys[r]);
                        Rat inv = Rat(1) / sys[r][c];
                        for (std::size_t t = c; t <= deg; ++t)
                            sys[r][t] *= inv;
                        for (std::size_t i2 = 0; i2 < deg; ++i2) {
                            if (i2 == r || sys[i2][c] == 0)
                                continue;
                            Rat fax = sys[i2][c];
                            for (std::size_t t = c; t <= deg; ++t)
                                sys[i2][t] -= fax * sys[r][t];
                        }
                        ++r;
                    }
                    mu.assign(deg + 1, Rat(0));
                    for (std::size_t c = 0; c < deg; ++c)
                        mu[c] = -sys[c][deg];
                    mu[deg] = 1;
                    break;
                }
                powers.push_back(nxt);
                if (powers.size() > q + 1)
                    throw internal_error("wm_split: no minimal polynomial found");
            }
            auto mu_at = [&](const Rat &x) {
                Rat acc = 0;
                for (std::size_t i = mu.size(); i-- > 0;)
                    acc = acc * x + mu[i];
                return acc;
            };
            std::vector<Rat> roots;
            for (const auto &lam : cands)
                if (mu_at(lam) == 0)
                    roots.push_back(lam);
            if (roots.size() + 1 != mu.size())
                throw input_error("wm_split: element does not act by rational scalars on the "
                                  "composition factors (expected a member of S)");
            if (roots.size() <= 1) {
                next.push_back(f);
                continue;
            }
            for (std::size_t rj = 0; rj < roots.size(); ++rj) {
                std::vector<Rat> proj = f;
                for (std::size_t rl = 0; rl < roots.size(); ++rl) {
                    if (rl == rj)
                        continue;
                    std::vector<Rat> shifted(q);
                    for (std::size_t t = 0; t < q; ++t)
                        shifted[t] = v[t] - roots[rl] * f[t];
                    proj = qmul(proj, shifted);
                    Rat scale = Rat(1) / (roots[rj] - roots[rl]);
                    for (auto &e : proj)
                        e *= scale;
                }
                if (is_zero_vec(proj))
                    throw internal_error("wm_split: vanishing spectral projector");
                if (!(qmul(proj, proj) == proj))
                    throw internal_error("wm_split: spectral projector is not idempotent");
                next.push_back(std::move(proj));
            }
        }
        blocks = std::move(next);
    }

    // sequentially lift the orthogonal idempotents, e <- 3e^2 - 2e^3
    std::vector<RatMatrix> lifted;
    for (const auto &ebar : blocks) {
        RatMatrix u = qlift(ebar);
        for (const auto &e : lifted)
            u = u - e * u - u * e + e * u * e;
        bool converged = false;
        for (std::size_t it = 0; it <= env.dim_a + 2; ++it) {
            if (u * u == u) {
                converged = true;
                break;
            }
            RatMatrix u2 = u * u;
            u = u2.scaled(Rat(3)) - (u2 * u).scaled(Rat(2));
        }
        if (!converged)
            throw internal_error("wm_split: idempotent lifting did not converge");
        for (const auto &e : lifted)
            if (!(e * u).is_zero() || !(u * e).is_zero())
                throw internal_error("wm_split: lifted idempotents are not orthogonal");
        if (!(qproj(u) == ebar))
            throw internal_error("wm_split: lifted idempotent has the wrong image");
        lifted.push_back(std::move(u));
    }

    // c_i from the block scalars of a_i, b_i as the remainder
    for (std::size_t ei = 0; ei < elements.size(); ++ei) {
        RatMatrix c(dv, dv);
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            std::vector<Rat> prod = qmul(abars[ei], blocks[k]);
            Rat lambda = 0;
            for (std::size_t t = 0; t < q; ++t)
                if (blocks[k][t] != 0) {
                    lambda = prod[t] / blocks[k][t];
                    break;
                }
            for (std::size_t t = 0; t < q; ++t)
                if (!(prod[t] == lambda * blocks[k][t]))
                    throw internal_error("wm_split: element is not scalar on a block");
            if (lambda != 0)
                c = c + lifted[k].scaled(lambda);
        }
        RatMatrix b = elements[ei] - c;
        if (!b.is_zero() && !env.radical.contains(b.to_vector()))
            throw internal_error("wm_split: nilpotent part escapes J(A)");
        if (!is_squarefree_poly(minimal_polynomial(c)))
            throw internal_error("wm_split: semisimple part is not diagonalizable");
        out.nilpotent_parts.push_back(std::move(b));
        out.semisimple_parts.push_back(std::move(c));
    }
    for (std::size_t i = 0; i < out.semisimple_parts.size(); ++i)
        for (std::size_t j = i + 1; j < out.semisimple_parts.size(); ++j)
            if (!(out.semisimple_parts[i] * out.semisimple_parts[j] ==
                  out.semisimple_parts[j] * out.semisimple_parts[i]))
                throw internal_error("wm_split: semisimple parts do not commute");
    return out;
}

LemmaReport verify_lemmas(const LinearRep &rep, const Envelope &env, const LeviData &levi) {
    LemmaReport report;
    std::size_t dv = rep.dim_v;

    // [rho(L), R] inside J(A)
    for (std::size_t i = 0; i < rep.dim_l; ++i)
        for (std::size_t j = 0; j < levi.r.dim(); ++j) {
            RatMatrix c = rep.basis[i].commutator_with(levi.r.basis_matrix(j, dv, dv));
            if (!c.is_zero() && !env.radical.contains(c.to_vector())) {
                report.lr = false;
                report.failures.push_back("[rho(L), R] escapes J(A) at basis pair " +
                                          std::to_string(i) + "," + std::to_string(j));
            }
        }

    // decomposition shape and [G, S] = 0
    if (levi.g.sum(levi.r).dim() != rep.dim_l || !levi.g.intersect(levi.r).is_zero() ||
        levi.s.sum(levi.l_cap_j).dim() != levi.r.dim() ||
        !levi.s.intersect(levi.l_cap_j).is_zero()) {
        report.rs_shape = false;
        report.failures.push_back("direct sum shape of G, R, S, rho(L)^J(A) is broken");
    }
    for (std::size_t i = 0; i < levi.g.dim(); ++i)
        for (std::size_t j = 0; j < levi.s.dim(); ++j)
            if (!levi.g.basis_matrix(i, dv, dv)
                     .commutator_with(levi.s.basis_matrix(j, dv, dv))
                     .is_zero()) {
                report.rs_shape = false;
                report.failures.push_back("[G, S] != 0");
            }

    // on radical-killed factors: S acts by scalars, and the annihilator in
    // rho(L) decomposes through G, S and rho(L)^J(A)
    for (std::size_t k = 0; k < env.theta; ++k) {
        if (!radical_kills_factor(env, k))
            continue;
        auto comp = env.chain[k].complement_basis_within(env.chain[k + 1]);
        Subspace frame = Subspace::span_of(comp, dv * dv);
        std::size_t m = comp.size();
        for (std::size_t si = 0; si < levi.s.dim(); ++si) {
            RatMatrix smat = levi.s.basis_matrix(si, dv, dv);
            RatMatrix act(m, m);
            bool ok = true;
            for (std::size_t j = 0; j < m; ++j) {
                auto c = frame.coordinates(env.chain[k + 1].reduce(
                    (smat * RatMatrix::from_vector(comp[j], dv, dv)).to_vector()));
                if (!c) {
                    ok = false;
                    break;
                }
                for (std::size_t i2 = 0; i2 < m; ++i2)
                    act.at(i2, j) = (*c)[i2];
            }
            bool scalar = ok;
            for (std::size_t i2 = 0; i2 < m && scalar; ++i2)
                for (std::size_t j2 = 0; j2 < m && scalar; ++j2) {
                    if (i2 == j2 && act.at(i2, j2) != act.at(0, 0))
                        scalar = false;
                    if (i2 != j2 && act.at(i2, j2) != 0)
                        scalar = false;
                }
            if (!scalar) {
                report.irr_scalar = false;
                report.failures.push_back("S element " + std::to_string(si) +
                                          " is not scalar on factor " + std::to_string(k));
            }
        }
        Subspace ann_rho = annihilator_in(rep.span, env, k);
        Subspace ann_g = annihilator_in(levi.g, env, k);
        Subspace ann_s = annihilator_in(levi.s, env, k);
        Subspace rhs = ann_g.sum(ann_s).sum(levi.l_cap_j);
        if (!(ann_rho == rhs)) {
            report.ann_gs = false;
            report.failures.push_back("annihilator decomposition fails on factor " +
                                      std::to_string(k));
        }
    }
    return report;
}

} // namespace pirep
