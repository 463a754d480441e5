#include "pirep/exponent.hpp"

#include <deque>
#include <random>
#include <set>
#include <sstream>

#include "pirep/linalg.hpp"

namespace pirep {

namespace {

std::string subspace_key(const Subspace &s) {
    std::ostringstream os;
    os << s.dim() << ":";
    for (const auto &row : s.basis())
        for (const auto &e : row)
            os << e << ",";
    return os.str();
}

/// Projection B_k -> B_{k+1} restricting to the identity on B_{k+1} and
/// commuting with left multiplication by every G-basis element, plus the
/// homogeneous solution space (equivariant maps vanishing on B_{k+1}).
struct ProjectionSolve {
    RatMatrix proj{0, 0};
    Subspace hom{0};
};

ProjectionSolve solve_equivariant_projection(const Envelope &env, const LeviData &levi,
                                             std::size_t k) {
    std::size_t dv = env.dim_v;
    const Subspace &bk = env.chain[k];
    const Subspace &bk1 = env.chain[k + 1];
    std::size_t db = bk.dim(), dw = bk1.dim();
    std::size_t unknowns = dw * db; // pi(B_j) = sum_w P[w][j] W_w
    auto uidx = [&](std::size_t w, std::size_t j) { return w * db + j; };
    std::vector<std::vector<Rat>> rows;
    std::vector<Rat> rhs_flat;
    for (std::size_t i = 0; i < dw; ++i) {
        auto coords = bk.coordinates(bk1.basis()[i]);
        if (!coords)
            throw internal_error("invariant_complement: chain member not nested");
        for (std::size_t w = 0; w < dw; ++w) {
            std::vector<Rat> row(unknowns, Rat(0));
            for (std::size_t j = 0; j < db; ++j)
                row[uidx(w, j)] = (*coords)[j];
            rows.push_back(std::move(row));
            rhs_flat.push_back(w == i ? Rat(1) : Rat(0));
        }
    }
    for (std::size_t gi = 0; gi < levi.g.dim(); ++gi) {
        RatMatrix g = levi.g.basis_matrix(gi, dv, dv);
        std::vector<std::vector<Rat>> gw;
        for (std::size_t w = 0; w < dw; ++w) {
            auto c = bk1.coordinates((g * bk1.basis_matrix(w, dv, dv)).to_vector());
            if (!c)
                throw internal_error("invariant_complement: G does not preserve B_{k+1}");
            gw.push_back(*c);
        }
        for (std::size_t j = 0; j < db; ++j) {
            auto alpha = bk.coordinates((g * bk.basis_matrix(j, dv, dv)).to_vector());
            if (!alpha)
                throw internal_error("invariant_complement: G does not preserve B_k");
            for (std::size_t w = 0; w < dw; ++w) {
                std::vector<Rat> row(unknowns, Rat(0));
                for (std::size_t jp = 0; jp < db; ++jp)
                    row[uidx(w, jp)] += (*alpha)[jp];
                for (std::size_t wp = 0; wp < dw; ++wp)
                    row[uidx(wp, j)] -= gw[wp][w];
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
        throw internal_error("invariant_complement: no equivariant projection exists");
    ProjectionSolve out;
    out.proj = RatMatrix(dw, db);
    for (std::size_t w = 0; w < dw; ++w)
        for (std::size_t j = 0; j < db; ++j)
            out.proj.at(w, j) = sol.particular->at(uidx(w, j), 0);
    out.hom = sol.kernel;
    return out;
}

Subspace kernel_of_projection(const Envelope &env, std::size_t k, const RatMatrix &proj) {
    const Subspace &bk = env.chain[k];
    Subspace ker = solve_linear(proj, RatMatrix(proj.rows(), 1)).kernel;
    std::vector<std::vector<Rat>> rows;
    std::size_t amb = env.dim_v * env.dim_v;
    for (std::size_t i = 0; i < ker.dim(); ++i) {
        const auto &c = ker.basis()[i];
        std::vector<Rat> v(amb, Rat(0));
        for (std::size_t j = 0; j < bk.dim(); ++j)
            if (c[j] != 0)
                for (std::size_t t = 0; t < amb; ++t)
                    v[t] += c[j] * bk.basis()[j][t];
        rows.push_back(std::move(v));
    }
    return Subspace::span_of(rows, amb);
}

/// span{ w * t, w * q * t : q over the algebra basis }
Subspace product_span(const Subspace &w, const Envelope &env, const Subspace &t) {
    std::size_t dv = env.dim_v, amb = dv * dv;
    std::vector<std::vector<Rat>> rows;
    for (std::size_t i = 0; i < w.dim(); ++i) {
        RatMatrix wm = w.basis_matrix(i, dv, dv);
        for (std::size_t j = 0; j < t.dim(); ++j) {
            RatMatrix tm = t.basis_matrix(j, dv, dv);
            rows.push_back((wm * tm).to_vector());
            for (const auto &q : env.basis)
                rows.push_back((wm * q * tm).to_vector());
        }
    }
    return Subspace::span_of(rows, amb);
}

ExponentResult run_search(const LinearRep &rep, const Envelope &env,
                          const std::vector<FactorChoice> &choices,
                          const ExponentOptions &opts) {
    ExponentResult res;
    res.final_ann = rep.span;
    res.d = 0;

    struct State {
        Subspace w;
        Subspace n;
        std::vector<std::size_t> path;
    };
    std::deque<State> queue;
    std::set<std::string> seen;
    auto push_state = [&](Subspace w, Subspace n, std::vector<std::size_t> path) {
        if (w.is_zero())
            return;
        std::string key = subspace_key(w) + "|" + subspace_key(n);
        if (seen.count(key))
            return;
        seen.insert(key);
        queue.push_back(State{std::move(w), std::move(n), std::move(path)});
    };
    for (std::size_t k = 0; k < choices.size(); ++k)
        push_state(choices[k].complement, choices[k].ann, {k});

    while (!queue.empty()) {
        if (seen.size() > opts.state_cap) {
            res.lower_bound_only = true;
            break;
        }
        State cur = std::move(queue.front());
        queue.pop_front();
        ++res.states_visited;
        std::size_t dval = rep.dim_l - cur.n.dim();
        if (dval > res.d) {
            res.d = dval;
            res.witness = cur.path;
            res.final_ann = cur.n;
        }
        for (std::size_t k = 0; k < choices.size(); ++k) {
            Subspace wn = product_span(cur.w, env, choices[k].complement);
            if (wn.is_zero())
                continue;
            Subspace nn = cur.n.intersect(choices[k].ann);
            auto path = cur.path;
            path.push_back(k);
            push_state(std::move(wn), std::move(nn), std::move(path));
        }
    }
    return res;
}

} // namespace

Subspace invariant_complement(const Envelope &env, const LeviData &levi, std::size_t k) {
    if (k >= env.theta)
        throw input_error("invariant_complement: chain index out of range");
    if (levi.g.dim() == 0)
        return Subspace::span_of(env.chain[k].complement_basis_within(env.chain[k + 1]),
                                 env.dim_v * env.dim_v);
    ProjectionSolve sol = solve_equivariant_projection(env, levi, k);
    return kernel_of_projection(env, k, sol.proj);
}

std::vector<FactorChoice> factor_choices(const LinearRep &rep, const Envelope &env,
                                         const LeviData &levi) {
    std::vector<FactorChoice> out;
    for (std::size_t k = 0; k < env.theta; ++k) {
        FactorChoice fc;
        fc.k = k;
        fc.ideal_i = env.chain[k];
        fc.ideal_j = env.chain[k + 1];
        fc.kind = env.factor_kinds[k];
        fc.ann = annihilator_in_rho(rep, env, k);
        if (levi.g.dim() == 0) {
            fc.complement = Subspace::span_of(
                env.chain[k].complement_basis_within(env.chain[k + 1]), env.dim_v * env.dim_v);
            fc.hom_dim = fc.complement.dim() * env.chain[k + 1].dim();
        } else {
            ProjectionSolve sol = solve_equivariant_projection(env, levi, k);
            fc.complement = kernel_of_projection(env, k, sol.proj);
            fc.hom_dim = sol.hom.dim();
        }
        if (fc.complement.dim() + env.chain[k + 1].dim() != env.chain[k].dim() ||
            !fc.complement.intersect(env.chain[k + 1]).is_zero())
            throw internal_error("factor_choices: complement does not split the factor");
        out.push_back(std::move(fc));
    }
    return out;
}

bool condition2_reachable(const Envelope &env, const std::vector<FactorChoice> &choices) {
    if (choices.empty())
        throw input_error("condition2_reachable: empty factor sequence");
    Subspace w = choices[0].complement;
    for (std::size_t j = 1; j < choices.size() && !w.is_zero(); ++j)
        w = product_span(w, env, choices[j].complement);
    return !w.is_zero();
}

ExponentResult pi_exponent(const LinearRep &rep, const Envelope &env, const LeviData &levi,
                           const ExponentOptions &opts) {
    std::vector<FactorChoice> choices = factor_choices(rep, env, levi);
    ExponentResult res = run_search(rep, env, choices, opts);

    if (opts.check_alternative_complements && !res.lower_bound_only) {
        // the complement is canonical but not unique; when equivariant
        // deformations into B_{k+1} exist, retry with random alternatives and
        // flag any disagreement of the resulting d
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<long> coef(-3, 3);
        for (std::size_t k = 0; k < choices.size(); ++k) {
            if (choices[k].hom_dim == 0)
                continue;
            std::size_t dv = env.dim_v, amb = dv * dv;
            const Subspace &bk1 = env.chain[k + 1];
            for (int trial = 0; trial < 3; ++trial) {
                std::vector<std::vector<Rat>> rows;
                if (levi.g.dim() == 0) {
                    for (std::size_t i = 0; i < choices[k].complement.dim(); ++i) {
                        std::vector<Rat> v = choices[k].complement.basis()[i];
                        for (std::size_t j = 0; j < bk1.dim(); ++j) {
                            long c = coef(rng);
                            if (c == 0)
                                continue;
                            for (std::size_t t = 0; t < amb; ++t)
                                v[t] += Rat(c) * bk1.basis()[j][t];
                        }
                        rows.push_back(std::move(v));
                    }
                } else {
                    ProjectionSolve sol = solve_equivariant_projection(env, levi, k);
                    RatMatrix proj = sol.proj;
                    for (std::size_t h = 0; h < sol.hom.dim(); ++h) {
                        long c = coef(rng);
                        if (c == 0)
                            continue;
                        const auto &delta = sol.hom.basis()[h];
                        for (std::size_t w = 0; w < proj.rows(); ++w)
                            for (std::size_t j = 0; j < proj.cols(); ++j)
                                proj.at(w, j) += Rat(c) * delta[w * proj.cols() + j];
                    }
                    Subspace alt = kernel_of_projection(env, k, proj);
                    for (std::size_t i = 0; i < alt.dim(); ++i)
                        rows.push_back(alt.basis()[i]);
                }
                if (rows.empty())
                    continue;
                Subspace alt = Subspace::span_of(rows, amb);
                if (alt.dim() != choices[k].complement.dim() || !alt.intersect(bk1).is_zero())
                    continue;
                std::vector<FactorChoice> alt_choices = choices;
                alt_choices[k].complement = alt;
                ExponentResult alt_res = run_search(rep, env, alt_choices, opts);
                if (alt_res.d != res.d)
                    res.complement_disagreement = true;
            }
        }
    }
    return res;
}

} // namespace pirep
