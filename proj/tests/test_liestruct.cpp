#include "doctest.h"

#include "pirep/liestruct.hpp"

#include "common.hpp"

using namespace pirep;
using namespace testutil;

namespace {

struct Ctx {
    LinearRep rep;
    Envelope env;
    LeviData levi;
};

Ctx make(const LinearRep &rep) {
    Ctx c{rep, build_envelope(rep, 1), LeviData{}};
    c.levi = levi_decompose(c.rep, c.env);
    return c;
}

} // namespace

TEST_SUITE_BEGIN("liestruct");

TEST_CASE("levi: sl2 natural is semisimple") {
    auto c = make(sl2_natural());
    CHECK(c.levi.g.dim() == 3);
    CHECK(c.levi.r.dim() == 0);
    CHECK(c.levi.s.dim() == 0);
    CHECK(c.levi.l_cap_j.dim() == 0);
    CHECK(c.levi.g == c.rep.span);
}

TEST_CASE("levi: span{E11, E12}") {
    auto c = make(borel2());
    CHECK(c.levi.g.dim() == 0);
    CHECK(c.levi.r == c.rep.span);
    Subspace e12span = Subspace::span_of({unit(2, 0, 1).to_vector()}, 4);
    Subspace e11span = Subspace::span_of({unit(2, 0, 0).to_vector()}, 4);
    CHECK(c.levi.l_cap_j == e12span);
    CHECK(c.levi.s == e11span);
}

TEST_CASE("levi: gl2 has G = sl2 and central S") {
    auto c = make(gl2());
    CHECK(c.levi.g.dim() == 3);
    CHECK(c.levi.r.dim() == 1);
    CHECK(c.levi.r.contains(RatMatrix::identity(2).to_vector()));
    CHECK(c.levi.s == c.levi.r);
    CHECK(c.levi.l_cap_j.dim() == 0);
    // G is the trace-zero part
    CHECK(c.levi.g.contains(unit(2, 0, 1).to_vector()));
    CHECK(c.levi.g.contains(unit(2, 1, 0).to_vector()));
    CHECK(c.levi.g.contains(mat2(1, 0, 0, -1).to_vector()));
}

TEST_CASE("levi dims satisfy the decomposition shape on all bundled examples") {
    for (const auto &rep : {zero_rep(), scalar_rep(), sl2_natural(), sl2_adjoint(), gl2(),
                            borel2(), e12_rep(), heisenberg3()}) {
        auto c = make(rep);
        CHECK(c.levi.g.dim() + c.levi.r.dim() == rep.dim_l);
        CHECK(c.levi.s.dim() + c.levi.l_cap_j.dim() == c.levi.r.dim());
        for (std::size_t i = 0; i < c.levi.g.dim(); ++i)
            for (std::size_t j = 0; j < c.levi.s.dim(); ++j)
                CHECK(c.levi.g.basis_matrix(i, rep.dim_v, rep.dim_v)
                          .commutator_with(c.levi.s.basis_matrix(j, rep.dim_v, rep.dim_v))
                          .is_zero());
    }
}

TEST_CASE("levi: solvable examples have G = 0") {
    for (const auto &rep : {scalar_rep(), borel2(), e12_rep(), heisenberg3()}) {
        auto c = make(rep);
        CHECK(c.levi.g.dim() == 0);
        CHECK(c.levi.r == rep.span);
    }
}

TEST_CASE("wm_split: scalar multiple of the identity is already semisimple") {
    auto c = make(scalar_rep());
    RatMatrix s(1, 1);
    s.at(0, 0) = Rat(7, 2);
    WmSplit w = wm_split(c.env, {s});
    REQUIRE(w.inputs.size() == 1);
    CHECK(w.nilpotent_parts[0].is_zero());
    CHECK(w.semisimple_parts[0] == s);
}

TEST_CASE("wm_split: empty input") {
    auto c = make(borel2());
    WmSplit w = wm_split(c.env, {});
    CHECK(w.inputs.empty());
    CHECK(w.nilpotent_parts.empty());
    CHECK(w.semisimple_parts.empty());
}

TEST_CASE("wm_split on E11 + E12 satisfies the splitting contract") {
    // oracle checks: b lies in J, c is diagonalizable, a = b + c
    auto c = make(borel2());
    RatMatrix a = unit(2, 0, 0) + unit(2, 0, 1);
    WmSplit w = wm_split(c.env, {a});
    REQUIRE(w.inputs.size() == 1);
    const RatMatrix &b = w.nilpotent_parts[0];
    const RatMatrix &cc = w.semisimple_parts[0];
    CHECK(b + cc == a);
    CHECK((b.is_zero() || c.env.radical.contains(b.to_vector())));
    CHECK(is_squarefree_poly(minimal_polynomial(cc)));
}

TEST_CASE("wm_split invariants on every bundled example with S != 0") {
    for (const auto &rep : {scalar_rep(), gl2(), borel2()}) {
        auto c = make(rep);
        REQUIRE(c.levi.s.dim() > 0);
        std::vector<RatMatrix> elems;
        for (std::size_t i = 0; i < c.levi.s.dim(); ++i)
            elems.push_back(c.levi.s.basis_matrix(i, rep.dim_v, rep.dim_v));
        WmSplit w = wm_split(c.env, elems);
        for (std::size_t i = 0; i < elems.size(); ++i) {
            CHECK(w.nilpotent_parts[i] + w.semisimple_parts[i] == elems[i]);
            if (!w.nilpotent_parts[i].is_zero())
                CHECK(c.env.radical.contains(w.nilpotent_parts[i].to_vector()));
            CHECK(is_squarefree_poly(minimal_polynomial(w.semisimple_parts[i])));
            for (std::size_t j = i + 1; j < elems.size(); ++j)
                CHECK(w.semisimple_parts[i] * w.semisimple_parts[j] ==
                      w.semisimple_parts[j] * w.semisimple_parts[i]);
        }
    }
}

TEST_CASE("wm_split handles purely nilpotent elements") {
    auto c = make(e12_rep());
    WmSplit w = wm_split(c.env, {unit(2, 0, 1)});
    CHECK(w.semisimple_parts[0].is_zero());
    CHECK(w.nilpotent_parts[0] == unit(2, 0, 1));
}

TEST_CASE("wm_split on a mixed S-like element of UT2") {
    // 2*E11 + E12: spectrum {2, 0}; semisimple part is a polynomial in the
    // lifted idempotents
    auto c = make(borel2());
    RatMatrix a = unit(2, 0, 0).scaled(Rat(2)) + unit(2, 0, 1);
    WmSplit w = wm_split(c.env, {a});
    CHECK(w.nilpotent_parts[0] + w.semisimple_parts[0] == a);
    if (!w.nilpotent_parts[0].is_zero())
        CHECK(c.env.radical.contains(w.nilpotent_parts[0].to_vector()));
    CHECK(is_squarefree_poly(minimal_polynomial(w.semisimple_parts[0])));
}

TEST_CASE("levi: parabolic with a depth-2 radical and all parts nonzero") {
    // hand-checked structure: G is the trace-zero block, R is spanned by the
    // block identity and the column, S by the block identity
    auto c = make(parabolic3());
    REQUIRE(c.rep.dim_l == 6);
    CHECK(c.levi.g.dim() == 3);
    CHECK(c.levi.r.dim() == 3);
    CHECK(c.levi.s.dim() == 1);
    CHECK(c.levi.l_cap_j.dim() == 2);
    RatMatrix block_id = unit(3, 0, 0) + unit(3, 1, 1);
    CHECK(c.levi.s.contains(block_id.to_vector()));
    CHECK(c.levi.l_cap_j.contains(unit(3, 0, 2).to_vector()));
    CHECK(c.levi.l_cap_j.contains(unit(3, 1, 2).to_vector()));
    CHECK(c.levi.g.contains((unit(3, 0, 0) - unit(3, 1, 1)).to_vector()));
    CHECK(c.levi.g.contains(unit(3, 0, 1).to_vector()));

    // envelope: block + column, radical = the column, squares to zero
    CHECK(c.env.dim_a == 6);
    CHECK(c.env.radical.dim() == 2);
    CHECK(c.env.p == 2);
    std::vector<std::size_t> dims;
    for (std::size_t k = 0; k < c.env.theta; ++k)
        dims.push_back(c.env.chain[k].dim() - c.env.chain[k + 1].dim());
    CHECK(dims == std::vector<std::size_t>{2, 2, 2});

    LemmaReport lr = verify_lemmas(c.rep, c.env, c.levi);
    for (const auto &f : lr.failures)
        CAPTURE(f);
    CHECK(lr.all());

    // splitting of the S basis: the block identity is already idempotent
    WmSplit w = wm_split(c.env, {block_id});
    CHECK(w.nilpotent_parts[0].is_zero());
    CHECK(w.semisimple_parts[0] == block_id);
}

TEST_CASE("verify_lemmas passes on all bundled examples") {
    for (const auto &rep : {sl2_natural(), sl2_adjoint(), gl2(), borel2(), e12_rep(),
                            heisenberg3(), zero_rep(), scalar_rep()}) {
        auto c = make(rep);
        LemmaReport lr = verify_lemmas(c.rep, c.env, c.levi);
        CAPTURE(rep.dim_v);
        for (const auto &f : lr.failures)
            CAPTURE(f);
        CHECK(lr.lr);
        CHECK(lr.rs_shape);
        CHECK(lr.irr_scalar);
        CHECK(lr.ann_gs);
        CHECK(lr.all());
    }
}

TEST_CASE("verify_lemmas reports a failure for a broken Levi datum") {
    auto c = make(borel2());
    LeviData broken = c.levi;
    broken.s = Subspace::span_of({unit(2, 0, 1).to_vector()}, 4); // wrong complement
    LemmaReport lr = verify_lemmas(c.rep, c.env, broken);
    CHECK(!lr.all());
}

TEST_SUITE_END();
