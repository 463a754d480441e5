#include "pirep/linrep.hpp"

namespace pirep {

namespace {

LinearRep finish_rep(const Subspace &span, std::size_t dim_v) {
    LinearRep rep;
    rep.dim_v = dim_v;
    rep.span = span;
    rep.dim_l = span.dim();
    for (std::size_t i = 0; i < span.dim(); ++i) {
        RatMatrix b = span.basis_matrix(i, dim_v, dim_v);
        rep.basis.push_back(b);
        rep.eval_basis.push_back(b.primitive_integer_scaled());
    }
    return rep;
}

} // namespace

LinearRep close_under_bracket(const std::vector<RatMatrix> &generators, std::size_t dim_v) {
    if (dim_v == 0)
        throw input_error("close_under_bracket: dim_v must be positive");
    for (const auto &g : generators)
        if (g.rows() != dim_v || g.cols() != dim_v)
            throw input_error("close_under_bracket: generator is not dim_v x dim_v");

    std::size_t amb = dim_v * dim_v;
    std::vector<std::vector<Rat>> vecs;
    for (const auto &g : generators)
        vecs.push_back(g.to_vector());
    Subspace span = Subspace::span_of(vecs, amb);

    // add commutators until the span stabilizes
    while (true) {
        std::vector<RatMatrix> mats;
        for (std::size_t i = 0; i < span.dim(); ++i)
            mats.push_back(span.basis_matrix(i, dim_v, dim_v));
        std::vector<std::vector<Rat>> add;
        for (std::size_t i = 0; i < mats.size(); ++i)
            for (std::size_t j = i + 1; j < mats.size(); ++j) {
                RatMatrix c = mats[i].commutator_with(mats[j]);
                if (!span.contains(c))
                    add.push_back(c.to_vector());
            }
        if (add.empty())
            break;
        for (std::size_t i = 0; i < span.dim(); ++i)
            add.push_back(span.basis()[i]);
        span = Subspace::span_of(add, amb);
    }
    return finish_rep(span, dim_v);
}

LinearRep rep_from_span(const std::vector<RatMatrix> &spanning, std::size_t dim_v) {
    std::size_t amb = dim_v * dim_v;
    std::vector<std::vector<Rat>> vecs;
    for (const auto &g : spanning) {
        if (g.rows() != dim_v || g.cols() != dim_v)
            throw input_error("rep_from_span: matrix is not dim_v x dim_v");
        vecs.push_back(g.to_vector());
    }
    Subspace span = Subspace::span_of(vecs, amb);
    // validate bracket closure
    for (std::size_t i = 0; i < span.dim(); ++i)
        for (std::size_t j = i + 1; j < span.dim(); ++j) {
            RatMatrix a = span.basis_matrix(i, dim_v, dim_v);
            RatMatrix b = span.basis_matrix(j, dim_v, dim_v);
            if (!span.contains(a.commutator_with(b)))
                throw input_error("rep_from_span: spanning set is not bracket-closed");
        }
    return finish_rep(span, dim_v);
}

} // namespace pirep
