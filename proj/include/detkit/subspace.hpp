#pragma once

#include <string>
#include <utility>
#include <vector>

#include "detkit/determinant.hpp"
#include "detkit/elimination.hpp"
#include "detkit/errors.hpp"
#include "detkit/matrix.hpp"

namespace detkit {

namespace detail {

template <class S>
int rank_of_vectors(const std::vector<Vector<S>>& rows) {
    if (rows.empty())
        return 0;
    return static_cast<int>(forward_echelon(rows).pivots.size());
}

} // namespace detail

// A k-dimensional subspace W of F^n, presented as an independent spanning
// tuple plus the standard basis vectors that complete it to a basis of F^n.
template <class S>
struct SubspaceBasis {
    int ambient_dim;
    VecTuple<S> span_vectors; // arity k, linearly independent
    VecTuple<S> extension;    // arity n-k, standard basis vectors

    SubspaceBasis(int ambient, VecTuple<S> span, VecTuple<S> ext)
        : ambient_dim(ambient), span_vectors(std::move(span)), extension(std::move(ext)) {
        if (span_vectors.dim() != ambient_dim || extension.dim() != ambient_dim)
            throw DimensionMismatchError("subspace basis vectors not in F^" + std::to_string(ambient_dim));
        if (span_vectors.arity() + extension.arity() != ambient_dim)
            throw DimensionMismatchError("subspace basis does not have " + std::to_string(ambient_dim) +
                                         " vectors in total");
        std::vector<Vector<S>> all = span_vectors.vectors();
        for (const Vector<S>& v : extension.vectors())
            all.push_back(v);
        if (det_elimination(Matrix<S>(std::move(all))).is_zero())
            throw DependentInputError("span plus extension is not a basis");
    }
};

// Greedily appends standard basis vectors in index order, keeping each one
// that enlarges the span, until the combined tuple is a basis of F^n.
template <ScalarField F>
SubspaceBasis<typename F::Element> extend_to_basis(const F& field,
                                                   const VecTuple<typename F::Element>& span_vectors) {
    using S = typename F::Element;
    const int n = span_vectors.dim();
    std::vector<Vector<S>> current = span_vectors.vectors();
    int rank = detail::rank_of_vectors(current);
    if (rank != span_vectors.arity())
        throw DependentInputError("span vectors are linearly dependent (rank " + std::to_string(rank) +
                                  " of " + std::to_string(span_vectors.arity()) + ")");
    std::vector<Vector<S>> extension;
    for (int j = 0; j < n && rank < n; ++j) {
        Vector<S> e = basis_vector(field, n, j);
        current.push_back(e);
        if (detail::rank_of_vectors(current) > rank) {
            ++rank;
            extension.push_back(std::move(e));
        } else {
            current.pop_back();
        }
    }
    return SubspaceBasis<S>(n, span_vectors, VecTuple<S>(n, std::move(extension)));
}

// D'(w_1..w_k) := D(w_1, ..., w_k, e_{k+1}, ..., e_n) — the restriction of the
// ambient determinant to W. Each w_i must lie in span(W).
template <class S>
S subspace_determinant(const SubspaceBasis<S>& basis, const VecTuple<S>& w) {
    if (w.dim() != basis.ambient_dim)
        throw DimensionMismatchError("tuple vectors not in F^" + std::to_string(basis.ambient_dim));
    if (w.arity() != basis.span_vectors.arity())
        throw ArityMismatchError("expected arity " + std::to_string(basis.span_vectors.arity()) +
                                 ", got " + std::to_string(w.arity()));
    const int k = basis.span_vectors.arity();
    const std::vector<Vector<S>>& span = basis.span_vectors.vectors();
    for (int i = 0; i < w.arity(); ++i) {
        std::vector<Vector<S>> probe = span;
        probe.push_back(w[i]);
        if (detail::rank_of_vectors(probe) > k)
            throw NotInSubspaceError("tuple vector " + std::to_string(i) + " is outside span(W)");
    }
    std::vector<Vector<S>> rows = w.vectors();
    for (const Vector<S>& e : basis.extension.vectors())
        rows.push_back(e);
    return det_elimination(Matrix<S>(std::move(rows)));
}

} // namespace detkit
