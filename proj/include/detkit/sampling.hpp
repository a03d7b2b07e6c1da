#pragma once

#include <vector>

#include "detkit/determinant.hpp"
#include "detkit/fields.hpp"
#include "detkit/matrix.hpp"
#include "detkit/rng.hpp"
#include "detkit/vector.hpp"

namespace detkit {

// Seeded sampling. Draw order is part of the reproducibility contract:
// vectors are drawn entry by entry, tuples vector by vector, matrices row by
// row; rationals draw numerator before denominator.

template <ScalarField F>
typename F::Element random_scalar(const F& field, SplitMix64& rng) {
    return field.random_entry(rng);
}

template <ScalarField F>
typename F::Element random_nonzero_scalar(const F& field, SplitMix64& rng) {
    for (;;) {
        typename F::Element s = field.random_entry(rng);
        if (!s.is_zero())
            return s;
    }
}

template <ScalarField F>
Vector<typename F::Element> random_vector(const F& field, SplitMix64& rng, int dim) {
    std::vector<typename F::Element> entries;
    entries.reserve(static_cast<std::size_t>(dim));
    for (int i = 0; i < dim; ++i)
        entries.push_back(field.random_entry(rng));
    return Vector<typename F::Element>(std::move(entries));
}

template <ScalarField F>
VecTuple<typename F::Element> random_tuple(const F& field, SplitMix64& rng, int arity, int dim) {
    std::vector<Vector<typename F::Element>> vectors;
    vectors.reserve(static_cast<std::size_t>(arity));
    for (int i = 0; i < arity; ++i)
        vectors.push_back(random_vector(field, rng, dim));
    return VecTuple<typename F::Element>(dim, std::move(vectors));
}

template <ScalarField F>
Matrix<typename F::Element> random_matrix(const F& field, SplitMix64& rng, int nrows, int ncols) {
    std::vector<Vector<typename F::Element>> rows;
    rows.reserve(static_cast<std::size_t>(nrows));
    for (int i = 0; i < nrows; ++i)
        rows.push_back(random_vector(field, rng, ncols));
    return Matrix<typename F::Element>(std::move(rows));
}

// Rejection sampling; over either field a random square matrix is nonsingular
// with probability bounded away from zero.
template <ScalarField F>
Matrix<typename F::Element> random_nonsingular_matrix(const F& field, SplitMix64& rng, int n) {
    for (;;) {
        Matrix<typename F::Element> m = random_matrix(field, rng, n, n);
        if (!det_elimination(m).is_zero())
            return m;
    }
}

template <ScalarField F>
VecTuple<typename F::Element> random_independent_tuple(const F& field, SplitMix64& rng, int arity,
                                                       int dim) {
    for (;;) {
        VecTuple<typename F::Element> t = random_tuple(field, rng, arity, dim);
        if (arity == 0 || rank_of(Matrix<typename F::Element>::from_tuple(t)) == arity)
            return t;
    }
}

} // namespace detkit
