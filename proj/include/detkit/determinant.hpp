#pragma once

#include <string>
#include <utility>
#include <vector>

#include "detkit/elimination.hpp"
#include "detkit/errors.hpp"
#include "detkit/matrix.hpp"

namespace detkit {

enum class DetAlgorithm { Cofactor, Elimination, CrossChecked };

inline std::string algorithm_name(DetAlgorithm a) {
    switch (a) {
    case DetAlgorithm::Cofactor:
        return "cofactor";
    case DetAlgorithm::Elimination:
        return "elimination";
    case DetAlgorithm::CrossChecked:
    default:
        return "crosscheck";
    }
}

template <class S>
struct DetResult {
    S value;
    DetAlgorithm algorithm; // CrossChecked means both engines ran and agreed
};

// Submatrix with row i and column j removed.
template <class S>
Matrix<S> minor_matrix(const Matrix<S>& a, int i, int j) {
    if (a.nrows() < 2 || a.ncols() < 2)
        throw DimensionMismatchError("minor of a matrix with a single row or column");
    if (i < 0 || i >= a.nrows() || j < 0 || j >= a.ncols())
        throw IndexOutOfRangeError("minor position (" + std::to_string(i) + "," + std::to_string(j) + ")");
    std::vector<Vector<S>> rows;
    rows.reserve(static_cast<std::size_t>(a.nrows() - 1));
    for (int r = 0; r < a.nrows(); ++r) {
        if (r == i)
            continue;
        std::vector<S> row;
        row.reserve(static_cast<std::size_t>(a.ncols() - 1));
        for (int c = 0; c < a.ncols(); ++c)
            if (c != j)
                row.push_back(a.at(r, c));
        rows.push_back(Vector<S>(std::move(row)));
    }
    return Matrix<S>(std::move(rows));
}

// Recursive expansion along the first column with alternating signs starting
// at +; base case: the sole entry of a 1x1 matrix. This is the inductive lift
// construction specialized to matrices, normalized so det(I) = 1.
template <class S>
S det_cofactor(const Matrix<S>& a) {
    if (!a.is_square())
        throw NotSquareError("determinant of a " + std::to_string(a.nrows()) + "x" +
                             std::to_string(a.ncols()) + " matrix");
    const int n = a.nrows();
    if (n == 1)
        return a.at(0, 0);
    S sum = a.at(0, 0).zero();
    for (int i = 0; i < n; ++i) {
        const S& coef = a.at(i, 0);
        if (coef.is_zero())
            continue;
        S term = coef * det_cofactor(minor_matrix(a, i, 0));
        sum = (i % 2 == 0) ? sum + term : sum - term;
    }
    return sum;
}

// (-1)^m times the product of the recorded diagonal. The reduction never
// scales rows, so no correction factors appear.
template <class S>
S det_elimination(const Matrix<S>& a) {
    EliminationTrace<S> trace = reduce_to_diagonal(a);
    S prod = trace.swap_count % 2 == 0 ? a.at(0, 0).one() : -a.at(0, 0).one();
    for (int i = 0; i < trace.diagonal.nrows(); ++i)
        prod = prod * trace.diagonal.at(i, i);
    return prod;
}

template <class S>
DetResult<S> det(const Matrix<S>& a, DetAlgorithm mode = DetAlgorithm::CrossChecked) {
    switch (mode) {
    case DetAlgorithm::Cofactor:
        return {det_cofactor(a), mode};
    case DetAlgorithm::Elimination:
        return {det_elimination(a), mode};
    case DetAlgorithm::CrossChecked:
    default: {
        S c = det_cofactor(a);
        S e = det_elimination(a);
        if (c != e)
            throw EngineDisagreementError(c.str(), e.str());
        return {std::move(c), DetAlgorithm::CrossChecked};
    }
    }
}

enum class Axis { Row, Column };

// Expansion along any row or column: sum_j a_ij * (-1)^(i+j) * det(minor_ij).
// Equals det(a) for every axis and index.
template <class S>
S cofactor_expand(const Matrix<S>& a, Axis axis, int index) {
    if (!a.is_square())
        throw NotSquareError("cofactor expansion of a non-square matrix");
    const int n = a.nrows();
    if (index < 0 || index >= n)
        throw IndexOutOfRangeError("expansion index " + std::to_string(index));
    if (n == 1)
        return a.at(0, 0);
    S sum = a.at(0, 0).zero();
    for (int k = 0; k < n; ++k) {
        const int i = axis == Axis::Row ? index : k;
        const int j = axis == Axis::Row ? k : index;
        const S& coef = a.at(i, j);
        if (coef.is_zero())
            continue;
        S term = coef * det_cofactor(minor_matrix(a, i, j));
        sum = ((i + j) % 2 == 0) ? sum + term : sum - term;
    }
    return sum;
}

} // namespace detkit
