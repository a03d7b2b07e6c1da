#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "detkit/errors.hpp"
#include "detkit/matrix.hpp"

namespace detkit {

// One elementary tuple operation. Indices are validated against the target
// tuple or matrix at application time; the structural invariants (distinct
// rows, nonzero scale factor) are enforced at construction.
template <class S>
struct ElementaryOp {
    enum class Kind { Interchange, Scale, Replace };

    Kind kind;
    int i;                   // target row
    int j;                   // source row (Interchange / Replace), -1 for Scale
    std::optional<S> factor; // Scale / Replace coefficient

    static ElementaryOp interchange(int i, int j) {
        if (i == j)
            throw IndexOutOfRangeError("interchange needs two distinct rows");
        return {Kind::Interchange, i, j, std::nullopt};
    }

    static ElementaryOp scale(int i, S c) {
        if (c.is_zero())
            throw ZeroScaleFactorError("scale factor must be nonzero");
        return {Kind::Scale, i, -1, std::move(c)};
    }

    // row_i <- row_i + c * row_j
    static ElementaryOp replace(int i, int j, S c) {
        if (i == j)
            throw IndexOutOfRangeError("replace needs two distinct rows");
        return {Kind::Replace, i, j, std::move(c)};
    }

    // Inverse of the same kind (Obs: elementary operations are invertible).
    ElementaryOp inverse() const {
        switch (kind) {
        case Kind::Interchange:
            return *this;
        case Kind::Scale:
            return scale(i, factor->inverse());
        case Kind::Replace:
        default:
            return replace(i, j, -*factor);
        }
    }
};

namespace detail {

template <class S>
void check_op_bounds(const ElementaryOp<S>& op, int n) {
    if (op.i < 0 || op.i >= n || (op.kind != ElementaryOp<S>::Kind::Scale && (op.j < 0 || op.j >= n)))
        throw IndexOutOfRangeError("elementary op rows out of range for size " + std::to_string(n));
}

template <class S>
void apply_op_rows(std::vector<Vector<S>>& rows, const ElementaryOp<S>& op) {
    check_op_bounds(op, static_cast<int>(rows.size()));
    auto ui = static_cast<std::size_t>(op.i);
    auto uj = static_cast<std::size_t>(op.j);
    switch (op.kind) {
    case ElementaryOp<S>::Kind::Interchange:
        std::swap(rows[ui], rows[uj]);
        break;
    case ElementaryOp<S>::Kind::Scale:
        rows[ui] = *op.factor * rows[ui];
        break;
    case ElementaryOp<S>::Kind::Replace:
        rows[ui] = rows[ui] + *op.factor * rows[uj];
        break;
    }
}

template <class S>
struct Echelon {
    std::vector<Vector<S>> rows;
    std::vector<std::pair<int, int>> pivots; // (row, col), increasing in both
    std::vector<ElementaryOp<S>> ops;
};

// Forward pass: deterministic first-nonzero pivoting, Interchange and Replace
// only. A pivotless column is skipped. Works on any rectangular row list.
template <class S>
Echelon<S> forward_echelon(std::vector<Vector<S>> rows) {
    Echelon<S> e;
    const int nrows = static_cast<int>(rows.size());
    const int ncols = rows.empty() ? 0 : rows.front().dim();
    int r = 0;
    for (int c = 0; c < ncols && r < nrows; ++c) {
        int pivot = -1;
        for (int i = r; i < nrows; ++i) {
            if (!rows[static_cast<std::size_t>(i)][c].is_zero()) {
                pivot = i;
                break;
            }
        }
        if (pivot < 0)
            continue;
        if (pivot != r) {
            e.ops.push_back(ElementaryOp<S>::interchange(r, pivot));
            apply_op_rows(rows, e.ops.back());
        }
        const S& p = rows[static_cast<std::size_t>(r)][c];
        for (int i = r + 1; i < nrows; ++i) {
            const S& x = rows[static_cast<std::size_t>(i)][c];
            if (x.is_zero())
                continue;
            e.ops.push_back(ElementaryOp<S>::replace(i, r, -(x / p)));
            apply_op_rows(rows, e.ops.back());
        }
        e.pivots.emplace_back(r, c);
        ++r;
    }
    e.rows = std::move(rows);
    return e;
}

// k x k identity over the field of a sample element.
template <class S>
std::vector<Vector<S>> identity_rows_like(const S& sample, int k) {
    std::vector<Vector<S>> rows;
    rows.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) {
        std::vector<S> row;
        row.reserve(static_cast<std::size_t>(k));
        for (int j = 0; j < k; ++j)
            row.push_back(j == i ? sample.one() : sample.zero());
        rows.push_back(Vector<S>(std::move(row)));
    }
    return rows;
}

} // namespace detail

template <class S>
VecTuple<S> apply_tuple_op(const VecTuple<S>& t, const ElementaryOp<S>& op) {
    std::vector<Vector<S>> rows = t.vectors();
    detail::apply_op_rows(rows, op);
    return VecTuple<S>(t.dim(), std::move(rows));
}

template <class S>
Matrix<S> apply_row_op(const Matrix<S>& a, const ElementaryOp<S>& op) {
    std::vector<Vector<S>> rows = a.rows();
    detail::apply_op_rows(rows, op);
    return Matrix<S>(std::move(rows));
}

// The matrix E with E·T = op(T) for every n-tuple T: the op applied to I_n.
template <ScalarField F>
Matrix<typename F::Element> elementary_matrix_of(const F& field,
                                                 const ElementaryOp<typename F::Element>& op, int n) {
    detail::check_op_bounds(op, n);
    return apply_row_op(identity(field, n), op);
}

// A recorded reduction A = E_1 ... E_k · C. `diagonal` holds the main diagonal
// of the fully reduced matrix as a diagonal matrix; replaying `ops` on the
// input reproduces that diagonal exactly, and reproduces `diagonal` as the
// whole matrix whenever the input is nonsingular. Singular inputs keep
// residue in pivotless columns but always carry a zero diagonal entry.
template <class S>
struct EliminationTrace {
    std::vector<ElementaryOp<S>> ops;
    Matrix<S> diagonal;
    int swap_count;               // m: number of Interchange ops
    std::vector<S> scale_factors; // one per Scale op; always empty here
};

// Obs 4.6-style reduction using Interchange and Replace only, so
// det(A) = (-1)^swap_count * prod(diagonal) with no correction factors.
// Forward elimination to echelon form, then backward Replace ops to clear
// above every pivot.
template <class S>
EliminationTrace<S> reduce_to_diagonal(const Matrix<S>& a) {
    if (!a.is_square())
        throw NotSquareError("reduce_to_diagonal needs a square matrix, got " +
                             std::to_string(a.nrows()) + "x" + std::to_string(a.ncols()));
    const int n = a.nrows();
    detail::Echelon<S> e = detail::forward_echelon(a.rows());
    for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it) {
        const auto [pr, pc] = *it;
        const S& p = e.rows[static_cast<std::size_t>(pr)][pc];
        for (int i = 0; i < pr; ++i) {
            const S& x = e.rows[static_cast<std::size_t>(i)][pc];
            if (x.is_zero())
                continue;
            e.ops.push_back(ElementaryOp<S>::replace(i, pr, -(x / p)));
            detail::apply_op_rows(e.rows, e.ops.back());
        }
    }

    const S zero = a.at(0, 0).zero();
    std::vector<Vector<S>> diag_rows;
    diag_rows.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<S> row(static_cast<std::size_t>(n), zero);
        row[static_cast<std::size_t>(i)] = e.rows[static_cast<std::size_t>(i)][i];
        diag_rows.push_back(Vector<S>(std::move(row)));
    }

    int swaps = 0;
    for (const ElementaryOp<S>& op : e.ops)
        if (op.kind == ElementaryOp<S>::Kind::Interchange)
            ++swaps;

    return EliminationTrace<S>{std::move(e.ops), Matrix<S>(std::move(diag_rows)), swaps, {}};
}

// Number of nonzero rows after elimination = dim span(rows).
template <class S>
int rank_of(const Matrix<S>& a) {
    return static_cast<int>(detail::forward_echelon(a.rows()).pivots.size());
}

inline Rational certificate_unit(const Rational& leading) {
    return leading.is_negative() ? Rational(-1) : Rational(1);
}

inline Gfp certificate_unit(const Gfp& leading) { return leading.inverse(); }

// Nonzero coefficients c with sum_i c_i * row_i = 0, when the rows are
// dependent. Extracted by replaying the recorded elimination on the identity;
// normalized so the leading nonzero coefficient is positive (rationals) or 1
// (prime fields).
template <class S>
std::optional<std::vector<S>> row_dependency(const Matrix<S>& a) {
    detail::Echelon<S> e = detail::forward_echelon(a.rows());
    const int rank = static_cast<int>(e.pivots.size());
    if (rank == a.nrows())
        return std::nullopt;
    std::vector<Vector<S>> eye = detail::identity_rows_like(a.at(0, 0), a.nrows());
    for (const ElementaryOp<S>& op : e.ops)
        detail::apply_op_rows(eye, op);
    std::vector<S> cert = eye[static_cast<std::size_t>(rank)].entries();
    for (const S& c : cert) {
        if (!c.is_zero()) {
            const S unit = certificate_unit(c);
            for (S& x : cert)
                x = unit * x;
            break;
        }
    }
    return cert;
}

} // namespace detkit
