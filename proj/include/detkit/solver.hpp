#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "detkit/determinant.hpp"
#include "detkit/elimination.hpp"
#include "detkit/errors.hpp"
#include "detkit/matrix.hpp"

namespace detkit {

// Square system x_1·v_1 + ... + x_n·v_n = b over the tuple of coefficient
// vectors (the rows of the system file's matrix block).
template <class S>
struct LinearSystem {
    VecTuple<S> coefficients;
    Vector<S> rhs;

    LinearSystem(VecTuple<S> coeffs, Vector<S> b) : coefficients(std::move(coeffs)), rhs(std::move(b)) {
        if (coefficients.arity() != coefficients.dim())
            throw DimensionMismatchError("system is not square: " + std::to_string(coefficients.arity()) +
                                         " vectors in F^" + std::to_string(coefficients.dim()));
        if (rhs.dim() != coefficients.dim())
            throw DimensionMismatchError("rhs dimension " + std::to_string(rhs.dim()) + " vs F^" +
                                         std::to_string(coefficients.dim()));
    }
};

template <class S>
struct Solution {
    std::vector<S> values;     // x_1 ... x_n
    std::vector<S> numerators; // D(v_1, ..., b, ..., v_n) per coordinate
    S base_determinant;        // D(v_1, ..., v_n), nonzero
};

template <class S>
class SingularSystemError : public Error {
  public:
    SingularSystemError(int rank, std::vector<S> certificate)
        : Error("singular system: rank " + std::to_string(rank)), rank(rank),
          certificate(std::move(certificate)) {}

    int rank;
    std::vector<S> certificate; // nonzero combination of the rows equal to 0
};

// Cramer's Rule: x_k = D(v_1, ..., b, ..., v_n) / D(v_1, ..., v_n).
template <class S>
Solution<S> cramer_solve(const LinearSystem<S>& sys) {
    const Matrix<S> m = Matrix<S>::from_tuple(sys.coefficients);
    S base = det_elimination(m);
    if (base.is_zero()) {
        auto cert = row_dependency(m);
        throw SingularSystemError<S>(rank_of(m), std::move(*cert));
    }
    const int n = sys.coefficients.arity();
    std::vector<S> numerators;
    std::vector<S> values;
    numerators.reserve(static_cast<std::size_t>(n));
    values.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        S num = det_elimination(Matrix<S>::from_tuple(sys.coefficients.with_slot(k, sys.rhs)));
        values.push_back(num / base);
        numerators.push_back(std::move(num));
    }
    return Solution<S>{std::move(values), std::move(numerators), std::move(base)};
}

template <class S>
int rank(const VecTuple<S>& t) {
    if (t.arity() == 0)
        return 0;
    return rank_of(Matrix<S>::from_tuple(t));
}

// For arity-n tuples in F^n this reduces to det != 0; smaller tuples fall
// back to rank, larger ones are always dependent.
template <class S>
bool is_linearly_independent(const VecTuple<S>& t) {
    if (t.arity() == 0)
        return true;
    if (t.arity() > t.dim())
        return false;
    if (t.arity() == t.dim())
        return !det_elimination(Matrix<S>::from_tuple(t)).is_zero();
    return rank(t) == t.arity();
}

template <class S>
bool spans_ambient(const VecTuple<S>& t) {
    return rank(t) == t.dim();
}

// System text format: coefficient matrix block, a separator line `---`, then
// one line holding b.
template <ScalarField F>
LinearSystem<typename F::Element> parse_system(const F& field, std::string_view text) {
    using S = typename F::Element;
    std::vector<Vector<S>> rows;
    bool seen_separator = false;
    std::vector<Vector<S>> rhs_lines;
    for (std::string_view line : detail::split_lines(text)) {
        if (detail::blank_or_comment(line))
            continue;
        auto tokens = detail::split_tokens(line);
        if (tokens.size() == 1 && tokens[0] == "---") {
            if (seen_separator)
                throw ParseError("duplicate '---' separator");
            seen_separator = true;
            continue;
        }
        auto& dest = seen_separator ? rhs_lines : rows;
        dest.push_back(detail::parse_row(field, tokens));
    }
    if (!seen_separator)
        throw ParseError("missing '---' separator between matrix and rhs");
    if (rows.empty())
        throw ParseError("no coefficient rows in input");
    if (rhs_lines.size() != 1)
        throw ParseError("expected exactly one rhs line after '---', got " +
                         std::to_string(rhs_lines.size()));
    if (rhs_lines.front().dim() != rows.front().dim())
        throw ParseError("rhs length " + std::to_string(rhs_lines.front().dim()) +
                         " does not match row length " + std::to_string(rows.front().dim()));
    for (const Vector<S>& r : rows)
        if (r.dim() != rows.front().dim())
            throw ParseError("ragged matrix rows");
    const int dim = rows.front().dim();
    return LinearSystem<S>(VecTuple<S>(dim, std::move(rows)), rhs_lines.front());
}

} // namespace detkit
