#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "detkit/errors.hpp"
#include "detkit/fields.hpp"
#include "detkit/vector.hpp"

namespace detkit {

// Rectangular scalar array stored as rows. A square matrix converts losslessly
// to and from the tuple of its rows; rows, not columns, are the tuple elements.
template <class S>
class Matrix {
  public:
    explicit Matrix(std::vector<Vector<S>> rows) : rows_(std::move(rows)) {
        if (rows_.empty())
            throw DimensionMismatchError("matrix must have at least one row");
        for (const Vector<S>& r : rows_) {
            if (r.dim() != rows_.front().dim())
                throw DimensionMismatchError("ragged matrix rows");
            if (!same_field(r[0], rows_.front()[0]))
                throw FieldMismatchError("matrix rows from different fields");
        }
    }

    int nrows() const { return static_cast<int>(rows_.size()); }
    int ncols() const { return rows_.front().dim(); }
    bool is_square() const { return nrows() == ncols(); }

    const S& at(int i, int j) const { return row(i)[j]; }

    const Vector<S>& row(int i) const {
        if (i < 0 || i >= nrows())
            throw IndexOutOfRangeError("row index " + std::to_string(i));
        return rows_[static_cast<std::size_t>(i)];
    }

    const std::vector<Vector<S>>& rows() const { return rows_; }

    VecTuple<S> as_tuple() const { return VecTuple<S>(ncols(), rows_); }

    static Matrix from_tuple(const VecTuple<S>& t) {
        if (t.arity() == 0)
            throw DimensionMismatchError("cannot form a matrix from an empty tuple");
        return Matrix(t.vectors());
    }

    bool operator==(const Matrix& o) const { return rows_ == o.rows_; }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

  private:
    std::vector<Vector<S>> rows_;
};

template <ScalarField F>
Vector<typename F::Element> basis_vector(const F& field, int n, int i) {
    if (i < 0 || i >= n)
        throw IndexOutOfRangeError("basis index " + std::to_string(i));
    std::vector<typename F::Element> e;
    e.reserve(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        e.push_back(j == i ? field.one() : field.zero());
    return Vector<typename F::Element>(std::move(e));
}

template <ScalarField F>
Matrix<typename F::Element> identity(const F& field, int n) {
    std::vector<Vector<typename F::Element>> rows;
    rows.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        rows.push_back(basis_vector(field, n, i));
    return Matrix<typename F::Element>(std::move(rows));
}

// Standard product; associates with the tuple action: (A*B)·T = A·(B·T).
template <class S>
Matrix<S> operator*(const Matrix<S>& a, const Matrix<S>& b) {
    if (a.ncols() != b.nrows())
        throw DimensionMismatchError("product of " + std::to_string(a.nrows()) + "x" +
                                     std::to_string(a.ncols()) + " by " + std::to_string(b.nrows()) +
                                     "x" + std::to_string(b.ncols()));
    std::vector<Vector<S>> rows;
    rows.reserve(static_cast<std::size_t>(a.nrows()));
    for (int i = 0; i < a.nrows(); ++i) {
        std::vector<S> row;
        row.reserve(static_cast<std::size_t>(b.ncols()));
        for (int j = 0; j < b.ncols(); ++j) {
            S acc = a.at(i, 0) * b.at(0, j);
            for (int k = 1; k < a.ncols(); ++k)
                acc += a.at(i, k) * b.at(k, j);
            row.push_back(std::move(acc));
        }
        rows.push_back(Vector<S>(std::move(row)));
    }
    return Matrix<S>(std::move(rows));
}

template <class S>
Matrix<S> transpose(const Matrix<S>& a) {
    std::vector<Vector<S>> rows;
    rows.reserve(static_cast<std::size_t>(a.ncols()));
    for (int j = 0; j < a.ncols(); ++j) {
        std::vector<S> row;
        row.reserve(static_cast<std::size_t>(a.nrows()));
        for (int i = 0; i < a.nrows(); ++i)
            row.push_back(a.at(i, j));
        rows.push_back(Vector<S>(std::move(row)));
    }
    return Matrix<S>(std::move(rows));
}

// A·T with w_i = sum_j a_{i,j} · v_j. A must be n x n for an n-tuple T; the
// tuple's own ambient dimension is unconstrained.
template <class S>
VecTuple<S> matrix_tuple_action(const Matrix<S>& a, const VecTuple<S>& t) {
    if (!a.is_square() || a.nrows() != t.arity())
        throw DimensionMismatchError("action of " + std::to_string(a.nrows()) + "x" +
                                     std::to_string(a.ncols()) + " matrix on arity-" +
                                     std::to_string(t.arity()) + " tuple");
    if (t.arity() > 0 && !same_field(a.at(0, 0), t[0][0]))
        throw FieldMismatchError("matrix and tuple from different fields");
    std::vector<Vector<S>> out;
    out.reserve(static_cast<std::size_t>(t.arity()));
    for (int i = 0; i < a.nrows(); ++i) {
        Vector<S> w = a.at(i, 0) * t[0];
        for (int j = 1; j < a.ncols(); ++j)
            w = w + a.at(i, j) * t[j];
        out.push_back(std::move(w));
    }
    return VecTuple<S>(t.dim(), std::move(out));
}

namespace detail {

inline bool blank_or_comment(std::string_view line) {
    for (char c : line) {
        if (c == ' ' || c == '\t')
            continue;
        return c == '#';
    }
    return true;
}

inline std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t'))
            ++i;
        std::size_t begin = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t')
            ++i;
        if (i > begin)
            out.push_back(line.substr(begin, i - begin));
    }
    return out;
}

inline std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line =
            nl == std::string_view::npos ? text.substr(pos) : text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r')
            line.remove_suffix(1);
        out.push_back(line);
        if (nl == std::string_view::npos)
            break;
        pos = nl + 1;
    }
    return out;
}

template <ScalarField F>
Vector<typename F::Element> parse_row(const F& field, const std::vector<std::string_view>& tokens) {
    std::vector<typename F::Element> entries;
    entries.reserve(tokens.size());
    for (std::string_view tok : tokens)
        entries.push_back(field.parse(tok));
    return Vector<typename F::Element>(std::move(entries));
}

} // namespace detail

// Matrix text format: one row per line, single-space separated entries in the
// scalar grammar; blank lines and lines whose first non-space character is '#'
// are ignored.
template <ScalarField F>
Matrix<typename F::Element> parse_matrix(const F& field, std::string_view text) {
    std::vector<Vector<typename F::Element>> rows;
    for (std::string_view line : detail::split_lines(text)) {
        if (detail::blank_or_comment(line))
            continue;
        rows.push_back(detail::parse_row(field, detail::split_tokens(line)));
        if (rows.back().dim() != rows.front().dim())
            throw ParseError("ragged matrix row '" + std::string(line) + "'");
    }
    if (rows.empty())
        throw ParseError("no matrix rows in input");
    return Matrix<typename F::Element>(std::move(rows));
}

template <class S>
std::string format_matrix(const Matrix<S>& a) {
    std::string out;
    for (const Vector<S>& r : a.rows()) {
        out += r.str();
        out += '\n';
    }
    return out;
}

} // namespace detkit
