#pragma once

// Test-only oracles, kept independent of the library's elimination and
// cofactor paths: the permutation-sum determinant and a plain Gauss-Jordan
// solver over raw entry arrays.

#include <algorithm>
#include <numeric>
#include <optional>
#include <vector>

#include "detkit/matrix.hpp"

namespace oracles {

// Brute-force signed sum over all n! permutations. Only sensible for n <= 4.
template <class S>
S perm_det(const detkit::Matrix<S>& a) {
    const int n = a.nrows();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    S sum = a.at(0, 0).zero();
    do {
        int inversions = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (perm[static_cast<std::size_t>(i)] > perm[static_cast<std::size_t>(j)])
                    ++inversions;
        S term = a.at(0, 0).one();
        for (int i = 0; i < n; ++i)
            term = term * a.at(i, perm[static_cast<std::size_t>(i)]);
        sum = (inversions % 2 == 0) ? sum + term : sum - term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return sum;
}

// Solves sum_k x_k * v_k = b (v_k the rows of `coeffs`) by Gauss-Jordan on the
// transposed augmented system. Returns nullopt when singular.
template <class S>
std::optional<std::vector<S>> gauss_solve(const detkit::Matrix<S>& coeffs,
                                          const detkit::Vector<S>& b) {
    const int n = coeffs.nrows();
    std::vector<std::vector<S>> m;
    m.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::vector<S> row;
        row.reserve(static_cast<std::size_t>(n + 1));
        for (int j = 0; j < n; ++j)
            row.push_back(coeffs.at(j, i)); // transpose: columns are the v_k
        row.push_back(b[i]);
        m.push_back(std::move(row));
    }
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (!m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
                pivot = r;
                break;
            }
        }
        if (pivot < 0)
            return std::nullopt;
        std::swap(m[static_cast<std::size_t>(col)], m[static_cast<std::size_t>(pivot)]);
        const S p = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        for (int j = 0; j <= n; ++j) {
            auto& x = m[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
            x = x / p;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col)
                continue;
            const S f = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
            if (f.is_zero())
                continue;
            for (int j = 0; j <= n; ++j) {
                auto& x = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)];
                x = x - f * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
            }
        }
    }
    std::vector<S> x;
    x.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        x.push_back(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(n)]);
    return x;
}

} // namespace oracles
