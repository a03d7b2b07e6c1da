#include "doctest.h"

#include "detkit/detkit.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace detkit;
using helpers::mat;
using helpers::tup;

namespace {
const RationalField Q;
const PrimeField GF7(7);
} // namespace

TEST_CASE("determinant fixed values") {
    CHECK(det_cofactor(identity(Q, 2)) == Rational(1));
    CHECK(det_cofactor(mat(Q, "2 3\n4 5\n")) == Rational(-2));
    CHECK(det_elimination(mat(Q, "2 3\n4 5\n")) == Rational(-2));
    CHECK(det_cofactor(mat(Q, "1 2\n2 4\n")) == Rational(0));
    CHECK(det_elimination(mat(Q, "0 1\n1 0\n")) == Rational(-1));
    CHECK(det_elimination(mat(Q, "2 0 0\n0 3 0\n0 0 5\n")) == Rational(30));
    CHECK(det_elimination(mat(GF7, "2 3\n4 1\n")) == Gfp(4, 7));

    // 3x3 value frozen from the permutation-sum oracle.
    auto a = mat(Q, "1 2 3\n4 5 6\n7 8 10\n");
    CHECK(oracles::perm_det(a) == Rational(-3));
    CHECK(det_cofactor(a) == Rational(-3));
    CHECK(det_elimination(a) == Rational(-3));
}

TEST_CASE("determinant dispatch and errors") {
    auto r = det(mat(Q, "2 3\n4 5\n"));
    CHECK(r.value == Rational(-2));
    CHECK(r.algorithm == DetAlgorithm::CrossChecked);
    CHECK(det(identity(Q, 3), DetAlgorithm::Cofactor).value == Rational(1));
    CHECK(det(mat(Q, "1 2\n2 4\n"), DetAlgorithm::Elimination).value == Rational(0));
    CHECK(algorithm_name(r.algorithm) == "crosscheck");

    CHECK_THROWS_AS(det_cofactor(mat(Q, "1 2 3\n4 5 6\n")), NotSquareError);
    CHECK_THROWS_AS(det_elimination(mat(Q, "1 2 3\n4 5 6\n")), NotSquareError);
    CHECK_THROWS_AS(det(mat(Q, "1 2 3\n4 5 6\n")), NotSquareError);
}

TEST_CASE("engines agree with each other and the permutation oracle") {
    auto property = [](const auto& field) {
        SplitMix64 rng(101);
        for (int i = 0; i < 80; ++i) {
            int n = 1 + static_cast<int>(rng.next_below(6));
            auto a = random_matrix(field, rng, n, n);
            auto by_elim = det_elimination(a);
            CHECK(det_cofactor(a) == by_elim);
            if (n <= 4)
                CHECK(oracles::perm_det(a) == by_elim);
        }
    };
    property(Q);
    property(GF7);
}

TEST_CASE("cofactor expansion along every axis") {
    CHECK(cofactor_expand(mat(Q, "2 3\n4 5\n"), Axis::Row, 0) == Rational(-2));
    CHECK(cofactor_expand(mat(Q, "0 1 1\n0 2 5\n0 3 9\n"), Axis::Column, 0) == Rational(0));

    auto a = mat(Q, "1 2 3\n4 5 6\n7 8 10\n");
    for (int i = 0; i < 3; ++i) {
        CHECK(cofactor_expand(a, Axis::Row, i) == Rational(-3));
        CHECK(cofactor_expand(a, Axis::Column, i) == Rational(-3));
    }

    auto property = [](const auto& field) {
        SplitMix64 rng(211);
        for (int i = 0; i < 30; ++i) {
            int n = 1 + static_cast<int>(rng.next_below(4));
            auto m = random_matrix(field, rng, n, n);
            auto d = det_cofactor(m);
            for (int k = 0; k < n; ++k) {
                CHECK(cofactor_expand(m, Axis::Row, k) == d);
                CHECK(cofactor_expand(m, Axis::Column, k) == d);
            }
        }
    };
    property(Q);
    property(GF7);

    CHECK_THROWS_AS(cofactor_expand(mat(Q, "1 2\n3 4\n"), Axis::Row, 2), IndexOutOfRangeError);
    CHECK_THROWS_AS(cofactor_expand(mat(Q, "1 2 3\n4 5 6\n"), Axis::Row, 0), NotSquareError);
}

TEST_CASE("product, transpose, and action rules") {
    auto property = [](const auto& field) {
        SplitMix64 rng(307);
        for (int i = 0; i < 50; ++i) {
            int n = 1 + static_cast<int>(rng.next_below(5));
            auto a = random_matrix(field, rng, n, n);
            auto b = random_matrix(field, rng, n, n);
            CHECK(det_elimination(a * b) == det_elimination(a) * det_elimination(b));
            CHECK(det_elimination(transpose(a)) == det_elimination(a));

            // D(A·T) = det(A)·D(T) with T the rows of a square matrix.
            auto t = random_matrix(field, rng, n, n).as_tuple();
            CHECK(det_elimination(Matrix<typename std::decay_t<decltype(field)>::Element>::from_tuple(
                      matrix_tuple_action(a, t))) ==
                  det_elimination(a) * det_elimination(Matrix<typename std::decay_t<decltype(field)>::Element>::from_tuple(t)));
        }
    };
    property(Q);
    property(GF7);
}

TEST_CASE("determinant vanishes exactly on dependent rows") {
    auto property = [](const auto& field) {
        SplitMix64 rng(401);
        using S = typename std::decay_t<decltype(field)>::Element;
        for (int i = 0; i < 60; ++i) {
            int n = 2 + static_cast<int>(rng.next_below(4));
            auto a = random_matrix(field, rng, n, n);
            bool dependent = rank_of(a) < n;
            CHECK(det_elimination(a).is_zero() == dependent);

            // Forcing a dependency forces a zero determinant.
            std::vector<Vector<S>> rows = a.rows();
            rows[static_cast<std::size_t>(n - 1)] = random_scalar(field, rng) * rows[0];
            CHECK(det_elimination(Matrix<S>(std::move(rows))).is_zero());
        }
    };
    property(Q);
    property(GF7);
}

TEST_CASE("normalization det(I_n) = 1") {
    for (int n = 1; n <= 6; ++n) {
        CHECK(det_cofactor(identity(Q, n)) == Rational(1));
        CHECK(det_elimination(identity(GF7, n)) == GF7.one());
    }
}
