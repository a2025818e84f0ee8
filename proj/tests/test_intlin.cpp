#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "mono/intlin.hpp"

using namespace mono;
using test::mat;

TEST_CASE("det_exact on known matrices") {
    CHECK(det_exact(mat({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}})) == 2);
    CHECK(det_exact(IntMatrix::identity(4)) == 1);
    // lower-triangular exponent matrix of the degree-2 automorphism of P^3
    CHECK(det_exact(mat({{2, 0, 0, 0}, {1, 1, 0, 0}, {0, 1, 1, 0}, {0, 0, 1, 1}})) == 2);
    CHECK(det_exact(mat({{2, 0}, {0, 0}})) == 0);
    CHECK_THROWS_AS(det_exact(IntMatrix(2, 3)), ValidationError);
}

TEST_CASE("det_exact agrees with cofactor expansion") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 1200; ++trial) {
        std::size_t n = 1 + trial % 4;
        IntMatrix m = test::random_matrix(rng, n, -3, 3);
        CHECK(det_exact(m) == test::det_cofactor(m));
    }
}

TEST_CASE("inverse_unimodular") {
    IntMatrix negid = mat({{-1, 0}, {0, -1}});
    CHECK(inverse_unimodular(negid) == negid);
    CHECK(inverse_unimodular(mat({{1, 0}, {1, 1}})) == mat({{1, 0}, {-1, 1}}));
    CHECK_THROWS_AS(inverse_unimodular(mat({{2, 0}, {0, 1}})), DomainError);
}

TEST_CASE("inverse_unimodular composes to the identity") {
    std::mt19937 rng(11);
    int found = 0;
    for (int trial = 0; trial < 5000 && found < 100; ++trial) {
        std::size_t n = 2 + trial % 3;
        IntMatrix m = test::random_matrix(rng, n, -2, 2);
        Int det = det_exact(m);
        if (det != 1 && det != -1) continue;
        ++found;
        IntMatrix inv = inverse_unimodular(m);
        CHECK(m * inv == IntMatrix::identity(n));
        CHECK(inv * m == IntMatrix::identity(n));
    }
    CHECK(found == 100);
}

TEST_CASE("smith_normal_form on known matrices") {
    auto id = smith_normal_form(IntMatrix::identity(3));
    CHECK(id.invariantFactors == std::vector<Int>{1, 1, 1});

    auto diag = smith_normal_form(mat({{2, 0}, {0, 2}}));
    CHECK(diag.invariantFactors == std::vector<Int>{2, 2});

    auto tri = smith_normal_form(mat({{1, 0}, {1, 2}}));
    CHECK(tri.invariantFactors == std::vector<Int>{1, 2});

    CHECK_THROWS_AS(smith_normal_form(mat({{1, 1}, {1, 1}})), DomainError);
}

TEST_CASE("smith_normal_form invariants on random matrices") {
    std::mt19937 rng(23);
    int found = 0;
    for (int trial = 0; trial < 2000 && found < 200; ++trial) {
        std::size_t n = 1 + trial % 4;
        IntMatrix m = test::random_matrix(rng, n, -4, 4);
        Int det = det_exact(m);
        if (det == 0) continue;
        ++found;
        SnfResult snf = smith_normal_form(m);

        Int prod = 1;
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(snf.invariantFactors[i] > 0);
            if (i + 1 < n)
                CHECK(snf.invariantFactors[i + 1] % snf.invariantFactors[i] == 0);
            prod *= snf.invariantFactors[i];
        }
        CHECK(prod == abs(det));

        CHECK(abs(det_exact(snf.leftTransform)) == 1);
        CHECK(abs(det_exact(snf.rightTransform)) == 1);
        IntMatrix reconstructed = snf.leftTransform * m * snf.rightTransform;
        IntMatrix expected(n, n);
        for (std::size_t i = 0; i < n; ++i) expected.at(i, i) = snf.invariantFactors[i];
        CHECK(reconstructed == expected);
    }
    CHECK(found == 200);
}

TEST_CASE("nonzero_diagonal_permutation") {
    auto idperm = nonzero_diagonal_permutation(IntMatrix::identity(3));
    CHECK(idperm == std::vector<std::size_t>{0, 1, 2});

    auto swap = nonzero_diagonal_permutation(mat({{0, 1}, {1, 0}}));
    CHECK(swap == std::vector<std::size_t>{1, 0});

    // The Cremona pattern admits only derangements; enumeration of all 3!
    // assignments shows every valid choice avoids the diagonal.
    IntMatrix cremona = mat({{0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
    auto sigma = nonzero_diagonal_permutation(cremona);
    for (std::size_t i = 0; i < 3; ++i) CHECK(cremona.at(i, sigma[i]) != 0);
    CHECK(sigma[0] != 0);
    CHECK(sigma[1] != 1);
    CHECK(sigma[2] != 2);
}

TEST_CASE("nonzero_diagonal_permutation postcondition on random nonsingular input") {
    std::mt19937 rng(31);
    int found = 0;
    for (int trial = 0; trial < 2000 && found < 300; ++trial) {
        std::size_t n = 2 + trial % 4;
        IntMatrix m = test::random_matrix(rng, n, 0, 2);
        if (det_exact(m) == 0) continue;
        ++found;
        auto sigma = nonzero_diagonal_permutation(m);
        std::vector<bool> used(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(m.at(i, sigma[i]) != 0);
            CHECK(!used[sigma[i]]);
            used[sigma[i]] = true;
        }
    }
    CHECK(found == 300);
}
