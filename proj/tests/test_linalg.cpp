#include <doctest.h>

#include <algorithm>
#include <random>

#include "groupchar/errors.hpp"
#include "groupchar/linalg.hpp"

#include "oracle_dense.hpp"

using namespace groupchar;

namespace {

SparseMatrix dense_to_sparse(const std::vector<std::vector<int>>& rows, std::size_t cols) {
    std::vector<SparseMatrix::Entry> t;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            if (rows[r][c] != 0) t.push_back({r, c, Rational(rows[r][c])});
        }
    }
    return SparseMatrix::from_triplets(rows.size(), cols, std::move(t));
}

}  // namespace

TEST_CASE("kernel_basis on small fixed matrices") {
    CHECK(kernel_basis(dense_to_sparse({{0}}, 1)).dim() == 1);

    Subspace sym = kernel_basis(dense_to_sparse({{1, -1}}, 2));
    REQUIRE(sym.dim() == 1);
    CHECK(sym.basis[0] == Vec{1, 1});

    CHECK(kernel_basis(dense_to_sparse({{1, 0}, {0, 1}}, 2)).dim() == 0);
}

TEST_CASE("image_basis on small fixed matrices") {
    CHECK(image_basis(dense_to_sparse({{1, 0}, {0, 1}}, 2)).dim() == 2);

    Subspace col = image_basis(dense_to_sparse({{1}, {1}}, 1));
    REQUIRE(col.dim() == 1);
    CHECK(col.basis[0] == Vec{1, 1});

    CHECK(image_basis(dense_to_sparse({{0, 0}, {0, 0}}, 2)).dim() == 0);
}

TEST_CASE("subspace_equal is scaling-invariant and syntactic") {
    Subspace a = Subspace::from_spanning(2, {Vec{1, 0}});
    Subspace b = Subspace::from_spanning(2, {Vec{2, 0}});
    Subspace c = Subspace::from_spanning(2, {Vec{0, 1}});
    CHECK(subspace_equal(a, b));
    CHECK_FALSE(subspace_equal(a, c));
    CHECK(subspace_equal(Subspace::zero(3), Subspace::zero(3)));
    CHECK_THROWS_AS(subspace_equal(a, Subspace::zero(3)), ContractViolation);
}

TEST_CASE("quotient_dim checks inclusion") {
    Subspace whole = Subspace::full(3);
    Subspace part = Subspace::from_spanning(3, {Vec{1, 2, 3}});
    CHECK(quotient_dim(whole, part) == 2);
    CHECK(quotient_dim(whole, whole) == 0);
    CHECK(quotient_dim(whole, Subspace::zero(3)) == 3);
    CHECK_THROWS_AS(quotient_dim(part, whole), ContractViolation);
}

TEST_CASE("solve: identity, underdetermined, inconsistent") {
    auto x = solve(dense_to_sparse({{1, 0}, {0, 1}}, 2), Vec{3, 4});
    REQUIRE(x.has_value());
    CHECK(*x == Vec{3, 4});

    auto y = solve(dense_to_sparse({{1, -1}}, 2), Vec{0});
    REQUIRE(y.has_value());
    CHECK(*y == Vec{0, 0});  // canonical particular solution

    CHECK_FALSE(solve(dense_to_sparse({{0}}, 1), Vec{1}).has_value());
}

TEST_CASE("rank-nullity and exact kernels on random sparse matrices") {
    std::mt19937 rng(20240817);
    std::uniform_int_distribution<int> val(-3, 3);
    std::uniform_int_distribution<std::size_t> dims(1, 8);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t r = dims(rng), c = dims(rng);
        std::vector<std::vector<int>> rows(r, std::vector<int>(c));
        for (auto& row : rows) {
            for (auto& v : row) v = val(rng);
        }
        SparseMatrix m = dense_to_sparse(rows, c);
        Subspace ker = kernel_basis(m);
        Subspace im = image_basis(m);
        CHECK(ker.dim() + im.dim() == c);
        // row rank equals column rank
        CHECK(image_basis(m.transpose()).dim() == im.dim());
        for (const auto& v : ker.basis) {
            Vec out = m.apply(v);
            CHECK(std::all_of(out.begin(), out.end(),
                              [](const Rational& x) { return x == 0; }));
        }
    }
}

TEST_CASE("RREF canonicity: shuffled spanning sets give identical bases") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> val(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Vec> vs;
        for (int i = 0; i < 5; ++i) {
            Vec v(6);
            for (auto& x : v) x = val(rng);
            vs.push_back(v);
        }
        Subspace a = Subspace::from_spanning(6, vs);
        std::shuffle(vs.begin(), vs.end(), rng);
        // also rescale and mix
        if (vs.size() > 1) {
            for (std::size_t i = 0; i < vs[0].size(); ++i) vs[0][i] = vs[0][i] * Rational(3, 2) + vs[1][i];
        }
        Subspace b = Subspace::from_spanning(6, vs);
        CHECK(subspace_equal(a, b));
    }
}

TEST_CASE("sparse kernel agrees with the naive dense oracle") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<int> val(-2, 2);
    std::uniform_int_distribution<std::size_t> dims(1, 7);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t r = dims(rng), c = dims(rng);
        std::vector<std::vector<int>> rows(r, std::vector<int>(c));
        std::vector<Vec> dense(r, Vec(c));
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < c; ++j) {
                rows[i][j] = val(rng);
                dense[i][j] = rows[i][j];
            }
        }
        auto oracle = testing::dense_nullspace(dense, c);
        Subspace ker = kernel_basis(dense_to_sparse(rows, c));
        REQUIRE(oracle.size() == ker.dim());
        for (std::size_t i = 0; i < oracle.size(); ++i) CHECK(oracle[i] == ker.basis[i]);
    }
}
