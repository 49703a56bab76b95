#include "oracles.hpp"
#include "supvar/matrix.hpp"

#include <catch_amalgamated.hpp>

using namespace supvar;

TEST_CASE("scalar arithmetic over F_p and Q")
{
    Field f5 = Field::prime(5);
    CHECK(Scalar(f5, 2).inv() == Scalar(f5, 3));
    for (std::uint32_t p : {3u, 5u, 7u}) {
        Field f = Field::prime(p);
        CHECK((Scalar(f, p - 1) + Scalar(f, 1)).is_zero());
    }
    Field q = Field::rationals();
    CHECK(Scalar::parse(q, "2/3").inv() == Scalar::parse(q, "3/2"));
    CHECK(Scalar::parse(f5, "1/2") == Scalar(f5, 3));
    CHECK_THROWS_AS(Scalar::zero(f5).inv(), FieldError);
    CHECK_THROWS_AS(Field::prime(9), FieldError);
    CHECK_THROWS_AS(Field::prime(2), FieldError);
}

TEST_CASE("binomial matches integer binomials reduced mod p")
{
    for (std::uint32_t p : {3u, 5u, 7u}) {
        Field f = Field::prime(p);
        for (std::uint64_t n = 0; n < 20; ++n)
            for (std::uint64_t k = 0; k <= n; ++k)
                CHECK(binomial(f, n, k) == Scalar(f, static_cast<std::int64_t>(oracle::binom(n, k) % p)));
    }
    Field q = Field::rationals();
    CHECK(binomial(q, 10, 4) == Scalar(q, 210));
}

TEST_CASE("rank examples")
{
    Field f3 = Field::prime(3), f5 = Field::prime(5);
    CHECK(rank(Matrix::identity(f3, 2)) == 2);
    CHECK(rank(Matrix(f3, 3, 4)) == 0);
    CHECK(rank(Matrix::from_rows(f5, {{1, 2}, {2, 4}})) == 1);
}

TEST_CASE("kernel and solve examples")
{
    Field f3 = Field::prime(3), f5 = Field::prime(5);
    CHECK(kernel_basis(Matrix::identity(f3, 3)).empty());
    auto k = kernel_basis(Matrix(f3, 2, 2));
    REQUIRE(k.size() == 2);
    CHECK(k[0] == unit_vector(f3, 2, 0));
    CHECK(k[1] == unit_vector(f3, 2, 1));
    auto k1 = kernel_basis(Matrix::from_rows(f3, {{1, 1}}));
    REQUIRE(k1.size() == 1);
    CHECK(k1[0] == Vector{Scalar(f3, 2), Scalar(f3, 1)});

    CHECK(*solve(Matrix::identity(f3, 2), unit_vector(f3, 2, 0)) == unit_vector(f3, 2, 0));
    CHECK_FALSE(solve(Matrix(f3, 2, 2), unit_vector(f3, 2, 1)).has_value());
    auto s = solve(Matrix::from_rows(f5, {{1, 2}, {2, 4}}), Vector{Scalar(f5, 1), Scalar(f5, 2)});
    REQUIRE(s.has_value());
    CHECK(*s == Vector{Scalar(f5, 1), Scalar(f5, 0)});
}

TEST_CASE("rank-nullity and solve on random matrices")
{
    std::mt19937_64 rng(17);
    for (Field f : {Field::prime(3), Field::prime(7), Field::rationals()}) {
        for (int trial = 0; trial < 60; ++trial) {
            std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
            Matrix m(f, r, c);
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = 0; j < c; ++j)
                    if (rng() % 3)
                        m(i, j) = oracle::random_scalar(f, rng);
            auto ker = kernel_basis(m);
            CHECK(rank(m) + ker.size() == c);
            for (const auto& v : ker)
                CHECK(is_zero(m.apply(v)));
            Vector rhs = zero_vector(f, r);
            for (std::size_t i = 0; i < r; ++i)
                rhs[i] = oracle::random_scalar(f, rng);
            if (auto x = solve(m, rhs))
                CHECK(m.apply(*x) == rhs);
            // rhs in the column space is always solvable
            Vector x0 = zero_vector(f, c);
            for (auto& e : x0)
                e = oracle::random_scalar(f, rng);
            auto y = solve(m, m.apply(x0));
            REQUIRE(y.has_value());
            CHECK(m.apply(*y) == m.apply(x0));
        }
    }
}

TEST_CASE("sparse rank agrees with dense rank")
{
    std::mt19937_64 rng(5);
    Field f = Field::prime(5);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
        Matrix m(f, r, c);
        std::vector<SparseRow> rows;
        for (std::size_t i = 0; i < r; ++i) {
            SparseRow row;
            for (std::size_t j = 0; j < c; ++j)
                if (rng() % 2) {
                    m(i, j) = Scalar(f, static_cast<std::int64_t>(rng() % 5));
                    if (!m(i, j).is_zero())
                        row.entries.emplace_back(j, m(i, j).residue());
                }
            rows.push_back(row);
        }
        CHECK(rank_sparse_mod_p(rows, 5) == rank(m));
    }
}

TEST_CASE("rref is canonical and deterministic")
{
    Field f = Field::prime(7);
    Matrix a = Matrix::from_rows(f, {{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
    Matrix b = Matrix::from_rows(f, {{0, 1, 1}, {3, 6, 9}, {1, 3, 4}});
    CHECK(rref(a).reduced == rref(b).reduced);
    CHECK(rref(a).pivots == rref(b).pivots);
}

TEST_CASE("subspace membership")
{
    Field f = Field::prime(3);
    Subspace s(f, 3);
    CHECK(s.add(Vector{Scalar(f, 1), Scalar(f, 1), Scalar(f, 0)}));
    CHECK_FALSE(s.add(Vector{Scalar(f, 2), Scalar(f, 2), Scalar(f, 0)}));
    CHECK(s.contains(zero_vector(f, 3)));
    CHECK_FALSE(s.contains(unit_vector(f, 3, 2)));
    CHECK(s.dim() == 1);
}
