#include "oracles.hpp"
#include "supvar/superalgebra.hpp"

#include <catch_amalgamated.hpp>

using namespace supvar;

namespace {

SuperMonomial mono(std::vector<std::uint16_t> e)
{
    return SuperMonomial(std::move(e));
}

}  // namespace

TEST_CASE("monomial bases")
{
    Field f = Field::prime(3);
    GradedCommutativeAlgebra A(f, {{"y*", 1, 1, GenKind::Polynomial}, {"<x*>", 0, 1, GenKind::Polynomial}});
    auto b2 = A.basis(2);
    REQUIRE(b2.size() == 2);
    CHECK(std::find(b2.begin(), b2.end(), mono({2, 0})) != b2.end());
    CHECK(std::find(b2.begin(), b2.end(), mono({1, 1})) != b2.end());
    CHECK(A.basis(0) == std::vector<SuperMonomial>{mono({0, 0})});

    GradedCommutativeAlgebra S(f, {{"a", 1, 1, GenKind::Polynomial}, {"b", 1, 1, GenKind::Polynomial}});
    for (int n = 0; n < 8; ++n)
        CHECK(S.basis(n).size() == std::size_t(n + 1));
}

TEST_CASE("product signs and divided powers")
{
    Field f = Field::prime(3);
    GradedCommutativeAlgebra E(f, {{"<x*>", 0, 1, GenKind::Polynomial}});
    CHECK_FALSE(E.multiply(mono({1}), mono({1})).has_value());

    GradedCommutativeAlgebra G(f, {{"x", 0, 2, GenKind::DividedPower}});
    CHECK_FALSE(G.multiply(mono({1}), mono({2})).has_value());
    Field f5 = Field::prime(5);
    GradedCommutativeAlgebra G5(f5, {{"x", 0, 2, GenKind::DividedPower}});
    auto r = G5.multiply(mono({1}), mono({2}));
    REQUIRE(r.has_value());
    CHECK(r->first == mono({3}));
    CHECK(r->second == Scalar(f5, 3));

    // odd degree-1 u and even degree-1 v: uv = -vu
    GradedCommutativeAlgebra U(f, {{"u", 1, 1, GenKind::Polynomial}, {"v", 0, 1, GenKind::Polynomial}});
    auto uv = U.multiply(U.generator(0), U.generator(1));
    auto vu = U.multiply(U.generator(1), U.generator(0));
    CHECK(uv == vu.scaled(-Scalar::one(f)));
}

TEST_CASE("sign law and associativity on random monomials")
{
    std::mt19937_64 rng(11);
    Field f = Field::prime(5);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<GeneratorSpec> gens;
        std::size_t n = 1 + rng() % 4;
        for (std::size_t i = 0; i < n; ++i)
            gens.push_back({"g" + std::to_string(i), int(rng() % 2), int(1 + rng() % 2),
                            rng() % 2 ? GenKind::Polynomial : GenKind::DividedPower});
        GradedCommutativeAlgebra A(f, gens);
        std::vector<SuperMonomial> pool;
        for (int d = 0; d <= 3; ++d)
            for (auto& m : A.basis(d))
                pool.push_back(m);
        for (int k = 0; k < 40; ++k) {
            const auto& a = pool[rng() % pool.size()];
            const auto& b = pool[rng() % pool.size()];
            const auto& c = pool[rng() % pool.size()];
            auto ab = A.multiply(A.monomial(a), A.monomial(b));
            auto ba = A.multiply(A.monomial(b), A.monomial(a));
            int e = A.parity(a) * A.parity(b) + A.degree(a) * A.degree(b);
            CHECK(ab == ba.scaled(e % 2 ? -Scalar::one(f) : Scalar::one(f)));
            auto l = A.multiply(ab, A.monomial(c));
            auto r = A.multiply(A.monomial(a), A.multiply(A.monomial(b), A.monomial(c)));
            CHECK(l == r);
        }
        // homogeneous elements with parity + degree odd square to zero
        for (int d = 1; d <= 3; ++d) {
            AlgebraElement x;
            for (auto& m : A.basis(d))
                if ((A.parity(m) + d) % 2 == 1)
                    x.add(m, oracle::random_scalar(f, rng));
            CHECK(A.multiply(x, x).empty());
        }
    }
}

TEST_CASE("finite algebras are graded-commutative and associative")
{
    std::mt19937_64 rng(3);
    Field f = Field::prime(3);
    for (int trial = 0; trial < 15; ++trial) {
        auto A = oracle::random_finite_algebra(f, rng, 12);
        CHECK(check_graded_commutativity(A));
        CHECK(check_associativity(A));
    }
    // truncated polynomial ring k[y*]/((y*)^2)
    GradedCommutativeAlgebra Y(f, {{"y*", 1, 1, GenKind::Polynomial}});
    auto T = FiniteGradedSuperalgebra::truncation(Y, 1);
    CHECK(check_graded_commutativity(T));
}

TEST_CASE("a flipped structure constant breaks graded commutativity")
{
    Field f = Field::prime(5);
    GradedCommutativeAlgebra A(f, {{"u", 1, 1, GenKind::Polynomial}, {"v", 1, 1, GenKind::Polynomial}});
    auto T = FiniteGradedSuperalgebra::truncation(A, 2);
    std::size_t iu = 0, iv = 0;
    for (std::size_t i = 0; i < T.dim(); ++i) {
        if (T.basis()[i].name == "u")
            iu = i;
        if (T.basis()[i].name == "v")
            iv = i;
    }
    Vector s = T.structure(iu, iv);
    T.set_structure(iu, iv, scale(-Scalar::one(f), s));
    CHECK_FALSE(check_graded_commutativity(T));
}

TEST_CASE("nilradical examples")
{
    Field f = Field::prime(3);
    SECTION("exterior on an even degree-1 generator")
    {
        GradedCommutativeAlgebra A(f, {{"t", 0, 1, GenKind::Polynomial}});
        auto T = FiniteGradedSuperalgebra::truncation(A, 5);
        auto N = nilradical_decomposition(T);
        CHECK(N.full_nilradical.size() == 1);
        CHECK(N.nil_of_R.empty());
        CHECK(N.square_zero.size() == 1);
    }
    SECTION("k[s]/(s^4) with s even of degree 2")
    {
        GradedCommutativeAlgebra A(f, {{"s", 0, 2, GenKind::Polynomial}});
        auto T = FiniteGradedSuperalgebra::truncation(A, 6);
        CHECK(T.truncated());
        auto N = nilradical_decomposition(T);
        CHECK(N.nil_of_R.size() == 3);
        CHECK(N.full_nilradical.size() == 3);
    }
    SECTION("k[s] truncated by degree is flagged")
    {
        GradedCommutativeAlgebra A(f, {{"s", 0, 2, GenKind::Polynomial}});
        auto T = FiniteGradedSuperalgebra::truncation(A, 5);
        auto N = nilradical_decomposition(T);
        CHECK(N.truncated);
        CHECK(N.full_nilradical.size() == T.dim() - 1);
    }
    SECTION("k[s]/(s^2 - 1) is reduced over Q")
    {
        Field q = Field::rationals();
        auto B = FiniteGradedSuperalgebra::degree_zero_quotient(q, {Scalar(q, -1), Scalar(q, 0)});
        CHECK(nilradical_decomposition(B).full_nilradical.empty());
        auto C = FiniteGradedSuperalgebra::degree_zero_quotient(q, {Scalar(q, 1), Scalar(q, -2)});
        CHECK(nilradical_decomposition(C).full_nilradical.size() == 1);
    }
}

TEST_CASE("nilradical agrees with brute-force nilpotency over F_3")
{
    std::mt19937_64 rng(23);
    Field f = Field::prime(3);
    for (int trial = 0; trial < 10; ++trial) {
        auto A = oracle::random_finite_algebra(f, rng, 7);
        auto N = nilradical_decomposition(A);
        CHECK(oracle::span_elements(f, A.dim(), N.full_nilradical) == oracle::brute_nilpotent_elements(A));
    }
}
