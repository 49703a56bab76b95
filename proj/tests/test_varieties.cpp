#include "oracles.hpp"
#include "supvar/catalog.hpp"
#include "supvar/varieties.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

using namespace supvar;

namespace {

Vector vec(const Field& f, std::vector<std::int64_t> c)
{
    Vector v;
    for (auto x : c)
        v.push_back(Scalar(f, x));
    return v;
}

Vector gl_elem(const LieSuperalgebra& g, std::vector<std::pair<const char*, std::int64_t>> terms)
{
    Vector v = g.zero();
    for (auto [n, c] : terms)
        v[*g.index_of(n)] = Scalar(g.field(), c);
    return v;
}

// same algebra with basis vector i renamed to position perm[i]
LieSuperalgebra permuted(const LieSuperalgebra& g, const std::vector<std::size_t>& perm)
{
    const std::size_t n = g.dim();
    std::vector<std::string> names(n);
    std::vector<int> par(n);
    for (std::size_t i = 0; i < n; ++i) {
        names[perm[i]] = g.name(i);
        par[perm[i]] = g.parity(i);
    }
    auto move = [&](const Vector& v) {
        Vector w = g.zero();
        for (std::size_t i = 0; i < n; ++i)
            w[perm[i]] = v[i];
        return w;
    };
    LieSuperalgebra h(g.field(), names, par);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            h.set_bracket(perm[i], perm[j], move(g.bracket_basis_dense(i, j)));
    if (g.has_pmap()) {
        std::vector<Vector> im(n, g.zero());
        for (auto i : g.even_indices())
            im[perm[i]] = move(g.pmap_basis(i));
        h.set_pmap(im);
    }
    return h;
}

std::set<Vector> as_set(const std::vector<Vector>& v)
{
    return {v.begin(), v.end()};
}

}  // namespace

TEST_CASE("cone membership")
{
    Field f = Field::prime(3);
    auto ab = build_odd_abelian(2, f);
    for (const auto& x : all_points(f, 2))
        CHECK(cone_membership(ab, x));

    auto e = build_ex_3_1_2(f);
    CHECK(cone_membership(e, e.zero()));
    CHECK_FALSE(cone_membership(e, e.basis_vector(1)));
    CHECK_THROWS(cone_membership(e, e.basis_vector(0)));

    auto g = build_gl(1, 1, f);
    for (std::int64_t a = 0; a < 3; ++a)
        for (std::int64_t b = 0; b < 3; ++b)
            CHECK(cone_membership(g, gl_elem(g, {{"e12", a}, {"e21", b}})) == (a * b % 3 == 0));
}

TEST_CASE("cone enumeration")
{
    Field f = Field::prime(3);
    CHECK(enumerate_cone(build_odd_abelian(2, f)).size() == 9);
    auto g = build_gl(1, 1, f);
    auto pts = enumerate_cone(g);
    CHECK(pts.size() == 5);
    CHECK(pts.size() == oracle::brute_cone_count(g));
    CHECK(std::is_sorted(pts.begin(), pts.end()));
    CHECK(is_zero(pts.front()));
    auto zero = build_gl(1, 0, f);
    CHECK(enumerate_cone(zero).size() == 1);
    CHECK_THROWS_AS(enumerate_cone(build_odd_abelian(4, f), 50), ResourceBound);

    for (std::uint32_t p : {3u, 5u}) {
        Field fp = Field::prime(p);
        for (auto& e : catalog(fp)) {
            if (e.algebra.dim_odd() > 4)
                continue;
            INFO(e.name << " p=" << p);
            CHECK(enumerate_cone(e.algebra).size() == oracle::brute_cone_count(e.algebra));
        }
    }
}

TEST_CASE("freeness over an odd point")
{
    Field f = Field::prime(3);
    auto line = build_odd_abelian(1, f);
    auto x = line.basis_vector(0);
    CHECK(free_over_odd_point(oracle::exterior_regular_module(line), x));
    CHECK_FALSE(free_over_odd_point(trivial_module(line), x));
    CHECK_THROWS_AS(free_over_odd_point(trivial_module(line), line.zero()), std::invalid_argument);

    auto g = build_gl(1, 1, f);
    CHECK(free_over_odd_point(natural_module(g), gl_elem(g, {{"e12", 1}})));
    CHECK_THROWS(free_over_odd_point(natural_module(g), gl_elem(g, {{"e12", 1}, {"e21", 1}})));
}

TEST_CASE("support examples")
{
    Field f = Field::prime(3);
    auto g = build_gl(1, 1, f);
    auto nat = support_points(g, natural_module(g));
    CHECK(nat.is_zero_only);
    CHECK(nat.members.size() == 1);
    CHECK(nat.tested_points == 5);

    auto triv = support_points(g, trivial_module(g));
    CHECK(triv.members.size() == 5);
    REQUIRE(triv.dimension_estimate.has_value());
    CHECK(*triv.dimension_estimate == 1);
    CHECK(triv.dimension_exact);

    auto ab = build_odd_abelian(2, f);
    CHECK(support_points(ab, oracle::exterior_regular_module(ab)).is_zero_only);
    auto k2 = support_points(ab, trivial_module(ab));
    CHECK(k2.members.size() == 9);
    CHECK(*k2.dimension_estimate == 2);
}

TEST_CASE("free over exterior")
{
    Field f = Field::prime(3);
    for (std::size_t d : {1u, 2u, 3u}) {
        auto ab = build_odd_abelian(d, f);
        std::vector<Vector> basis;
        for (std::size_t i = 0; i < d; ++i)
            basis.push_back(ab.basis_vector(i));
        CHECK(free_over_exterior(oracle::exterior_regular_module(ab), basis));
        CHECK_FALSE(free_over_exterior(trivial_module(ab), basis));
    }
    auto line = build_odd_abelian(1, f);
    auto sum = direct_sum(oracle::exterior_regular_module(line), trivial_module(line));
    CHECK_FALSE(free_over_exterior(sum, {line.basis_vector(0)}));

    auto g = build_gl(1, 1, f);
    CHECK_THROWS(free_over_exterior(natural_module(g), {gl_elem(g, {{"e12", 1}}), gl_elem(g, {{"e21", 1}})}));
}

TEST_CASE("C_r membership and counts")
{
    Field f = Field::prime(3);
    auto g = build_gl(1, 1, f);
    CHECK(cr_membership(g, {{g.zero()}, g.zero()}, 1));
    CHECK(cr_membership(g, {{gl_elem(g, {{"e11", 1}, {"e22", 1}})}, gl_elem(g, {{"e12", 1}, {"e21", 1}})}, 1));
    CHECK_FALSE(cr_membership(g, {{gl_elem(g, {{"e11", 1}})}, gl_elem(g, {{"e12", 1}, {"e21", 1}})}, 1));
    CHECK_THROWS(cr_membership(g, {{g.zero(), g.zero()}, g.zero()}, 1));

    auto c = enumerate_cr(g, 1);
    CHECK(c.count() == 9);
    CHECK(c.count() == oracle::brute_cr_count(g, 1));
    CHECK(c.tested == 81);

    // g0 = 0: C_1 is the cone
    auto ab = build_odd_abelian(2, f);
    CHECK(enumerate_cr(ab, 1).count() == enumerate_cone(ab).size());

    CHECK_THROWS_AS(enumerate_cr(g, 2, 100), ResourceBound);
}

TEST_CASE("C_r on a p-nilpotent line")
{
    Field f = Field::prime(3);
    // g0 spanned by x with x^[p] = 0
    LieSuperalgebra g(f, {"x"}, {0});
    g.set_bracket(0, 0, g.zero());
    g.set_pmap({g.zero()});
    CHECK(enumerate_cr(g, 1).count() == 3);
    CHECK(enumerate_cr(g, 2).count() == 9);
    // x^[p] = x kills every nonzero alpha
    LieSuperalgebra h(f, {"x"}, {0});
    h.set_pmap({h.basis_vector(0)});
    CHECK(enumerate_cr(h, 2).count() == 1);
}

TEST_CASE("C_r on gl(2|0) is the commuting p-nilpotent variety")
{
    Field f = Field::prime(3);
    auto g = build_gl(2, 0, f);
    auto c1 = enumerate_cr(g, 1);
    CHECK(c1.count() == 9);  // nilpotent 2x2 matrices over F_3
    CHECK(c1.count() == oracle::brute_cr_count(g, 1));
    CHECK(enumerate_cr(g, 2).count() == oracle::brute_cr_count(g, 2));
    for (const auto& t : c1.points) {
        Matrix a = g.realize(t.alphas[0]);
        CHECK(a.pow(3).is_zero());
    }
}

TEST_CASE("C_r counts are invariant under basis permutations")
{
    Field f = Field::prime(3);
    std::mt19937_64 rng(12);
    for (auto g : {build_gl(1, 1, f), build_ex_5_3_1(f), build_ex_5_3_2(f), build_gl(2, 0, f)}) {
        std::vector<std::size_t> perm(g.dim());
        std::iota(perm.begin(), perm.end(), 0);
        const auto base1 = enumerate_cr(g, 1).count();
        const auto cone = enumerate_cone(g).size();
        for (int t = 0; t < 3; ++t) {
            std::shuffle(perm.begin(), perm.end(), rng);
            auto h = permuted(g, perm);
            CHECK(validate(h).ok());
            CHECK(enumerate_cr(h, 1).count() == base1);
            CHECK(enumerate_cone(h).size() == cone);
        }
    }
}

TEST_CASE("support properties on random modules")
{
    Field f = Field::prime(3);
    std::mt19937_64 rng(2024);
    auto ab = build_odd_abelian(2, f);
    auto gl = build_gl(1, 1, f);
    for (int t = 0; t < 20; ++t) {
        for (const LieSuperalgebra* g : {&ab, &gl}) {
            auto M = g == &ab ? oracle::random_exterior_module(ab, rng) : oracle::random_gl11_module(gl, rng);
            auto N = g == &ab ? oracle::random_exterior_module(ab, rng) : oracle::random_gl11_module(gl, rng);
            auto sm = support_points(*g, M);
            // contains 0 and is conical
            CHECK(std::find_if(sm.members.begin(), sm.members.end(), [](const Vector& v) { return is_zero(v); }) !=
                  sm.members.end());
            auto S = as_set(sm.members);
            for (const auto& v : sm.members)
                CHECK(S.count(scale(Scalar(f, 2), v)) == 1);

            auto pd = parity_directsum_checks(*g, M, N);
            CHECK(pd.union_law);
            CHECK(pd.parity_invariant);
            auto ts = tensor_support_check(*g, M, N);
            CHECK(ts.subset_holds);

            // direct sum freeness is the conjunction
            auto MN = direct_sum(M, N);
            for (const auto& c : enumerate_cone(*g)) {
                if (is_zero(c))
                    continue;
                auto x = odd_embed(*g, c);
                CHECK(free_over_odd_point(MN, x) == (free_over_odd_point(M, x) && free_over_odd_point(N, x)));
                CHECK(free_over_exterior(M, {x}) == free_over_odd_point(M, x));
            }
        }
    }
}

TEST_CASE("support {0} iff free over the whole exterior algebra")
{
    Field f = Field::prime(3);
    std::mt19937_64 rng(55);
    auto ab = build_odd_abelian(2, f);
    std::vector<Vector> basis{ab.basis_vector(0), ab.basis_vector(1)};
    int zero_only = 0;
    for (int t = 0; t < 40; ++t) {
        auto M = oracle::random_exterior_module(ab, rng);
        bool z = support_points(ab, M).is_zero_only;
        zero_only += z;
        CHECK(z == free_over_exterior(M, basis));
    }
    CHECK(zero_only > 0);
}

TEST_CASE("tensor supports over the exterior algebra")
{
    Field f = Field::prime(3);
    auto ab = build_odd_abelian(2, f);
    auto reg = oracle::exterior_regular_module(ab);
    auto k = trivial_module(ab);
    auto r1 = tensor_support_check(ab, reg, k);
    CHECK(r1.equality_holds);
    CHECK(as_set(r1.support_mn) == as_set(r1.support_m));
    auto r2 = tensor_support_check(ab, reg, reg);
    CHECK(r2.support_mn.size() == 1);
    std::mt19937_64 rng(8);
    for (int t = 0; t < 15; ++t) {
        auto r = tensor_support_check(ab, oracle::random_exterior_module(ab, rng), oracle::random_exterior_module(ab, rng));
        CHECK(r.subset_holds);
        CHECK(r.equality_holds);
    }
}

namespace {

// Lambda(V), V = Q^{0|2}, basis 1, xy | x, y
SmashModule exterior(const LieSuperalgebra& v2, bool swap)
{
    SmashModule M{oracle::exterior_regular_module(v2), {}, {}};
    if (swap) {
        const Field& q = v2.field();
        M.group_on_v.push_back(Matrix::from_rows(q, {{0, 1}, {1, 0}}));
        M.group_on_m.push_back(Matrix::from_rows(q, {{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, 0, 1}, {0, 0, 1, 0}}));
    }
    return M;
}

SmashModule trivial(const LieSuperalgebra& v2, bool swap, int sign = 1)
{
    SmashModule M{trivial_module(v2), {}, {}};
    if (swap) {
        M.group_on_v.push_back(Matrix::from_rows(v2.field(), {{0, 1}, {1, 0}}));
        M.group_on_m.push_back(Matrix::from_rows(v2.field(), {{sign}}));
    }
    return M;
}

// Lambda(V) # kG for G = Z/2: two copies of Lambda(V) exchanged by the generator
SmashModule smash_regular(const LieSuperalgebra& v2)
{
    auto L = exterior(v2, true);
    auto S = smash_direct_sum(L, L);
    const std::size_t n = S.module.dim();
    // block-swap permutation in the direct-sum layout: even a, even b, odd a, odd b
    Matrix P(v2.field(), n, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t j = (i < 4) ? (i < 2 ? i + 2 : i - 2) : (i < 6 ? i + 2 : i - 2);
        P(j, i) = Scalar::one(v2.field());
    }
    S.group_on_m[0] = P * S.group_on_m[0];
    return S;
}

std::vector<Vector> test_vectors(const Field& q)
{
    std::vector<Vector> out;
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            out.push_back(vec(q, {a, b}));
    return out;
}

std::vector<Vector> detected(const OrbitReport& r)
{
    std::vector<Vector> out;
    for (std::size_t i = 0; i < r.orbits.size(); ++i)
        if (r.member[i])
            for (const auto& v : r.orbits[i])
                out.push_back(v);
    return out;
}

}  // namespace

TEST_CASE("characteristic zero supports")
{
    Field q = Field::rationals();
    auto v2 = build_odd_abelian(2, q);
    auto tv = test_vectors(q);

    auto reg = char0_support(exterior(v2, false), tv);
    CHECK(reg.group_order == 1);
    for (std::size_t i = 0; i < reg.orbits.size(); ++i)
        CHECK(reg.member[i] == is_zero(reg.representatives[i]));

    auto k = char0_support(trivial(v2, false), tv);
    CHECK(std::all_of(k.member.begin(), k.member.end(), [](bool b) { return b; }));

    auto sm = smash_regular(v2);
    CHECK(smash_compatible(sm));
    auto rs = char0_support(sm, {vec(q, {1, 0}), vec(q, {0, 1}), vec(q, {1, 1})});
    CHECK(rs.group_order == 2);
    REQUIRE(rs.orbits.size() == 2);
    CHECK(rs.orbits[0].size() == 2);
    CHECK(rs.representatives[0] == vec(q, {0, 1}));
    CHECK_FALSE(rs.member[0]);
    CHECK_FALSE(rs.member[1]);

    SmashModule bad = exterior(v2, true);
    bad.group_on_m[0] = Matrix::identity(q, 4);
    CHECK_FALSE(smash_compatible(bad));
    CHECK_THROWS(char0_support(bad, tv));
}

TEST_CASE("two-divisibility")
{
    Field q = Field::rationals();
    auto v2 = build_odd_abelian(2, q);
    auto tv = test_vectors(q);
    std::vector<SmashModule> mods{exterior(v2, false), trivial(v2, false), exterior(v2, true), trivial(v2, true),
                                  trivial(v2, true, -1), smash_regular(v2)};
    SmashModule both{direct_sum(exterior(v2, false).module, parity_change(v2.parities(), exterior(v2, false).module)),
                     {}, {}};
    mods.push_back(both);
    for (const auto& M : mods) {
        auto rep = two_divisibility_check(M, detected(char0_support(M, tv)));
        CHECK(rep.pass());
    }
    auto L = two_divisibility_check(mods[0], detected(char0_support(mods[0], tv)));
    CHECK(L.codim == 2);
    CHECK(L.sdim == 0);
    auto B = two_divisibility_check(both, detected(char0_support(both, tv)));
    CHECK(B.dim == 8);
    CHECK(B.codim == 2);

    std::mt19937_64 rng(6);
    for (int t = 0; t < 20; ++t) {
        const bool swap = t % 2;
        auto pick = [&]() {
            switch (rng() % 4) {
            case 0: return trivial(v2, swap, rng() % 2 ? 1 : -1);
            case 1: return exterior(v2, swap);
            case 2: return swap ? smash_regular(v2) : exterior(v2, false);
            default: return trivial(v2, swap);
            }
        };
        SmashModule M = pick();
        for (int k = rng() % 3; k > 0; --k)
            M = smash_direct_sum(M, pick());
        CHECK(smash_compatible(M));
        auto rep = two_divisibility_check(M, detected(char0_support(M, tv)));
        CHECK(rep.pass());
    }
}

TEST_CASE("characteristic zero tensor supports")
{
    Field q = Field::rationals();
    auto v2 = build_odd_abelian(2, q);
    auto tv = test_vectors(q);
    for (bool swap : {false, true}) {
        std::vector<SmashModule> mods{exterior(v2, swap), trivial(v2, swap), smash_direct_sum(exterior(v2, swap), trivial(v2, swap))};
        if (swap)
            mods.push_back(smash_regular(v2));
        for (const auto& M : mods)
            for (const auto& N : mods) {
                auto r = char0_tensor_check(M, N, tv);
                CHECK(r.tested == tv.size() - 1);  // 0 is skipped
                CHECK(r.mismatches == 0);
                CHECK(smash_compatible(smash_tensor(M, N)));
            }
    }
}

TEST_CASE("invariant dimensions against the Molien series")
{
    Field q = Field::rationals();
    std::vector<Matrix> swap{Matrix::from_rows(q, {{0, 1}, {1, 0}})};
    auto dims = invariant_dimensions(swap, 6);
    CHECK(std::vector<std::size_t>(dims.begin(), dims.begin() + 5) == std::vector<std::size_t>{1, 1, 2, 2, 3});
    auto mol = oracle::molien_coefficients(oracle::enumerate_group(swap), 6);
    for (int n = 0; n <= 6; ++n)
        CHECK(Rational(static_cast<long>(dims[n])) == mol[n]);

    auto triv = invariant_dimensions({Matrix::identity(q, 2)}, 4);
    for (int n = 0; n <= 4; ++n)
        CHECK(triv[n] == std::size_t(n + 1));

    std::vector<Matrix> neg{Matrix::from_rows(q, {{-1, 0}, {0, -1}})};
    auto dn = invariant_dimensions(neg, 6);
    auto mn = oracle::molien_coefficients(oracle::enumerate_group(neg), 6);
    for (int n = 0; n <= 6; ++n)
        CHECK(Rational(static_cast<long>(dn[n])) == mn[n]);
    std::vector<Matrix> rot{Matrix::from_rows(q, {{0, -1}, {1, 0}})};
    auto dr = invariant_dimensions(rot, 8);
    auto mr = oracle::molien_coefficients(oracle::enumerate_group(rot), 8);
    for (int n = 0; n <= 8; ++n)
        CHECK(Rational(static_cast<long>(dr[n])) == mr[n]);
}

TEST_CASE("complexity over exterior algebras")
{
    Field f = Field::prime(3);
    auto ab = build_odd_abelian(2, f);
    auto r = complexity_sequence(ab, trivial_module(ab), 11);
    for (std::size_t n = 0; n <= 10; ++n)
        CHECK(r.dims[n] == 4 * (n + 1));
    CHECK(r.growth_exponent >= 0.9);
    CHECK(r.growth_exponent <= 1.1);
    CHECK(r.complexity == 2);
    CHECK(*support_points(ab, trivial_module(ab)).dimension_estimate == r.complexity);

    auto line = build_odd_abelian(1, f);
    auto l = complexity_sequence(line, trivial_module(line), 8);
    for (auto d : l.dims)
        CHECK(d == 2);
    CHECK(l.complexity == 1);

    auto p = complexity_sequence(ab, oracle::exterior_regular_module(ab), 6);
    CHECK(p.dims[0] == 4);
    for (std::size_t n = 1; n < p.dims.size(); ++n)
        CHECK(p.dims[n] == 0);
    CHECK(p.complexity == 0);
    CHECK(support_points(ab, oracle::exterior_regular_module(ab)).is_zero_only);

    CHECK_THROWS(complexity_sequence(ab, trivial_module(ab), 100, 64));
    CHECK_THROWS(complexity_sequence(build_gl(1, 1, f), trivial_module(build_gl(1, 1, f)), 4));
}
