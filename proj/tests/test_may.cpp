#include "oracles.hpp"
#include "supvar/catalog.hpp"
#include "supvar/koszul.hpp"
#include "supvar/may.hpp"

#include <catch_amalgamated.hpp>

using namespace supvar;

namespace {

SuperMonomial mono(std::vector<std::uint16_t> e)
{
    return SuperMonomial(std::move(e));
}

PBWMonomial word(std::size_t n, std::vector<std::pair<std::size_t, std::uint16_t>> e)
{
    PBWMonomial m(n);
    for (auto [i, k] : e)
        m[i] = k;
    return m;
}

// (1 (x) a) with a given as an algebra element
void put(ResolutionElement& r, const PBWMonomial& v, const AlgebraElement& a, const Scalar& c)
{
    for (const auto& [m, cc] : a)
        r.add({v, m}, c * cc);
}

Scalar sgn(const Field& f, long e)
{
    return e % 2 ? -Scalar::one(f) : Scalar::one(f);
}

ResolutionOptions light(int truncation, int exact = 2)
{
    ResolutionOptions o;
    o.truncation = truncation;
    o.exactness_through = exact;
    return o;
}

}  // namespace

TEST_CASE("twisting cochain")
{
    Field f = Field::prime(3);
    auto g = build_ex_5_3_1(f);
    auto t = build_twisting_cochain(g);
    REQUIRE(t.images.size() == 1);
    CHECK(t.augmentation_vanishes);
    CHECK(t.twisting_condition);
    // x^{p-1}<x> - <x>
    ResolutionElement expect;
    expect.add({word(2, {{0, 2}}), mono({1, 0, 0})}, Scalar::one(f));
    expect.add({word(2, {}), mono({1, 0, 0})}, -Scalar::one(f));
    CHECK(t.images[0] == expect);

    CHECK(build_twisting_cochain(build_odd_abelian(2, f)).images.empty());

    Field f5 = Field::prime(5);
    auto h = build_ex_5_3_3(2, {Scalar(f5, 1), Scalar(f5, 3), Scalar(f5, 2)}, f5);
    auto th = build_twisting_cochain(h);
    REQUIRE(th.images.size() == 3);
    CHECK(th.twisting_condition);
    // x_j^{p-1}<x_j> - <x_{j+1}>, and x_2^[p] = x0 + 3 x1 + 2 x2
    for (std::size_t j = 0; j < 3; ++j) {
        ResolutionElement e;
        SuperMonomial ext(7);
        ext[j] = 1;
        e.add({word(4, {{j + 1, 4}}), ext}, Scalar::one(f5));
        if (j < 2) {
            SuperMonomial nx(7);
            nx[j + 1] = 1;
            e.add({word(4, {}), nx}, -Scalar::one(f5));
        } else {
            std::int64_t al[3] = {1, 3, 2};
            for (std::size_t i = 0; i < 3; ++i) {
                SuperMonomial nx(7);
                nx[i] = 1;
                e.add({word(4, {}), nx}, -Scalar(f5, al[i]));
            }
        }
        CHECK(th.images[j] == e);
    }
}

TEST_CASE("scope errors")
{
    Field f = Field::prime(3);
    CHECK_THROWS_AS(build_resolution(build_ex_3_1_2(f)), ScopeError);
    CHECK_THROWS_AS(build_resolution(build_gl(2, 0, f)), ScopeError);
    CHECK_THROWS_AS(build_twisting_cochain(build_gl(2, 1, f)), ScopeError);
    CHECK_THROWS_AS(build_resolution(build_odd_abelian(1, Field::rationals())), ScopeError);
}

TEST_CASE("ex_5_3_2: d_t on <x^a> g_b(y) g_c(x)")
{
    for (std::uint32_t p : {3u, 5u}) {
        Field f = Field::prime(p);
        auto g = build_ex_5_3_2(f);
        MayResolution X(g, light(2 * p + 2));
        const auto& A = X.generators();
        const PBWMonomial one = word(2, {});
        for (std::uint16_t a = 0; a <= 1; ++a)
            for (std::uint16_t b = 0; b <= p + 1; ++b)
                for (std::uint16_t c = 0; c <= 2; ++c) {
                    ResolutionElement e;
                    const Scalar bs(f, b);
                    if (a == 1) {
                        e.add({word(2, {{0, 1}}), mono({0, b, c})}, Scalar::one(f));
                        e.add({one, mono({0, b, c})}, bs);
                    }
                    if (b >= 1)
                        e.add({word(2, {{1, 1}}), mono({a, std::uint16_t(b - 1), c})}, sgn(f, a));
                    if (a == 0 && c >= 1) {
                        const SuperMonomial m = mono({1, b, std::uint16_t(c - 1)});
                        for (unsigned i = 0; i < p; ++i)
                            e.add({word(2, {{0, std::uint16_t(p - 1 - i)}}), m},
                                  binomial(f, p - 1, i) * bs.pow(i) * sgn(f, a));
                        e.add({one, m}, -sgn(f, a));
                    }
                    INFO("p=" << p << " a=" << a << " b=" << b << " c=" << c);
                    CHECK(X.differential_generator(mono({a, b, c})) == e);
                    (void)A;
                }
    }
}

TEST_CASE("ex_5_3_3: d_t display")
{
    Field f = Field::prime(3);
    std::mt19937_64 rng(31);
    for (std::size_t n : {1u, 2u}) {
        std::vector<Scalar> al;
        for (std::size_t i = 0; i <= n; ++i)
            al.push_back(oracle::random_scalar(f, rng));
        auto g = build_ex_5_3_3(n, al, f);
        MayResolution X(g, light(6, 1));
        const auto& A = X.generators();
        const std::size_t N = g.dim();
        const std::size_t ne = n + 1;
        const PBWMonomial one = word(N, {});
        auto ext = [&](std::size_t j) { return A.generator(X.ext_slot(j)); };

        for (int deg = 0; deg <= 5; ++deg)
            for (const auto& w : A.basis(deg)) {
                std::vector<std::uint16_t> a(ne), c(ne);
                long asum = 0;
                for (std::size_t i = 0; i < ne; ++i) {
                    a[i] = w[X.ext_slot(i)];
                    c[i] = w[X.gamma_slot(i)];
                    asum += a[i];
                }
                const std::uint16_t b = w[X.odd_slot(0)];
                auto build = [&](const std::vector<std::uint16_t>& aa, std::uint16_t bb,
                                 const std::vector<std::uint16_t>& cc) {
                    SuperMonomial m(A.num_generators());
                    for (std::size_t i = 0; i < ne; ++i) {
                        m[X.ext_slot(i)] = aa[i];
                        m[X.gamma_slot(i)] = cc[i];
                    }
                    m[X.odd_slot(0)] = bb;
                    return m;
                };
                auto ext_part = [&](const std::vector<std::uint16_t>& aa) {
                    return A.monomial(build(aa, 0, std::vector<std::uint16_t>(ne, 0)));
                };
                auto tail = [&](std::uint16_t bb, const std::vector<std::uint16_t>& cc) {
                    return A.monomial(build(std::vector<std::uint16_t>(ne, 0), bb, cc));
                };

                ResolutionElement e;
                long before = 0;
                for (std::size_t j = 0; j < ne; ++j) {
                    if (a[j]) {
                        auto a2 = a;
                        a2[j] = 0;
                        e.add({word(N, {{j + 1, 1}}), build(a2, b, c)}, sgn(f, before));
                        ++before;
                    }
                }
                if (b >= 1)
                    e.add({word(N, {{0, 1}}), build(a, b - 1, c)}, sgn(f, asum));
                if (b >= 2) {
                    // x_1 = x_0^[p]
                    AlgebraElement x1 = ext(1);
                    put(e, one, A.multiply(x1, A.monomial(build(a, b - 2, c))), -Scalar::one(f));
                }
                for (std::size_t j = 0; j < ne; ++j) {
                    if (c[j] == 0)
                        continue;
                    auto c2 = c;
                    c2[j] -= 1;
                    auto head = A.multiply(ext_part(a), ext(j));
                    put(e, word(N, {{j + 1, 2}}), A.multiply(head, tail(b, c2)), sgn(f, asum));
                    if (j + 1 < ne)
                        put(e, one, A.multiply(A.multiply(ext_part(a), ext(j + 1)), tail(b, c2)), -sgn(f, asum));
                    else
                        for (std::size_t i = 0; i < ne; ++i)
                            put(e, one, A.multiply(A.multiply(ext_part(a), ext(i)), tail(b, c2)),
                                -sgn(f, asum) * al[i]);
                }
                INFO("n=" << n << " " << A.format(w));
                CHECK(X.differential_generator(w) == e);
            }
    }
}

TEST_CASE("ex_5_3_2: dual differential display")
{
    for (std::uint32_t p : {3u, 5u}) {
        Field f = Field::prime(p);
        auto g = build_ex_5_3_2(f);
        MayResolution X(g, light(2 * p + 2));
        DualComplex D(X, 2 * p + 1);
        const auto& A = D.algebra();
        for (std::uint16_t b = 0; b <= 2 * p; ++b)
            for (std::uint16_t c = 0; 2 * c + b + 1 < 2 * p + 1; ++c) {
                INFO("p=" << p << " b=" << b << " c=" << c);
                AlgebraElement e0 = A.monomial(mono({1, b, c})).scaled(Scalar(f, b) * sgn(f, b));
                CHECK(D.differential(A.monomial(mono({0, b, c}))) == e0);
                AlgebraElement e1;
                if (b % p == 0)
                    e1 = A.monomial(mono({0, b, std::uint16_t(c + 1)})).scaled(sgn(f, b));
                CHECK(D.differential(A.monomial(mono({1, b, c}))) == e1);
            }
    }
}

TEST_CASE("ex_5_3_3: dual differential display and coboundaries")
{
    Field f = Field::prime(3);
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 6; ++trial) {
        const std::size_t n = 1 + trial % 2;
        const std::size_t ne = n + 1;
        std::vector<Scalar> al;
        for (std::size_t i = 0; i <= n; ++i)
            al.push_back(oracle::random_scalar(f, rng));
        auto g = build_ex_5_3_3(n, al, f);
        MayResolution X(g, light(6, 1));
        DualComplex D(X, 5);
        const auto& A = D.algebra();
        auto m = [&](int ext_i, std::uint16_t b, std::vector<std::uint16_t> c) {
            SuperMonomial r(A.num_generators());
            if (ext_i >= 0)
                r[X.ext_slot(ext_i)] = 1;
            r[X.odd_slot(0)] = b;
            for (std::size_t i = 0; i < ne; ++i)
                r[X.gamma_slot(i)] = c[i];
            return A.monomial(r);
        };
        auto bump = [&](std::vector<std::uint16_t> c, std::size_t i) {
            c[i] += 1;
            return c;
        };
        for (std::uint16_t b = 0; b <= 2; ++b)
            for (const auto& cm : X.generators().basis(0)) {
                (void)cm;
                std::vector<std::uint16_t> c(ne, 0);
                INFO("n=" << n << " b=" << b);
                CHECK(D.differential(m(-1, b, c)).empty());
                const Scalar s = sgn(f, b);
                AlgebraElement e0 = m(-1, b, bump(c, n)).scaled(s * al[0]);
                CHECK(D.differential(m(0, b, c)) == e0);
                AlgebraElement e1 = m(-1, b, bump(c, 0)).scaled(s);
                e1.add(m(-1, b + 2, c), -s);
                e1.add(m(-1, b, bump(c, n)), s * al[1]);
                CHECK(D.differential(m(1, b, c)) == e1);
                for (std::size_t i = 2; i <= n; ++i) {
                    AlgebraElement ei = m(-1, b, bump(c, i - 1)).scaled(s);
                    ei.add(m(-1, b, bump(c, n)), s * al[i]);
                    CHECK(D.differential(m(i, b, c)) == ei);
                }
            }

        // the listed coboundaries
        std::vector<std::uint16_t> z(ne, 0);
        std::vector<AlgebraElement> listed;
        listed.push_back(m(-1, 0, bump(z, n)).scaled(al[0]));
        AlgebraElement l1 = m(-1, 0, bump(z, 0));
        l1.add(m(-1, 0, bump(z, n)), al[1]);
        l1.add(m(-1, 2, z), -Scalar::one(f));
        listed.push_back(l1);
        for (std::size_t i = 1; i < n; ++i) {
            AlgebraElement li = m(-1, 0, bump(z, i));
            li.add(m(-1, 0, bump(z, n)), al[i + 1]);
            listed.push_back(li);
        }
        for (const auto& c : listed) {
            auto prim = D.coboundary_primitive(c);
            REQUIRE(prim.has_value());
            CHECK(D.differential(*prim) == c);
        }
    }
}

TEST_CASE("V(g) cohomology tables")
{
    Field f3 = Field::prime(3);
    CHECK(vg_cohomology(build_ex_5_3_1(f3), 6).dims == std::vector<std::size_t>(7, 1));
    CHECK(vg_cohomology(build_ex_5_3_2(f3), 6).dims == std::vector<std::size_t>{1, 0, 0, 1, 0, 0, 1});
    CHECK(vg_cohomology(build_odd_abelian(1, f3), 4).dims == std::vector<std::size_t>(5, 1));
    Field f5 = Field::prime(5);
    auto d5 = vg_cohomology(build_ex_5_3_2(f5), 10).dims;
    for (std::size_t n = 0; n <= 10; ++n)
        CHECK(d5[n] == (n % 5 == 0 ? 1u : 0u));
}

TEST_CASE("purely odd abelian: V(g) and Lie cohomology agree")
{
    for (std::uint32_t p : {3u, 5u}) {
        Field f = Field::prime(p);
        for (std::size_t d : {1u, 2u, 3u}) {
            auto g = build_odd_abelian(d, f);
            auto k = trivial_module(g);
            auto lie = cohomology(g, k, 6).dims;
            auto vg = vg_cohomology(g, 5).dims;
            CHECK(lie == vg);
            MayResolution X(g, light(6));
            DualComplex D(X, 5);
            for (int n = 0; n < 5; ++n)
                CHECK(D.differential_matrix(n).is_zero());
        }
    }
}

TEST_CASE("edge classes")
{
    Field f = Field::prime(3);
    {
        auto g = build_ex_5_3_1(f);
        MayResolution X(g, light(8));
        DualComplex D(X, 6);
        auto ec = edge_subalgebra_classes(D);
        REQUIRE(ec.even.size() == 1);
        CHECK(ec.even[0].is_cocycle);
        CHECK_FALSE(ec.even[0].is_coboundary);
        // [x*] = [(y*)^2]
        const auto& A = D.algebra();
        AlgebraElement diff = ec.even[0].cochain;
        diff -= A.power(A.generator(X.odd_slot(0)), 2);
        CHECK(D.coboundary_primitive(diff).has_value());
    }
    {
        auto g = build_ex_5_3_2(f);
        MayResolution X(g, light(8));
        DualComplex D(X, 6);
        auto ec = edge_subalgebra_classes(D);
        REQUIRE(ec.even.size() == 1);
        CHECK(ec.even[0].is_coboundary);
        REQUIRE(ec.odd.size() == 1);
        CHECK(ec.odd[0].degree == 3);
        CHECK(ec.odd[0].is_cocycle);
        CHECK_FALSE(ec.odd[0].is_coboundary);
    }
}

TEST_CASE("resolution invariants across the catalog")
{
    for (std::uint32_t p : {3u, 5u}) {
        Field f = Field::prime(p);
        const int top = 2 * static_cast<int>(p) + 2;
        for (auto& e : catalog(f)) {
            const auto& g = e.algebra;
            if (!g.has_pmap() || !g.even_part_abelian())
                continue;
            INFO(e.name << " p=" << p);
            ResolutionOptions o;
            o.truncation = top;
            o.exactness_through = g.dim() <= 2 ? 4 : 1;
            MayResolution X(g, o);
            X.check_square_zero(top);
            DualComplex D(X, top - 1);
            for (int n = 0; n + 1 < top - 1; ++n)
                CHECK((D.differential_matrix(n + 1) * D.differential_matrix(n)).is_zero());
            // with g0 central the dual differential lowers exterior weight by one
            bool central = true;
            for (auto i : g.even_indices())
                for (std::size_t j = 0; j < g.dim(); ++j)
                    central = central && g.bracket_basis(i, j).empty();
            for (int n = 0; central && n < top - 1; ++n)
                for (const auto& m : D.basis(n))
                    for (const auto& [t, c] : D.differential(D.algebra().monomial(m)))
                        CHECK(D.exterior_weight(t) + 1 == D.exterior_weight(m));
            // d_t lowers the homological degree by one
            for (int n = 1; n <= 4; ++n)
                for (const auto& a : X.generator_basis(n))
                    for (const auto& [k, c] : X.differential_generator(a))
                        CHECK(X.generators().degree(k.second) == n - 1);
        }
    }
}

TEST_CASE("exactness of X(g)")
{
    for (std::uint32_t p : {3u, 5u}) {
        Field f = Field::prime(p);
        for (auto g : {build_ex_5_3_1(f), build_ex_5_3_2(f), build_odd_abelian(2, f)}) {
            MayResolution X(g, light(6, 0));
            CHECK(X.homology_dim(0) == 1);
            for (int i = 1; i <= 4; ++i)
                CHECK(X.homology_dim(i) == 0);
        }
    }
}
