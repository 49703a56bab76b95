#include "oracles.hpp"

#include <algorithm>
#include <set>

namespace oracle {

std::uint64_t binom(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

Vector self_bracket(const LieSuperalgebra& g, const Vector& x)
{
    Vector r = g.zero();
    for (std::size_t a = 0; a < g.dim(); ++a)
        for (std::size_t b = 0; b < g.dim(); ++b) {
            if (x[a].is_zero() || x[b].is_zero())
                continue;
            for (const auto& [k, c] : g.bracket_basis(a, b))
                r[k] += x[a] * x[b] * c;
        }
    return r;
}

namespace {

std::vector<Vector> points(const Field& f, std::size_t n)
{
    const std::uint32_t p = f.characteristic();
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i)
        total *= p;
    std::vector<Vector> out;
    for (std::size_t idx = 0; idx < total; ++idx) {
        Vector v = zero_vector(f, n);
        std::size_t t = idx;
        for (std::size_t k = 0; k < n; ++k) {
            v[k] = Scalar(f, static_cast<std::int64_t>(t % p));
            t /= p;
        }
        out.push_back(std::move(v));
    }
    return out;
}

Matrix combine(const LieSuperalgebra& g, const Vector& x)
{
    const auto& R = g.realization();
    Matrix m(g.field(), R[0].rows(), R[0].cols());
    for (std::size_t k = 0; k < x.size(); ++k)
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(i, j) += x[k] * R[k](i, j);
    return m;
}

}  // namespace

std::size_t brute_cone_count(const LieSuperalgebra& g)
{
    auto od = g.odd_indices();
    std::size_t count = 0;
    for (const auto& c : points(g.field(), od.size())) {
        Vector x = g.zero();
        for (std::size_t k = 0; k < od.size(); ++k)
            x[od[k]] = c[k];
        if (is_zero(self_bracket(g, x)))
            ++count;
    }
    return count;
}

std::size_t brute_cr_count(const LieSuperalgebra& g, std::size_t r)
{
    auto ev = g.even_indices();
    auto od = g.odd_indices();
    const std::uint32_t p = g.field().characteristic();
    std::size_t count = 0;
    for (const auto& c : points(g.field(), r * ev.size() + od.size())) {
        std::size_t k = 0;
        std::vector<Matrix> al;
        for (std::size_t i = 0; i < r; ++i) {
            Vector a = g.zero();
            for (auto e : ev)
                a[e] = c[k++];
            al.push_back(combine(g, a));
        }
        Vector b = g.zero();
        for (auto o : od)
            b[o] = c[k++];
        Matrix B = combine(g, b);
        bool ok = true;
        for (std::size_t i = 0; i < r && ok; ++i) {
            for (std::size_t j = i + 1; j < r && ok; ++j)
                ok = (al[i] * al[j] - al[j] * al[i]).is_zero();
            ok = ok && (al[i] * B - B * al[i]).is_zero();
        }
        for (std::size_t i = 0; i + 1 < r && ok; ++i)
            ok = al[i].pow(p).is_zero();
        // half of [B,B] for an odd matrix is B^2
        if (ok && r > 0)
            ok = al[r - 1].pow(p) == B * B;
        if (ok)
            ++count;
    }
    return count;
}

std::vector<Matrix> enumerate_group(const std::vector<Matrix>& gens)
{
    std::vector<Matrix> out{Matrix::identity(gens.at(0).field(), gens[0].rows())};
    for (std::size_t h = 0; h < out.size(); ++h)
        for (const auto& g : gens) {
            Matrix m = g * out[h];
            if (std::find(out.begin(), out.end(), m) == out.end())
                out.push_back(m);
        }
    return out;
}

std::vector<Rational> molien_coefficients(const std::vector<Matrix>& group, int max_degree)
{
    std::vector<Rational> total(max_degree + 1);
    for (const auto& A : group) {
        const std::size_t d = A.rows();
        // elementary symmetric functions of the eigenvalues from power sums
        std::vector<Rational> ps(d + 1), e(d + 1);
        Matrix P = Matrix::identity(A.field(), d);
        for (std::size_t k = 1; k <= d; ++k) {
            P = P * A;
            Rational tr = 0;
            for (std::size_t i = 0; i < d; ++i)
                tr += P(i, i).rational();
            ps[k] = tr;
        }
        e[0] = 1;
        for (std::size_t k = 1; k <= d; ++k) {
            Rational s = 0;
            for (std::size_t i = 1; i <= k; ++i)
                s += ((i % 2) ? 1 : -1) * e[k - i] * ps[i];
            e[k] = s / Rational(static_cast<long>(k));
        }
        // det(1 - tA) = sum (-1)^k e_k t^k ; invert the series
        std::vector<Rational> q(d + 1);
        for (std::size_t k = 0; k <= d; ++k)
            q[k] = (k % 2 ? -e[k] : e[k]);
        std::vector<Rational> c(max_degree + 1);
        c[0] = 1;
        for (int n = 1; n <= max_degree; ++n) {
            Rational s = 0;
            for (std::size_t k = 1; k <= d && k <= std::size_t(n); ++k)
                s -= q[k] * c[n - k];
            c[n] = s;
        }
        for (int n = 0; n <= max_degree; ++n)
            total[n] += c[n];
    }
    for (auto& t : total)
        t /= Rational(static_cast<long>(group.size()));
    return total;
}

std::vector<Vector> brute_nilpotent_elements(const FiniteGradedSuperalgebra& A)
{
    std::vector<Vector> out;
    for (auto& v : points(A.field(), A.dim())) {
        Vector pw = v;
        bool nil = false;
        for (std::size_t k = 0; k <= A.dim() + 1 && !nil; ++k) {
            if (is_zero(pw))
                nil = true;
            else
                pw = A.multiply(pw, v);
        }
        if (nil)
            out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Vector> span_elements(const Field& f, std::size_t n, const std::vector<Vector>& gens)
{
    std::set<Vector> out;
    for (const auto& c : points(f, gens.size())) {
        Vector v = zero_vector(f, n);
        for (std::size_t k = 0; k < gens.size(); ++k)
            axpy(v, c[k], gens[k]);
        out.insert(std::move(v));
    }
    return {out.begin(), out.end()};
}

Scalar random_scalar(const Field& f, std::mt19937_64& rng)
{
    if (f.is_prime())
        return Scalar(f, static_cast<std::int64_t>(rng() % f.characteristic()));
    std::uniform_int_distribution<int> d(-3, 3);
    return Scalar(f, d(rng));
}

Matrix random_invertible(const Field& f, std::size_t n, std::mt19937_64& rng)
{
    for (;;) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = random_scalar(f, rng);
        if (rank(m) == n)
            return m;
    }
}

namespace {

Matrix inverse(const Matrix& m)
{
    const Field& f = m.field();
    const std::size_t n = m.rows();
    std::vector<Vector> cols;
    for (std::size_t j = 0; j < n; ++j)
        cols.push_back(*solve(m, unit_vector(f, n, j)));
    return Matrix::from_columns(f, n, cols);
}

// random even change of basis applied to every operator
Supermodule conjugate(const Supermodule& M, std::mt19937_64& rng)
{
    const Field& f = M.field();
    Matrix P(f, M.dim(), M.dim());
    if (M.dim_even() > 0)
        P.set_block(0, 0, random_invertible(f, M.dim_even(), rng));
    if (M.dim_odd() > 0)
        P.set_block(M.dim_even(), M.dim_even(), random_invertible(f, M.dim_odd(), rng));
    Matrix Pi = inverse(P);
    std::vector<Matrix> rho;
    for (std::size_t a = 0; a < M.num_operators(); ++a)
        rho.push_back(P * M.rho(a) * Pi);
    return Supermodule(f, M.dim_even(), M.dim_odd(), rho);
}

Supermodule line_quotient(const LieSuperalgebra& odd, const Vector& c)
{
    std::vector<Matrix> rho;
    for (std::size_t i = 0; i < odd.dim(); ++i) {
        Matrix m(odd.field(), 2, 2);
        m(1, 0) = c[i];
        rho.push_back(m);
    }
    return Supermodule(odd.field(), 1, 1, rho);
}

}  // namespace

Supermodule exterior_regular_module(const LieSuperalgebra& oddd)
{
    const Field& f = oddd.field();
    const std::size_t d = oddd.dim();
    const std::size_t N = std::size_t{1} << d;
    std::vector<std::size_t> order;
    for (int par = 0; par < 2; ++par)
        for (std::size_t S = 0; S < N; ++S)
            if (__builtin_popcountll(S) % 2 == par)
                order.push_back(S);
    std::vector<std::size_t> pos(N);
    std::size_t de = 0;
    for (std::size_t k = 0; k < N; ++k) {
        pos[order[k]] = k;
        if (__builtin_popcountll(order[k]) % 2 == 0)
            ++de;
    }
    std::vector<Matrix> rho;
    for (std::size_t i = 0; i < d; ++i) {
        Matrix m(f, N, N);
        for (std::size_t S = 0; S < N; ++S) {
            if (S >> i & 1u)
                continue;
            int before = __builtin_popcountll(S & ((std::size_t{1} << i) - 1));
            m(pos[S | (std::size_t{1} << i)], pos[S]) = before % 2 ? -Scalar::one(f) : Scalar::one(f);
        }
        rho.push_back(std::move(m));
    }
    return Supermodule(f, de, N - de, rho);
}

Supermodule random_exterior_module(const LieSuperalgebra& odd2, std::mt19937_64& rng)
{
    const Field& f = odd2.field();
    auto block = [&]() {
        switch (rng() % 6) {
        case 0:
            return trivial_module(odd2);
        case 1:
            return parity_change(odd2.parities(), trivial_module(odd2));
        case 2:
            return exterior_regular_module(odd2);
        case 3:
            return parity_change(odd2.parities(), exterior_regular_module(odd2));
        default: {
            Vector c;
            for (std::size_t i = 0; i < odd2.dim(); ++i)
                c.push_back(random_scalar(f, rng));
            return line_quotient(odd2, c);
        }
        }
    };
    Supermodule M = block();
    std::size_t extra = rng() % 3;
    for (std::size_t k = 0; k < extra; ++k)
        M = direct_sum(M, block());
    return conjugate(M, rng);
}

Supermodule random_gl11_module(const LieSuperalgebra& gl11, std::mt19937_64& rng)
{
    auto block = [&]() {
        Supermodule b = trivial_module(gl11);
        switch (rng() % 5) {
        case 0:
            break;
        case 1:
            b = natural_module(gl11);
            break;
        case 2:
            b = adjoint_module(gl11);
            break;
        case 3:
            b = coadjoint_module(gl11);
            break;
        default:
            b = tensor_product(gl11.parities(), natural_module(gl11), natural_module(gl11));
            break;
        }
        if (rng() % 2)
            b = parity_change(gl11.parities(), b);
        return b;
    };
    Supermodule M = block();
    if (rng() % 2)
        M = direct_sum(M, block());
    return conjugate(M, rng);
}

FiniteGradedSuperalgebra random_finite_algebra(const Field& f, std::mt19937_64& rng, std::size_t max_dim)
{
    for (;;) {
        std::size_t ngen = 1 + rng() % 3;
        std::vector<GeneratorSpec> gens;
        std::vector<unsigned> caps;
        for (std::size_t i = 0; i < ngen; ++i) {
            GeneratorSpec g;
            g.name = "g" + std::to_string(i);
            g.parity = static_cast<int>(rng() % 2);
            g.z_degree = static_cast<int>(rng() % 3);
            g.kind = rng() % 2 ? GenKind::Polynomial : GenKind::DividedPower;
            gens.push_back(g);
            caps.push_back(g.z_degree == 0 ? 2 + static_cast<unsigned>(rng() % 2) : 0);
        }
        GradedCommutativeAlgebra A(f, gens);
        int max_degree = 1 + static_cast<int>(rng() % 3);
        auto T = FiniteGradedSuperalgebra::truncation(A, max_degree, caps);
        if (rng() % 2) {
            std::vector<Scalar> low;
            if (rng() % 2) {
                // (s - a)^2
                Scalar a = random_scalar(f, rng);
                low = {a * a, -(a + a)};
            } else {
                std::size_t deg = 1 + rng() % 2;
                for (std::size_t k = 0; k < deg; ++k)
                    low.push_back(random_scalar(f, rng));
            }
            T = FiniteGradedSuperalgebra::tensor(FiniteGradedSuperalgebra::degree_zero_quotient(f, low), T);
        }
        if (T.dim() <= max_dim)
            return T;
    }
}

}  // namespace oracle
