#include "supvar/varieties.hpp"

#include <cmath>

namespace supvar {

namespace {

struct ExtModule {
    std::size_t dim = 0;
    std::vector<Matrix> ops;
};

// kernel of the projective cover Lambda(V)^t -> K, and t
std::pair<ExtModule, std::size_t> cover_kernel(const Field& f, const ExtModule& K, std::size_t d)
{
    const std::size_t n = K.dim;
    Subspace span(f, n);
    for (const auto& r : K.ops)
        for (std::size_t c = 0; c < n; ++c)
            span.add(r.column(c));
    std::vector<Vector> tops;
    for (std::size_t c = 0; c < n && span.dim() < n; ++c) {
        Vector e = unit_vector(f, n, c);
        if (span.add(e))
            tops.push_back(e);
    }
    const std::size_t t = tops.size();
    const std::size_t words = std::size_t{1} << d;
    const std::size_t P = words * t;

    // phi(xi_S (x) e_j) = rho(s_1) ... rho(s_k) u_j with s_1 < ... < s_k
    std::vector<Vector> images(P);
    for (std::size_t j = 0; j < t; ++j)
        for (std::size_t S = 0; S < words; ++S) {
            Vector v = tops[j];
            for (std::size_t s = d; s-- > 0;)
                if (S >> s & 1u)
                    v = K.ops[s].apply(v);
            images[j * words + S] = std::move(v);
        }
    Matrix phi = Matrix::from_columns(f, n, images);
    Echelon E = rref(phi);
    std::vector<bool> pivot(P, false);
    for (auto c : E.pivots)
        pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < P; ++c)
        if (!pivot[c])
            free_cols.push_back(c);
    auto ker = kernel_basis(phi);

    // left multiplication by xi_i on Lambda(V)^t
    auto xi_act = [&](std::size_t i, const Vector& w) {
        Vector r = zero_vector(f, P);
        for (std::size_t j = 0; j < t; ++j)
            for (std::size_t S = 0; S < words; ++S) {
                const Scalar& c = w[j * words + S];
                if (c.is_zero() || (S >> i & 1u))
                    continue;
                int before = __builtin_popcountll(S & ((std::size_t{1} << i) - 1));
                r[j * words + (S | (std::size_t{1} << i))] += before % 2 ? -c : c;
            }
        return r;
    };

    ExtModule out;
    out.dim = ker.size();
    for (std::size_t i = 0; i < d; ++i) {
        Matrix m(f, out.dim, out.dim);
        for (std::size_t k = 0; k < ker.size(); ++k) {
            Vector img = xi_act(i, ker[k]);
            for (std::size_t r = 0; r < free_cols.size(); ++r)
                m(r, k) = img[free_cols[r]];
        }
        out.ops.push_back(std::move(m));
    }
    return {out, t};
}

}  // namespace

ComplexityReport complexity_sequence(const std::vector<Matrix>& ops, std::size_t steps, std::size_t cap)
{
    if (steps > cap)
        throw ResourceBound("complexity_sequence: " + std::to_string(steps) + " steps exceed the cap " +
                            std::to_string(cap));
    if (ops.empty())
        throw std::invalid_argument("complexity_sequence needs at least one odd operator");
    const Field& f = ops[0].field();
    const std::size_t d = ops.size();
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i; j < d; ++j)
            if (!(ops[i] * ops[j] + ops[j] * ops[i]).is_zero())
                throw std::invalid_argument("operators do not define a Lambda(V)-module");

    ComplexityReport rep;
    ExtModule K{ops[0].rows(), ops};
    for (std::size_t n = 0; n < steps; ++n) {
        if (K.dim == 0) {
            rep.dims.push_back(0);
            continue;
        }
        auto [next, t] = cover_kernel(f, K, d);
        rep.dims.push_back((std::size_t{1} << d) * t);
        K = std::move(next);
    }

    std::vector<double> xs, ys;
    for (std::size_t n = 0; n < rep.dims.size(); ++n)
        if (rep.dims[n] > 0) {
            xs.push_back(std::log(double(n + 1)));
            ys.push_back(std::log(double(rep.dims[n])));
        }
    bool eventually_zero = !rep.dims.empty() && rep.dims.back() == 0;
    if (xs.size() >= 2) {
        double mx = 0, my = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            mx += xs[i];
            my += ys[i];
        }
        mx /= double(xs.size());
        my /= double(xs.size());
        double sxy = 0, sxx = 0;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            sxy += (xs[i] - mx) * (ys[i] - my);
            sxx += (xs[i] - mx) * (xs[i] - mx);
        }
        rep.growth_exponent = sxx > 0 ? sxy / sxx : 0.0;
    }
    if (eventually_zero)
        rep.complexity = 0;
    else
        rep.complexity = static_cast<std::size_t>(std::lround(std::max(0.0, rep.growth_exponent))) + 1;
    return rep;
}

ComplexityReport complexity_sequence(const LieSuperalgebra& g, const Supermodule& M, std::size_t steps,
                                     std::size_t cap)
{
    if (g.dim_even() != 0)
        throw std::invalid_argument("complexity_sequence supports exterior algebras (purely odd abelian g)");
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j)
            if (!g.bracket_basis(i, j).empty())
                throw std::invalid_argument("complexity_sequence needs an abelian odd algebra");
    std::vector<Matrix> ops;
    for (std::size_t i = 0; i < g.dim(); ++i)
        ops.push_back(M.rho(i));
    return complexity_sequence(ops, steps, cap);
}

}  // namespace supvar
