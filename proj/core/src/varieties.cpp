#include "supvar/varieties.hpp"

#include <algorithm>
#include <set>

namespace supvar {

namespace {

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t bound)
{
    std::size_t n = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (n > bound / base)
            throw ResourceBound("enumeration of " + std::to_string(base) + "^" + std::to_string(exp) +
                                " points exceeds the bound " + std::to_string(bound));
        n *= base;
    }
    if (n > bound)
        throw ResourceBound("enumeration exceeds the bound " + std::to_string(bound));
    return n;
}

std::uint32_t prime_of(const Field& f)
{
    if (!f.is_prime())
        throw std::invalid_argument("point enumeration needs a finite prime field");
    return f.characteristic();
}

// points in the natural counting order: the last coordinate varies fastest
Vector point_from_index(const Field& f, std::size_t n, std::size_t idx)
{
    const std::uint32_t p = f.characteristic();
    Vector v = zero_vector(f, n);
    for (std::size_t k = n; k-- > 0;) {
        v[k] = Scalar(f, static_cast<std::int64_t>(idx % p));
        idx /= p;
    }
    return v;
}

bool same_set(std::vector<Vector> a, std::vector<Vector> b)
{
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

}  // namespace

Vector odd_embed(const LieSuperalgebra& g, const Vector& odd_coords)
{
    auto od = g.odd_indices();
    if (odd_coords.size() != od.size())
        throw std::invalid_argument("odd coordinate vector has the wrong length");
    Vector x = g.zero();
    for (std::size_t k = 0; k < od.size(); ++k)
        x[od[k]] = odd_coords[k];
    return x;
}

Vector odd_coordinates(const LieSuperalgebra& g, const Vector& x)
{
    Vector c;
    for (auto i : g.odd_indices())
        c.push_back(x.at(i));
    return c;
}

bool cone_membership(const LieSuperalgebra& g, const Vector& x)
{
    if (!g.is_odd(x))
        throw std::invalid_argument("cone membership needs an odd element");
    return is_zero(g.bracket(x, x));
}

std::vector<Vector> all_points(const Field& f, std::size_t n, std::size_t bound)
{
    const std::size_t total = checked_power(prime_of(f), n, bound);
    std::vector<Vector> out;
    out.reserve(total);
    for (std::size_t i = 0; i < total; ++i)
        out.push_back(point_from_index(f, n, i));
    return out;
}

std::vector<Vector> enumerate_cone(const LieSuperalgebra& g, std::size_t bound)
{
    std::vector<Vector> out;
    for (auto& c : all_points(g.field(), g.dim_odd(), bound))
        if (cone_membership(g, odd_embed(g, c)))
            out.push_back(std::move(c));
    return out;
}

bool free_over_odd_point(const Supermodule& M, const Vector& x)
{
    if (is_zero(x))
        throw std::invalid_argument("freeness over the zero subalgebra is not defined here");
    Matrix r = M.act(x);
    if (!(r * r).is_zero())
        throw std::logic_error("rho(x)^2 != 0 for a cone point");
    return 2 * rank(r) == M.dim();
}

SupportReport support_points(const LieSuperalgebra& g, const Supermodule& M, std::size_t bound)
{
    SupportReport rep;
    auto cone = enumerate_cone(g, bound);
    rep.tested_points = cone.size();
    for (auto& c : cone)
        if (is_zero(c) || !free_over_odd_point(M, odd_embed(g, c)))
            rep.members.push_back(c);
    rep.is_zero_only = rep.members.size() == 1;

    // largest coordinate subspace contained in the member set
    const std::size_t d = g.dim_odd();
    if (d <= 16) {
        std::set<Vector> mem(rep.members.begin(), rep.members.end());
        std::set<Vector> covered;
        std::size_t best = 0;
        const std::uint32_t p = g.field().characteristic();
        for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
            std::vector<std::size_t> S;
            for (std::size_t k = 0; k < d; ++k)
                if (mask >> k & 1u)
                    S.push_back(k);
            std::size_t total = 1;
            for (std::size_t k = 0; k < S.size(); ++k)
                total *= p;
            bool inside = true;
            std::vector<Vector> pts;
            for (std::size_t i = 0; i < total && inside; ++i) {
                Vector sub = point_from_index(g.field(), S.size(), i);
                Vector v = zero_vector(g.field(), d);
                for (std::size_t k = 0; k < S.size(); ++k)
                    v[S[k]] = sub[k];
                inside = mem.count(v) > 0;
                pts.push_back(std::move(v));
            }
            if (!inside)
                continue;
            best = std::max(best, S.size());
            covered.insert(pts.begin(), pts.end());
        }
        rep.dimension_estimate = best;
        rep.dimension_exact = covered.size() == mem.size();
    }
    return rep;
}

bool free_over_exterior(const std::vector<Matrix>& ops)
{
    if (ops.empty())
        return true;
    const std::size_t n = ops[0].rows();
    for (std::size_t i = 0; i < ops.size(); ++i)
        for (std::size_t j = i; j < ops.size(); ++j)
            if (!(ops[i] * ops[j] + ops[j] * ops[i]).is_zero())
                throw std::invalid_argument("operators do not generate an exterior algebra action");
    const Field& f = ops[0].field();
    Subspace rad(f, n);
    for (const auto& r : ops)
        for (std::size_t c = 0; c < n; ++c)
            rad.add(r.column(c));
    std::size_t top = n - rad.dim();
    return n == (std::size_t{1} << ops.size()) * top;
}

bool free_over_exterior(const Supermodule& M, const std::vector<Vector>& odd_elements)
{
    std::vector<Matrix> ops;
    for (const auto& v : odd_elements)
        ops.push_back(M.act(v));
    return free_over_exterior(ops);
}

bool cr_membership(const LieSuperalgebra& g, const CrTuple& t, std::size_t r)
{
    if (t.alphas.size() != r || t.beta.size() != g.dim())
        throw std::invalid_argument("C_r tuple does not match r and the algebra");
    if (!g.has_pmap())
        throw std::invalid_argument("C_r needs a restricted Lie superalgebra");
    for (const auto& a : t.alphas)
        if (a.size() != g.dim() || !g.is_even(a))
            throw std::invalid_argument("C_r tuple: alphas must be even");
    if (!g.is_odd(t.beta))
        throw std::invalid_argument("C_r tuple: beta must be odd");
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j)
            if (!is_zero(g.bracket(t.alphas[i], t.alphas[j])))
                return false;
        if (!is_zero(g.bracket(t.alphas[i], t.beta)))
            return false;
    }
    for (std::size_t i = 0; i + 1 < r; ++i)
        if (!is_zero(jacobson_p_power(g, t.alphas[i])))
            return false;
    if (r == 0)
        return true;
    Vector half_bb = scale(Scalar(g.field(), 2).inv(), g.bracket(t.beta, t.beta));
    return jacobson_p_power(g, t.alphas[r - 1]) == half_bb;
}

CrEnumeration enumerate_cr(const LieSuperalgebra& g, std::size_t r, std::size_t bound)
{
    const Field& f = g.field();
    const auto ev = g.even_indices();
    const auto od = g.odd_indices();
    const std::size_t n = r * ev.size() + od.size();
    const std::size_t total = checked_power(prime_of(f), n, bound);
    CrEnumeration out;
    out.tested = total;
    for (std::size_t idx = 0; idx < total; ++idx) {
        Vector c = point_from_index(f, n, idx);
        CrTuple t;
        std::size_t k = 0;
        for (std::size_t i = 0; i < r; ++i) {
            Vector a = g.zero();
            for (auto e : ev)
                a[e] = c[k++];
            t.alphas.push_back(std::move(a));
        }
        t.beta = g.zero();
        for (auto o : od)
            t.beta[o] = c[k++];
        if (cr_membership(g, t, r))
            out.points.push_back(std::move(t));
    }
    return out;
}

TensorSupportReport tensor_support_check(const LieSuperalgebra& g, const Supermodule& M, const Supermodule& N,
                                         std::size_t bound)
{
    TensorSupportReport rep;
    rep.support_m = support_points(g, M, bound).members;
    rep.support_n = support_points(g, N, bound).members;
    rep.support_mn = support_points(g, tensor_product(g.parities(), M, N), bound).members;
    std::set<Vector> sm(rep.support_m.begin(), rep.support_m.end());
    std::set<Vector> sn(rep.support_n.begin(), rep.support_n.end());
    std::vector<Vector> inter;
    for (const auto& v : rep.support_m)
        if (sn.count(v))
            inter.push_back(v);
    rep.subset_holds = std::all_of(rep.support_mn.begin(), rep.support_mn.end(),
                                   [&](const Vector& v) { return sm.count(v) && sn.count(v); });
    rep.equality_holds = same_set(inter, rep.support_mn);
    return rep;
}

ParitySumReport parity_directsum_checks(const LieSuperalgebra& g, const Supermodule& M, const Supermodule& N,
                                        std::size_t bound)
{
    ParitySumReport rep;
    auto sm = support_points(g, M, bound).members;
    auto sn = support_points(g, N, bound).members;
    auto ssum = support_points(g, direct_sum(M, N), bound).members;
    auto spi = support_points(g, parity_change(g.parities(), M), bound).members;
    std::set<Vector> uni(sm.begin(), sm.end());
    uni.insert(sn.begin(), sn.end());
    rep.union_law = same_set(std::vector<Vector>(uni.begin(), uni.end()), ssum);
    rep.parity_invariant = same_set(sm, spi);
    return rep;
}

}  // namespace supvar
