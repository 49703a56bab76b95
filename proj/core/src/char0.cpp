#include "supvar/superalgebra.hpp"
#include "supvar/varieties.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace supvar {

namespace {

Vector entries(const Matrix& a, const Matrix& b)
{
    Vector k;
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (auto& s : a.row(i))
            k.push_back(s);
    for (std::size_t i = 0; i < b.rows(); ++i)
        for (auto& s : b.row(i))
            k.push_back(s);
    return k;
}

bool member_at(const Supermodule& M, const Vector& v)
{
    if (is_zero(v))
        return true;
    return !free_over_odd_point(M, v);
}

// basis positions used by tensor_product: even pairs, then odd pairs, each in (i, j) order
std::vector<std::size_t> tensor_positions(const Supermodule& a, const Supermodule& b)
{
    std::vector<std::size_t> ev, od;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            ((a.parity(i) + b.parity(j)) % 2 ? od : ev).push_back(i * b.dim() + j);
    std::vector<std::size_t> pos(a.dim() * b.dim());
    std::size_t k = 0;
    for (auto x : ev)
        pos[x] = k++;
    for (auto x : od)
        pos[x] = k++;
    return pos;
}

std::vector<Matrix> closure_on_v(const std::vector<Matrix>& gens, std::size_t cap)
{
    if (gens.empty())
        return {};
    const Field& f = gens[0].field();
    const std::size_t n = gens[0].rows();
    Matrix id = Matrix::identity(f, n);
    Matrix empty(f, 0, 0);
    std::vector<Matrix> out{id};
    std::set<Vector> seen{entries(id, empty)};
    for (std::size_t head = 0; head < out.size(); ++head)
        for (const auto& g : gens) {
            Matrix h = g * out[head];
            if (seen.insert(entries(h, empty)).second) {
                if (out.size() >= cap)
                    throw ResourceBound("group closure exceeds " + std::to_string(cap) + " elements");
                out.push_back(h);
            }
        }
    return out;
}

}  // namespace

std::vector<GroupElement> group_closure(const SmashModule& M, std::size_t cap)
{
    const Field& f = M.module.field();
    const std::size_t d = M.module.num_operators();
    if (M.group_on_v.size() != M.group_on_m.size())
        throw std::invalid_argument("group generators need matrices on V and on M");
    std::vector<GroupElement> out{{Matrix::identity(f, d), Matrix::identity(f, M.module.dim())}};
    std::set<Vector> seen{entries(out[0].on_v, out[0].on_m)};
    for (std::size_t head = 0; head < out.size(); ++head)
        for (std::size_t k = 0; k < M.group_on_v.size(); ++k) {
            GroupElement h{M.group_on_v[k] * out[head].on_v, M.group_on_m[k] * out[head].on_m};
            if (seen.insert(entries(h.on_v, h.on_m)).second) {
                if (out.size() >= cap)
                    throw ResourceBound("group closure exceeds " + std::to_string(cap) + " elements");
                out.push_back(std::move(h));
            }
        }
    return out;
}

bool smash_compatible(const SmashModule& M)
{
    const Field& f = M.module.field();
    const std::size_t d = M.module.num_operators();
    for (std::size_t k = 0; k < M.group_on_v.size(); ++k) {
        const Matrix& gv = M.group_on_v[k];
        const Matrix& gm = M.group_on_m[k];
        if (gv.rows() != d || gm.rows() != M.module.dim())
            return false;
        SuperMatrix s = SuperMatrix::from_matrix(gm, {M.module.dim_even(), M.module.dim_odd()},
                                                 {M.module.dim_even(), M.module.dim_odd()});
        if (!s.is_even())
            return false;
        for (std::size_t i = 0; i < d; ++i) {
            Vector e = unit_vector(f, d, i);
            if (gm * M.module.rho(i) != M.module.act(gv.apply(e)) * gm)
                return false;
        }
    }
    return true;
}

OrbitReport char0_support(const SmashModule& M, const std::vector<Vector>& test_vectors, std::size_t cap)
{
    if (!smash_compatible(M))
        throw std::invalid_argument("module is not compatible with the group action on V");
    auto G = group_closure(M, cap);
    OrbitReport rep;
    rep.group_order = G.size();
    std::map<Vector, std::size_t> index;
    for (const auto& v : test_vectors) {
        Vector rep_v = v;
        for (const auto& g : G)
            rep_v = std::min(rep_v, g.on_v.apply(v));
        auto [it, fresh] = index.try_emplace(rep_v, rep.representatives.size());
        if (fresh) {
            rep.representatives.push_back(rep_v);
            rep.orbits.emplace_back();
            rep.member.push_back(member_at(M.module, rep_v));
        }
        rep.orbits[it->second].push_back(v);
    }
    return rep;
}

DivisibilityReport two_divisibility_check(const SmashModule& M, const std::vector<Vector>& support_vectors)
{
    const std::size_t d = M.module.num_operators();
    Subspace span(M.module.field(), d);
    for (const auto& v : support_vectors)
        span.add(v);
    DivisibilityReport rep;
    rep.codim = d - span.dim();
    rep.dim = M.module.dim();
    rep.sdim = M.module.superdim();
    rep.divides = rep.codim < 64 && rep.dim % (std::size_t{1} << rep.codim) == 0;
    rep.sdim_vanishes = rep.sdim == 0;
    return rep;
}

SmashModule smash_tensor(const SmashModule& M, const SmashModule& N)
{
    std::vector<int> odd(M.module.num_operators(), 1);
    SmashModule out{tensor_product(odd, M.module, N.module), M.group_on_v, {}};
    auto pos = tensor_positions(M.module, N.module);
    const std::size_t a = M.module.dim(), b = N.module.dim();
    for (std::size_t k = 0; k < M.group_on_m.size(); ++k) {
        Matrix g(M.module.field(), a * b, a * b);
        for (std::size_t i = 0; i < a; ++i)
            for (std::size_t j = 0; j < b; ++j)
                for (std::size_t r = 0; r < a; ++r)
                    for (std::size_t s = 0; s < b; ++s)
                        g(pos[r * b + s], pos[i * b + j]) = M.group_on_m[k](r, i) * N.group_on_m[k](s, j);
        out.group_on_m.push_back(std::move(g));
    }
    return out;
}

SmashModule smash_direct_sum(const SmashModule& M, const SmashModule& N)
{
    SmashModule out{direct_sum(M.module, N.module), M.group_on_v, {}};
    const auto& a = M.module;
    const auto& b = N.module;
    const std::size_t de = a.dim_even() + b.dim_even();
    std::vector<std::size_t> pa, pb;
    for (std::size_t i = 0; i < a.dim(); ++i)
        pa.push_back(i < a.dim_even() ? i : de + (i - a.dim_even()));
    for (std::size_t i = 0; i < b.dim(); ++i)
        pb.push_back(i < b.dim_even() ? a.dim_even() + i : de + a.dim_odd() + (i - b.dim_even()));
    for (std::size_t k = 0; k < M.group_on_m.size(); ++k) {
        Matrix g(a.field(), a.dim() + b.dim(), a.dim() + b.dim());
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j)
                g(pa[i], pa[j]) = M.group_on_m[k](i, j);
        for (std::size_t i = 0; i < b.dim(); ++i)
            for (std::size_t j = 0; j < b.dim(); ++j)
                g(pb[i], pb[j]) = N.group_on_m[k](i, j);
        out.group_on_m.push_back(std::move(g));
    }
    return out;
}

Char0TensorReport char0_tensor_check(const SmashModule& M, const SmashModule& N, const std::vector<Vector>& test_vectors)
{
    SmashModule T = smash_tensor(M, N);
    Char0TensorReport rep;
    for (const auto& v : test_vectors) {
        if (is_zero(v))
            continue;
        ++rep.tested;
        bool lhs = member_at(T.module, v);
        bool rhs = member_at(M.module, v) && member_at(N.module, v);
        if (lhs != rhs)
            ++rep.mismatches;
    }
    return rep;
}

std::vector<std::size_t> invariant_dimensions(const std::vector<Matrix>& group_on_v, int max_degree)
{
    if (group_on_v.empty())
        throw std::invalid_argument("invariant_dimensions needs at least one generator");
    const Field& f = group_on_v[0].field();
    const std::size_t d = group_on_v[0].rows();
    auto G = closure_on_v(group_on_v, 10000);
    if (f.is_prime() && G.size() % f.characteristic() == 0)
        throw std::invalid_argument("group order divisible by the characteristic");
    // polynomial ring on coordinate functions, generators in even degree 2 so they commute
    std::vector<GeneratorSpec> gens;
    for (std::size_t i = 0; i < d; ++i)
        gens.push_back({"t" + std::to_string(i + 1), 0, 2, GenKind::Polynomial});
    GradedCommutativeAlgebra S(f, gens);
    const Scalar inv_order = Scalar(f, static_cast<std::int64_t>(G.size())).inv();

    std::vector<std::size_t> out;
    for (int n = 0; n <= max_degree; ++n) {
        auto B = S.basis(2 * n);
        std::map<SuperMonomial, std::size_t> idx;
        for (std::size_t i = 0; i < B.size(); ++i)
            idx[B[i]] = i;
        Matrix R(f, B.size(), B.size());
        for (const auto& g : G) {
            // t_i -> sum_j g(j, i) t_j  (transpose action on coordinate functions)
            std::vector<AlgebraElement> lin;
            for (std::size_t i = 0; i < d; ++i) {
                AlgebraElement l;
                for (std::size_t j = 0; j < d; ++j)
                    l.add(S.generator(j), g(j, i));
                lin.push_back(std::move(l));
            }
            for (std::size_t c = 0; c < B.size(); ++c) {
                AlgebraElement img = S.one();
                for (std::size_t i = 0; i < d; ++i)
                    img = S.multiply(img, S.power(lin[i], B[c][i]));
                for (const auto& [m, v] : img)
                    R(idx.at(m), c) += v * inv_order;
            }
        }
        out.push_back(rank(R));
    }
    return out;
}

}  // namespace supvar
