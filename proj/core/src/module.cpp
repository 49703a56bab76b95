#include "supvar/module.hpp"

#include <stdexcept>

namespace supvar {

Supermodule::Supermodule(Field f, std::size_t dim_even, std::size_t dim_odd, std::vector<Matrix> rho)
    : f_(f), de_(dim_even), do_(dim_odd), rho_(std::move(rho))
{
    for (const auto& m : rho_)
        if (m.rows() != dim() || m.cols() != dim())
            throw std::invalid_argument("representation matrix has the wrong shape");
}

SuperMatrix Supermodule::action(std::size_t a) const
{
    return SuperMatrix::from_matrix(rho_.at(a), {de_, do_}, {de_, do_});
}

Matrix Supermodule::act(const Vector& x) const
{
    Matrix m(f_, dim(), dim());
    for (std::size_t i = 0; i < rho_.size(); ++i)
        if (!x.at(i).is_zero())
            m = m + rho_[i].scaled(x[i]);
    return m;
}

std::vector<std::size_t> even_first_order(const LieSuperalgebra& g)
{
    auto o = g.even_indices();
    for (auto i : g.odd_indices())
        o.push_back(i);
    return o;
}

Supermodule trivial_module(const LieSuperalgebra& g)
{
    return Supermodule(g.field(), 1, 0, std::vector<Matrix>(g.dim(), Matrix(g.field(), 1, 1)));
}

Supermodule natural_module(const LieSuperalgebra& g)
{
    if (!g.has_realization())
        throw std::invalid_argument("natural module needs a matrix realization");
    const auto& R = g.realization();
    std::size_t n = R.empty() ? 0 : R[0].rows();
    return Supermodule(g.field(), g.realization_even_rows(), n - g.realization_even_rows(), R);
}

Supermodule adjoint_module(const LieSuperalgebra& g)
{
    auto ord = even_first_order(g);
    std::vector<Matrix> rho;
    for (std::size_t a = 0; a < g.dim(); ++a) {
        Matrix m(g.field(), g.dim(), g.dim());
        for (std::size_t col = 0; col < g.dim(); ++col)
            for (std::size_t row = 0; row < g.dim(); ++row)
                m(row, col) = g.structure_constant(a, ord[col], ord[row]);
        rho.push_back(std::move(m));
    }
    return Supermodule(g.field(), g.dim_even(), g.dim_odd(), rho);
}

Supermodule coadjoint_module(const LieSuperalgebra& g)
{
    // (e_a . e^k)(e_b) = -(-1)^{a k} c_ab^k, so e_a . e^k = -(-1)^{a k} sum_b c_ab^k e^b
    auto ord = even_first_order(g);
    std::vector<std::size_t> pos(g.dim());
    for (std::size_t i = 0; i < ord.size(); ++i)
        pos[ord[i]] = i;
    const Field& f = g.field();
    std::vector<Matrix> rho;
    for (std::size_t a = 0; a < g.dim(); ++a) {
        Matrix m(f, g.dim(), g.dim());
        for (std::size_t b = 0; b < g.dim(); ++b)
            for (const auto& [k, c] : g.bracket_basis(a, b)) {
                Scalar s = (g.parity(a) & g.parity(k)) ? Scalar::one(f) : -Scalar::one(f);
                m(pos[b], pos[k]) += s * c;
            }
        rho.push_back(std::move(m));
    }
    return Supermodule(f, g.dim_even(), g.dim_odd(), rho);
}

Supermodule direct_sum(const Supermodule& a, const Supermodule& b)
{
    if (a.num_operators() != b.num_operators())
        throw std::invalid_argument("direct sum of modules for different algebras");
    const Field& f = a.field();
    // evens of a, evens of b, odds of a, odds of b
    std::vector<std::size_t> pa, pb;
    std::size_t n = a.dim() + b.dim();
    std::size_t de = a.dim_even() + b.dim_even();
    for (std::size_t i = 0; i < a.dim(); ++i)
        pa.push_back(i < a.dim_even() ? i : de + (i - a.dim_even()));
    for (std::size_t i = 0; i < b.dim(); ++i)
        pb.push_back(i < b.dim_even() ? a.dim_even() + i : de + a.dim_odd() + (i - b.dim_even()));
    std::vector<Matrix> rho;
    for (std::size_t k = 0; k < a.num_operators(); ++k) {
        Matrix m(f, n, n);
        for (std::size_t i = 0; i < a.dim(); ++i)
            for (std::size_t j = 0; j < a.dim(); ++j)
                m(pa[i], pa[j]) = a.rho(k)(i, j);
        for (std::size_t i = 0; i < b.dim(); ++i)
            for (std::size_t j = 0; j < b.dim(); ++j)
                m(pb[i], pb[j]) = b.rho(k)(i, j);
        rho.push_back(std::move(m));
    }
    return Supermodule(f, de, a.dim_odd() + b.dim_odd(), rho);
}

Supermodule tensor_product(const std::vector<int>& op_parity, const Supermodule& a, const Supermodule& b)
{
    if (a.num_operators() != b.num_operators() || op_parity.size() != a.num_operators())
        throw std::invalid_argument("tensor product of modules for different algebras");
    const Field& f = a.field();
    std::vector<std::pair<std::size_t, std::size_t>> ev, od;
    for (std::size_t i = 0; i < a.dim(); ++i)
        for (std::size_t j = 0; j < b.dim(); ++j)
            ((a.parity(i) + b.parity(j)) % 2 ? od : ev).emplace_back(i, j);
    std::vector<std::pair<std::size_t, std::size_t>> all = ev;
    all.insert(all.end(), od.begin(), od.end());
    std::vector<std::size_t> pos(a.dim() * b.dim());
    for (std::size_t k = 0; k < all.size(); ++k)
        pos[all[k].first * b.dim() + all[k].second] = k;

    const std::size_t n = all.size();
    std::vector<Matrix> rho;
    for (std::size_t x = 0; x < a.num_operators(); ++x) {
        Matrix m(f, n, n);
        for (std::size_t col = 0; col < n; ++col) {
            auto [i, j] = all[col];
            for (std::size_t r = 0; r < a.dim(); ++r)
                if (!a.rho(x)(r, i).is_zero())
                    m(pos[r * b.dim() + j], col) += a.rho(x)(r, i);
            Scalar s = (op_parity[x] & a.parity(i)) ? -Scalar::one(f) : Scalar::one(f);
            for (std::size_t r = 0; r < b.dim(); ++r)
                if (!b.rho(x)(r, j).is_zero())
                    m(pos[i * b.dim() + r], col) += s * b.rho(x)(r, j);
        }
        rho.push_back(std::move(m));
    }
    return Supermodule(f, ev.size(), od.size(), rho);
}

Supermodule parity_change(const std::vector<int>& op_parity, const Supermodule& m)
{
    const Field& f = m.field();
    const std::size_t n = m.dim();
    // new basis: old odds, then old evens
    std::vector<std::size_t> pos(n);
    for (std::size_t i = 0; i < n; ++i)
        pos[i] = i < m.dim_even() ? m.dim_odd() + i : i - m.dim_even();
    std::vector<Matrix> rho;
    for (std::size_t a = 0; a < m.num_operators(); ++a) {
        Scalar s = op_parity.at(a) ? -Scalar::one(f) : Scalar::one(f);
        Matrix r(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                r(pos[i], pos[j]) = s * m.rho(a)(i, j);
        rho.push_back(std::move(r));
    }
    return Supermodule(f, m.dim_odd(), m.dim_even(), rho);
}

ValidationReport check_supermodule(const LieSuperalgebra& g, const Supermodule& m)
{
    ValidationReport rep;
    if (m.num_operators() != g.dim()) {
        rep.violations.push_back("module lists " + std::to_string(m.num_operators()) + " operators for an algebra of dim " +
                                 std::to_string(g.dim()));
        return rep;
    }
    for (std::size_t a = 0; a < g.dim(); ++a) {
        SuperMatrix s = m.action(a);
        if (g.parity(a) == 0 ? !s.is_even() : !s.is_odd())
            rep.violations.push_back("parity: rho(" + g.name(a) + ") does not have the parity of " + g.name(a));
    }
    for (std::size_t a = 0; a < g.dim(); ++a)
        for (std::size_t b = a; b < g.dim(); ++b) {
            Matrix lhs = m.act(g.bracket_basis_dense(a, b));
            Matrix rhs = super_commutator(m.rho(a), g.parity(a), m.rho(b), g.parity(b));
            if (lhs != rhs)
                rep.violations.push_back("bracket: (" + g.name(a) + "," + g.name(b) + ")");
        }
    if (g.has_pmap())
        for (auto a : g.even_indices())
            if (m.act(g.pmap_basis(a)) != m.rho(a).pow(g.field().characteristic()))
                rep.violations.push_back("restricted: rho(" + g.name(a) + "^[p]) != rho(" + g.name(a) + ")^p");
    return rep;
}

}  // namespace supvar
