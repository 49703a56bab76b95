#include "supvar/lie.hpp"

#include <sstream>
#include <stdexcept>

namespace supvar {

LieSuperalgebra::LieSuperalgebra(Field f, std::vector<std::string> names, std::vector<int> parity)
    : f_(f), names_(std::move(names)), par_(std::move(parity))
{
    if (names_.size() != par_.size())
        throw std::invalid_argument("basis names and parities differ in length");
    for (int p : par_)
        if (p != 0 && p != 1)
            throw std::invalid_argument("basis parity must be 0 or 1");
    br_.resize(dim() * dim());
}

std::vector<std::size_t> LieSuperalgebra::even_indices() const
{
    std::vector<std::size_t> r;
    for (std::size_t i = 0; i < dim(); ++i)
        if (par_[i] == 0)
            r.push_back(i);
    return r;
}

std::vector<std::size_t> LieSuperalgebra::odd_indices() const
{
    std::vector<std::size_t> r;
    for (std::size_t i = 0; i < dim(); ++i)
        if (par_[i] == 1)
            r.push_back(i);
    return r;
}

std::optional<std::size_t> LieSuperalgebra::index_of(const std::string& name) const
{
    for (std::size_t i = 0; i < dim(); ++i)
        if (names_[i] == name)
            return i;
    return std::nullopt;
}

void LieSuperalgebra::set_bracket(std::size_t i, std::size_t j, const Vector& v)
{
    SparseVector s;
    for (std::size_t k = 0; k < v.size(); ++k)
        if (!v[k].is_zero())
            s.emplace_back(k, v[k]);
    br_.at(i * dim() + j) = std::move(s);
}

void LieSuperalgebra::set_bracket_antisym(std::size_t i, std::size_t j, const Vector& v)
{
    set_bracket(i, j, v);
    Scalar c = (par_[i] & par_[j]) ? -Scalar::one(f_) : Scalar::one(f_);
    set_bracket(j, i, scale(-c, v));
}

Vector LieSuperalgebra::bracket_basis_dense(std::size_t i, std::size_t j) const
{
    Vector v = zero();
    for (const auto& [k, c] : bracket_basis(i, j))
        v[k] = c;
    return v;
}

Scalar LieSuperalgebra::structure_constant(std::size_t i, std::size_t j, std::size_t k) const
{
    for (const auto& [kk, c] : bracket_basis(i, j))
        if (kk == k)
            return c;
    return Scalar::zero(f_);
}

Vector LieSuperalgebra::bracket(const Vector& x, const Vector& y) const
{
    Vector r = zero();
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (y[j].is_zero())
                continue;
            Scalar c = x[i] * y[j];
            for (const auto& [k, v] : bracket_basis(i, j))
                r[k] += c * v;
        }
    }
    return r;
}

void LieSuperalgebra::set_pmap(std::vector<Vector> images)
{
    if (!f_.is_prime())
        throw std::invalid_argument("a p-map needs a field of positive characteristic");
    if (images.size() != dim())
        throw std::invalid_argument("p-map must list one image per basis vector");
    for (std::size_t i = 0; i < dim(); ++i)
        if (par_[i] == 1)
            images[i] = zero();
    pmap_ = std::move(images);
}

const Vector& LieSuperalgebra::pmap_basis(std::size_t i) const
{
    if (!pmap_)
        throw std::logic_error("algebra has no p-map");
    return (*pmap_)[i];
}

Matrix LieSuperalgebra::realize(const Vector& x) const
{
    if (!real_)
        throw std::logic_error("algebra has no matrix realization");
    Matrix m((*real_)[0].field(), (*real_)[0].rows(), (*real_)[0].cols());
    for (std::size_t i = 0; i < dim(); ++i)
        if (!x[i].is_zero())
            m = m + (*real_)[i].scaled(x[i]);
    return m;
}

bool LieSuperalgebra::even_part_abelian() const
{
    for (auto i : even_indices())
        for (auto j : even_indices())
            if (!bracket_basis(i, j).empty())
                return false;
    return true;
}

bool LieSuperalgebra::is_even(const Vector& x) const
{
    for (std::size_t i = 0; i < dim(); ++i)
        if (par_[i] == 1 && !x[i].is_zero())
            return false;
    return true;
}

bool LieSuperalgebra::is_odd(const Vector& x) const
{
    for (std::size_t i = 0; i < dim(); ++i)
        if (par_[i] == 0 && !x[i].is_zero())
            return false;
    return true;
}

std::string LieSuperalgebra::format(const Vector& x) const
{
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i].is_zero())
            continue;
        if (!first)
            os << " + ";
        first = false;
        if (!x[i].is_one())
            os << x[i] << '*';
        os << names_[i];
    }
    return first ? std::string("0") : os.str();
}

Matrix super_commutator(const Matrix& x, int px, const Matrix& y, int py)
{
    Matrix r = x * y;
    Matrix yx = y * x;
    return (px & py) ? r + yx : r - yx;
}

namespace {

Matrix ad_matrix(const LieSuperalgebra& g, const Vector& x)
{
    Matrix m(g.field(), g.dim(), g.dim());
    for (std::size_t j = 0; j < g.dim(); ++j) {
        Vector c = g.bracket(x, g.basis_vector(j));
        for (std::size_t i = 0; i < g.dim(); ++i)
            m(i, j) = c[i];
    }
    return m;
}

}  // namespace

ValidationReport validate(const LieSuperalgebra& g)
{
    ValidationReport rep;
    const std::size_t n = g.dim();
    const Field& f = g.field();
    auto nm = [&](std::size_t i) { return g.name(i); };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            for (const auto& [k, c] : g.bracket_basis(i, j))
                if (g.parity(k) != ((g.parity(i) + g.parity(j)) & 1))
                    rep.violations.push_back("parity: [" + nm(i) + "," + nm(j) + "] has a component along " + nm(k));
            Vector a = g.bracket_basis_dense(i, j);
            Vector b = g.bracket_basis_dense(j, i);
            Scalar s = (g.parity(i) & g.parity(j)) ? Scalar::one(f) : -Scalar::one(f);
            if (i <= j && a != scale(s, b))
                rep.violations.push_back("antisymmetry: (" + nm(i) + "," + nm(j) + ")");
        }

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                Vector x = g.basis_vector(i), y = g.basis_vector(j), z = g.basis_vector(k);
                Vector lhs = g.bracket(x, g.bracket(y, z));
                Vector rhs = g.bracket(g.bracket(x, y), z);
                Vector t = g.bracket(y, g.bracket(x, z));
                if (g.parity(i) & g.parity(j))
                    rhs = add(rhs, scale(-Scalar::one(f), t));
                else
                    rhs = add(rhs, t);
                if (lhs != rhs)
                    rep.violations.push_back("jacobi: (" + nm(i) + "," + nm(j) + "," + nm(k) + ")");
            }

    if (g.has_pmap()) {
        const unsigned p = f.characteristic();
        for (auto i : g.even_indices()) {
            const Vector& img = g.pmap_basis(i);
            if (!g.is_even(img)) {
                rep.violations.push_back("pmap: image of " + nm(i) + " is not even");
                continue;
            }
            if (ad_matrix(g, img) != ad_matrix(g, g.basis_vector(i)).pow(p))
                rep.violations.push_back("pmap: ad(" + nm(i) + "^[p]) != ad(" + nm(i) + ")^p");
        }
    }

    if (g.has_realization()) {
        const auto& R = g.realization();
        if (R.size() != n) {
            rep.violations.push_back("realization: wrong number of matrices");
            return rep;
        }
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                Matrix lhs = g.realize(g.bracket_basis_dense(i, j));
                if (lhs != super_commutator(R[i], g.parity(i), R[j], g.parity(j)))
                    rep.violations.push_back("realization: bracket (" + nm(i) + "," + nm(j) + ")");
            }
        if (g.has_pmap())
            for (auto i : g.even_indices())
                if (g.realize(g.pmap_basis(i)) != R[i].pow(f.characteristic()))
                    rep.violations.push_back("realization: pmap of " + nm(i) + " differs from matrix power");
    }
    return rep;
}

SubalgebraEmbedding restricted_subalgebra(const LieSuperalgebra& g, const std::vector<Vector>& generators)
{
    const Field& f = g.field();
    const std::size_t n = g.dim();
    Subspace ev(f, n), od(f, n);
    auto split_add = [&](const Vector& v) {
        bool grew = false;
        Vector e = zero_vector(f, n), o = zero_vector(f, n);
        for (std::size_t i = 0; i < n; ++i)
            (g.parity(i) ? o : e)[i] = v.at(i);
        grew |= ev.add(e);
        grew |= od.add(o);
        return grew;
    };
    for (const auto& v : generators)
        split_add(v);

    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Vector> B = ev.basis();
        for (const auto& v : od.basis())
            B.push_back(v);
        for (std::size_t a = 0; a < B.size(); ++a)
            for (std::size_t b = a; b < B.size(); ++b)
                grew |= split_add(g.bracket(B[a], B[b]));
        if (g.has_pmap())
            for (const auto& v : ev.basis())
                grew |= split_add(jacobson_p_power(g, v));
    }

    std::vector<Vector> B = ev.basis();
    std::size_t ne = B.size();
    for (const auto& v : od.basis())
        B.push_back(v);
    std::vector<std::size_t> piv;
    for (const auto& v : B) {
        std::size_t c = 0;
        while (v[c].is_zero())
            ++c;
        piv.push_back(c);
    }
    auto coords = [&](const Vector& w) {
        Vector c = zero_vector(f, B.size());
        for (std::size_t k = 0; k < B.size(); ++k)
            c[k] = w[piv[k]];
        return c;
    };

    std::vector<std::string> names;
    std::vector<int> par;
    for (std::size_t k = 0; k < B.size(); ++k) {
        names.push_back("u" + std::to_string(k + 1));
        par.push_back(k < ne ? 0 : 1);
    }
    LieSuperalgebra s(f, names, par);
    for (std::size_t a = 0; a < B.size(); ++a)
        for (std::size_t b = 0; b < B.size(); ++b)
            s.set_bracket(a, b, coords(g.bracket(B[a], B[b])));
    if (g.has_pmap()) {
        std::vector<Vector> img;
        for (std::size_t k = 0; k < B.size(); ++k)
            img.push_back(k < ne ? coords(jacobson_p_power(g, B[k])) : zero_vector(f, B.size()));
        s.set_pmap(img);
    }
    if (g.has_realization() && !B.empty()) {
        std::vector<Matrix> mats;
        for (const auto& v : B)
            mats.push_back(g.realize(v));
        s.set_realization(mats, g.realization_even_rows());
    }
    return {s, Matrix::from_columns(f, n, B)};
}

}  // namespace supvar
