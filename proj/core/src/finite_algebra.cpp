#include "supvar/superalgebra.hpp"

#include <map>
#include <stdexcept>

namespace supvar {

FiniteGradedSuperalgebra::FiniteGradedSuperalgebra(Field f, std::vector<BasisInfo> basis, std::size_t unit_index)
    : f_(f), basis_(std::move(basis)), unit_(unit_index)
{
    mult_.assign(basis_.size() * basis_.size(), zero_vector(f_, basis_.size()));
}

FiniteGradedSuperalgebra FiniteGradedSuperalgebra::truncation(const GradedCommutativeAlgebra& A, int max_degree,
                                                              const std::vector<unsigned>& caps)
{
    const auto& gens = A.generators();
    auto cap = [&](std::size_t i) -> unsigned { return i < caps.size() ? caps[i] : 0; };
    bool cut = false;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].square_zero())
            continue;
        if (gens[i].z_degree == 0 && cap(i) == 0)
            throw std::invalid_argument("degree-0 generator " + gens[i].name + " needs an exponent cap");
        if (cap(i) == 0)
            cut = true;
    }

    std::vector<SuperMonomial> monos;
    SuperMonomial cur(gens.size());
    auto rec = [&](auto&& self, std::size_t i, int deg) -> void {
        if (i == gens.size()) {
            monos.push_back(cur);
            return;
        }
        unsigned mx = gens[i].square_zero() ? 1u : (cap(i) ? cap(i) - 1 : ~0u);
        for (unsigned e = 0; e <= mx; ++e) {
            int d = deg + int(e) * gens[i].z_degree;
            if (d > max_degree)
                break;
            cur[i] = static_cast<std::uint16_t>(e);
            self(self, i + 1, d);
        }
        cur[i] = 0;
    };
    rec(rec, 0, 0);
    std::sort(monos.begin(), monos.end(), [&](const SuperMonomial& a, const SuperMonomial& b) {
        int da = A.degree(a), db = A.degree(b);
        return da != db ? da < db : a < b;
    });

    std::map<SuperMonomial, std::size_t> index;
    std::vector<BasisInfo> info;
    for (std::size_t k = 0; k < monos.size(); ++k) {
        index[monos[k]] = k;
        info.push_back({A.format(monos[k]), A.parity(monos[k]), A.degree(monos[k])});
    }
    FiniteGradedSuperalgebra R(A.field(), info, index.at(A.unit_monomial()));
    R.truncated_ = cut;
    for (std::size_t i = 0; i < monos.size(); ++i)
        for (std::size_t j = 0; j < monos.size(); ++j) {
            Vector v = zero_vector(A.field(), monos.size());
            if (auto p = A.multiply(monos[i], monos[j])) {
                auto it = index.find(p->first);
                if (it != index.end())
                    v[it->second] = p->second;
            }
            R.set_structure(i, j, std::move(v));
        }
    return R;
}

FiniteGradedSuperalgebra FiniteGradedSuperalgebra::degree_zero_quotient(const Field& f,
                                                                        const std::vector<Scalar>& lower_coeffs)
{
    const std::size_t d = lower_coeffs.size();
    if (d == 0)
        throw std::invalid_argument("quotient polynomial must have positive degree");
    std::vector<BasisInfo> info;
    for (std::size_t i = 0; i < d; ++i)
        info.push_back({i == 0 ? "1" : "s^" + std::to_string(i), 0, 0});
    FiniteGradedSuperalgebra R(f, info, 0);
    // s^k for k < 2d-1 reduced mod f
    std::vector<Vector> pw;
    for (std::size_t k = 0; k < 2 * d; ++k) {
        Vector v = zero_vector(f, d);
        if (k < d) {
            v[k] = Scalar::one(f);
        } else {
            const Vector& prev = pw[k - 1];
            // s * prev: shift up, fold the s^d coefficient
            Scalar top = prev[d - 1];
            for (std::size_t i = d - 1; i > 0; --i)
                v[i] = prev[i - 1];
            v[0] = Scalar::zero(f);
            for (std::size_t i = 0; i < d; ++i)
                v[i] -= top * lower_coeffs[i];
        }
        pw.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            R.set_structure(i, j, pw[i + j]);
    return R;
}

FiniteGradedSuperalgebra FiniteGradedSuperalgebra::tensor(const FiniteGradedSuperalgebra& a,
                                                          const FiniteGradedSuperalgebra& b)
{
    if (!(a.field() == b.field()))
        throw FieldError("tensor of algebras over different fields");
    const Field& f = a.field();
    const std::size_t na = a.dim(), nb = b.dim();
    std::vector<BasisInfo> info;
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) {
            const auto& x = a.basis()[i];
            const auto& y = b.basis()[j];
            info.push_back({x.name + "*" + y.name, (x.parity + y.parity) & 1, x.degree + y.degree});
        }
    FiniteGradedSuperalgebra R(f, info, a.unit_index() * nb + b.unit_index());
    R.truncated_ = a.truncated() || b.truncated();
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            for (std::size_t k = 0; k < na; ++k)
                for (std::size_t l = 0; l < nb; ++l) {
                    const auto& bj = b.basis()[j];
                    const auto& ak = a.basis()[k];
                    int e = bj.parity * ak.parity + bj.degree * ak.degree;
                    Scalar sg = (e & 1) ? -Scalar::one(f) : Scalar::one(f);
                    const Vector& x = a.structure(i, k);
                    const Vector& y = b.structure(j, l);
                    Vector v = zero_vector(f, na * nb);
                    for (std::size_t s = 0; s < na; ++s) {
                        if (x[s].is_zero())
                            continue;
                        for (std::size_t t = 0; t < nb; ++t)
                            if (!y[t].is_zero())
                                v[s * nb + t] = sg * x[s] * y[t];
                    }
                    R.set_structure(i * nb + j, k * nb + l, std::move(v));
                }
    return R;
}

Vector FiniteGradedSuperalgebra::multiply(const Vector& a, const Vector& b) const
{
    Vector r = zero_vector(f_, dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < dim(); ++j)
            if (!b[j].is_zero())
                axpy(r, a[i] * b[j], structure(i, j));
    }
    return r;
}

Vector FiniteGradedSuperalgebra::power(const Vector& a, unsigned e) const
{
    Vector r = unit(), b = a;
    while (e) {
        if (e & 1)
            r = multiply(r, b);
        e >>= 1;
        if (e)
            b = multiply(b, b);
    }
    return r;
}

bool FiniteGradedSuperalgebra::is_nilpotent(const Vector& a) const
{
    return supvar::is_zero(power(a, static_cast<unsigned>(dim())));
}

bool check_graded_commutativity(const FiniteGradedSuperalgebra& A)
{
    const auto& B = A.basis();
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j) {
            int e = B[i].parity * B[j].parity + B[i].degree * B[j].degree;
            Vector rhs = A.structure(j, i);
            if (e & 1)
                rhs = scale(-Scalar::one(A.field()), rhs);
            if (A.structure(i, j) != rhs)
                return false;
        }
    return true;
}

bool check_associativity(const FiniteGradedSuperalgebra& A)
{
    const Field& f = A.field();
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j)
            for (std::size_t k = 0; k < A.dim(); ++k) {
                Vector ei = unit_vector(f, A.dim(), i), ej = unit_vector(f, A.dim(), j),
                       ek = unit_vector(f, A.dim(), k);
                if (A.multiply(A.multiply(ei, ej), ek) != A.multiply(ei, A.multiply(ej, ek)))
                    return false;
            }
    return true;
}

namespace {

void check_grading(const FiniteGradedSuperalgebra& A)
{
    const auto& B = A.basis();
    for (std::size_t i = 0; i < A.dim(); ++i)
        for (std::size_t j = 0; j < A.dim(); ++j) {
            const Vector& v = A.structure(i, j);
            for (std::size_t k = 0; k < A.dim(); ++k) {
                if (v[k].is_zero())
                    continue;
                if (B[k].parity != ((B[i].parity + B[j].parity) & 1) || B[k].degree != B[i].degree + B[j].degree)
                    throw std::invalid_argument("grading violation: " + B[i].name + " * " + B[j].name +
                                                " has a component along " + B[k].name);
            }
        }
}

}  // namespace

NilradicalDecomposition nilradical_decomposition(const FiniteGradedSuperalgebra& A)
{
    check_grading(A);
    const Field& f = A.field();
    const std::size_t n = A.dim();
    std::vector<std::size_t> ridx, sidx;
    for (std::size_t i = 0; i < n; ++i)
        ((A.basis()[i].parity + A.basis()[i].degree) % 2 == 0 ? ridx : sidx).push_back(i);

    auto embed = [&](const Vector& rv) {
        Vector v = zero_vector(f, n);
        for (std::size_t k = 0; k < ridx.size(); ++k)
            v[ridx[k]] = rv[k];
        return v;
    };
    auto restrict_r = [&](const Vector& v) {
        Vector rv;
        for (auto i : ridx)
            rv.push_back(v[i]);
        return rv;
    };

    const std::size_t m = ridx.size();
    Matrix L(f, m, m);
    if (f.is_prime()) {
        // Frobenius is F_p-linear on the commutative ring R; its high powers kill exactly Nil(R)
        const unsigned p = f.characteristic();
        unsigned e = 1;
        for (std::uint64_t q = p; q < m; q *= p)
            ++e;
        for (std::size_t j = 0; j < m; ++j) {
            Vector x = unit_vector(f, n, ridx[j]);
            for (unsigned t = 0; t < e; ++t)
                x = A.power(x, p);
            Vector col = restrict_r(x);
            for (std::size_t i = 0; i < m; ++i)
                L(i, j) = col[i];
        }
    } else {
        // trace form radical on R
        std::vector<Matrix> mult(m, Matrix(f, m, m));
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                Vector col = restrict_r(A.structure(ridx[a], ridx[b]));
                for (std::size_t i = 0; i < m; ++i)
                    mult[a](i, b) = col[i];
            }
        for (std::size_t a = 0; a < m; ++a)
            for (std::size_t b = 0; b < m; ++b) {
                Matrix prod = mult[a] * mult[b];
                Scalar tr = Scalar::zero(f);
                for (std::size_t i = 0; i < m; ++i)
                    tr += prod(i, i);
                L(a, b) = tr;
            }
    }

    NilradicalDecomposition out;
    out.truncated = A.truncated();
    Subspace full(f, n);
    for (const auto& k : kernel_basis(L)) {
        Vector v = embed(k);
        out.nil_of_R.push_back(v);
        full.add(v);
    }
    for (auto i : sidx) {
        out.square_zero.push_back(unit_vector(f, n, i));
        full.add(unit_vector(f, n, i));
    }
    out.full_nilradical = full.basis();
    for (const auto& v : out.full_nilradical)
        if (!A.is_nilpotent(v))
            throw std::logic_error("nilradical basis vector is not nilpotent");
    return out;
}

}  // namespace supvar
