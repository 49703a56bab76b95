#include "supvar/superalgebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace supvar {

bool SuperMonomial::is_one() const
{
    return std::all_of(exps.begin(), exps.end(), [](std::uint16_t e) { return e == 0; });
}

GradedCommutativeAlgebra::GradedCommutativeAlgebra(Field f, std::vector<GeneratorSpec> gens)
    : f_(f), gens_(std::move(gens))
{
    for (const auto& g : gens_) {
        if (g.parity != 0 && g.parity != 1)
            throw std::invalid_argument("generator parity must be 0 or 1");
        if (g.z_degree < 0)
            throw std::invalid_argument("generator degree must be non-negative");
    }
}

int GradedCommutativeAlgebra::degree(const SuperMonomial& m) const
{
    int d = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        d += m[i] * gens_[i].z_degree;
    return d;
}

int GradedCommutativeAlgebra::parity(const SuperMonomial& m) const
{
    int p = 0;
    for (std::size_t i = 0; i < gens_.size(); ++i)
        p += m[i] * gens_[i].parity;
    return p & 1;
}

std::uint64_t GradedCommutativeAlgebra::exterior_mask(const SuperMonomial& m) const
{
    std::uint64_t mask = 0;
    for (std::size_t i = 0, bit = 0; i < gens_.size(); ++i) {
        if (!gens_[i].square_zero())
            continue;
        if (m[i])
            mask |= std::uint64_t(1) << bit;
        ++bit;
    }
    return mask;
}

AlgebraElement GradedCommutativeAlgebra::one() const
{
    return AlgebraElement(unit_monomial(), Scalar::one(f_));
}

AlgebraElement GradedCommutativeAlgebra::generator(std::size_t i) const
{
    SuperMonomial m = unit_monomial();
    m[i] = 1;
    return AlgebraElement(m, Scalar::one(f_));
}

AlgebraElement GradedCommutativeAlgebra::monomial(const SuperMonomial& m) const
{
    return AlgebraElement(m, Scalar::one(f_));
}

std::optional<std::pair<SuperMonomial, Scalar>> GradedCommutativeAlgebra::multiply(const SuperMonomial& a,
                                                                                  const SuperMonomial& b) const
{
    const std::size_t n = gens_.size();
    long sign = 0;
    for (std::size_t j = 0; j < n; ++j) {
        if (!b[j])
            continue;
        for (std::size_t i = j + 1; i < n; ++i) {
            if (!a[i])
                continue;
            const auto& gi = gens_[i];
            const auto& gj = gens_[j];
            sign += long(a[i]) * b[j] * (gi.parity * gj.parity + gi.z_degree * gj.z_degree);
        }
    }
    Scalar c = (sign & 1) ? -Scalar::one(f_) : Scalar::one(f_);
    SuperMonomial r(n);
    for (std::size_t i = 0; i < n; ++i) {
        unsigned t = unsigned(a[i]) + b[i];
        if (gens_[i].square_zero() && t > 1)
            return std::nullopt;
        if (gens_[i].kind == GenKind::DividedPower && a[i] && b[i])
            c *= binomial(f_, t, a[i]);
        if (t > 0xFFFF)
            throw std::overflow_error("monomial exponent overflow");
        r[i] = static_cast<std::uint16_t>(t);
    }
    if (c.is_zero())
        return std::nullopt;
    return std::make_pair(std::move(r), c);
}

AlgebraElement GradedCommutativeAlgebra::multiply(const AlgebraElement& a, const AlgebraElement& b) const
{
    AlgebraElement r;
    for (const auto& [ma, ca] : a)
        for (const auto& [mb, cb] : b)
            if (auto p = multiply(ma, mb))
                r.add(p->first, ca * cb * p->second);
    return r;
}

AlgebraElement GradedCommutativeAlgebra::power(const AlgebraElement& a, unsigned e) const
{
    AlgebraElement r = one();
    for (unsigned i = 0; i < e; ++i)
        r = multiply(r, a);
    return r;
}

std::vector<SuperMonomial> GradedCommutativeAlgebra::basis(int degree) const
{
    std::vector<SuperMonomial> out;
    if (degree < 0)
        return out;
    SuperMonomial cur(gens_.size());
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i == gens_.size()) {
            if (left == 0)
                out.push_back(cur);
            return;
        }
        const auto& g = gens_[i];
        int mx;
        if (g.z_degree == 0) {
            if (!g.square_zero())
                throw std::invalid_argument("degree-0 polynomial generator gives infinite graded pieces");
            mx = 1;
        } else {
            mx = left / g.z_degree;
            if (g.square_zero())
                mx = std::min(mx, 1);
        }
        for (int e = 0; e <= mx; ++e) {
            cur[i] = static_cast<std::uint16_t>(e);
            self(self, i + 1, left - e * g.z_degree);
        }
        cur[i] = 0;
    };
    rec(rec, 0, degree);
    std::sort(out.begin(), out.end());
    return out;
}

std::string GradedCommutativeAlgebra::format(const SuperMonomial& m) const
{
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < gens_.size(); ++i) {
        if (!m[i])
            continue;
        if (any)
            os << ' ';
        any = true;
        const auto& g = gens_[i];
        if (g.square_zero())
            os << '<' << g.name << '>';
        else if (g.kind == GenKind::DividedPower)
            os << "g" << m[i] << '(' << g.name << ')';
        else if (m[i] == 1)
            os << g.name;
        else
            os << g.name << '^' << m[i];
    }
    return any ? os.str() : std::string("1");
}

std::string GradedCommutativeAlgebra::format(const AlgebraElement& a) const
{
    if (a.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : a) {
        if (!first)
            os << " + ";
        first = false;
        os << c << '*' << format(m);
    }
    return os.str();
}

std::vector<SuperMonomial> monomial_basis(const GradedCommutativeAlgebra& A, int degree)
{
    return A.basis(degree);
}

}  // namespace supvar
