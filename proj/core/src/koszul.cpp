#include "supvar/koszul.hpp"

#include "supvar/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace supvar {

GradedCommutativeAlgebra super_exterior_dual(const LieSuperalgebra& g)
{
    std::vector<GeneratorSpec> gens;
    for (auto i : g.even_indices())
        gens.push_back({g.name(i) + "*", 0, 1, GenKind::Polynomial});
    for (auto i : g.odd_indices())
        gens.push_back({g.name(i) + "*", 1, 1, GenKind::Polynomial});
    return GradedCommutativeAlgebra(g.field(), gens);
}

KoszulComplex::KoszulComplex(const LieSuperalgebra& g, const Supermodule& M, int max_degree)
    : g_(g), M_(M), A_(super_exterior_dual(g)), max_deg_(max_degree), pos_(g.dim())
{
    if (max_degree < 1)
        throw std::invalid_argument("max_degree must be at least 1");
    if (M.num_operators() != g.dim())
        throw std::invalid_argument("module does not match the algebra");
    const Field& f = g.field();
    auto ord = g.even_indices();
    for (auto i : g.odd_indices())
        ord.push_back(i);
    for (std::size_t k = 0; k < ord.size(); ++k)
        pos_[ord[k]] = k;

    // d(e^k) = 1/2 sum_{a,b} (-1)^{ab} c_ab^k e^a e^b
    Scalar half = Scalar(f, 2).inv();
    dgen_.resize(g.dim());
    for (std::size_t a = 0; a < g.dim(); ++a)
        for (std::size_t b = 0; b < g.dim(); ++b) {
            const auto& br = g.bracket_basis(a, b);
            if (br.empty())
                continue;
            AlgebraElement prod = A_.multiply(dual(a), dual(b));
            Scalar s = (g.parity(a) & g.parity(b)) ? -half : half;
            for (const auto& [k, c] : br)
                dgen_[k].add(prod, s * c);
        }

    basis_.resize(max_degree + 1);
    index_.resize(max_degree + 1);
    for (int n = 0; n <= max_degree; ++n) {
        auto monos = A_.basis(n);
        for (std::size_t k = 0; k < M.dim(); ++k)
            for (const auto& mono : monos) {
                index_[n].emplace(CochainKey{k, mono}, basis_[n].size());
                basis_[n].push_back({k, mono});
            }
    }
    for (int n = 0; n < max_degree; ++n) {
        Matrix D(f, basis_[n + 1].size(), basis_[n].size());
        for (std::size_t j = 0; j < basis_[n].size(); ++j) {
            CochainElement img = differential(CochainElement(basis_[n][j], Scalar::one(f)));
            for (const auto& [key, c] : img)
                D(index_[n + 1].at(key), j) = c;
        }
        mats_.push_back(std::move(D));
    }
    for (int n = 0; n + 1 < max_degree; ++n)
        if (!(mats_[n + 1] * mats_[n]).is_zero())
            throw SignConventionError("d^2 != 0 on C^" + std::to_string(n));
}

const AlgebraElement& KoszulComplex::dmono(const SuperMonomial& m) const
{
    if (auto it = memo_.find(m); it != memo_.end())
        return it->second;
    AlgebraElement r;
    std::size_t g = 0;
    while (g < m.size() && m[g] == 0)
        ++g;
    if (g < m.size()) {
        // m = e_g * rest, d(m) = d(e_g) rest - e_g d(rest)   (e_g has degree 1)
        SuperMonomial rest = m;
        rest[g] -= 1;
        std::size_t basis_idx = 0;
        for (std::size_t i = 0; i < pos_.size(); ++i)
            if (pos_[i] == g)
                basis_idx = i;
        r = A_.multiply(dgen_[basis_idx], A_.monomial(rest));
        r.add(A_.multiply(A_.generator(g), dmono(rest)), -Scalar::one(A_.field()));
    }
    return memo_.emplace(m, std::move(r)).first->second;
}

AlgebraElement KoszulComplex::differential(const AlgebraElement& z) const
{
    AlgebraElement r;
    for (const auto& [m, c] : z)
        r.add(dmono(m), c);
    return r;
}

CochainElement KoszulComplex::differential(const CochainElement& x) const
{
    const Field& f = g_.field();
    CochainElement r;
    for (const auto& [key, c] : x) {
        const auto& [k, mono] = key;
        // coefficient part: -sum_a (-1)^{a m} (e_a . m_k) (x) e^a z
        for (std::size_t a = 0; a < g_.dim(); ++a) {
            const Matrix& rho = M_.rho(a);
            bool any = false;
            for (std::size_t i = 0; i < M_.dim() && !any; ++i)
                any = !rho(i, k).is_zero();
            if (!any)
                continue;
            SuperMonomial ea = A_.unit_monomial();
            ea[pos_[a]] = 1;
            auto prod = A_.multiply(ea, mono);
            if (!prod)
                continue;
            Scalar s = (g_.parity(a) & M_.parity(k)) ? Scalar::one(f) : -Scalar::one(f);
            for (std::size_t i = 0; i < M_.dim(); ++i)
                if (!rho(i, k).is_zero())
                    r.add({i, prod->first}, s * rho(i, k) * prod->second * c);
        }
        for (const auto& [mm, cc] : dmono(mono))
            r.add({k, mm}, cc * c);
    }
    return r;
}

CochainElement KoszulComplex::tensor(const Vector& m, const AlgebraElement& z) const
{
    CochainElement r;
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (m[k].is_zero())
            continue;
        for (const auto& [mono, c] : z)
            r.add({k, mono}, m[k] * c);
    }
    return r;
}

CochainElement KoszulComplex::right_multiply(const CochainElement& x, const AlgebraElement& z) const
{
    CochainElement r;
    for (const auto& [key, c] : x)
        for (const auto& [mono, cz] : z)
            if (auto p = A_.multiply(key.second, mono))
                r.add({key.first, p->first}, c * cz * p->second);
    return r;
}

Vector KoszulComplex::coordinates(const CochainElement& x, int n) const
{
    Vector v = zero_vector(g_.field(), component_dim(n));
    for (const auto& [key, c] : x) {
        auto it = index_.at(n).find(key);
        if (it == index_.at(n).end())
            throw std::invalid_argument("cochain is not homogeneous of degree " + std::to_string(n));
        v[it->second] = c;
    }
    return v;
}

CochainElement KoszulComplex::from_coordinates(const Vector& v, int n) const
{
    CochainElement r;
    for (std::size_t i = 0; i < v.size(); ++i)
        r.add(basis_.at(n)[i], v[i]);
    return r;
}

CohomologyTable cohomology(const KoszulComplex& C)
{
    CohomologyTable t;
    t.max_degree = C.max_degree();
    std::vector<std::size_t> rk;
    for (int n = 0; n < C.max_degree(); ++n)
        rk.push_back(rank(C.differential_matrix(n)));
    for (int n = 0; n < C.max_degree(); ++n)
        t.dims.push_back(C.component_dim(n) - rk[n] - (n > 0 ? rk[n - 1] : 0));
    return t;
}

CohomologyTable cohomology(const LieSuperalgebra& g, const Supermodule& M, int max_degree)
{
    return cohomology(KoszulComplex(g, M, max_degree));
}

namespace {

AlgebraElement to_algebra(const CochainElement& c)
{
    AlgebraElement r;
    for (const auto& [key, v] : c)
        r.add(key.second, v);
    return r;
}

CochainElement from_algebra(const AlgebraElement& z)
{
    CochainElement r;
    for (const auto& [m, c] : z)
        r.add({0, m}, c);
    return r;
}

}  // namespace

PPowerCocycle ppower_cocycle(const KoszulComplex& C, const AlgebraElement& f)
{
    const auto& A = C.cochain_algebra();
    const auto& g = C.algebra();
    if (C.coefficients().dim() != 1)
        throw std::invalid_argument("ppower_cocycle needs trivial coefficients");
    if (!g.field().is_prime())
        throw std::invalid_argument("ppower_cocycle needs characteristic p");
    if (f.empty())
        throw std::invalid_argument("ppower_cocycle of zero");
    int d = -1;
    for (const auto& [m, c] : f) {
        for (auto i : g.even_indices())
            if (m[C.dual_generator(i)])
                throw std::invalid_argument("f must involve odd dual generators only");
        int dm = A.degree(m);
        if (d >= 0 && dm != d)
            throw std::invalid_argument("f must be homogeneous");
        d = dm;
    }
    const unsigned p = g.field().characteristic();
    PPowerCocycle out;
    out.degree = d * static_cast<int>(p);
    if (out.degree > C.max_degree())
        throw std::out_of_range("degree " + std::to_string(out.degree) + " beyond truncation " +
                                std::to_string(C.max_degree()));
    out.cochain = A.power(f, p);
    out.is_cocycle = C.differential(out.cochain).empty();
    if (out.degree == 0)
        return out;
    Vector rhs = C.coordinates(from_algebra(out.cochain), out.degree);
    if (auto x = solve(C.differential_matrix(out.degree - 1), rhs)) {
        out.is_coboundary = true;
        out.primitive = to_algebra(C.from_coordinates(*x, out.degree - 1));
    }
    return out;
}

namespace {

int perm_sign(const std::vector<std::size_t>& s)
{
    int sg = 1;
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (s[i] > s[j])
                sg = -sg;
    return sg;
}

}  // namespace

namespace {

// X_ij as a cochain, 0-based indices into the (2m) x (2m) matrix units
struct GlForms {
    const KoszulComplex& C;
    std::size_t m;

    AlgebraElement X(std::size_t i, std::size_t j) const { return C.dual(i * 2 * m + j); }

    AlgebraElement f1() const
    {
        const auto& A = C.cochain_algebra();
        const Field& f = A.field();
        AlgebraElement r;
        std::vector<std::size_t> s(m);
        std::iota(s.begin(), s.end(), 0);
        do {
            AlgebraElement t = A.one();
            for (std::size_t l = 0; l < m; ++l)
                t = A.multiply(t, X(s[l], m + l));
            r.add(t, Scalar(f, perm_sign(s)));
        } while (std::next_permutation(s.begin(), s.end()));
        return r;
    }

    AlgebraElement trace_form(bool super) const
    {
        const Field& f = C.cochain_algebra().field();
        AlgebraElement r;
        for (std::size_t i = 0; i < m; ++i) {
            r += X(i, i);
            r.add(X(i + m, i + m), super ? -Scalar::one(f) : Scalar::one(f));
        }
        return r;
    }
};

}  // namespace

bool verify_f1_identity(std::size_t m, std::uint32_t p, bool use_supertrace)
{
    Field f = Field::prime(p);
    LieSuperalgebra g = build_gl(m, m, f);
    Supermodule k = trivial_module(g);
    KoszulComplex C(g, k, 1);
    GlForms F{C, m};
    AlgebraElement f1 = F.f1();
    return C.differential(f1) == C.cochain_algebra().multiply(F.trace_form(use_supertrace), f1);
}

namespace {

struct F2Data {
    CochainElement f2;
    Vector str_module;
};

F2Data build_f2(const KoszulComplex& C, const LieSuperalgebra& g, std::size_t m)
{
    const auto& A = C.cochain_algebra();
    const Field& f = A.field();
    GlForms F{C, m};
    auto ord = even_first_order(g);
    std::vector<std::size_t> mpos(g.dim());
    for (std::size_t i = 0; i < ord.size(); ++i)
        mpos[ord[i]] = i;
    const std::size_t N = 2 * m;
    F2Data d;
    for (std::size_t i = 0; i < m; ++i) {
        std::vector<std::size_t> s(m);
        std::iota(s.begin(), s.end(), 0);
        do {
            AlgebraElement t = A.one();
            for (std::size_t l = 0; l < m; ++l)
                if (l != i)
                    t = A.multiply(t, F.X(s[l], m + l));
            Vector mv = zero_vector(f, g.dim());
            mv[mpos[s[i] * N + m + i]] = Scalar(f, perm_sign(s));
            d.f2 += C.tensor(mv, t);
        } while (std::next_permutation(s.begin(), s.end()));
    }
    d.str_module = zero_vector(f, g.dim());
    for (std::size_t r = 0; r < m; ++r) {
        d.str_module[mpos[r * N + r]] += Scalar::one(f);
        d.str_module[mpos[(r + m) * N + r + m]] -= Scalar::one(f);
    }
    return d;
}

}  // namespace

bool verify_f2_identity(std::size_t m, std::uint32_t p)
{
    Field f = Field::prime(p);
    LieSuperalgebra g = build_gl(m, m, f);
    Supermodule triv = trivial_module(g);
    Supermodule coadj = coadjoint_module(g);
    KoszulComplex Ct(g, triv, 1);
    KoszulComplex C(g, coadj, 1);
    GlForms F{Ct, m};
    AlgebraElement f1 = F.f1();
    AlgebraElement str = F.trace_form(true);
    F2Data d = build_f2(C, g, m);

    CochainElement lhs = C.differential(d.f2);
    CochainElement rhs = C.tensor(d.str_module, f1).scaled(-Scalar::one(f));
    rhs.add(C.right_multiply(d.f2, str), (m % 2 == 1) ? Scalar::one(f) : -Scalar::one(f));
    return lhs == rhs;
}

bool verify_f2_consequence(std::size_t m, std::uint32_t p)
{
    Field f = Field::prime(p);
    LieSuperalgebra g = build_gl(m, m, f);
    Supermodule triv = trivial_module(g);
    Supermodule coadj = coadjoint_module(g);
    KoszulComplex Ct(g, triv, 1);
    KoszulComplex C(g, coadj, 1);
    GlForms F{Ct, m};
    const auto& A = C.cochain_algebra();
    AlgebraElement f1 = F.f1();
    F2Data d = build_f2(C, g, m);
    CochainElement x = C.right_multiply(d.f2, A.power(f1, p - 1)).scaled(-Scalar::one(f));
    return C.differential(x) == C.tensor(d.str_module, A.power(f1, p));
}

AlgebraElement restrict_element(const KoszulComplex& big, const SubalgebraEmbedding& s, const KoszulComplex& small,
                                const AlgebraElement& z)
{
    const auto& A = big.cochain_algebra();
    const auto& B = small.cochain_algebra();
    const auto& g = big.algebra();
    // image of each dual generator of g
    std::vector<AlgebraElement> img(A.num_generators());
    for (std::size_t k = 0; k < g.dim(); ++k) {
        AlgebraElement r;
        for (std::size_t j = 0; j < s.sub.dim(); ++j)
            r.add(small.dual(j), s.inclusion(k, j));
        img[big.dual_generator(k)] = r;
    }
    AlgebraElement out;
    for (const auto& [m, c] : z) {
        AlgebraElement t = B.one();
        for (std::size_t i = 0; i < m.size(); ++i)
            for (unsigned e = 0; e < m[i]; ++e)
                t = B.multiply(t, img[i]);
        out.add(t, c);
    }
    return out;
}

CochainMap restrict_cochains(const KoszulComplex& big, const SubalgebraEmbedding& s, const KoszulComplex& small)
{
    const auto& g = big.algebra();
    const Field& f = g.field();
    if (big.coefficients().dim() != 1 || small.coefficients().dim() != 1)
        throw std::invalid_argument("restriction is implemented for trivial coefficients");
    // the embedding must respect brackets
    for (std::size_t a = 0; a < s.sub.dim(); ++a)
        for (std::size_t b = 0; b < s.sub.dim(); ++b) {
            Vector lhs = s.inclusion.apply(s.sub.bracket_basis_dense(a, b));
            Vector rhs = g.bracket(s.inclusion.column(a), s.inclusion.column(b));
            if (lhs != rhs)
                throw std::invalid_argument("embedding is not a subalgebra map");
        }
    CochainMap out;
    int top = std::min(big.max_degree(), small.max_degree());
    for (int n = 0; n <= top; ++n) {
        Matrix R(f, small.component_dim(n), big.component_dim(n));
        for (std::size_t j = 0; j < big.component_dim(n); ++j) {
            AlgebraElement z = big.cochain_algebra().monomial(big.component_basis(n)[j].second);
            AlgebraElement r = restrict_element(big, s, small, z);
            CochainElement c;
            for (const auto& [m, v] : r)
                c.add({0, m}, v);
            Vector col = small.coordinates(c, n);
            for (std::size_t i = 0; i < col.size(); ++i)
                R(i, j) = col[i];
        }
        out.components.push_back(std::move(R));
    }
    out.commutes = true;
    out.surjective = true;
    for (int n = 0; n <= top; ++n)
        if (rank(out.components[n]) != small.component_dim(n))
            out.surjective = false;
    for (int n = 0; n < top; ++n)
        if (!(out.components[n + 1] * big.differential_matrix(n) == small.differential_matrix(n) * out.components[n]))
            out.commutes = false;
    return out;
}

}  // namespace supvar
