#include "supvar/may.hpp"

#include <sstream>

namespace supvar {

namespace {

std::uint32_t char_p(const LieSuperalgebra& g)
{
    if (!g.field().is_prime())
        throw ScopeError("the May resolution needs a field of odd prime characteristic");
    return g.field().characteristic();
}

void require_scope(const LieSuperalgebra& g)
{
    char_p(g);
    if (!g.has_pmap())
        throw ScopeError("the May resolution needs a restricted Lie superalgebra");
    if (!g.even_part_abelian())
        throw ScopeError("even part is not abelian; only the abelian case is supported");
}

Scalar sign(const Field& f, long e)
{
    return (e % 2 != 0) ? -Scalar::one(f) : Scalar::one(f);
}

}  // namespace

GradedCommutativeAlgebra resolution_generators(const LieSuperalgebra& g)
{
    std::vector<GeneratorSpec> gens;
    for (auto i : g.even_indices())
        gens.push_back({"<" + g.name(i) + ">", 0, 1, GenKind::Polynomial});
    for (auto j : g.odd_indices())
        gens.push_back({"g(" + g.name(j) + ")", 1, 1, GenKind::DividedPower});
    for (auto i : g.even_indices())
        gens.push_back({"g(" + g.name(i) + ")", 0, 2, GenKind::DividedPower});
    return GradedCommutativeAlgebra(g.field(), gens);
}

GradedCommutativeAlgebra dual_generators(const LieSuperalgebra& g)
{
    std::vector<GeneratorSpec> gens;
    for (auto i : g.even_indices())
        gens.push_back({"<" + g.name(i) + "*>", 0, 1, GenKind::Polynomial});
    for (auto j : g.odd_indices())
        gens.push_back({g.name(j) + "*", 1, 1, GenKind::Polynomial});
    for (auto i : g.even_indices())
        gens.push_back({g.name(i) + "*", 0, 2, GenKind::Polynomial});
    return GradedCommutativeAlgebra(g.field(), gens);
}

TwistingCochain build_twisting_cochain(const LieSuperalgebra& g)
{
    require_scope(g);
    ResolutionOptions opt;
    opt.run_checks = false;
    MayResolution X(g, opt);
    return X.twisting_cochain();
}

MayResolution::MayResolution(const LieSuperalgebra& g, ResolutionOptions opt)
    : g_(g), V_((require_scope(g), g), true), A_(resolution_generators(g)), trunc_(opt.truncation),
      ne_(g.dim_even()), no_(g.dim_odd()), ev_(g.even_indices()), od_(g.odd_indices())
{
    const Field& f = g.field();
    const std::uint32_t p = f.characteristic();
    if (trunc_ <= 0)
        trunc_ = 2 * static_cast<int>(p) + 2;

    for (std::size_t i = 0; i < ne_; ++i) {
        ResolutionElement t;
        PBWMonomial xp = V_.unit_monomial();
        xp[ev_[i]] = static_cast<std::uint16_t>(p - 1);
        SuperMonomial ext = A_.unit_monomial();
        ext[ext_slot(i)] = 1;
        t.add({xp, ext}, Scalar::one(f));
        for (const auto& [m, c] : letter(g.pmap_basis(ev_[i])))
            t.add({V_.unit_monomial(), m}, -c);
        t_.images.push_back(std::move(t));
    }

    // epsilon on W kills positive A-degree and applies the augmentation of V in A-degree 0
    t_.augmentation_vanishes = true;
    for (const auto& t : t_.images) {
        Scalar e = Scalar::zero(f);
        for (const auto& [k, c] : t)
            if (k.second.is_one())
                e += c * V_.augmentation(PBWElement(k.first, Scalar::one(f)));
        if (!e.is_zero())
            t_.augmentation_vanishes = false;
    }

    // d(t(gamma_1)) = 0 in W, and d_t^2 = 0 on the Gamma generators through the truncation
    bool ok = true;
    for (const auto& t : t_.images)
        if (!differential(t).empty())
            ok = false;
    for (int n = 2; n <= trunc_ && ok; ++n)
        for (const auto& a : A_.basis(n)) {
            bool pure_gamma = true;
            for (std::size_t s = 0; s < ne_ + no_; ++s)
                if (a[s] != 0)
                    pure_gamma = false;
            if (pure_gamma && !differential(differential_generator(a)).empty()) {
                ok = false;
                break;
            }
        }
    t_.twisting_condition = ok;

    if (opt.run_checks) {
        if (!t_.twisting_condition)
            throw ResolutionError("twisting condition fails");
        check_square_zero(trunc_);
        int through = opt.exactness_through < 0 ? trunc_ - 1 : std::min(opt.exactness_through, trunc_ - 1);
        check_exactness(through);
    }
}

SuperMonomial MayResolution::with_gamma(const SuperMonomial& w, const std::vector<std::uint16_t>& gamma) const
{
    SuperMonomial r = w;
    for (std::size_t i = 0; i < ne_; ++i)
        r[gamma_slot(i)] = gamma[i];
    return r;
}

AlgebraElement MayResolution::letter(const Vector& z) const
{
    AlgebraElement r;
    for (std::size_t i = 0; i < ne_; ++i)
        if (!z[ev_[i]].is_zero())
            r.add(A_.generator(ext_slot(i)), z[ev_[i]]);
    for (std::size_t j = 0; j < no_; ++j)
        if (!z[od_[j]].is_zero())
            r.add(A_.generator(odd_slot(j)), z[od_[j]]);
    return r;
}

ResolutionElement MayResolution::koszul_generator(const SuperMonomial& a) const
{
    const Field& f = g_.field();
    const Scalar one = Scalar::one(f);
    std::vector<std::size_t> S;
    for (std::size_t i = 0; i < ne_; ++i)
        if (a[ext_slot(i)] != 0)
            S.push_back(i);
    const long nS = static_cast<long>(S.size());
    ResolutionElement res;
    const PBWMonomial unit = V_.unit_monomial();

    auto put = [&](const PBWMonomial& v, const AlgebraElement& el, const Scalar& c) {
        for (const auto& [m, cc] : el)
            res.add({v, m}, c * cc);
    };
    auto pbw_gen = [&](std::size_t b) {
        PBWMonomial v = unit;
        v[b] = 1;
        return v;
    };
    auto lie_letter = [&](std::size_t i, std::size_t j) { return letter(g_.bracket_basis_dense(i, j)); };

    for (long l = 0; l < nS; ++l) {
        SuperMonomial r = a;
        r[ext_slot(S[l])] = 0;
        put(pbw_gen(ev_[S[l]]), A_.monomial(r), sign(f, l));
    }
    for (std::size_t j = 0; j < no_; ++j)
        if (a[odd_slot(j)] >= 1) {
            SuperMonomial r = a;
            r[odd_slot(j)] -= 1;
            put(pbw_gen(od_[j]), A_.monomial(r), sign(f, nS));
        }
    for (long l = 0; l < nS; ++l)
        for (long m = l + 1; m < nS; ++m) {
            AlgebraElement br = lie_letter(ev_[S[l]], ev_[S[m]]);
            if (br.empty())
                continue;
            SuperMonomial r = a;
            r[ext_slot(S[l])] = 0;
            r[ext_slot(S[m])] = 0;
            put(unit, A_.multiply(br, A_.monomial(r)), sign(f, l + m));
        }
    for (long l = 0; l < nS; ++l)
        for (std::size_t j = 0; j < no_; ++j) {
            if (a[odd_slot(j)] < 1)
                continue;
            AlgebraElement br = lie_letter(ev_[S[l]], od_[j]);
            if (br.empty())
                continue;
            SuperMonomial r = a;
            r[ext_slot(S[l])] = 0;
            r[odd_slot(j)] -= 1;
            put(unit, A_.multiply(br, A_.monomial(r)), sign(f, l + nS));
        }
    const Scalar half = Scalar(f, 2).inv();
    for (std::size_t j = 0; j < no_; ++j) {
        if (a[odd_slot(j)] >= 2) {
            AlgebraElement br = lie_letter(od_[j], od_[j]);
            if (!br.empty()) {
                SuperMonomial r = a;
                r[odd_slot(j)] -= 2;
                put(unit, A_.multiply(br, A_.monomial(r)), -half);
            }
        }
        for (std::size_t l = j + 1; l < no_; ++l) {
            if (a[odd_slot(j)] < 1 || a[odd_slot(l)] < 1)
                continue;
            AlgebraElement br = lie_letter(od_[j], od_[l]);
            if (br.empty())
                continue;
            SuperMonomial r = a;
            r[odd_slot(j)] -= 1;
            r[odd_slot(l)] -= 1;
            put(unit, A_.multiply(br, A_.monomial(r)), -one);
        }
    }
    return res;
}

AlgebraElement MayResolution::right_action(const SuperMonomial& w, std::size_t x) const
{
    const Field& f = g_.field();
    AlgebraElement r;
    long before = 0;
    for (std::size_t i = 0; i < ne_; ++i) {
        if (w[ext_slot(i)] == 0)
            continue;
        AlgebraElement br = letter(g_.bracket_basis_dense(ev_[i], x));
        if (!br.empty()) {
            SuperMonomial e = w;
            e[ext_slot(i)] = 0;
            r.add(A_.multiply(br, A_.monomial(e)), sign(f, before));
        }
        ++before;
    }
    for (std::size_t j = 0; j < no_; ++j) {
        if (w[odd_slot(j)] == 0)
            continue;
        AlgebraElement br = letter(g_.bracket_basis_dense(od_[j], x));
        if (br.empty())
            continue;
        SuperMonomial e = w;
        e[odd_slot(j)] -= 1;
        r.add(A_.multiply(br, A_.monomial(e)), sign(f, before));
    }
    return r;
}

ResolutionElement MayResolution::times_twist(const SuperMonomial& w, std::size_t i) const
{
    // (1 (x) w)(x^q (x) a') = sum_r binom(q, r) x^r (x) (w <| x^{q-r}) a'
    const Field& f = g_.field();
    const std::size_t xi = ev_[i];
    ResolutionElement res;
    for (const auto& [key, c] : t_.images[i]) {
        const auto& [v, am] = key;
        const unsigned q = v[xi];
        std::vector<AlgebraElement> acts{A_.monomial(w)};
        for (unsigned s = 0; s < q; ++s) {
            AlgebraElement nxt;
            for (const auto& [m, cc] : acts.back())
                nxt.add(right_action(m, xi), cc);
            acts.push_back(std::move(nxt));
        }
        for (unsigned r = 0; r <= q; ++r) {
            PBWMonomial e = V_.unit_monomial();
            e[xi] = static_cast<std::uint16_t>(r);
            Scalar b = binomial(f, q, r) * c;
            for (const auto& [m3, c3] : A_.multiply(acts[q - r], A_.monomial(am)))
                res.add({e, m3}, b * c3);
        }
    }
    return res;
}

const ResolutionElement& MayResolution::differential_generator(const SuperMonomial& a) const
{
    auto it = memo_.find(a);
    if (it != memo_.end())
        return it->second;
    const Field& f = g_.field();
    std::vector<std::uint16_t> G(ne_);
    SuperMonomial w = a;
    for (std::size_t i = 0; i < ne_; ++i) {
        G[i] = a[gamma_slot(i)];
        w[gamma_slot(i)] = 0;
    }
    ResolutionElement res;
    for (const auto& [k, c] : koszul_generator(w))
        res.add({k.first, with_gamma(k.second, G)}, c);
    const Scalar s = sign(f, A_.degree(w));
    for (std::size_t i = 0; i < ne_; ++i) {
        if (G[i] == 0)
            continue;
        auto G2 = G;
        G2[i] -= 1;
        for (const auto& [k, c] : times_twist(w, i))
            res.add({k.first, with_gamma(k.second, G2)}, s * c);
    }
    return memo_.emplace(a, std::move(res)).first->second;
}

ResolutionElement MayResolution::differential(const ResolutionElement& x) const
{
    ResolutionElement res;
    for (const auto& [k, c] : x)
        for (const auto& [k2, c2] : differential_generator(k.second))
            for (const auto& [v3, c3] : V_.multiply(k.first, k2.first))
                res.add({v3, k2.second}, c * c2 * c3);
    return res;
}

Matrix MayResolution::differential_matrix(int n) const
{
    if (n < 1 || n > trunc_)
        throw std::out_of_range("differential_matrix: degree outside 1..truncation");
    const auto VB = V_.basis();
    const auto src = A_.basis(n);
    const auto dst = A_.basis(n - 1);
    std::map<ResolutionKey, std::size_t> row;
    for (std::size_t a = 0; a < dst.size(); ++a)
        for (std::size_t v = 0; v < VB.size(); ++v)
            row[{VB[v], dst[a]}] = a * VB.size() + v;
    Matrix M(g_.field(), dst.size() * VB.size(), src.size() * VB.size());
    for (std::size_t a = 0; a < src.size(); ++a)
        for (std::size_t v = 0; v < VB.size(); ++v) {
            ResolutionElement x({VB[v], src[a]}, Scalar::one(g_.field()));
            for (const auto& [k, c] : differential(x))
                M(row.at(k), a * VB.size() + v) = c;
        }
    return M;
}

std::size_t MayResolution::sparse_rank(int n) const
{
    if (n < 1)
        return 0;
    auto it = rank_cache_.find(n);
    if (it != rank_cache_.end())
        return it->second;
    const auto VB = V_.basis();
    std::map<ResolutionKey, std::size_t> col;
    std::vector<SparseRow> rows;
    for (const auto& a : A_.basis(n))
        for (const auto& v : VB) {
            SparseRow r;
            for (const auto& [k, c] : differential(ResolutionElement({v, a}, Scalar::one(g_.field())))) {
                auto [ci, ins] = col.try_emplace(k, col.size());
                (void)ins;
                r.entries.emplace_back(ci->second, c.residue());
            }
            if (!r.entries.empty())
                rows.push_back(std::move(r));
        }
    std::size_t rk = rank_sparse_mod_p(std::move(rows), g_.field().characteristic());
    rank_cache_[n] = rk;
    return rk;
}

std::size_t MayResolution::homology_dim(int n) const
{
    if (n < 0 || n + 1 > trunc_)
        throw std::out_of_range("homology_dim needs n + 1 <= truncation");
    std::size_t dim = A_.basis(n).size() * V_.basis().size();
    return dim - sparse_rank(n) - sparse_rank(n + 1);
}

void MayResolution::check_square_zero(int through) const
{
    for (int n = 2; n <= through; ++n)
        for (const auto& a : A_.basis(n)) {
            auto dd = differential(differential_generator(a));
            if (!dd.empty())
                throw ResolutionError("d_t^2 != 0 on " + A_.format(a) + ": " + format(dd));
        }
}

void MayResolution::check_exactness(int through) const
{
    if (homology_dim(0) != 1)
        throw ResolutionError("H_0 has dimension " + std::to_string(homology_dim(0)) + ", expected 1");
    for (int n = 1; n <= through; ++n) {
        auto h = homology_dim(n);
        if (h != 0)
            throw ResolutionError("H_" + std::to_string(n) + " has dimension " + std::to_string(h));
    }
}

std::string MayResolution::format(const ResolutionElement& x) const
{
    if (x.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : x) {
        if (!first)
            os << " + ";
        first = false;
        os << c.str() << "*" << V_.format(k.first) << "(x)" << A_.format(k.second);
    }
    return os.str();
}

MayResolution build_resolution(const LieSuperalgebra& g, ResolutionOptions opt)
{
    return MayResolution(g, opt);
}

DualComplex::DualComplex(const MayResolution& X, int max_degree)
    : X_(X), D_(dual_generators(X.algebra())), max_deg_(max_degree)
{
    if (max_degree + 1 > X.truncation())
        throw std::out_of_range("dual complex degree exceeds the resolution truncation");
    const Field& f = D_.field();
    for (int n = 0; n <= max_deg_ + 1; ++n) {
        basis_.push_back(X.generator_basis(n));
        std::map<SuperMonomial, std::size_t> idx;
        for (std::size_t i = 0; i < basis_.back().size(); ++i)
            idx[basis_.back()[i]] = i;
        index_.push_back(std::move(idx));
    }
    auto pair_sign = [&](const SuperMonomial& m) {
        long a = 0, b = 0;
        for (std::size_t i = 0; i < X.num_even(); ++i)
            a += m[X.ext_slot(i)];
        for (std::size_t j = 0; j < X.num_odd(); ++j)
            b += m[X.odd_slot(j)];
        return sign(f, a * (a - 1) / 2 + b * (b - 1) / 2);
    };
    const PBWMonomial unit = X.enveloping().unit_monomial();
    // d*(f) = (-1)^n s_f sum_e s_e c_{f,e} e with c_{f,e} the coefficient of 1 (x) f in d_t(1 (x) e)
    for (int n = 0; n < max_deg_; ++n) {
        Matrix M(f, basis_[n + 1].size(), basis_[n].size());
        for (std::size_t e = 0; e < basis_[n + 1].size(); ++e) {
            const auto& E = basis_[n + 1][e];
            for (const auto& [k, c] : X.differential_generator(E)) {
                if (k.first != unit)
                    continue;
                std::size_t fi = index_[n].at(k.second);
                M(e, fi) += sign(f, n) * pair_sign(k.second) * pair_sign(E) * c;
            }
        }
        mats_.push_back(std::move(M));
    }
    for (int n = 0; n + 1 < max_deg_; ++n)
        if (!(mats_[n + 1] * mats_[n]).is_zero())
            throw ResolutionError("(d_t*)^2 != 0 in degree " + std::to_string(n));
}

int DualComplex::degree_of(const AlgebraElement& f) const
{
    int d = -1;
    for (const auto& [m, c] : f) {
        int dm = D_.degree(m);
        if (d >= 0 && dm != d)
            throw std::invalid_argument("cochain is not homogeneous");
        d = dm;
    }
    return d < 0 ? 0 : d;
}

Vector DualComplex::coordinates(const AlgebraElement& f, int n) const
{
    Vector v = zero_vector(D_.field(), basis_.at(n).size());
    for (const auto& [m, c] : f)
        v[index_.at(n).at(m)] += c;
    return v;
}

AlgebraElement DualComplex::from_coordinates(const Vector& v, int n) const
{
    AlgebraElement r;
    for (std::size_t i = 0; i < v.size(); ++i)
        r.add(basis_.at(n)[i], v[i]);
    return r;
}

AlgebraElement DualComplex::differential(const AlgebraElement& f) const
{
    if (f.empty())
        return f;
    int n = degree_of(f);
    if (n >= max_deg_)
        throw std::out_of_range("dual differential beyond max degree");
    return from_coordinates(mats_[n].apply(coordinates(f, n)), n + 1);
}

bool DualComplex::is_cocycle(const AlgebraElement& f) const
{
    return differential(f).empty();
}

std::optional<AlgebraElement> DualComplex::coboundary_primitive(const AlgebraElement& f) const
{
    int n = degree_of(f);
    if (f.empty())
        return AlgebraElement{};
    if (n == 0)
        return std::nullopt;
    auto sol = solve(mats_.at(n - 1), coordinates(f, n));
    if (!sol)
        return std::nullopt;
    return from_coordinates(*sol, n - 1);
}

std::size_t DualComplex::exterior_weight(const SuperMonomial& m) const
{
    std::size_t w = 0;
    for (std::size_t i = 0; i < X_.num_even(); ++i)
        w += m[X_.ext_slot(i)];
    return w;
}

DualComplex dual_complex(const MayResolution& X, int max_degree)
{
    return DualComplex(X, max_degree);
}

VgCohomology vg_cohomology(const DualComplex& D)
{
    VgCohomology out;
    out.max_degree = D.max_degree() - 1;
    std::vector<std::size_t> rk;
    for (int n = 0; n < D.max_degree(); ++n)
        rk.push_back(rank(D.differential_matrix(n)));
    for (int n = 0; n <= out.max_degree; ++n)
        out.dims.push_back(D.basis(n).size() - rk[n] - (n > 0 ? rk[n - 1] : 0));
    return out;
}

VgCohomology vg_cohomology(const LieSuperalgebra& g, int max_degree)
{
    ResolutionOptions opt;
    opt.truncation = max_degree + 2;
    opt.exactness_through = std::min(max_degree, 4);
    MayResolution X(g, opt);
    DualComplex D(X, max_degree + 1);
    return vg_cohomology(D);
}

EdgeClasses edge_subalgebra_classes(const DualComplex& D)
{
    const auto& A = D.algebra();
    const auto& g = A.generators();
    EdgeClasses out;
    const std::uint32_t p = A.field().characteristic();
    auto fill = [&](EdgeClass& c) {
        c.degree = D.degree_of(c.cochain);
        c.is_cocycle = c.degree < D.max_degree() && D.is_cocycle(c.cochain);
        c.is_coboundary = c.degree <= D.max_degree() && D.coboundary_primitive(c.cochain).has_value();
    };
    for (std::size_t s = 0; s < g.size(); ++s) {
        if (g[s].z_degree == 2) {
            EdgeClass c{g[s].name, A.generator(s)};
            fill(c);
            out.even.push_back(std::move(c));
        } else if (g[s].parity == 1 && static_cast<int>(p) <= D.max_degree()) {
            EdgeClass c{"(" + g[s].name + ")^" + std::to_string(p), A.power(A.generator(s), p)};
            fill(c);
            out.odd.push_back(std::move(c));
        }
    }
    return out;
}

}  // namespace supvar
