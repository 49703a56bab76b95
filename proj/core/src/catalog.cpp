#include "supvar/catalog.hpp"

#include <stdexcept>

namespace supvar {

LieSuperalgebra build_gl(std::size_t m, std::size_t n, const Field& f)
{
    const std::size_t N = m + n;
    if (N == 0)
        throw std::invalid_argument("gl(m|n) needs m + n >= 1");
    std::vector<std::string> names;
    std::vector<int> par;
    std::vector<Matrix> mats;
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) {
            names.push_back("e" + std::to_string(i + 1) + std::to_string(j + 1));
            par.push_back((i < m) != (j < m) ? 1 : 0);
            Matrix e(f, N, N);
            e(i, j) = Scalar::one(f);
            mats.push_back(e);
        }
    LieSuperalgebra g(f, names, par);
    auto coords = [&](const Matrix& x) {
        Vector v = zero_vector(f, N * N);
        for (std::size_t i = 0; i < N; ++i)
            for (std::size_t j = 0; j < N; ++j)
                v[i * N + j] = x(i, j);
        return v;
    };
    for (std::size_t a = 0; a < N * N; ++a)
        for (std::size_t b = 0; b < N * N; ++b)
            g.set_bracket(a, b, coords(super_commutator(mats[a], par[a], mats[b], par[b])));
    if (f.is_prime()) {
        std::vector<Vector> img;
        for (std::size_t a = 0; a < N * N; ++a)
            img.push_back(par[a] ? zero_vector(f, N * N) : coords(mats[a].pow(f.characteristic())));
        g.set_pmap(img);
    }
    g.set_realization(mats, m);
    return g;
}

LieSuperalgebra build_odd_abelian(std::size_t d, const Field& f)
{
    std::vector<std::string> names;
    for (std::size_t i = 0; i < d; ++i)
        names.push_back("y" + std::to_string(i + 1));
    LieSuperalgebra g(f, names, std::vector<int>(d, 1));
    if (f.is_prime())
        g.set_pmap(std::vector<Vector>(d, zero_vector(f, d)));
    return g;
}

namespace {

LieSuperalgebra xy_algebra(const Field& f)
{
    return LieSuperalgebra(f, {"x", "y"}, {0, 1});
}

}  // namespace

LieSuperalgebra build_ex_3_1_2(const Field& f)
{
    auto g = xy_algebra(f);
    g.set_bracket(1, 1, {Scalar(f, 2), Scalar(f, 0)});
    return g;
}

LieSuperalgebra build_ex_5_3_1(const Field& f)
{
    if (!f.is_prime())
        throw std::invalid_argument("ex_5_3_1 is a restricted algebra; needs characteristic p");
    auto g = xy_algebra(f);
    g.set_bracket(1, 1, {Scalar(f, 2), Scalar(f, 0)});
    g.set_pmap({{Scalar(f, 1), Scalar(f, 0)}, zero_vector(f, 2)});
    return g;
}

LieSuperalgebra build_ex_5_3_2(const Field& f)
{
    if (!f.is_prime())
        throw std::invalid_argument("ex_5_3_2 is a restricted algebra; needs characteristic p");
    auto g = xy_algebra(f);
    g.set_bracket_antisym(1, 0, {Scalar(f, 0), Scalar(f, 1)});
    g.set_pmap({{Scalar(f, 1), Scalar(f, 0)}, zero_vector(f, 2)});
    return g;
}

LieSuperalgebra build_ex_5_3_3(std::size_t n, const std::vector<Scalar>& alphas, const Field& f)
{
    if (!f.is_prime())
        throw std::invalid_argument("ex_5_3_3 is a restricted algebra; needs characteristic p");
    if (alphas.size() != n + 1)
        throw std::invalid_argument("ex_5_3_3 needs n+1 coefficients alpha_0..alpha_n");
    const std::size_t d = n + 2;
    std::vector<std::string> names{"y"};
    std::vector<int> par{1};
    for (std::size_t i = 0; i <= n; ++i) {
        names.push_back("x" + std::to_string(i));
        par.push_back(0);
    }
    LieSuperalgebra g(f, names, par);
    std::vector<Vector> img(d, zero_vector(f, d));
    for (std::size_t i = 0; i < n; ++i)
        img[i + 1][i + 2] = Scalar::one(f);
    for (std::size_t i = 0; i <= n; ++i)
        img[n + 1][i + 1] = alphas[i];
    g.set_bracket(0, 0, scale(Scalar(f, 2), img[1]));
    g.set_pmap(img);
    return g;
}

LieSuperalgebra build_even_line(const Field& f)
{
    LieSuperalgebra g(f, {"x"}, {0});
    if (f.is_prime())
        g.set_pmap({zero_vector(f, 1)});
    return g;
}

LieSuperalgebra build_example(const std::string& id, const Field& f, const std::vector<std::int64_t>& params)
{
    if (id == "odd_abelian") {
        if (params.size() != 1 || params[0] < 0)
            throw std::invalid_argument("odd_abelian needs one parameter d >= 0");
        return build_odd_abelian(static_cast<std::size_t>(params[0]), f);
    }
    if (id == "ex_3_1_2")
        return build_ex_3_1_2(f);
    if (id == "ex_5_3_1")
        return build_ex_5_3_1(f);
    if (id == "ex_5_3_2")
        return build_ex_5_3_2(f);
    if (id == "ex_5_3_3") {
        if (params.empty() || params[0] < 0 || params.size() != static_cast<std::size_t>(params[0]) + 2)
            throw std::invalid_argument("ex_5_3_3 needs parameters n, alpha_0, ..., alpha_n");
        std::vector<Scalar> al;
        for (std::size_t i = 1; i < params.size(); ++i)
            al.emplace_back(f, params[i]);
        return build_ex_5_3_3(static_cast<std::size_t>(params[0]), al, f);
    }
    if (id == "even_line")
        return build_even_line(f);
    throw std::invalid_argument("unknown example id \"" + id + "\"");
}

std::vector<CatalogEntry> catalog(const Field& f)
{
    std::vector<CatalogEntry> out;
    out.push_back({"odd_abelian(1)", build_odd_abelian(1, f)});
    out.push_back({"odd_abelian(2)", build_odd_abelian(2, f)});
    out.push_back({"odd_abelian(3)", build_odd_abelian(3, f)});
    out.push_back({"even_line", build_even_line(f)});
    out.push_back({"ex_3_1_2", build_ex_3_1_2(f)});
    if (f.is_prime()) {
        out.push_back({"ex_5_3_1", build_ex_5_3_1(f)});
        out.push_back({"ex_5_3_2", build_ex_5_3_2(f)});
        out.push_back({"ex_5_3_3(0;1)", build_ex_5_3_3(0, {Scalar::one(f)}, f)});
        out.push_back({"ex_5_3_3(1;1,2)", build_ex_5_3_3(1, {Scalar(f, 1), Scalar(f, 2)}, f)});
        out.push_back({"ex_5_3_3(2;0,1,1)", build_ex_5_3_3(2, {Scalar(f, 0), Scalar(f, 1), Scalar(f, 1)}, f)});
    }
    out.push_back({"gl(1|1)", build_gl(1, 1, f)});
    return out;
}

}  // namespace supvar
