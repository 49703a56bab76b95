#include "supvar/catalog.hpp"
#include "supvar/koszul.hpp"
#include "supvar/may.hpp"
#include "supvar/pbw.hpp"
#include "supvar/varieties.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace supvar;

namespace {

Matrix random_matrix(const Field& f, std::size_t n, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = Scalar(f, static_cast<std::int64_t>(rng() % f.characteristic()));
    return m;
}

void BM_rank_dense(benchmark::State& st)
{
    Field f = Field::prime(5);
    Matrix m = random_matrix(f, static_cast<std::size_t>(st.range(0)), 1);
    for (auto _ : st)
        benchmark::DoNotOptimize(rank(m));
}
BENCHMARK(BM_rank_dense)->Arg(32)->Arg(64)->Arg(128);

void BM_rank_sparse(benchmark::State& st)
{
    const std::size_t n = static_cast<std::size_t>(st.range(0));
    std::mt19937_64 rng(2);
    std::vector<SparseRow> rows(n);
    for (auto& r : rows)
        for (std::size_t j = 0; j < n; ++j)
            if (rng() % 10 == 0)
                r.entries.emplace_back(j, 1 + rng() % 4);
    for (auto _ : st)
        benchmark::DoNotOptimize(rank_sparse_mod_p(rows, 5));
}
BENCHMARK(BM_rank_sparse)->Arg(256)->Arg(1024);

void BM_koszul_matrices(benchmark::State& st)
{
    Field f = Field::prime(3);
    auto g = build_gl(1, 1, f);
    auto k = trivial_module(g);
    const int top = static_cast<int>(st.range(0));
    for (auto _ : st) {
        KoszulComplex C(g, k, top);
        for (int n = 0; n < top; ++n)
            benchmark::DoNotOptimize(C.differential_matrix(n));
    }
}
BENCHMARK(BM_koszul_matrices)->Arg(4)->Arg(6);

void BM_pbw_products(benchmark::State& st)
{
    Field f = Field::prime(5);
    auto g = build_ex_5_3_3(2, {Scalar(f, 1), Scalar(f, 2), Scalar(f, 3)}, f);
    EnvelopingAlgebra V(g, true);
    auto B = V.basis();
    std::mt19937_64 rng(3);
    for (auto _ : st) {
        PBWElement a(B[rng() % B.size()], Scalar::one(f));
        PBWElement b(B[rng() % B.size()], Scalar::one(f));
        benchmark::DoNotOptimize(V.multiply(a, b));
    }
}
BENCHMARK(BM_pbw_products);

void BM_may_resolution(benchmark::State& st)
{
    Field f = Field::prime(static_cast<std::uint32_t>(st.range(0)));
    auto g = build_ex_5_3_2(f);
    for (auto _ : st) {
        ResolutionOptions o;
        o.exactness_through = 4;
        MayResolution X(g, o);
        DualComplex D(X, X.truncation() - 1);
        benchmark::DoNotOptimize(vg_cohomology(D).dims);
    }
}
BENCHMARK(BM_may_resolution)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_support_points(benchmark::State& st)
{
    Field f = Field::prime(3);
    auto g = build_gl(2, 1, f);
    auto M = natural_module(g);
    for (auto _ : st)
        benchmark::DoNotOptimize(support_points(g, M).members.size());
}
BENCHMARK(BM_support_points)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
