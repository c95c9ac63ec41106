#include <benchmark/benchmark.h>

#include <random>

#include "qreach/glob_reach.hpp"
#include "qreach/inf_reach.hpp"
#include "qreach/minsky.hpp"
#include "qreach/period.hpp"
#include "qreach/poly.hpp"
#include "qreach/subspace.hpp"

using namespace qreach;

namespace {

Matrix randomMatrix(std::size_t d, unsigned seed) {
    std::mt19937 g(seed);
    std::uniform_int_distribution<long> pick(-4, 4);
    Matrix m(d, d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            m.at(r, c) = GaussianRational(makeRational(pick(g), 1 + (r + c) % 3),
                                          makeRational(pick(g)));
    return m;
}

ScaledOperator walkPlus() {
    std::vector<CVector> rows{
        {GaussianRational(1), GaussianRational(1), GaussianRational(0), GaussianRational(-1)},
        {GaussianRational(1), GaussianRational(-1), GaussianRational(1), GaussianRational(0)},
        {GaussianRational(0), GaussianRational(1), GaussianRational(1), GaussianRational(1)},
        {GaussianRational(1), GaussianRational(0), GaussianRational(-1), GaussianRational(1)}};
    return ScaledOperator::validate(Matrix::fromRows(rows), 3);
}

ScaledOperator walkMinus() {
    std::vector<CVector> rows{
        {GaussianRational(1), GaussianRational(1), GaussianRational(0), GaussianRational(1)},
        {GaussianRational(-1), GaussianRational(1), GaussianRational(-1), GaussianRational(0)},
        {GaussianRational(0), GaussianRational(1), GaussianRational(1), GaussianRational(-1)},
        {GaussianRational(1), GaussianRational(0), GaussianRational(-1), GaussianRational(-1)}};
    return ScaledOperator::validate(Matrix::fromRows(rows), 3);
}

void BM_rref(benchmark::State& state) {
    const std::size_t d = static_cast<std::size_t>(state.range(0));
    Matrix m = randomMatrix(d, 7);
    for (auto _ : state) {
        Matrix copy = m;
        benchmark::DoNotOptimize(rref(copy));
    }
}
BENCHMARK(BM_rref)->Arg(4)->Arg(8)->Arg(16);

void BM_intersect(benchmark::State& state) {
    const std::size_t d = static_cast<std::size_t>(state.range(0));
    Matrix m = randomMatrix(d, 11);
    std::vector<CVector> top, bottom;
    for (std::size_t r = 0; r < d / 2 + 1; ++r) top.push_back(m.row(r));
    for (std::size_t r = d / 2 - 1; r < d; ++r) bottom.push_back(m.row(r));
    Subspace a = Subspace::span(d, top);
    Subspace b = Subspace::span(d, bottom);
    for (auto _ : state) benchmark::DoNotOptimize(intersect(a, b));
}
BENCHMARK(BM_intersect)->Arg(4)->Arg(8)->Arg(16);

void BM_cyclotomic(benchmark::State& state) {
    // uncached construction dominated by the exact divisions
    const unsigned n = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        Poly prod = Poly::constant(GaussianRational(1));
        for (unsigned d = 1; d < n; ++d)
            if (n % d == 0) prod = prod * cyclotomic(d);
        benchmark::DoNotOptimize(
            divExact(Poly::monomial(n) - Poly::constant(GaussianRational(1)), prod));
    }
}
BENCHMARK(BM_cyclotomic)->Arg(12)->Arg(60)->Arg(210);

void BM_period_walk(benchmark::State& state) {
    ScaledOperator w = walkPlus();
    for (auto _ : state) benchmark::DoNotOptimize(period(w).p);
}
BENCHMARK(BM_period_walk);

void BM_gfixpoint_walk(benchmark::State& state) {
    QuantumAutomaton a(4, {{"+", walkPlus()}, {"-", walkMinus()}},
                       Subspace::span(4, {{GaussianRational(1), GaussianRational(0),
                                           GaussianRational(0), GaussianRational(0)}}));
    Subspace pd1 = Subspace::span(
        4, {{GaussianRational(1), GaussianRational(0), GaussianRational(0), GaussianRational(0)},
            {GaussianRational(0), GaussianRational(1), GaussianRational(0), GaussianRational(-1)}});
    Subspace pd2 = Subspace::span(
        4, {{GaussianRational(1), GaussianRational(0), GaussianRational(0), GaussianRational(0)},
            {GaussianRational(0), GaussianRational(1), GaussianRational(0), GaussianRational(1)}});
    auto f = Formula::disjunction({Formula::atom(pd1), Formula::atom(pd2)});
    for (auto _ : state) benchmark::DoNotOptimize(gFixpoint(a, *f).iterations);
}
BENCHMARK(BM_gfixpoint_walk);

void BM_minsky_encode(benchmark::State& state) {
    auto prog = minsky::normalize(minsky::parse("l0: inc a goto l1\n"
                                                "l1: tdz a goto l2 else l1\n"
                                                "l2: halt\n"));
    for (auto _ : state) benchmark::DoNotOptimize(minsky::encode(prog).automaton.dim);
}
BENCHMARK(BM_minsky_encode);

void BM_sigma0_step(benchmark::State& state) {
    auto enc = minsky::encode(minsky::normalize(minsky::parse("l0: inc a goto l1\n"
                                                              "l1: tdz a goto l2 else l1\n"
                                                              "l2: halt\n")));
    for (auto _ : state) benchmark::DoNotOptimize(minsky::runSigma0(enc, 20).states.size());
}
BENCHMARK(BM_sigma0_step);

}  // namespace

BENCHMARK_MAIN();
