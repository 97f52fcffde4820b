#include "raagrep/certify.hpp"

#include <benchmark/benchmark.h>

using namespace raagrep;

static void BM_FieldMul(benchmark::State& state) {
    const FieldElement a = FieldElement(Rational(3, 7)) + FieldElement::term(Rational(2, 5), {2}) +
                           FieldElement::term(Rational(-1, 3), {3, 5});
    const FieldElement b = FieldElement::term(Rational(9, 4), {2, 3}) + FieldElement(Rational(1, 2));
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_FieldMul);

static void BM_MatrixMul5(benchmark::State& state) {
    const ExactMatrix a = sl5z_generator(1, 2) * sl5z_generator(3, 2);
    const ExactMatrix b = sl5z_generator(2, 2) * sl5z_generator(4, 2);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_MatrixMul5);

static void BM_WordReduce(benchmark::State& state) {
    const SimpleGraph g = cycle_graph(5);
    const Word w = Word::parse("s0 s2 s4^2 s1 s3^-1 s0^-2 s2 s1^-1 s4 s3");
    for (auto _ : state) benchmark::DoNotOptimize(word_reduce(w, g));
}
BENCHMARK(BM_WordReduce);

static void BM_CertifySl5z(benchmark::State& state) {
    const Configuration c = build_sl5z(2);
    for (auto _ : state) benchmark::DoNotOptimize(certify_configuration(c));
}
BENCHMARK(BM_CertifySl5z);

static void BM_RequiredPairsSo32(benchmark::State& state) {
    const Configuration c = build_so32(so32_default_r1(), so32_default_r2(), so32_default_r3());
    for (auto _ : state) benchmark::DoNotOptimize(required_pairs(c));
}
BENCHMARK(BM_RequiredPairsSo32);

BENCHMARK_MAIN();
