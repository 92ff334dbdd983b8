#include <benchmark/benchmark.h>

#include <random>

#include "mmdescend/obstruct.hpp"
#include "mmdescend/rationalize.hpp"
#include "mmdescend/scheme.hpp"

using namespace mmdescend;

namespace {

const FieldDesc kGauss{-1};

ExactMat random_invertible(std::mt19937& rng, int n, long height) {
  std::uniform_int_distribution<long> coef(-height, height);
  for (;;) {
    ExactMat A(n, n, kGauss);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        A.at(i, j) = QElem(Rat(coef(rng)), Rat(coef(rng)), kGauss);
    try {
      matinv(A);
      return A;
    } catch (const singular_matrix_error&) {
    }
  }
}

void BM_BrentVerifyStrassen(benchmark::State& state) {
  Scheme s = strassen_scheme(kGauss);
  for (auto _ : state) benchmark::DoNotOptimize(brent_verify(s).ok);
}
BENCHMARK(BM_BrentVerifyStrassen);

void BM_BrentVerifyStandard(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  Scheme s = standard_scheme(n, n, n, kGauss);
  for (auto _ : state) benchmark::DoNotOptimize(brent_verify(s).ok);
}
BENCHMARK(BM_BrentVerifyStandard)->Arg(2)->Arg(3);

void BM_ExactMatmul(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::mt19937 rng(1);
  ExactMat A = random_invertible(rng, n, 9);
  ExactMat B = random_invertible(rng, n, 9);
  for (auto _ : state) benchmark::DoNotOptimize(A * B);
}
BENCHMARK(BM_ExactMatmul)->Arg(4)->Arg(8)->Arg(16);

void BM_ExactInverse(benchmark::State& state) {
  int n = static_cast<int>(state.range(0));
  std::mt19937 rng(2);
  ExactMat A = random_invertible(rng, n, 9);
  for (auto _ : state) benchmark::DoNotOptimize(matinv(A));
}
BENCHMARK(BM_ExactInverse)->Arg(4)->Arg(8);

void BM_DescendComplexifiedStrassen(benchmark::State& state) {
  std::mt19937 rng(3);
  Scheme s = strassen_scheme(kGauss);
  Scheme g = apply_transform(
      s, TransformTriple(random_invertible(rng, 2, 5),
                         random_invertible(rng, 2, 5),
                         random_invertible(rng, 2, 5)));
  for (auto _ : state) {
    auto out = descend(g);
    benchmark::DoNotOptimize(out.status);
  }
}
BENCHMARK(BM_DescendComplexifiedStrassen);

void BM_ObstructionStrassenDepth(benchmark::State& state) {
  Scheme s = strassen_scheme(kGauss);
  int depth = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto rep = integer_obstruction(s, Variant::OPQ, depth);
    benchmark::DoNotOptimize(rep.found);
  }
}
BENCHMARK(BM_ObstructionStrassenDepth)->Arg(2)->Arg(3)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
