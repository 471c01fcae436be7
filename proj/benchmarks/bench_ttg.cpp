#include <benchmark/benchmark.h>

#include <random>

#include "ttg/complex.hpp"
#include "ttg/linalg.hpp"
#include "ttg/spectrum.hpp"
#include "ttg/support.hpp"

using namespace ttg;

namespace {

Ring integers() { return Ring::integers(); }

Matrix random_int_matrix(const Component& c, std::size_t n, unsigned seed) {
  std::mt19937 g(seed);
  std::uniform_int_distribution<long> d(-20, 20);
  Matrix m = Matrix::zero(c, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = c.from_int(d(g));
  return m;
}

Complex koszul_sum(const Ring& r, const std::vector<long>& xs) {
  Complex p = zero_complex(r);
  for (long x : xs) p = direct_sum(p, koszul(r, r.from_int(x)));
  return p;
}

void BM_SmithNormalForm(benchmark::State& state) {
  const Ring z = integers();
  const Matrix m = random_int_matrix(z.component(0), static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(smith_normal_form(z.component(0), m));
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(8)->Arg(16);

void BM_Homology(benchmark::State& state) {
  const Ring z = integers();
  const Complex p = tensor(koszul(z, z.from_int(6)), koszul(z, z.from_int(10)));
  for (auto _ : state) benchmark::DoNotOptimize(homology(p, 0));
}
BENCHMARK(BM_Homology);

void BM_HomUpToHomotopy(benchmark::State& state) {
  const Ring z = integers();
  const Complex p = koszul_sum(z, {4, 6});
  const Complex q = koszul_sum(z, {6, 9});
  for (auto _ : state) benchmark::DoNotOptimize(hom_up_to_homotopy(p, q));
}
BENCHMARK(BM_HomUpToHomotopy);

void BM_Supph(benchmark::State& state) {
  const Ring z = integers();
  const Complex p = koszul_sum(z, {30, 77, 13});
  for (auto _ : state) benchmark::DoNotOptimize(supph(p));
}
BENCHMARK(BM_Supph);

void BM_AllSupports(benchmark::State& state) {
  const Ring z = integers();
  const auto e = enumerate_points(z, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(all_supports(z, e));
}
BENCHMARK(BM_AllSupports)->Arg(13)->Arg(23);

void BM_SpectrumModel(benchmark::State& state) {
  const Ring r = Ring::polynomials(2);
  for (auto _ : state) benchmark::DoNotOptimize(SpectrumModel(r, 2));
}
BENCHMARK(BM_SpectrumModel);

}  // namespace
BENCHMARK_MAIN();
