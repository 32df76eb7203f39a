#include <benchmark/benchmark.h>

#include "parabolic/autgroup.hpp"
#include "parabolic/chamber.hpp"
#include "parabolic/local_matrix.hpp"
#include "parabolic/transform.hpp"

using namespace parabolic;

namespace {

WeightSystem sample(int r, std::size_t n) {
  std::vector<std::string> labels;
  std::vector<std::vector<Rational>> rows;
  for (std::size_t x = 0; x < n; ++x) {
    labels.push_back("p" + std::to_string(x));
    std::vector<Rational> row;
    for (int i = 0; i < r; ++i) row.push_back(make_rational(7 * i + 3 * static_cast<long long>(x) + 1, 7 * r + 5));
    rows.push_back(row);
  }
  return WeightSystem(r, labels, rows);
}

void BM_M_vec(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  WeightSystem w = sample(r, n);
  for (auto _ : state) benchmark::DoNotOptimize(M_vec(r, w, 1));
}
BENCHMARK(BM_M_vec)->Args({2, 2})->Args({3, 2})->Args({4, 3})->Args({5, 3});

void BM_compose(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const int r = 5;
  std::vector<std::size_t> shift(n);
  std::vector<long long> h1(n), h2(n);
  for (std::size_t i = 0; i < n; ++i) {
    shift[i] = (i + 1) % n;
    h1[i] = static_cast<long long>(i % r);
    h2[i] = static_cast<long long>((2 * i + 1) % r);
  }
  NumTransform a{Permutation(shift), -1, 3, h1};
  NumTransform b{Permutation::identity(n), 1, -2, h2};
  for (auto _ : state) benchmark::DoNotOptimize(compose(a, b, r));
}
BENCHMARK(BM_compose)->Arg(1)->Arg(4)->Arg(16);

void BM_automorphism_group(benchmark::State& state) {
  const int r = static_cast<int>(state.range(0));
  const auto n = static_cast<std::size_t>(state.range(1));
  WeightSystem w = sample(r, n);
  CurveData curve = CurveData::trivial(2, w.labels());
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(r, n, 1, 2, w, curve, AutOptions{false}));
}
BENCHMARK(BM_automorphism_group)->Args({2, 2})->Args({3, 2});

void BM_mp_matrix(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  LaurentMatrix h = hecke_matrix(n), hi = hecke_matrix_inverse(n);
  for (auto _ : state) benchmark::DoNotOptimize(mp_matrix(h, hi));
}
BENCHMARK(BM_mp_matrix)->Arg(2)->Arg(4);

}  // namespace

BENCHMARK_MAIN();
