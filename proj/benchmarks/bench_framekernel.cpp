// Copyright 2026 The framekernel Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "framekernel/coorbit.hpp"
#include "framekernel/frames.hpp"
#include "framekernel/generators.hpp"
#include "framekernel/tensor_kernels.hpp"

namespace fk = framekernel;

namespace {

fk::FramePair gabor_pair(std::size_t n) {
  return fk::canonical_dual(fk::finite_gabor(n, 2, 2, fk::gaussian_window(n)));
}

void BM_CanonicalDual(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const fk::Frame frame = fk::finite_gabor(n, 2, 2, fk::gaussian_window(n));
  for (auto _ : state) benchmark::DoNotOptimize(fk::canonical_dual(frame));
}
BENCHMARK(BM_CanonicalDual)->Arg(8)->Arg(16)->Arg(32);

void BM_Galerkin(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto pair = gabor_pair(n);
  const fk::ComplexMatrix op = fk::random_operator(n, n, fk::DenseKind{}, 1);
  for (auto _ : state) benchmark::DoNotOptimize(fk::galerkin(op, pair, pair));
}
BENCHMARK(BM_Galerkin)->Arg(8)->Arg(16)->Arg(32);

void BM_SynthesizeKernel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto pair = gabor_pair(n);
  const auto k = fk::galerkin(fk::random_operator(n, n, fk::DenseKind{}, 2), pair, pair);
  for (auto _ : state) benchmark::DoNotOptimize(fk::synthesize_kernel(k, pair, pair));
}
BENCHMARK(BM_SynthesizeKernel)->Arg(8)->Arg(16)->Arg(32);

void BM_TensorGram(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto pair = gabor_pair(n);
  for (auto _ : state) benchmark::DoNotOptimize(fk::tensor_gram(pair, pair));
}
BENCHMARK(BM_TensorGram)->Arg(6)->Arg(8);

void BM_CoorbitOpnorm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto pair = gabor_pair(n);
  const auto ones = fk::WeightVector::ones(pair.size());
  const fk::CoorbitSpec source(pair, {1.0, ones});
  const fk::CoorbitSpec target(pair, {2.0, ones});
  const fk::ComplexMatrix op = fk::random_operator(n, n, fk::DenseKind{}, 3);
  for (auto _ : state) benchmark::DoNotOptimize(fk::coorbit_opnorm(op, source, target));
}
BENCHMARK(BM_CoorbitOpnorm)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
