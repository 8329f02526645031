// Copyright 2026 The ltc Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include <random>

#include "ltc/code.hpp"
#include "ltc/kernels.hpp"
#include "ltc/tanner.hpp"
#include "ltc/tensor.hpp"
#include "ltc/tester.hpp"

namespace {

using ltc::kernels::Exec;

Exec exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Exec::kSerial : Exec::kParallel;
}

std::vector<ltc::Symbol> random_symbols(std::size_t n, std::uint32_t q, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<ltc::Symbol> w(n);
  for (auto& s : w) s = static_cast<ltc::Symbol>(rng() % q);
  return w;
}

void BM_MinDistance(benchmark::State& state) {
  const ltc::Field f(13);
  const ltc::LinearCode rs = ltc::make_reed_solomon(f, 13, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ltc::kernels::min_nonzero_weight(f, rs.generator(), exec_of(state)));
  }
}
BENCHMARK(BM_MinDistance)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_NearestCodeword(benchmark::State& state) {
  const ltc::Field f(13);
  const ltc::LinearCode rs = ltc::make_reed_solomon(f, 13, 5);
  const auto w = random_symbols(13, 13, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ltc::kernels::nearest_codeword(f, rs.generator(), w, exec_of(state)));
  }
}
BENCHMARK(BM_NearestCodeword)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ViewCensus(benchmark::State& state) {
  const ltc::Field f(31);
  const ltc::TestInstance inst = ltc::make_product_instance(ltc::make_reed_solomon(f, 31, 1), 3);
  const ltc::Word w(f, random_symbols(inst.graph.left_count(), 31, 2));
  for (auto _ : state) benchmark::DoNotOptimize(ltc::view_census(inst, w, exec_of(state)));
}
BENCHMARK(BM_ViewCensus)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_TpcMembership(benchmark::State& state) {
  const ltc::Field f(2);
  const ltc::TannerCode tpc(ltc::build_square_test_graph(2, 3),
                            ltc::tensor_power(ltc::make_repetition(f, 2), 2).as_linear_code());
  const ltc::Word w = ltc::Word::zeros(f, 256);
  for (auto _ : state) benchmark::DoNotOptimize(ltc::tpc_membership(tpc, w, exec_of(state)));
}
BENCHMARK(BM_TpcMembership)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_ExpansionSampled(benchmark::State& state) {
  const ltc::OrderedGraph g = ltc::build_product_graph(3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(ltc::expansion_sampled(g, 20000, 1, exec_of(state)));
}
BENCHMARK(BM_ExpansionSampled)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
