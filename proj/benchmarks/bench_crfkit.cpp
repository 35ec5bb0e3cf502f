// Copyright 2026 The crfkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include "crfkit/crfkit.hpp"

namespace {

using namespace crfkit;

// Arg(0) = parties, Arg(1) = local_dim; the subset is the first half of the parties.
PartySubset half(int parties) {
  std::vector<int> labels;
  for (int p = 1; p <= parties / 2; ++p) labels.push_back(p);
  return PartySubset(labels, parties);
}

void BM_BuildFrame(benchmark::State& st) {
  const int m = static_cast<int>(st.range(0));
  const int n = static_cast<int>(st.range(1));
  const PureState s = random_pure_state(m, n, 1);
  const PartySubset sub = half(m);
  for (auto _ : st) benchmark::DoNotOptimize(build_frame(s, sub));
}
BENCHMARK(BM_BuildFrame)->Args({4, 2})->Args({8, 2})->Args({12, 2})->Args({4, 3})->Args({6, 3});

void BM_PartialTrace(benchmark::State& st) {
  const int m = static_cast<int>(st.range(0));
  const int n = static_cast<int>(st.range(1));
  const PureState s = random_pure_state(m, n, 2);
  const PartySubset sub = half(m);
  for (auto _ : st) benchmark::DoNotOptimize(partial_trace(s, sub.complement()));
}
BENCHMARK(BM_PartialTrace)->Args({4, 2})->Args({8, 2})->Args({12, 2})->Args({4, 3})->Args({6, 3});

void BM_FrameGeometry(benchmark::State& st) {
  const int m = static_cast<int>(st.range(0));
  const ConvexRigidFrame f = build_frame(random_pure_state(m, 2, 3), half(m));
  for (auto _ : st) benchmark::DoNotOptimize(frame_geometry(f));
}
BENCHMARK(BM_FrameGeometry)->Arg(4)->Arg(6)->Arg(8);

void BM_Signature(benchmark::State& st) {
  const PureState s = random_pure_state(static_cast<int>(st.range(0)), static_cast<int>(st.range(1)), 4);
  for (auto _ : st) benchmark::DoNotOptimize(signature(s));
}
BENCHMARK(BM_Signature)->Args({3, 2})->Args({4, 2})->Args({3, 3})->Args({5, 2});

void BM_CrfVerdict(benchmark::State& st) {
  const int m = static_cast<int>(st.range(0));
  const PureState s = random_pure_state(m, 2, 5);
  const Bipartition bp(half(m));
  for (auto _ : st) benchmark::DoNotOptimize(is_separable_crf(s, bp));
}
BENCHMARK(BM_CrfVerdict)->Arg(4)->Arg(8)->Arg(12);

void BM_SvdOracle(benchmark::State& st) {
  const int m = static_cast<int>(st.range(0));
  const PureState s = random_pure_state(m, 2, 6);
  const Bipartition bp(half(m));
  for (auto _ : st) benchmark::DoNotOptimize(svd_oracle(s, bp));
}
BENCHMARK(BM_SvdOracle)->Arg(4)->Arg(8)->Arg(12);

}  // namespace

BENCHMARK_MAIN();
