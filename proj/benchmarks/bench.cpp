// Copyright 2026 The qcs authors
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

#include "qcs/cqsp.hpp"
#include "qcs/linalg.hpp"
#include "qcs/mux.hpp"
#include "qcs/qsp.hpp"
#include "qcs/random.hpp"
#include "qcs/statevector.hpp"
#include "qcs/unitary_synth.hpp"

namespace {

using namespace qcs;

void BM_SimulatorRun(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(1);
  Circuit c(n);
  std::uniform_int_distribution<int> pick(0, n - 1);
  for (int i = 0; i < 200; ++i) {
    if (i % 2 == 0) {
      c.add_1q(pick(rng), Mat2(haar_unitary(2, rng)));
    } else {
      int a = pick(rng), b = pick(rng);
      if (a == b) b = (b + 1) % n;
      c.add_cx(a, b);
    }
  }
  StateVector in = StateVector::zero(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run(c, in));
  }
  state.SetItemsProcessed(state.iterations() * 200);
}
BENCHMARK(BM_SimulatorRun)->Arg(12)->Arg(16)->Arg(20);

void BM_QspCascade(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(2);
  std::vector<Complex> v = random_state(size_t{1} << n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_qsp_cascade(v));
  }
}
BENCHMARK(BM_QspCascade)->DenseRange(4, 10, 2);

void BM_QspRosenthal(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(3);
  std::vector<Complex> v = random_state(size_t{1} << n, rng);
  const int m = rosenthal_required_ancillas(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_qsp_rosenthal(v, m));
  }
}
BENCHMARK(BM_QspRosenthal)->DenseRange(2, 5, 1);

void BM_Ucg(benchmark::State &state) {
  const int k = static_cast<int>(state.range(0));
  Rng rng(4);
  UcuSpec spec;
  for (int j = 0; j < k; ++j) spec.controls.push_back(j);
  spec.targets = {k};
  for (uint64_t x = 0; x < (uint64_t{1} << k); ++x) {
    spec.table.push_back(haar_unitary(2, rng));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_ucg(spec));
  }
}
BENCHMARK(BM_Ucg)->DenseRange(2, 8, 2);

void BM_CqspCase1(benchmark::State &state) {
  const int k = 2, n = static_cast<int>(state.range(0));
  Rng rng(5);
  CqspSpec spec;
  spec.k = k;
  spec.n = n;
  for (int i = 0; i < (1 << k); ++i) {
    spec.states.push_back(random_state(size_t{1} << n, rng));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_cqsp_case1(spec));
  }
}
BENCHMARK(BM_CqspCase1)->DenseRange(2, 6, 2);

void BM_UnitaryCsd(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(6);
  Mat u = haar_unitary(1 << n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_unitary_csd(u));
  }
}
BENCHMARK(BM_UnitaryCsd)->DenseRange(2, 6, 1);

void BM_Csd(benchmark::State &state) {
  const int n = static_cast<int>(state.range(0));
  Rng rng(7);
  Mat u = haar_unitary(1 << n, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(csd_factor(u));
  }
}
BENCHMARK(BM_Csd)->DenseRange(2, 7, 1);

}  // namespace

BENCHMARK_MAIN();
