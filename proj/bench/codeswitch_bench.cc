// Copyright 2026 The codeswitch Authors
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

#include "codeswitch/catalog.h"
#include "codeswitch/distance_kernel.h"
#include "codeswitch/parallel.h"
#include "codeswitch/rsra.h"

namespace codeswitch {
namespace {

/// A [[25,1]] code with no logical of weight <= 3, so each scan visits every
/// support of the requested weight.
StabilizerCode wide_code() {
    Rng rng(2026);
    for (;;) {
        auto code = random_code(25, 1, rng);
        LogicalSearch search(code.n(), code.generators(), code.generators());
        if (!search.scan_serial(1) && !search.scan_serial(2) && !search.scan_serial(3)) {
            return code;
        }
    }
}

void BM_ScanSerial(benchmark::State &state) {
    static const StabilizerCode code = wide_code();
    LogicalSearch search(code.n(), code.generators(), code.generators());
    size_t w = static_cast<size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(search.scan_serial(w));
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * search.count_at_weight(w)));
}
BENCHMARK(BM_ScanSerial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_ScanParallel(benchmark::State &state) {
    static const StabilizerCode code = wide_code();
    LogicalSearch search(code.n(), code.generators(), code.generators());
    size_t w = static_cast<size_t>(state.range(0));
    int threads = thread_budget();
    for (auto _ : state) {
        benchmark::DoNotOptimize(search.scan_parallel(w, threads));
    }
    state.SetItemsProcessed(static_cast<int64_t>(state.iterations() * search.count_at_weight(w)));
    state.counters["threads"] = threads;
}
BENCHMARK(BM_ScanParallel)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_SearchSteaneToPermuted(benchmark::State &state) {
    auto source = steane7();
    auto target = resolve_code("perm(steane7,(34))");
    RsraConfig config;
    config.m = static_cast<size_t>(state.range(0));
    config.min_distance = 3;
    config.max_retries = 500;
    config.threads = static_cast<int>(state.range(1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(search(source, target, config));
    }
}
BENCHMARK(BM_SearchSteaneToPermuted)->Args({0, 1})->Args({0, 0})->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace codeswitch

BENCHMARK_MAIN();
