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

#ifndef CODESWITCH_RNG_H
#define CODESWITCH_RNG_H

#include <cstdint>
#include <random>

namespace codeswitch {

/// The only random engine used by the library. Its output sequence is fixed by
/// the C++ standard, so seeded runs are reproducible across platforms as long
/// as callers consume raw 64-bit words (never distribution objects).
using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
uint64_t mix64(uint64_t x);

/// Seed for the `index`-th independent child stream of `seed`:
/// mix64(seed + 0x9E3779B97F4A7C15 * (index + 1)).
uint64_t child_seed(uint64_t seed, uint64_t index);

/// Uniform double in [0, 1) from the top 53 bits of one draw.
double uniform_unit(Rng &rng);

/// Uniform integer in [0, bound) by rejection on raw words.
uint64_t uniform_below(Rng &rng, uint64_t bound);

}  // namespace codeswitch

#endif
