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

#ifndef CODESWITCH_PARALLEL_H
#define CODESWITCH_PARALLEL_H

#include <cstddef>

namespace codeswitch {

/// Number of threads the parallel kernels may use: the OpenMP default,
/// capped by the RSRA_THREADS environment variable when it is set.
int thread_budget();

/// Overrides thread_budget() for the current process (0 restores the default).
void set_thread_budget(int threads);

}  // namespace codeswitch

#endif
