// Copyright 2026 The qsc Authors
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

#pragma once

#include <cstddef>
#include <functional>

namespace qsc {

/// Number of worker threads: the QSC_THREADS environment variable when set
/// to a positive integer, otherwise std::thread::hardware_concurrency().
std::size_t thread_count();

/// Runs body(i) for i in [0, count). Iterations are handed out in contiguous
/// blocks; callers write results into per-index slots so that any reduction
/// done afterwards is independent of the thread count. The first exception
/// thrown by any iteration is rethrown on the calling thread.
void parallel_for(std::size_t count, const std::function<void(std::size_t)> &body);

}  // namespace qsc
