// Copyright 2026-present the cyclosum project
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

#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace cyclosum {

/// Thread count from CYCLOSUM_THREADS, else 1.
unsigned default_threads();

/// Splits [0, total) into at most `threads` contiguous chunks and runs
/// fn(chunk_index, begin, end) for each. Returns the number of chunks.
/// Exceptions thrown by a worker are rethrown in the caller.
std::size_t parallel_chunks(std::uint64_t total, unsigned threads,
                            const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& fn);

}  // namespace cyclosum
