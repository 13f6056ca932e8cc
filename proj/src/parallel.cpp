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

#include "cyclosum/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>

namespace cyclosum {

unsigned default_threads() {
    if (const char* env = std::getenv("CYCLOSUM_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v >= 1) return static_cast<unsigned>(v);
        } catch (const std::exception&) {
        }
    }
    return 1;
}

std::size_t parallel_chunks(std::uint64_t total, unsigned threads,
                            const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& fn) {
    if (threads == 0) threads = 1;
    const std::uint64_t chunks = std::max<std::uint64_t>(1, std::min<std::uint64_t>(threads, total));
    const std::uint64_t step = total / chunks;
    const std::uint64_t extra = total % chunks;
    auto bounds = [&](std::uint64_t i) {
        const std::uint64_t begin = i * step + std::min(i, extra);
        return std::pair{begin, begin + step + (i < extra ? 1 : 0)};
    };
    if (chunks == 1) {
        fn(0, 0, total);
        return 1;
    }
    std::exception_ptr error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(chunks);
    for (std::uint64_t i = 0; i < chunks; ++i) {
        pool.emplace_back([&, i] {
            try {
                const auto [b, e] = bounds(i);
                fn(i, b, e);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
    return chunks;
}

}  // namespace cyclosum
