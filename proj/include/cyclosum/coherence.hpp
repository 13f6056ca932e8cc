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

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cyclosum {

inline constexpr std::int64_t kMaxCoherenceN = 4096;
inline constexpr double kWelchTolerance = 1e-12;

struct WelchBound {
    std::int64_t N = 0, m = 0;
    double welch = 0.0;        // sqrt((N-m) / (m(N-1)))
    double sigma_ratio = 0.0;  // sqrt(Var[X]) / m with Var[X] = m(N-m)/(N-1)
    double approx = 0.0;       // 1/sqrt(m), the m << N regime
};

/// Throws std::logic_error if the two expressions disagree beyond kWelchTolerance.
/// N = 1 has no column pairs; both values are reported as 0.
WelchBound welch_bound(std::int64_t N, std::int64_t m);

struct CoherenceReport {
    std::int64_t N = 0;
    std::vector<std::int64_t> rows;  // sorted, 0-based
    double mu = 0.0;
    double welch = 0.0;
    double sigma_ratio = 0.0;
    bool satisfied = false;
    std::string kernel;
};

/// Max off-diagonal Gram magnitude of the |rows| x N partial Fourier matrix
/// with entries exp(-2 pi j r c / N) / sqrt(|rows|).
CoherenceReport partial_fourier_coherence(std::int64_t N, std::span<const std::int64_t> rows, unsigned threads = 1);

struct PairMagnitude {
    std::int64_t i = 0, j = 0;  // columns, i < j
    double magnitude = 0.0;
};

std::vector<PairMagnitude> pairwise_magnitudes(std::int64_t N, std::span<const std::int64_t> rows);

}  // namespace cyclosum
