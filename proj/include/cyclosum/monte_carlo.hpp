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

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "cyclosum/bigint.hpp"
#include "cyclosum/cyclotomic.hpp"
#include "cyclosum/subset_distribution.hpp"

namespace cyclosum {

inline constexpr std::string_view kRngName = "mt19937_64, trial stream seed = splitmix64(seed ^ splitmix64(trial))";
inline constexpr double kSigmaBand = 5.0;

/// Per-trial generator seed; identical across platforms and thread counts.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial);

/// Uniform m-subset of {0..N-1}: distinct-index rejection for m <= N/64,
/// partial Fisher-Yates above. Scratch buffers are reused between calls.
class SubsetSampler {
public:
    SubsetSampler(std::int64_t N, std::int64_t m);
    const std::vector<std::uint32_t>& draw(std::uint64_t stream_seed);
    bool uses_rejection() const { return rejection_; }

private:
    std::int64_t N_, m_;
    bool rejection_;
    std::vector<std::uint8_t> marked_;
    std::vector<std::uint32_t> perm_;
    std::vector<std::uint32_t> out_;
};

struct SampleEstimate {
    std::int64_t N = 0, l = 0, m = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::complex<double> mean_hat;
    double var_hat = 0.0;
    double stderr_var = 0.0;
    double closed_form_var = 0.0;
    double z_score = 0.0;
    double mean_band = 0.0;  // kSigmaBand * sqrt(closed_form_var / trials)
    std::string rng;
    std::string kernel;
    std::string strategy;
};

SampleEstimate sample_estimate(std::int64_t N, std::int64_t l, std::int64_t m, std::uint64_t trials,
                               std::uint64_t seed, unsigned threads = 1);

struct AtomFrequency {
    CycElem key;
    BigRational probability;
    double frequency = 0.0;
    double band = 0.0;
    bool within = false;
};

struct CrossCheckReport {
    std::int64_t N = 0, l = 0, m = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::vector<AtomFrequency> atoms;
    std::uint64_t unexpected = 0;  // draws whose sum is not an atom of the exact law
    bool passed = false;
};

/// Empirical atom frequencies against the enumerated law.
CrossCheckReport cross_check(std::int64_t N, std::int64_t l, std::int64_t m, std::uint64_t trials,
                             std::uint64_t seed, const EnumerationOptions& opts = {});

}  // namespace cyclosum
