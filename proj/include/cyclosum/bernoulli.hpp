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
#include <optional>
#include <vector>

#include "cyclosum/bigint.hpp"
#include "cyclosum/cyclotomic.hpp"
#include "cyclosum/moments.hpp"
#include "cyclosum/subset_distribution.hpp"

namespace cyclosum {

/// Law of the Bernoulli-mask companion sum_n B_n w^n, B_n ~ Bernoulli(m/N)
/// i.i.d. A mask with s ones carries integer weight m^s (N-m)^(N-s) over
/// the common denominator N^N.
struct MaskPMF {
    CyclotomicContext ctx;
    std::int64_t m = 0;
    AtomMap entries;
    BigInt denominator;

    BigRational probability(const CycElem& key) const;
};

inline constexpr std::int64_t kDefaultMaskBudget = 22;

MaskPMF pmf_tilde(const CyclotomicContext& ctx, std::int64_t m, std::int64_t mask_budget = kDefaultMaskBudget,
                  unsigned threads = 1);

struct MomentDelta {
    std::uint64_t k = 1;
    CycRat delta;  // E[Xt^k] - E[X^k]
};

struct TildeComparison {
    std::vector<MomentReport> tilde_moments;
    CycRat tilde_mean;
    BigRational tilde_variance;
    /// m(N-m)/(N-1) for l >= 1, 0 for l = 0.
    BigRational x_variance;
    /// tilde_variance / x_variance, absent when x_variance == 0.
    std::optional<BigRational> variance_ratio;
    /// Present when X's law was enumerable within the subset budget.
    std::vector<MomentDelta> moment_deltas;
};

TildeComparison tilde_moments(const CyclotomicContext& ctx, std::int64_t m, std::uint64_t k_max,
                              std::int64_t mask_budget = kDefaultMaskBudget, const EnumerationOptions& x_opts = {});

}  // namespace cyclosum
