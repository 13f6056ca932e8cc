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
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "cyclosum/bigint.hpp"
#include "cyclosum/cyclotomic.hpp"

namespace cyclosum {

using AtomMap = std::map<CycElem, BigInt>;

/// Exact law of X_l(m, N): canonical subset sums with their subset counts
/// over the denominator C(N, m).
struct ExactPMF {
    CyclotomicContext ctx;
    std::int64_t m = 0;
    AtomMap entries;
    BigInt denominator;

    BigRational probability(const CycElem& key) const;
    BigInt total() const;
};

bool same_law(const ExactPMF& a, const ExactPMF& b);

enum class ComponentKind { RealPart, ImagPart };

/// Law of U (keys z + conj z = 2U) or V (keys z - conj z = 2jV).
struct ComponentPMF {
    ComponentKind kind = ComponentKind::RealPart;
    AtomMap entries;
    BigInt denominator;

    /// U or V itself for a stored key.
    double numeric_value(const CyclotomicContext& ctx, const CycElem& key) const;
};

struct ComponentLaws {
    ComponentPMF U;
    ComponentPMF V;
    std::map<std::pair<CycElem, CycElem>, BigInt> joint;
};

struct EnumerationOptions {
    BigInt budget = 10'000'000;
    unsigned threads = 1;
};

/// Law of X_l(m, N) by enumerating every m-subset of {1..N} in colex order.
ExactPMF pmf_X(const CyclotomicContext& ctx, std::int64_t m, const EnumerationOptions& opts = {});

ComponentLaws pmf_components(const ExactPMF& pmf);

/// Pushforward under z -> z^k.
ExactPMF pmf_transform(const ExactPMF& pmf, std::uint64_t k);
/// Pushforward under z -> z * conj z.
ExactPMF abs_squared(const ExactPMF& pmf);
/// Pushforward under z -> -z.
ExactPMF negated(const ExactPMF& pmf);

struct CollisionWitness {
    std::vector<std::int64_t> first;   // 1-based sample indices
    std::vector<std::int64_t> second;
    CycElem sum;
};

struct UniformityReport {
    BigInt support_size;
    BigInt binom;
    bool is_uniform = false;
    std::vector<CollisionWitness> collision_witnesses;
};

inline constexpr std::size_t kMaxCollisionWitnesses = 16;

UniformityReport uniformity_report(const CyclotomicContext& ctx, std::int64_t m,
                                   const EnumerationOptions& opts = {});

namespace colex {

/// Advances a strictly increasing 0-based combination of {0..n-1}; false at the end.
bool next(std::span<std::int64_t> c, std::int64_t n);
/// The combination of the given colex rank (rank = sum_i C(c_i, i+1)).
std::vector<std::int64_t> unrank(std::uint64_t rank, std::int64_t m, std::int64_t n);
std::uint64_t rank(std::span<const std::int64_t> c);

}  // namespace colex

}  // namespace cyclosum
