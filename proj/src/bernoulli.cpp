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

#include "cyclosum/bernoulli.hpp"

#include <bit>
#include <string>
#include <unordered_map>

#include "cyclosum/errors.hpp"
#include "cyclosum/parallel.hpp"

namespace cyclosum {

namespace {

struct VecHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (std::int64_t x : v) h = (h ^ static_cast<std::uint64_t>(x)) * 0x100000001b3ULL;
        return static_cast<std::size_t>(h);
    }
};

// Per key: number of masks with s ones, s in [0, N].
using ByPopcount = std::unordered_map<std::vector<std::int64_t>, std::vector<std::uint64_t>, VecHash>;

BigInt ipow(const BigInt& base, std::int64_t e) {
    BigInt r = 1;
    for (std::int64_t i = 0; i < e; ++i) r *= base;
    return r;
}

}  // namespace

BigRational MaskPMF::probability(const CycElem& key) const {
    const auto it = entries.find(key);
    return it == entries.end() ? BigRational(0) : BigRational(it->second, denominator);
}

MaskPMF pmf_tilde(const CyclotomicContext& ctx, std::int64_t m, std::int64_t mask_budget, unsigned threads) {
    const std::int64_t N = ctx.N();
    if (m < 1 || m > N) throw UsageError("m must lie in [1, N] (got m=" + std::to_string(m) + ")");
    if (N > mask_budget || N > 62)
        throw BudgetError("2^" + std::to_string(N) + " masks exceed the exact mask budget (N <= " +
                          std::to_string(mask_budget) + "); use the Monte Carlo sampler instead");
    const auto table = ctx.small_power_table();
    if (table.empty()) throw BudgetError("root coefficients too large for exact mask enumeration");
    const auto phi = static_cast<std::size_t>(ctx.phi());
    std::vector<std::size_t> row(static_cast<std::size_t>(N));
    for (std::int64_t n = 1; n <= N; ++n)
        row[static_cast<std::size_t>(n - 1)] = static_cast<std::size_t>(ctx.exponent_of(n)) * phi;

    const std::uint64_t total = std::uint64_t{1} << N;
    std::vector<ByPopcount> partial(std::max(1u, threads));
    const std::size_t used = parallel_chunks(total, threads, [&](std::size_t chunk, std::uint64_t b, std::uint64_t e) {
        if (b >= e) return;
        ByPopcount& out = partial[chunk];
        // Gray-code walk: consecutive masks differ in exactly one sample.
        std::uint64_t gray = b ^ (b >> 1);
        std::vector<std::int64_t> sum(phi, 0);
        for (std::int64_t n = 0; n < N; ++n)
            if (gray >> n & 1)
                for (std::size_t j = 0; j < phi; ++j) sum[j] += table[row[static_cast<std::size_t>(n)] + j];
        for (std::uint64_t i = b;;) {
            auto& slot = out[sum];
            if (slot.empty()) slot.assign(static_cast<std::size_t>(N) + 1, 0);
            ++slot[static_cast<std::size_t>(std::popcount(gray))];
            if (++i == e) break;
            const auto bit = static_cast<std::size_t>(std::countr_zero(i));
            gray ^= std::uint64_t{1} << bit;
            const std::int64_t sign = (gray >> bit & 1) ? 1 : -1;
            for (std::size_t j = 0; j < phi; ++j) sum[j] += sign * table[row[bit] + j];
        }
    });

    std::vector<BigInt> weight(static_cast<std::size_t>(N) + 1);
    for (std::int64_t s = 0; s <= N; ++s) weight[static_cast<std::size_t>(s)] = ipow(m, s) * ipow(N - m, N - s);

    MaskPMF out{ctx, m, {}, ipow(N, N)};
    const auto d = static_cast<std::uint64_t>(ctx.order());
    for (std::size_t c = 0; c < used; ++c) {
        for (const auto& [key, counts] : partial[c]) {
            BigInt w = 0;
            for (std::size_t s = 0; s < counts.size(); ++s)
                if (counts[s]) w += weight[s] * counts[s];
            if (w == 0) continue;  // only masks of probability zero (m = N)
            out.entries[CycElem{d, std::vector<BigInt>(key.begin(), key.end())}] += w;
        }
    }
    return out;
}

TildeComparison tilde_moments(const CyclotomicContext& ctx, std::int64_t m, std::uint64_t k_max,
                              std::int64_t mask_budget, const EnumerationOptions& x_opts) {
    if (k_max < 1) throw UsageError("k_max must be >= 1");
    const MaskPMF law = pmf_tilde(ctx, m, mask_budget, x_opts.threads);
    TildeComparison out;
    for (std::uint64_t k = 1; k <= k_max; ++k)
        out.tilde_moments.push_back(moment_of_law(ctx, law.entries, law.denominator, k));
    out.tilde_mean = out.tilde_moments.front().value;
    out.tilde_variance = variance_of_law(ctx, law.entries, law.denominator);
    const std::int64_t N = ctx.N();
    out.x_variance = ctx.l() >= 1 ? BigRational(BigInt(m) * (N - m), BigInt(N - 1)) : BigRational(0);
    if (out.x_variance != 0) out.variance_ratio = out.tilde_variance / out.x_variance;

    try {
        const ExactPMF x = pmf_X(ctx, m, x_opts);
        for (std::uint64_t k = 1; k <= k_max; ++k)
            out.moment_deltas.push_back({k, ctx.subtract(out.tilde_moments[k - 1].value, moment(x, k).value)});
    } catch (const BudgetError&) {
        // X is not enumerable here; the deltas stay empty.
    }
    return out;
}

}  // namespace cyclosum
