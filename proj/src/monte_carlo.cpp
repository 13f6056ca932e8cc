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

#include "cyclosum/monte_carlo.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <random>

#include "cyclosum/errors.hpp"
#include "cyclosum/kernels.hpp"
#include "cyclosum/parallel.hpp"

namespace cyclosum {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Uniform integer in [0, bound) by multiply-shift with rejection.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
    unsigned __int128 prod = static_cast<unsigned __int128>(rng()) * bound;
    auto low = static_cast<std::uint64_t>(prod);
    if (low < bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        while (low < threshold) {
            prod = static_cast<unsigned __int128>(rng()) * bound;
            low = static_cast<std::uint64_t>(prod);
        }
    }
    return static_cast<std::uint64_t>(prod >> 64);
}

void check_args(std::int64_t N, std::int64_t l, std::int64_t m, std::uint64_t trials) {
    if (N < 1 || N > std::numeric_limits<std::int32_t>::max()) throw UsageError("N must lie in [1, 2^31)");
    if (l < 0 || l >= N) throw UsageError("l must lie in [0, N-1]");
    if (m < 1 || m > N) throw UsageError("m must lie in [1, N] (got m=" + std::to_string(m) + ")");
    if (trials < 1) throw UsageError("trials must be >= 1");
}

// Largest d for which the cos/sin tables are materialised.
constexpr std::int64_t kMaxTable = std::int64_t{1} << 22;

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) { return splitmix64(seed ^ splitmix64(trial)); }

SubsetSampler::SubsetSampler(std::int64_t N, std::int64_t m)
    : N_(N), m_(m), rejection_(m * 64 <= N), out_(static_cast<std::size_t>(m)) {
    if (rejection_) {
        marked_.assign(static_cast<std::size_t>(N), 0);
    } else {
        perm_.resize(static_cast<std::size_t>(N));
        std::iota(perm_.begin(), perm_.end(), 0u);
    }
}

const std::vector<std::uint32_t>& SubsetSampler::draw(std::uint64_t stream_seed) {
    std::mt19937_64 rng(stream_seed);
    const auto n = static_cast<std::uint64_t>(N_);
    if (rejection_) {
        for (std::size_t i = 0; i < out_.size();) {
            const auto idx = static_cast<std::uint32_t>(bounded(rng, n));
            if (marked_[idx]) continue;
            marked_[idx] = 1;
            out_[i++] = idx;
        }
        for (std::uint32_t idx : out_) marked_[idx] = 0;
        return out_;
    }
    // Partial Fisher-Yates, then undo the swaps so perm_ is the identity again.
    std::vector<std::uint32_t> partner(out_.size());
    for (std::size_t i = 0; i < out_.size(); ++i) {
        const auto j = static_cast<std::uint32_t>(i + bounded(rng, n - i));
        partner[i] = j;
        std::swap(perm_[i], perm_[j]);
        out_[i] = perm_[i];
    }
    for (std::size_t i = out_.size(); i-- > 0;) std::swap(perm_[i], perm_[partner[i]]);
    return out_;
}

SampleEstimate sample_estimate(std::int64_t N, std::int64_t l, std::int64_t m, std::uint64_t trials,
                               std::uint64_t seed, unsigned threads) {
    check_args(N, l, m, trials);
    const std::int64_t g = std::gcd(N, l);
    const std::int64_t d = N / g;
    const kernels::KernelSet& kern = kernels::active();

    // exponent of sample index i (0-based) and the root table zeta^e.
    auto exponent = [&](std::uint32_t i) {
        return static_cast<std::uint32_t>((static_cast<__int128>(l) * (i + 1) % N) / g);
    };
    std::vector<double> re_table, im_table;
    if (d <= kMaxTable) {
        re_table.resize(static_cast<std::size_t>(d));
        im_table.resize(static_cast<std::size_t>(d));
        for (std::int64_t e = 0; e < d; ++e) {
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(d);
            re_table[static_cast<std::size_t>(e)] = std::cos(angle);
            im_table[static_cast<std::size_t>(e)] = e == 0 ? 0.0 : -std::sin(angle);
        }
    }

    std::vector<std::complex<double>> values(trials);
    parallel_chunks(trials, threads, [&](std::size_t, std::uint64_t b, std::uint64_t e) {
        SubsetSampler sampler(N, m);
        std::vector<std::uint32_t> exps(static_cast<std::size_t>(m));
        for (std::uint64_t t = b; t < e; ++t) {
            const auto& subset = sampler.draw(trial_seed(seed, t));
            for (std::size_t i = 0; i < subset.size(); ++i) exps[i] = exponent(subset[i]);
            if (!re_table.empty()) {
                const auto s = kern.root_sum(exps.data(), exps.size(), re_table.data(), im_table.data());
                values[t] = {s.re, s.im};
            } else {
                std::complex<double> acc{0.0, 0.0};
                for (std::uint32_t x : exps)
                    acc += std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(x) / static_cast<double>(d));
                values[t] = acc;
            }
        }
    });

    SampleEstimate est;
    est.N = N;
    est.l = l;
    est.m = m;
    est.trials = trials;
    est.seed = seed;
    est.rng = std::string(kRngName);
    est.kernel = d <= kMaxTable ? std::string(kern.name) : "direct";
    est.strategy = SubsetSampler(N, m).uses_rejection() ? "rejection" : "partial_shuffle";

    std::complex<double> sum{0.0, 0.0};
    for (const auto& v : values) sum += v;
    est.mean_hat = sum / static_cast<double>(trials);
    const double T = static_cast<double>(trials);
    double dev_sum = 0.0;
    for (const auto& v : values) dev_sum += std::norm(v - est.mean_hat);
    const double dev_mean = dev_sum / T;
    est.var_hat = trials > 1 ? dev_sum / (T - 1.0) : 0.0;
    double spread = 0.0;
    for (const auto& v : values) {
        const double y = std::norm(v - est.mean_hat) - dev_mean;
        spread += y * y;
    }
    est.stderr_var = trials > 1 ? std::sqrt(spread / (T - 1.0) / T) : 0.0;
    est.closed_form_var = (l >= 1 && N > 1) ? static_cast<double>(m) * static_cast<double>(N - m) / static_cast<double>(N - 1)
                                            : 0.0;
    const double diff = est.var_hat - est.closed_form_var;
    if (est.stderr_var > 0.0)
        est.z_score = diff / est.stderr_var;
    else
        est.z_score = diff == 0.0 ? 0.0 : std::copysign(std::numeric_limits<double>::infinity(), diff);
    est.mean_band = kSigmaBand * std::sqrt(est.closed_form_var / T);
    return est;
}

CrossCheckReport cross_check(std::int64_t N, std::int64_t l, std::int64_t m, std::uint64_t trials,
                             std::uint64_t seed, const EnumerationOptions& opts) {
    check_args(N, l, m, trials);
    const CyclotomicContext ctx(N, l);
    const ExactPMF pmf = pmf_X(ctx, m, opts);
    const auto table = ctx.small_power_table();
    const auto phi = static_cast<std::size_t>(ctx.phi());
    const auto d = static_cast<std::uint64_t>(ctx.order());

    std::vector<std::map<std::vector<std::int64_t>, std::uint64_t>> partial(std::max(1u, opts.threads));
    const std::size_t used = parallel_chunks(trials, opts.threads, [&](std::size_t chunk, std::uint64_t b, std::uint64_t e) {
        SubsetSampler sampler(N, m);
        std::vector<std::int64_t> key(phi);
        std::vector<std::int64_t> indices(static_cast<std::size_t>(m));
        for (std::uint64_t t = b; t < e; ++t) {
            const auto& subset = sampler.draw(trial_seed(seed, t));
            if (table.empty()) {
                for (std::size_t i = 0; i < subset.size(); ++i) indices[i] = subset[i] + 1;
                const CycElem s = ctx.subset_sum(indices);
                for (std::size_t j = 0; j < phi; ++j) key[j] = s.coeffs[j].convert_to<std::int64_t>();
            } else {
                std::fill(key.begin(), key.end(), 0);
                for (std::uint32_t i : subset) {
                    const auto row = static_cast<std::size_t>(ctx.exponent_of(i + 1)) * phi;
                    for (std::size_t j = 0; j < phi; ++j) key[j] += table[row + j];
                }
            }
            ++partial[chunk][key];
        }
    });
    std::map<CycElem, std::uint64_t> counts;
    for (std::size_t c = 0; c < used; ++c)
        for (const auto& [key, n] : partial[c]) counts[CycElem{d, std::vector<BigInt>(key.begin(), key.end())}] += n;

    CrossCheckReport rep{N, l, m, trials, seed, {}, 0, true};
    const double T = static_cast<double>(trials);
    for (const auto& [key, count] : pmf.entries) {
        AtomFrequency a;
        a.key = key;
        a.probability = BigRational(count, pmf.denominator);
        const double p = a.probability.convert_to<double>();
        const auto it = counts.find(key);
        a.frequency = it == counts.end() ? 0.0 : static_cast<double>(it->second) / T;
        a.band = kSigmaBand * std::sqrt(p * (1.0 - p) / T);
        const double err = std::abs(a.frequency - p);
        a.within = err < a.band || err == 0.0;
        rep.passed = rep.passed && a.within;
        rep.atoms.push_back(std::move(a));
    }
    for (const auto& [key, n] : counts)
        if (!pmf.entries.contains(key)) rep.unexpected += n;
    if (rep.unexpected) rep.passed = false;
    return rep;
}

}  // namespace cyclosum
