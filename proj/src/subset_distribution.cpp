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

#include "cyclosum/subset_distribution.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>
#include <unordered_map>

#include "cyclosum/errors.hpp"
#include "cyclosum/parallel.hpp"

namespace cyclosum {

namespace colex {

bool next(std::span<std::int64_t> c, std::int64_t n) {
    const std::size_t m = c.size();
    for (std::size_t i = 0; i < m; ++i) {
        const std::int64_t limit = (i + 1 < m) ? c[i + 1] : n;
        if (c[i] + 1 < limit) {
            ++c[i];
            for (std::size_t j = 0; j < i; ++j) c[j] = static_cast<std::int64_t>(j);
            return true;
        }
    }
    return false;
}

namespace {

// C(n, k) saturated at uint64 max.
std::uint64_t binom_sat(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < k) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
        if (r > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(r);
}

}  // namespace

std::vector<std::int64_t> unrank(std::uint64_t r, std::int64_t m, std::int64_t n) {
    std::vector<std::int64_t> c(static_cast<std::size_t>(m));
    std::int64_t hi = n - 1;
    for (std::int64_t i = m - 1; i >= 0; --i) {
        std::int64_t x = hi;
        while (x > i && binom_sat(x, i + 1) > r) --x;
        c[static_cast<std::size_t>(i)] = x;
        r -= binom_sat(x, i + 1);
        hi = x - 1;
    }
    return c;
}

std::uint64_t rank(std::span<const std::int64_t> c) {
    std::uint64_t r = 0;
    for (std::size_t i = 0; i < c.size(); ++i) r += binom_sat(c[i], static_cast<std::int64_t>(i) + 1);
    return r;
}

}  // namespace colex

namespace {

constexpr std::uint64_t kNoRank = std::numeric_limits<std::uint64_t>::max();

struct Tally {
    std::uint64_t count = 0;
    std::uint64_t first = kNoRank;
    std::uint64_t second = kNoRank;

    void see(std::uint64_t r) {
        ++count;
        if (r < first) {
            second = first;
            first = r;
        } else if (r < second) {
            second = r;
        }
    }
    void merge(const Tally& o) {
        count += o.count;
        for (std::uint64_t r : {o.first, o.second}) {
            if (r == kNoRank) continue;
            if (r < first) {
                second = first;
                first = r;
            } else if (r < second && r != first) {
                second = r;
            }
        }
    }
};

struct VecHash {
    std::size_t operator()(const std::vector<std::int64_t>& v) const noexcept {
        std::uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (std::int64_t x : v) {
            h ^= static_cast<std::uint64_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        }
        return static_cast<std::size_t>(h);
    }
};

using Histogram = std::map<CycElem, Tally>;

void check_m(const CyclotomicContext& ctx, std::int64_t m) {
    if (m < 1 || m > ctx.N())
        throw UsageError("m must lie in [1, N] (got m=" + std::to_string(m) +
                         ", N=" + std::to_string(ctx.N()) + ")");
}

std::uint64_t checked_count(const CyclotomicContext& ctx, std::int64_t m, const EnumerationOptions& opts) {
    const BigInt total = binomial(ctx.N(), m);
    if (total > opts.budget)
        throw BudgetError("C(" + std::to_string(ctx.N()) + "," + std::to_string(m) + ") = " + total.str() +
                          " exceeds the enumeration budget " + opts.budget.str());
    if (total > BigInt(std::numeric_limits<std::uint64_t>::max() / 2))
        throw BudgetError("C(" + std::to_string(ctx.N()) + "," + std::to_string(m) + ") = " + total.str() +
                          " is too large to enumerate");
    return total.convert_to<std::uint64_t>();
}

// Walks ranks [begin, end) in colex order, handing each subset's canonical
// sum (as a small-integer vector) and rank to `sink`.
template <class Sink>
void walk_small(const CyclotomicContext& ctx, std::int64_t m, std::uint64_t begin, std::uint64_t end,
                Sink&& sink) {
    if (begin >= end) return;
    const auto table = ctx.small_power_table();
    const auto phi = static_cast<std::size_t>(ctx.phi());
    const std::int64_t N = ctx.N();
    std::vector<std::int64_t> row_of(static_cast<std::size_t>(N));
    for (std::int64_t n = 1; n <= N; ++n)
        row_of[static_cast<std::size_t>(n - 1)] = ctx.exponent_of(n) * static_cast<std::int64_t>(phi);

    auto c = colex::unrank(begin, m, N);
    std::vector<std::int64_t> sum(phi, 0);
    auto add_row = [&](std::int64_t idx, std::int64_t sign) {
        const std::int64_t* row = table.data() + row_of[static_cast<std::size_t>(idx)];
        for (std::size_t j = 0; j < phi; ++j) sum[j] += sign * row[j];
    };
    for (std::int64_t x : c) add_row(x, 1);

    std::vector<std::int64_t> before(c.size());
    for (std::uint64_t r = begin;;) {
        sink(sum, r);
        if (++r == end) break;
        before = c;
        colex::next(c, N);
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (before[i] == c[i]) continue;
            add_row(before[i], -1);
            add_row(c[i], 1);
        }
    }
}

Histogram enumerate(const CyclotomicContext& ctx, std::int64_t m, const EnumerationOptions& opts) {
    check_m(ctx, m);
    const std::uint64_t total = checked_count(ctx, m, opts);
    const auto d = static_cast<std::uint64_t>(ctx.order());

    std::vector<Histogram> partial(std::max(1u, opts.threads));
    const bool small = !ctx.small_power_table().empty();
    const std::size_t used = parallel_chunks(total, opts.threads, [&](std::size_t chunk, std::uint64_t b,
                                                                      std::uint64_t e) {
        Histogram& out = partial[chunk];
        if (small) {
            std::unordered_map<std::vector<std::int64_t>, Tally, VecHash> local;
            walk_small(ctx, m, b, e, [&](const std::vector<std::int64_t>& key, std::uint64_t r) {
                local[key].see(r);
            });
            for (auto& [key, tally] : local) {
                CycElem elem{d, std::vector<BigInt>(key.begin(), key.end())};
                out[std::move(elem)].merge(tally);
            }
        } else {
            if (b >= e) return;
            auto c = colex::unrank(b, m, ctx.N());
            std::vector<std::int64_t> idx(c.size());
            for (std::uint64_t r = b; r < e; ++r) {
                for (std::size_t i = 0; i < c.size(); ++i) idx[i] = c[i] + 1;
                out[ctx.subset_sum(idx)].see(r);
                colex::next(c, ctx.N());
            }
        }
    });

    Histogram merged = std::move(partial[0]);
    for (std::size_t i = 1; i < used; ++i)
        for (auto& [key, tally] : partial[i]) merged[key].merge(tally);
    return merged;
}

std::vector<std::int64_t> one_based(const std::vector<std::int64_t>& c) {
    std::vector<std::int64_t> out(c.size());
    std::transform(c.begin(), c.end(), out.begin(), [](std::int64_t x) { return x + 1; });
    return out;
}

ExactPMF pushforward(const ExactPMF& pmf, const std::function<CycElem(const CycElem&)>& f) {
    ExactPMF out{pmf.ctx, pmf.m, {}, pmf.denominator};
    for (const auto& [key, count] : pmf.entries) out.entries[f(key)] += count;
    return out;
}

}  // namespace

BigRational ExactPMF::probability(const CycElem& key) const {
    const auto it = entries.find(key);
    if (it == entries.end()) return 0;
    return BigRational(it->second, denominator);
}

BigInt ExactPMF::total() const {
    BigInt s = 0;
    for (const auto& [key, count] : entries) s += count;
    return s;
}

bool same_law(const ExactPMF& a, const ExactPMF& b) {
    return a.ctx.order() == b.ctx.order() && a.denominator == b.denominator && a.entries == b.entries;
}

double ComponentPMF::numeric_value(const CyclotomicContext& ctx, const CycElem& key) const {
    const auto z = ctx.to_complex(key);
    return kind == ComponentKind::RealPart ? z.real() / 2.0 : z.imag() / 2.0;
}

ExactPMF pmf_X(const CyclotomicContext& ctx, std::int64_t m, const EnumerationOptions& opts) {
    Histogram hist = enumerate(ctx, m, opts);
    ExactPMF pmf{ctx, m, {}, binomial(ctx.N(), m)};
    for (auto& [key, tally] : hist) pmf.entries.emplace(key, tally.count);
    return pmf;
}

ComponentLaws pmf_components(const ExactPMF& pmf) {
    const auto& ctx = pmf.ctx;
    ComponentLaws laws;
    laws.U = ComponentPMF{ComponentKind::RealPart, {}, pmf.denominator};
    laws.V = ComponentPMF{ComponentKind::ImagPart, {}, pmf.denominator};
    for (const auto& [z, count] : pmf.entries) {
        const CycElem zc = ctx.conjugate(z);
        CycElem u = ctx.add(z, zc);
        CycElem v = ctx.subtract(z, zc);
        laws.U.entries[u] += count;
        laws.V.entries[v] += count;
        laws.joint[{std::move(u), std::move(v)}] += count;
    }
    return laws;
}

ExactPMF pmf_transform(const ExactPMF& pmf, std::uint64_t k) {
    if (k == 0) throw UsageError("pmf_transform: k must be >= 1");
    return pushforward(pmf, [&](const CycElem& z) { return pmf.ctx.power(z, k); });
}

ExactPMF abs_squared(const ExactPMF& pmf) {
    return pushforward(pmf, [&](const CycElem& z) { return pmf.ctx.multiply(z, pmf.ctx.conjugate(z)); });
}

ExactPMF negated(const ExactPMF& pmf) {
    return pushforward(pmf, [&](const CycElem& z) { return pmf.ctx.negate(z); });
}

UniformityReport uniformity_report(const CyclotomicContext& ctx, std::int64_t m, const EnumerationOptions& opts) {
    Histogram hist = enumerate(ctx, m, opts);
    UniformityReport rep;
    rep.binom = binomial(ctx.N(), m);
    rep.support_size = hist.size();
    rep.is_uniform = rep.support_size == rep.binom;

    std::vector<std::pair<std::uint64_t, const Histogram::value_type*>> colliding;
    for (const auto& entry : hist)
        if (entry.second.count >= 2) colliding.emplace_back(entry.second.first, &entry);
    std::sort(colliding.begin(), colliding.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [first, entry] : colliding) {
        if (rep.collision_witnesses.size() == kMaxCollisionWitnesses) break;
        const Tally& t = entry->second;
        rep.collision_witnesses.push_back(CollisionWitness{one_based(colex::unrank(t.first, m, ctx.N())),
                                                           one_based(colex::unrank(t.second, m, ctx.N())),
                                                           entry->first});
    }
    return rep;
}

}  // namespace cyclosum
