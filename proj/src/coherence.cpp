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

#include "cyclosum/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "cyclosum/errors.hpp"
#include "cyclosum/kernels.hpp"
#include "cyclosum/parallel.hpp"

namespace cyclosum {

namespace {

struct Columns {
    std::size_t m = 0;
    std::vector<double> re, im;  // column c occupies [c*m, (c+1)*m)
};

std::vector<std::int64_t> checked_rows(std::int64_t N, std::span<const std::int64_t> rows) {
    if (N < 1 || N > kMaxCoherenceN)
        throw UsageError("N must lie in [1, " + std::to_string(kMaxCoherenceN) + "] for coherence");
    if (rows.empty() || static_cast<std::int64_t>(rows.size()) > N) throw UsageError("need 1 <= |rows| <= N");
    std::vector<std::int64_t> sorted(rows.begin(), rows.end());
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= N)
            throw UsageError("row " + std::to_string(sorted[i]) + " outside [0, " + std::to_string(N - 1) + "]");
        if (i > 0 && sorted[i] == sorted[i - 1]) throw UsageError("duplicate row " + std::to_string(sorted[i]));
    }
    return sorted;
}

Columns build_columns(std::int64_t N, const std::vector<std::int64_t>& rows) {
    Columns cols;
    cols.m = rows.size();
    const double scale = 1.0 / std::sqrt(static_cast<double>(cols.m));
    cols.re.resize(cols.m * static_cast<std::size_t>(N));
    cols.im.resize(cols.re.size());
    for (std::int64_t c = 0; c < N; ++c) {
        for (std::size_t r = 0; r < cols.m; ++r) {
            const std::int64_t e = rows[r] * c % N;
            const double angle = 2.0 * std::numbers::pi * static_cast<double>(e) / static_cast<double>(N);
            const std::size_t at = static_cast<std::size_t>(c) * cols.m + r;
            cols.re[at] = std::cos(angle) * scale;
            cols.im[at] = -std::sin(angle) * scale;
        }
    }
    return cols;
}

double pair_magnitude(const kernels::KernelSet& k, const Columns& cols, std::int64_t i, std::int64_t j) {
    const std::size_t a = static_cast<std::size_t>(i) * cols.m;
    const std::size_t b = static_cast<std::size_t>(j) * cols.m;
    const auto s = k.conj_dot(cols.re.data() + a, cols.im.data() + a, cols.re.data() + b, cols.im.data() + b, cols.m);
    return std::hypot(s.re, s.im);
}

}  // namespace

WelchBound welch_bound(std::int64_t N, std::int64_t m) {
    if (m < 1 || m > N) throw UsageError("need 1 <= m <= N");
    WelchBound w{N, m, 0.0, 0.0, 1.0 / std::sqrt(static_cast<double>(m))};
    if (N == 1) return w;
    const auto Nd = static_cast<double>(N);
    const auto md = static_cast<double>(m);
    w.welch = std::sqrt((Nd - md) / (md * (Nd - 1.0)));
    const double var = md * (Nd - md) / (Nd - 1.0);
    w.sigma_ratio = std::sqrt(var) / md;
    if (std::abs(w.welch - w.sigma_ratio) > kWelchTolerance)
        throw std::logic_error("Welch bound and sigma/m disagree for N=" + std::to_string(N) + " m=" + std::to_string(m));
    return w;
}

CoherenceReport partial_fourier_coherence(std::int64_t N, std::span<const std::int64_t> rows, unsigned threads) {
    CoherenceReport rep;
    rep.rows = checked_rows(N, rows);
    rep.N = N;
    const auto m = static_cast<std::int64_t>(rep.rows.size());
    const WelchBound w = welch_bound(N, m);
    rep.welch = w.welch;
    rep.sigma_ratio = w.sigma_ratio;
    const Columns cols = build_columns(N, rep.rows);
    const kernels::KernelSet& k = kernels::active();
    rep.kernel = std::string(k.name);

    std::vector<double> chunk_max(std::max(1u, threads), 0.0);
    const std::size_t used = parallel_chunks(static_cast<std::uint64_t>(N), threads, [&](std::size_t chunk, std::uint64_t b, std::uint64_t e) {
        double best = 0.0;
        for (auto i = static_cast<std::int64_t>(b); i < static_cast<std::int64_t>(e); ++i)
            for (std::int64_t j = i + 1; j < N; ++j) best = std::max(best, pair_magnitude(k, cols, i, j));
        chunk_max[chunk] = best;
    });
    for (std::size_t c = 0; c < used; ++c) rep.mu = std::max(rep.mu, chunk_max[c]);
    rep.satisfied = rep.mu >= rep.welch - kWelchTolerance;
    return rep;
}

std::vector<PairMagnitude> pairwise_magnitudes(std::int64_t N, std::span<const std::int64_t> rows) {
    const auto sorted = checked_rows(N, rows);
    const Columns cols = build_columns(N, sorted);
    const kernels::KernelSet& k = kernels::active();
    std::vector<PairMagnitude> out;
    out.reserve(static_cast<std::size_t>(N * (N - 1) / 2));
    for (std::int64_t i = 0; i < N; ++i)
        for (std::int64_t j = i + 1; j < N; ++j) out.push_back({i, j, pair_magnitude(k, cols, i, j)});
    return out;
}

}  // namespace cyclosum
