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

#include <numeric>
#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "cyclosum/coherence.hpp"
#include "cyclosum/errors.hpp"

using namespace cyclosum;

namespace {

// Gram entries depend only on the column difference, so the coherence is a
// maximum over N-1 shifts of a normalised row sum.
double coherence_by_shift(std::int64_t N, const std::vector<std::int64_t>& rows) {
    double best = 0.0;
    for (std::int64_t delta = 1; delta < N; ++delta) {
        oracle::cplx s{0, 0};
        for (std::int64_t r : rows) s += oracle::root(N, r, delta);
        best = std::max(best, std::abs(s) / static_cast<double>(rows.size()));
    }
    return best;
}

}  // namespace

TEST_SUITE("coherence") {

TEST_CASE("welch bound values") {
    CHECK(welch_bound(4, 2).welch == doctest::Approx(0.5773502691896258).epsilon(1e-15));
    for (std::int64_t N = 2; N <= 50; ++N) CHECK(welch_bound(N, 1).welch == doctest::Approx(1.0).epsilon(1e-15));
    const WelchBound w = welch_bound(100000, 25);
    CHECK(w.approx == doctest::Approx(0.2));
    CHECK(std::abs(w.welch - w.approx) < 1e-4);
    CHECK(welch_bound(9, 9).welch == 0.0);
    CHECK_THROWS_AS(welch_bound(5, 0), UsageError);
    CHECK_THROWS_AS(welch_bound(5, 6), UsageError);
}

TEST_CASE("small matrices") {
    const std::vector<std::int64_t> full{0, 1, 2, 3};
    const CoherenceReport r = partial_fourier_coherence(4, full);
    CHECK(r.mu < 1e-12);
    CHECK(r.welch == 0.0);
    CHECK(r.satisfied);

    const std::vector<std::int64_t> two{1, 0};
    const CoherenceReport h = partial_fourier_coherence(4, two);
    CHECK(h.rows == std::vector<std::int64_t>{0, 1});
    CHECK(h.mu == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    CHECK(h.satisfied);

    const std::vector<std::int64_t> qr{1, 2, 4};
    const CoherenceReport q = partial_fourier_coherence(7, qr);
    CHECK(q.satisfied);
    CHECK(q.mu == doctest::Approx(q.welch).epsilon(1e-12));
}

TEST_CASE("matches the shift oracle on random instances") {
    std::mt19937_64 rng(2024);
    for (int rep = 0; rep < 60; ++rep) {
        const std::int64_t N = std::uniform_int_distribution<std::int64_t>(2, 64)(rng);
        const std::int64_t m = std::uniform_int_distribution<std::int64_t>(1, N)(rng);
        std::vector<std::int64_t> all(static_cast<std::size_t>(N));
        std::iota(all.begin(), all.end(), 0);
        std::shuffle(all.begin(), all.end(), rng);
        all.resize(static_cast<std::size_t>(m));
        const CoherenceReport r = partial_fourier_coherence(N, all, 3);
        CHECK(std::abs(r.mu - coherence_by_shift(N, r.rows)) < 1e-12);
        CHECK(r.satisfied);
        const auto pairs = pairwise_magnitudes(N, all);
        CHECK(pairs.size() == static_cast<std::size_t>(N * (N - 1) / 2));
        double best = 0;
        for (const auto& p : pairs) best = std::max(best, p.magnitude);
        CHECK(best == r.mu);
    }
}

TEST_CASE("row validation") {
    const std::vector<std::int64_t> dup{1, 1}, out{0, 9}, neg{-1}, none{};
    CHECK_THROWS_AS(partial_fourier_coherence(8, dup), UsageError);
    CHECK_THROWS_AS(partial_fourier_coherence(8, out), UsageError);
    CHECK_THROWS_AS(partial_fourier_coherence(8, neg), UsageError);
    CHECK_THROWS_AS(partial_fourier_coherence(8, none), UsageError);
    const std::vector<std::int64_t> one{0};
    CHECK_THROWS_AS(partial_fourier_coherence(kMaxCoherenceN + 1, one), UsageError);
}

}
