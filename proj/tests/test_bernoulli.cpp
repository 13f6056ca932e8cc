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

#include "doctest.h"
#include "oracles.hpp"

#include "cyclosum/bernoulli.hpp"
#include "cyclosum/errors.hpp"

using namespace cyclosum;

TEST_SUITE("bernoulli") {

TEST_CASE("mask law against the float mask walk") {
    for (std::int64_t N = 1; N <= 9; ++N)
        for (std::int64_t l = 0; l < N; ++l)
            for (std::int64_t m = 1; m <= N; ++m) {
                const CyclotomicContext ctx(N, l);
                const MaskPMF law = pmf_tilde(ctx, m);
                const oracle::FloatLaw ref = oracle::mask_law(N, l, m);
                CAPTURE(N);
                CAPTURE(l);
                CAPTURE(m);
                REQUIRE(law.entries.size() == ref.atoms.size());
                BigInt total = 0;
                for (const auto& [key, w] : law.entries) {
                    total += w;
                    const auto it = ref.atoms.find(oracle::grid(ctx.to_complex(key)));
                    REQUIRE(it != ref.atoms.end());
                    CHECK(law.probability(key).convert_to<double>() == doctest::Approx(it->second.second).epsilon(1e-12));
                }
                CHECK(total == law.denominator);
            }
}

TEST_CASE("constant roots give the binomial law") {
    for (std::int64_t N = 1; N <= 12; ++N)
        for (std::int64_t m = 1; m <= N; ++m) {
            const CyclotomicContext ctx(N, 0);
            const MaskPMF law = pmf_tilde(ctx, m);
            BigInt nn = 1;
            for (std::int64_t i = 0; i < N; ++i) nn *= N;
            CHECK(law.denominator == nn);
            for (std::int64_t s = 0; s <= N; ++s) {
                BigInt w = binomial(N, s);
                for (std::int64_t i = 0; i < s; ++i) w *= m;
                for (std::int64_t i = 0; i < N - s; ++i) w *= N - m;
                CHECK(law.probability(ctx.constant(s)) == BigRational(w, nn));
            }
        }
}

TEST_CASE("variance and mean") {
    for (std::int64_t N = 2; N <= 8; ++N)
        for (std::int64_t l = 0; l < N; ++l)
            for (std::int64_t m = 1; m <= N; ++m) {
                const CyclotomicContext ctx(N, l);
                const TildeComparison t = tilde_moments(ctx, m, 3);
                CHECK(t.tilde_variance == BigRational(BigInt(m) * (N - m), BigInt(N)));
                if (l != 0) {
                    CHECK(t.tilde_mean.is_zero());
                    CHECK(t.x_variance == BigRational(BigInt(m) * (N - m), BigInt(N - 1)));
                    if (m < N) {
                        REQUIRE(t.variance_ratio);
                        CHECK(*t.variance_ratio == BigRational(N - 1, N));
                    }
                }
                CHECK(t.moment_deltas.size() == 3);
            }
}

TEST_CASE("mask budget") {
    const CyclotomicContext ctx(30, 1);
    CHECK_THROWS_AS(pmf_tilde(ctx, 3), BudgetError);
    CHECK_THROWS_AS(pmf_tilde(CyclotomicContext(8, 1), 3, 6), BudgetError);
    CHECK_THROWS_AS(pmf_tilde(CyclotomicContext(8, 1), 0), UsageError);
}

TEST_CASE("thread count does not change the law") {
    const CyclotomicContext ctx(14, 3);
    const MaskPMF a = pmf_tilde(ctx, 5, kDefaultMaskBudget, 1);
    const MaskPMF b = pmf_tilde(ctx, 5, kDefaultMaskBudget, 4);
    CHECK(a.entries == b.entries);
}

}
