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

#include "cyclosum/moments.hpp"

using namespace cyclosum;

TEST_SUITE("moments") {

TEST_CASE("four samples, two kept") {
    const CyclotomicContext ctx(4, 1);
    const ExactPMF pmf = pmf_X(ctx, 2);
    for (unsigned k = 1; k <= 3; ++k) CHECK(moment(pmf, k).value.is_zero());
    const MomentReport m4 = moment(pmf, 4);
    const auto v = ctx.rational_value(m4.value);
    REQUIRE(v);
    CHECK(*v == BigRational(-8, 3));
    CHECK_FALSE(m4.predicted_zero);
    CHECK(variance(pmf) == BigRational(4, 3));
}

TEST_CASE("moments match the float brute force") {
    for (std::int64_t N = 2; N <= 8; ++N)
        for (std::int64_t l = 0; l < N; ++l)
            for (std::int64_t m = 1; m <= N; ++m) {
                const CyclotomicContext ctx(N, l);
                const ExactPMF pmf = pmf_X(ctx, m);
                for (unsigned k = 1; k <= 6; ++k) {
                    const MomentReport r = moment(pmf, k);
                    CAPTURE(N);
                    CAPTURE(l);
                    CAPTURE(m);
                    CAPTURE(k);
                    CHECK(oracle::near(ctx.to_complex(r.value), oracle::subset_moment(N, l, m, k), 1e-8));
                    CHECK(r.predicted_zero == (k % static_cast<unsigned>(ctx.order()) != 0));
                }
            }
}

TEST_CASE("variance against the float brute force") {
    for (std::int64_t N = 2; N <= 9; ++N)
        for (std::int64_t l = 0; l < N; ++l)
            for (std::int64_t m = 1; m <= N; ++m) {
                const ExactPMF pmf = pmf_X(CyclotomicContext(N, l), m);
                const oracle::FloatLaw law = oracle::subset_law(N, l, m);
                oracle::cplx mean{0, 0};
                for (const auto& [g, a] : law.atoms) mean += a.first * a.second / law.total;
                double var = 0;
                for (const auto& [g, a] : law.atoms) var += std::norm(a.first - mean) * a.second / law.total;
                CHECK(variance(pmf).convert_to<double>() == doctest::Approx(var).epsilon(1e-9));
            }
}

TEST_CASE("real and imaginary parts of one of three") {
    const CyclotomicContext ctx(3, 1);
    const ExactPMF pmf = pmf_X(ctx, 1);
    auto rational = [&](const CycRat& q) { return ctx.rational_value(q).value_or(BigRational(-999)); };
    CHECK(component_moments(pmf, 1, 0).is_zero());
    CHECK(component_moments(pmf, 0, 1).is_zero());
    CHECK(rational(component_moments(pmf, 2, 0)) == 2);    // E[(2U)^2] = 4 * 1/2
    CHECK(rational(component_moments(pmf, 0, 2)) == -2);   // E[(2iV)^2] = -4 * 1/2
    CHECK(component_moments(pmf, 1, 1).is_zero());
    CHECK(rational(componentwise_square_expectation(pmf)) == 1);
}

TEST_CASE("square expectation differs from the algebraic second moment") {
    const CyclotomicContext ctx(4, 1);
    const ExactPMF pmf = pmf_X(ctx, 2);
    CHECK(moment(pmf, 2).value.is_zero());
    const auto sq = ctx.rational_value(componentwise_square_expectation(pmf));
    REQUIRE(sq);
    CHECK(*sq == BigRational(4, 3));
}

TEST_CASE("power sums") {
    for (std::int64_t N = 1; N <= 12; ++N)
        for (std::int64_t l = 0; l < N; ++l) {
            const CyclotomicContext ctx(N, l);
            for (std::uint64_t n = 1; n <= 2 * static_cast<std::uint64_t>(N); ++n) {
                oracle::cplx s{0, 0};
                for (std::int64_t k = 1; k <= N; ++k) s += std::pow(oracle::root(N, l, k), static_cast<int>(n));
                CHECK(power_sum(ctx, n).convert_to<double>() == doctest::Approx(s.real()).epsilon(1e-9));
                CHECK(std::abs(s.imag()) < 1e-9);
            }
        }
}

TEST_CASE("Newton recurrence against the product expansion") {
    for (std::int64_t N = 1; N <= 12; ++N)
        for (std::int64_t l = 0; l < N; ++l) {
            const CyclotomicContext ctx(N, l);
            const auto expected = oracle::elementary_symmetric(N, l);
            const auto seq = elementary_symmetric_sequence(ctx, static_cast<std::uint64_t>(N) + 2);
            REQUIRE(seq.size() == static_cast<std::size_t>(N) + 3);
            for (std::size_t n = 0; n < seq.size(); ++n) {
                const oracle::cplx want = n < expected.size() ? expected[n] : oracle::cplx{0, 0};
                CAPTURE(N);
                CAPTURE(l);
                CAPTURE(n);
                CHECK(oracle::near(ctx.to_complex(seq[n]), want, 1e-8));
                CHECK(seq[n].den == 1);
            }
            CHECK(elementary_symmetric(ctx, 1) == seq[1]);
        }
}

}
