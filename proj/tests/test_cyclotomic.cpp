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

#include <random>

#include "doctest.h"
#include "oracles.hpp"

#include "cyclosum/cyclotomic.hpp"
#include "cyclosum/errors.hpp"

using namespace cyclosum;

namespace {

std::vector<BigInt> ints(std::initializer_list<int> v) { return {v.begin(), v.end()}; }

CycElem random_elem(const CyclotomicContext& ctx, std::mt19937& rng) {
    std::uniform_int_distribution<int> coef(-5, 5);
    std::vector<BigInt> poly(static_cast<std::size_t>(ctx.order()));
    for (auto& c : poly) c = coef(rng);
    return ctx.reduce(poly);
}

}  // namespace

TEST_SUITE("cyclotomic") {

TEST_CASE("cyclotomic polynomials match hand expansions") {
    CHECK(cyclotomic_polynomial(1) == ints({-1, 1}));
    CHECK(cyclotomic_polynomial(2) == ints({1, 1}));
    CHECK(cyclotomic_polynomial(3) == ints({1, 1, 1}));
    CHECK(cyclotomic_polynomial(4) == ints({1, 0, 1}));
    CHECK(cyclotomic_polynomial(6) == ints({1, -1, 1}));
    CHECK(cyclotomic_polynomial(8) == ints({1, 0, 0, 0, 1}));
    CHECK(cyclotomic_polynomial(9) == ints({1, 0, 0, 1, 0, 0, 1}));
    CHECK(cyclotomic_polynomial(10) == ints({1, -1, 1, -1, 1}));
    CHECK(cyclotomic_polynomial(12) == ints({1, 0, -1, 0, 1}));
    CHECK(cyclotomic_polynomial(15) == ints({1, -1, 0, 1, -1, 1, 0, -1, 1}));
    const auto p105 = cyclotomic_polynomial(105);
    REQUIRE(p105.size() == 49);
    CHECK(p105[7] == -2);
    CHECK(p105[41] == -2);
}

TEST_CASE("euler phi") {
    const int expected[] = {1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4, 12, 6, 8, 8};
    for (int d = 1; d <= 16; ++d) CHECK(euler_phi(d) == expected[d - 1]);
    for (int d = 1; d <= 40; ++d) CHECK(static_cast<std::int64_t>(cyclotomic_polynomial(d).size()) == euler_phi(d) + 1);
}

TEST_CASE("context geometry") {
    const CyclotomicContext c(12, 8);
    CHECK(c.gcd() == 4);
    CHECK(c.order() == 3);
    CHECK(c.phi() == 2);
    CHECK(c.exponent_of(1) == 2);
    CHECK(c.exponent_of(3) == 0);
    const CyclotomicContext z(5, 0);
    CHECK(z.order() == 1);
    CHECK(z.phi() == 1);
    CHECK_THROWS_AS(CyclotomicContext(0, 0), UsageError);
    CHECK_THROWS_AS(CyclotomicContext(5, 5), UsageError);
    CHECK_THROWS_AS(CyclotomicContext(5, -1), UsageError);
}

TEST_CASE("roots evaluate to the expected complex numbers and sum to zero") {
    for (std::int64_t N = 1; N <= 18; ++N) {
        for (std::int64_t l = 0; l < N; ++l) {
            const CyclotomicContext ctx(N, l);
            CycElem total = ctx.zero();
            for (std::int64_t n = 1; n <= N; ++n) {
                const CycElem r = ctx.root_power(n);
                CHECK(oracle::near(ctx.to_complex(r), oracle::root(N, l, n)));
                total = ctx.add(total, r);
            }
            if (l == 0)
                CHECK(total == ctx.constant(N));
            else
                CHECK(total.is_zero());
        }
    }
}

TEST_CASE("ring operations agree with complex arithmetic") {
    std::mt19937 rng(7);
    for (std::int64_t N : {3, 4, 5, 8, 9, 12, 15, 16, 30}) {
        const CyclotomicContext ctx(N, 1);
        for (int rep = 0; rep < 20; ++rep) {
            const CycElem a = random_elem(ctx, rng);
            const CycElem b = random_elem(ctx, rng);
            const auto za = ctx.to_complex(a), zb = ctx.to_complex(b);
            CHECK(oracle::near(ctx.to_complex(ctx.add(a, b)), za + zb));
            CHECK(oracle::near(ctx.to_complex(ctx.subtract(a, b)), za - zb));
            CHECK(oracle::near(ctx.to_complex(ctx.multiply(a, b)), za * zb, 1e-8));
            CHECK(oracle::near(ctx.to_complex(ctx.conjugate(a)), std::conj(za)));
            CHECK(oracle::near(ctx.to_complex(ctx.power(a, 3)), za * za * za, 1e-8));
            CHECK(ctx.multiply(a, b) == ctx.multiply(b, a));
            CHECK(ctx.add(a, ctx.negate(a)).is_zero());
        }
    }
}

TEST_CASE("reduction is canonical") {
    const CyclotomicContext ctx(6, 1);
    // 1 + z^2 + z^4 = 0 for a primitive sixth root z.
    CHECK(ctx.reduce(std::vector<std::int64_t>{1, 0, 1, 0, 1}).is_zero());
    // z^3 = -1.
    CHECK(ctx.zeta_power(3) == ctx.constant(-1));
    CHECK(ctx.zeta_power(-1) == ctx.zeta_power(5));
    CHECK(ctx.zeta_power(13) == ctx.zeta_power(1));
}

TEST_CASE("classification") {
    const CyclotomicContext ctx(8, 1);
    const CycElem z = ctx.zeta_power(1);
    const auto real = ctx.classify(ctx.add(z, ctx.conjugate(z)));
    CHECK(real.is_real);
    CHECK_FALSE(real.is_rational);
    const auto rat = ctx.classify(ctx.multiply(z, ctx.conjugate(z)));
    CHECK(rat.is_rational);
    REQUIRE(rat.rational_value);
    CHECK(*rat.rational_value == 1);
    CHECK_FALSE(ctx.classify(z).is_real);
}

TEST_CASE("rational elements normalise") {
    const CyclotomicContext ctx(4, 1);
    const CycRat q = ctx.make_rat(ctx.constant(6), BigInt(-4));
    CHECK(q.den == 2);
    CHECK(q.num == ctx.constant(-3));
    const auto v = ctx.rational_value(q);
    REQUIRE(v);
    CHECK(*v == BigRational(-3, 2));
    const CycRat half = ctx.make_rat(ctx.zeta_power(1), BigInt(2));
    CHECK(ctx.add(half, half) == ctx.make_rat(ctx.zeta_power(1), BigInt(1)));
    CHECK(ctx.divide(ctx.make_rat(ctx.constant(4), BigInt(1)), BigInt(8)) == ctx.make_rat(ctx.one(), BigInt(2)));
}

TEST_CASE("mixing contexts is rejected") {
    const CyclotomicContext a(5, 1), b(7, 1);
    CHECK_THROWS_AS(a.add(a.one(), b.zeta_power(1)), ContextMismatch);
}

}
