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

#include "cyclosum/errors.hpp"
#include "cyclosum/identities.hpp"
#include "cyclosum/moments.hpp"

using namespace cyclosum;

namespace {

// E[(z + conj z)^2] * C(N, m) from the enumerated law: the sums in these
// identities are the second moment of the real part for N = 2l, 3l, 6l.
BigRational real_part_square_sum(std::int64_t N, std::int64_t l, std::int64_t m) {
    const CyclotomicContext ctx(N, l);
    const ExactPMF pmf = pmf_X(ctx, m);
    const auto v = ctx.rational_value(component_moments(pmf, 2, 0));
    REQUIRE(v);
    return *v * BigRational(binomial(N, m));
}

BigRational cleared_rhs(const IdentityCase& c, const BigInt& q) { return BigRational(c.rhs, q); }

}  // namespace

TEST_SUITE("identities") {

TEST_CASE("hand values") {
    const std::int64_t m1[] = {1}, m2[] = {2};
    CHECK(evaluate_identity("central_square_sum", m1).rhs == 2);
    CHECK(evaluate_identity("central_square_sum", m2).lhs == 8);
    CHECK(evaluate_identity("chu_vandermonde_central", m2).lhs == 6);
    const std::int64_t lm[] = {2, 2};
    const auto v = evaluate_identity("chu_vandermonde", lm);
    CHECK(v.lhs == 6);
    CHECK(v.holds);
    // sum_k (2k-2)^2 C(2,k) C(2,2-k) = 4 + 0 + 4 = 8; m(2l-m)/(2l-1) C(4,2) = 4/3 * 6 = 8
    const auto i33 = evaluate_identity("half_turn_square_sum", lm);
    CHECK(i33.lhs == 8 * 3);
    CHECK(i33.rhs == 4 * 6);
    CHECK(i33.holds);
}

TEST_CASE("sums equal enumerated real-part moments") {
    for (std::int64_t l = 1; l <= 5; ++l)
        for (std::int64_t m = 1; m <= 2 * l; ++m) {
            const std::int64_t p[] = {l, m};
            const auto c = evaluate_identity("half_turn_square_sum", p);
            CHECK(c.holds);
            CHECK(cleared_rhs(c, 2 * l - 1) * 4 == real_part_square_sum(2 * l, l, m));
        }
    for (std::int64_t m = 1; m <= 6; ++m) {
        const std::int64_t p[] = {m};
        const auto c = evaluate_identity("central_square_sum", p);
        CHECK(c.holds);
        CHECK(BigRational(c.rhs) * 4 == real_part_square_sum(2 * m, m, m));
        const auto b = evaluate_identity("third_turn_central_square_sum", p);
        CHECK(b.holds);
        if (m <= 4) CHECK(cleared_rhs(b, 3 * m - 1) == real_part_square_sum(3 * m, m, m));
    }
    for (std::int64_t l = 1; l <= 4; ++l)
        for (std::int64_t m = 1; m <= 3 * l; ++m) {
            const std::int64_t p[] = {l, m};
            const auto c = evaluate_identity("third_turn_square_sum", p);
            CHECK(c.holds);
            CHECK(cleared_rhs(c, 3 * l - 1) == real_part_square_sum(3 * l, l, m));
        }
    for (std::int64_t l = 1; l <= 2; ++l)
        for (std::int64_t m = 1; m <= 6 * l; ++m) {
            const std::int64_t p[] = {l, m};
            const auto c = evaluate_identity("sixth_turn_square_sum", p);
            CHECK(c.holds);
            CHECK(cleared_rhs(c, 6 * l - 1) == real_part_square_sum(6 * l, l, m));
        }
}

TEST_CASE("ranges") {
    CHECK(check_identity("central_square_sum", 1, 50).size() == 50);
    const auto two = check_identity("third_turn_square_sum", 1, 3);
    CHECK(two.size() == 3 + 6 + 9);
    for (const auto& c : two) CHECK(c.holds);
    for (auto name : identity_names()) {
        const auto cases = check_identity(name, 1, 6);
        for (const auto& c : cases) CHECK(c.holds);
    }
}

TEST_CASE("argument validation") {
    const std::int64_t bad_m[] = {2, 5};
    CHECK_THROWS_AS(evaluate_identity("half_turn_square_sum", bad_m), UsageError);
    const std::int64_t one[] = {3};
    CHECK_THROWS_AS(evaluate_identity("half_turn_square_sum", one), UsageError);
    CHECK_THROWS_AS(evaluate_identity("nope", one), UsageError);
    CHECK_THROWS_AS(check_identity("central_square_sum", 0, 3), UsageError);
}

}
