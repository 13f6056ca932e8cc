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

#include "cyclosum/errors.hpp"
#include "cyclosum/theorem_verifier.hpp"

using namespace cyclosum;

TEST_SUITE("theorem_verifier") {

TEST_CASE("single case passes every check") {
    const CaseReport r = verify_case(8, 3, 4);
    CHECK(r.passed());
    for (auto name : checks::all()) CHECK(r.find(name) != nullptr);
    CHECK(r.find(checks::kVariance)->status == CheckStatus::Pass);
    CHECK(r.find(checks::kMomentRational)->status == CheckStatus::Info);
}

TEST_CASE("degenerate and real-valued cases are marked, not failed") {
    const CaseReport zero = verify_case(6, 0, 2);
    CHECK(zero.passed());
    CHECK(zero.find(checks::kMeanZero)->status == CheckStatus::NotApplicable);
    CHECK(zero.find(checks::kAntisymmetry)->status == CheckStatus::NotApplicable);
    CHECK(zero.find(checks::kVariance)->status == CheckStatus::Pass);
    const CaseReport half = verify_case(6, 3, 2);
    CHECK(half.passed());
    CHECK(half.find(checks::kComponentSecondMoments)->status == CheckStatus::Skipped);
    CHECK(half.find(checks::kMeanZero)->status == CheckStatus::Pass);
}

TEST_CASE("check filter") {
    VerifyOptions opts;
    opts.only = {"variance"};
    const CaseReport r = verify_case(5, 2, 2, opts);
    REQUIRE(r.checks.size() == 1);
    CHECK(r.checks[0].name == "variance");
}

TEST_CASE("sweep is deterministic across thread counts") {
    SweepSpec spec;
    spec.N_lo = 2;
    spec.N_hi = 8;
    spec.verify.k_max = 6;
    spec.threads = 1;
    const SweepReport a = run_sweep(spec);
    spec.threads = 4;
    const SweepReport b = run_sweep(spec);
    CHECK(a.passed());
    CHECK(a.cases_run == b.cases_run);
    std::uint64_t expected = 0;
    for (int N = 2; N <= 8; ++N) expected += static_cast<std::uint64_t>(N * N);
    CHECK(a.cases_run == expected);
    REQUIRE(a.cases.size() == b.cases.size());
    for (std::size_t i = 0; i < a.cases.size(); ++i) {
        CHECK(a.cases[i].N == b.cases[i].N);
        CHECK(a.cases[i].l == b.cases[i].l);
        CHECK(a.cases[i].m == b.cases[i].m);
    }
}

TEST_CASE("sweep selection policies") {
    SweepSpec spec;
    spec.N_lo = spec.N_hi = 9;
    spec.l = {IndexPolicy::CoprimeOnly, {}};
    spec.m = {IndexPolicy::List, {2, 4, 20}};
    spec.verify.k_max = 3;
    const SweepReport r = run_sweep(spec);
    CHECK(r.cases_run == 12);
    CHECK(r.passed());
}

TEST_CASE("budget overflow is reported as skipped") {
    SweepSpec spec;
    spec.N_lo = spec.N_hi = 20;
    spec.l = {IndexPolicy::List, {1}};
    spec.m = {IndexPolicy::List, {10}};
    spec.verify.enumeration.budget = 100;
    const SweepReport r = run_sweep(spec);
    CHECK(r.cases_run == 0);
    CHECK(r.skipped.size() == 1);
}

TEST_CASE("conjecture scan") {
    const SweepReport r = conjecture_scan(13);
    CHECK(r.kind == "conjecture_scan");
    CHECK_FALSE(r.notes.empty());
    // every prime N gives uniform laws
    for (const auto& s : r.scan)
        if (s.n_is_prime) CHECK(s.is_uniform);
    // composite N = 9 with m in {2, 7} is uniform: 36 distinct pair sums
    REQUIRE_FALSE(r.counterexamples.empty());
    for (const auto& c : r.counterexamples) {
        CHECK(c.N == 9);
        CHECK((c.m == 2 || c.m == 7));
        CHECK(c.support_size == 36);
    }
    CHECK(r.counterexamples.size() == 12);
    ConjectureScanOptions literal;
    literal.literal_range = true;
    const SweepReport lit = conjecture_scan(13, literal);
    CHECK(lit.counterexamples.size() > r.counterexamples.size());
    CHECK_THROWS_AS(conjecture_scan(2), UsageError);
}

TEST_CASE("half-turn closed forms") {
    for (std::int64_t l = 1; l <= 6; ++l)
        for (std::int64_t m = 1; m <= 2 * l; ++m) {
            const CaseReport r = closed_form_check(l, m);
            CHECK(r.passed());
            CHECK(r.find("hypergeometric_law")->status == CheckStatus::Pass);
            CHECK(r.find("central_law")->status == (m == l ? CheckStatus::Pass : CheckStatus::NotApplicable));
        }
}

TEST_CASE("trigonometric sums") {
    for (std::int64_t N = 2; N <= 40; ++N)
        for (std::int64_t l = 1; l < N; ++l) {
            const CaseReport r = trig_sum_check(N, l);
            CHECK(r.passed());
            if (N == 2 * l) CHECK(r.find("trig_sum_double_angle")->status == CheckStatus::Skipped);
        }
}

TEST_CASE("primality") {
    const std::vector<int> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29};
    for (int n = 0; n < 30; ++n)
        CHECK(is_prime(n) == (std::find(primes.begin(), primes.end(), n) != primes.end()));
}

}
