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

#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "cyclosum/bigint.hpp"
#include "cyclosum/subset_distribution.hpp"

namespace cyclosum {

enum class CheckStatus { Pass, Fail, Skipped, NotApplicable, Info };

std::string_view to_string(CheckStatus s);

struct CheckResult {
    std::string name;
    CheckStatus status = CheckStatus::Pass;
    std::string expected;
    std::string got;
    std::string reason;  // set for Skipped / NotApplicable / Info
};

struct CaseReport {
    std::string kind;  // "case", "closed_form", "trig_sum"
    std::int64_t N = 0, l = 0, m = 0;
    std::vector<CheckResult> checks;

    bool passed() const;
    const CheckResult* find(std::string_view name) const;
};

namespace checks {
inline constexpr std::string_view kMeanZero = "mean_zero";
inline constexpr std::string_view kVariance = "variance";
inline constexpr std::string_view kComponentMeans = "component_means";
inline constexpr std::string_view kComponentSecondMoments = "component_second_moments";
inline constexpr std::string_view kSquareExpectation = "componentwise_square_expectation";
inline constexpr std::string_view kComponentVariances = "component_variances";
inline constexpr std::string_view kMomentVanishing = "moment_vanishing";
inline constexpr std::string_view kMomentReal = "moment_real";
inline constexpr std::string_view kMomentRational = "moment_rational";
inline constexpr std::string_view kOddVMoments = "odd_v_moments";
inline constexpr std::string_view kAntisymmetry = "antisymmetry";
inline constexpr std::string_view kVSymmetry = "v_symmetry";

std::vector<std::string_view> all();
}  // namespace checks

struct VerifyOptions {
    std::uint64_t k_max = 8;
    std::set<std::string, std::less<>> only;  // empty: every check
    EnumerationOptions enumeration;
};

/// Runs the exact structural checks on X_l(m, N).
CaseReport verify_case(std::int64_t N, std::int64_t l, std::int64_t m, const VerifyOptions& opts = {});

enum class IndexPolicy { All, CoprimeOnly, List };

struct IndexSelection {
    IndexPolicy policy = IndexPolicy::All;
    std::vector<std::int64_t> values;  // for List
};

struct SweepSpec {
    std::int64_t N_lo = 1;
    std::int64_t N_hi = 1;
    IndexSelection l;
    IndexSelection m;
    VerifyOptions verify;
    unsigned threads = 1;
};

struct Failure {
    std::int64_t N = 0, l = 0, m = 0;
    std::string check;
    std::string expected;
    std::string got;
};

struct ScanCase {
    std::int64_t N = 0, l = 0, m = 0;
    bool is_uniform = false;
    bool n_is_prime = false;
    BigInt support_size;
    BigInt binom;
};

struct SweepReport {
    std::string kind;  // "sweep" or "conjecture_scan"
    std::vector<std::string> notes;
    std::uint64_t cases_run = 0;
    std::vector<CaseReport> cases;
    std::vector<Failure> failures;
    std::vector<ScanCase> scan;
    std::vector<ScanCase> counterexamples;
    std::vector<std::string> skipped;
    double elapsed_seconds = 0.0;

    bool passed() const { return failures.empty() && counterexamples.empty(); }
};

SweepReport run_sweep(const SweepSpec& spec);

struct ConjectureScanOptions {
    /// Use 2 <= m <= N-1 instead of the default 2 <= m <= N-2.
    bool literal_range = false;
    EnumerationOptions enumeration;
};

/// For N in [3, N_max], l and m coprime to N, m in the scan range: records
/// whether X_l(m, N) is uniform and flags every case where uniformity
/// disagrees with primality of N.
SweepReport conjecture_scan(std::int64_t N_max, const ConjectureScanOptions& opts = {});

/// N = 2l: enumerated law against C(l,k)C(l,m-k)/C(2l,m) at 2k-m, the
/// variance m(2l-m)/(2l-1) and the matching binomial identity.
CaseReport closed_form_check(std::int64_t l, std::int64_t m);

/// Double-precision check that sum_k cos(2 pi k l / N) and the matching sine
/// sum vanish, and likewise at twice the angle when N != 2l.
CaseReport trig_sum_check(std::int64_t N, std::int64_t l);

inline constexpr double kTrigTolerance = 1e-9;

bool is_prime(std::int64_t n);

}  // namespace cyclosum
