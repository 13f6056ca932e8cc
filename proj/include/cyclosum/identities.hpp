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
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cyclosum/bigint.hpp"

namespace cyclosum {

/// One binomial identity instance. Rational right-hand sides are cleared:
/// lhs = (sum) * q and rhs = p for a right side p / q * C(...), and
/// `divisible` records q | p * C(...).
struct IdentityCase {
    std::string name;
    std::vector<std::int64_t> params;
    BigInt lhs;
    BigInt rhs;
    bool divisible = true;
    bool holds = false;
};

/// chu_vandermonde                (l, m): sum_k C(l,k) C(l,m-k) = C(2l,m)
/// chu_vandermonde_central        (m):    sum_k C(m,k)^2 = C(2m,m)
/// half_turn_square_sum           (l, m): sum_k (2k-m)^2 C(l,k) C(l,m-k) = m(2l-m)/(2l-1) C(2l,m)
/// central_square_sum             (m):    sum_k (2k-m)^2 C(m,k)^2 = 2m C(2m-2,m-1)
/// third_turn_square_sum          (l, m): sum_k (2m-3k)^2 C(l,m-k) C(2l,k) = 2m(3l-m)/(3l-1) C(3l,m)
/// third_turn_central_square_sum  (m):    sum_k (2m-3k)^2 C(m,k) C(2m,k) = 4m^2/(3m-1) C(3m,m)
/// sixth_turn_square_sum          (l, m): sum over m1+m2+m3+m4 = m of
///     (2m1-2m2+m3-m4)^2 C(l,m1) C(l,m2) C(2l,m3) C(2l,m4) = 2m(6l-m)/(6l-1) C(6l,m)
const std::vector<std::string_view>& identity_names();

/// Number of parameters the identity takes (1 or 2).
int identity_arity(std::string_view name);

/// Largest valid m for a two-parameter identity at the given l.
std::int64_t identity_max_m(std::string_view name, std::int64_t l);

IdentityCase evaluate_identity(std::string_view name, std::span<const std::int64_t> params);

/// Single-parameter identities: m in [lo, hi]. Two-parameter identities:
/// l in [lo, hi] with every valid 1 <= m <= identity_max_m(name, l).
std::vector<IdentityCase> check_identity(std::string_view name, std::int64_t lo, std::int64_t hi);

}  // namespace cyclosum
