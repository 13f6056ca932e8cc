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
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclosum {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// Binomial coefficient C(n, k); zero outside 0 <= k <= n.
BigInt binomial(std::int64_t n, std::int64_t k);

/// "num/den", or just "num" when den == 1.
std::string to_string(const BigRational& q);

inline std::string to_string(const BigInt& v) { return v.str(); }

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    return BigRational(num, den);
}

}  // namespace cyclosum
