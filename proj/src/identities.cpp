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

#include "cyclosum/identities.hpp"

#include <algorithm>
#include <string>

#include "cyclosum/errors.hpp"

namespace cyclosum {

namespace {

BigInt sq(std::int64_t x) { return BigInt(x) * x; }

// lhs_sum * q == p * binom, with q | p * binom.
IdentityCase cleared(std::string_view name, std::vector<std::int64_t> params, const BigInt& lhs_sum,
                     const BigInt& p, const BigInt& q, const BigInt& binom) {
    IdentityCase c;
    c.name = std::string(name);
    c.params = std::move(params);
    c.lhs = lhs_sum * q;
    c.rhs = p * binom;
    c.divisible = c.rhs % q == 0;
    c.holds = c.divisible && c.lhs == c.rhs;
    return c;
}

IdentityCase chu_vandermonde(std::int64_t l, std::int64_t m) {
    BigInt s = 0;
    for (std::int64_t k = std::max<std::int64_t>(0, m - l); k <= std::min(m, l); ++k)
        s += binomial(l, k) * binomial(l, m - k);
    return cleared("chu_vandermonde", {l, m}, s, 1, 1, binomial(2 * l, m));
}

IdentityCase chu_vandermonde_central(std::int64_t m) {
    BigInt s = 0;
    for (std::int64_t k = 0; k <= m; ++k) {
        const BigInt b = binomial(m, k);
        s += b * b;
    }
    return cleared("chu_vandermonde_central", {m}, s, 1, 1, binomial(2 * m, m));
}

IdentityCase half_turn_square_sum(std::int64_t l, std::int64_t m) {
    BigInt s = 0;
    for (std::int64_t k = std::max<std::int64_t>(0, m - l); k <= std::min(m, l); ++k)
        s += sq(2 * k - m) * binomial(l, k) * binomial(l, m - k);
    return cleared("half_turn_square_sum", {l, m}, s, BigInt(m) * (2 * l - m), 2 * l - 1, binomial(2 * l, m));
}

IdentityCase central_square_sum(std::int64_t m) {
    BigInt s = 0;
    for (std::int64_t k = 0; k <= m; ++k) {
        const BigInt b = binomial(m, k);
        s += sq(2 * k - m) * b * b;
    }
    return cleared("central_square_sum", {m}, s, 2 * m, 1, binomial(2 * m - 2, m - 1));
}

IdentityCase third_turn_square_sum(std::int64_t l, std::int64_t m) {
    BigInt s = 0;
    for (std::int64_t k = std::max<std::int64_t>(0, m - l); k <= std::min(m, 2 * l); ++k)
        s += sq(2 * m - 3 * k) * binomial(l, m - k) * binomial(2 * l, k);
    return cleared("third_turn_square_sum", {l, m}, s, BigInt(2 * m) * (3 * l - m), 3 * l - 1, binomial(3 * l, m));
}

IdentityCase third_turn_central_square_sum(std::int64_t m) {
    BigInt s = 0;
    for (std::int64_t k = 0; k <= m; ++k) s += sq(2 * m - 3 * k) * binomial(m, k) * binomial(2 * m, k);
    return cleared("third_turn_central_square_sum", {m}, s, 4 * sq(m), 3 * m - 1, binomial(3 * m, m));
}

IdentityCase sixth_turn_square_sum(std::int64_t l, std::int64_t m) {
    // Binomial rows are cached; the fourth index is forced by the total.
    std::vector<BigInt> cl(static_cast<std::size_t>(l) + 1), c2l(static_cast<std::size_t>(2 * l) + 1);
    for (std::int64_t i = 0; i <= l; ++i) cl[static_cast<std::size_t>(i)] = binomial(l, i);
    for (std::int64_t i = 0; i <= 2 * l; ++i) c2l[static_cast<std::size_t>(i)] = binomial(2 * l, i);
    auto at = [](const std::vector<BigInt>& row, std::int64_t i) -> const BigInt* {
        return (i < 0 || i >= static_cast<std::int64_t>(row.size())) ? nullptr : &row[static_cast<std::size_t>(i)];
    };
    BigInt s = 0;
    for (std::int64_t m1 = 0; m1 <= std::min(m, l); ++m1) {
        for (std::int64_t m2 = 0; m1 + m2 <= m && m2 <= l; ++m2) {
            const BigInt b12 = cl[static_cast<std::size_t>(m1)] * cl[static_cast<std::size_t>(m2)];
            for (std::int64_t m3 = 0; m1 + m2 + m3 <= m && m3 <= 2 * l; ++m3) {
                const std::int64_t m4 = m - m1 - m2 - m3;
                const BigInt* b4 = at(c2l, m4);
                if (!b4) continue;
                s += sq(2 * m1 - 2 * m2 + m3 - m4) * b12 * c2l[static_cast<std::size_t>(m3)] * *b4;
            }
        }
    }
    return cleared("sixth_turn_square_sum", {l, m}, s, BigInt(2 * m) * (6 * l - m), 6 * l - 1, binomial(6 * l, m));
}

void require_positive(std::string_view name, std::span<const std::int64_t> params) {
    for (std::int64_t p : params)
        if (p < 1) throw UsageError(std::string(name) + ": parameters must be positive");
}

}  // namespace

const std::vector<std::string_view>& identity_names() {
    static const std::vector<std::string_view> names{"chu_vandermonde", "chu_vandermonde_central",
                                                     "half_turn_square_sum",     "central_square_sum",
                                                     "third_turn_square_sum",    "third_turn_central_square_sum",
                                                     "sixth_turn_square_sum"};
    return names;
}

int identity_arity(std::string_view name) {
    if (name == "chu_vandermonde_central" || name == "central_square_sum" || name == "third_turn_central_square_sum") return 1;
    if (name == "chu_vandermonde" || name == "half_turn_square_sum" || name == "third_turn_square_sum" || name == "sixth_turn_square_sum")
        return 2;
    throw UsageError("unknown identity '" + std::string(name) + "'");
}

std::int64_t identity_max_m(std::string_view name, std::int64_t l) {
    if (name == "chu_vandermonde" || name == "half_turn_square_sum") return 2 * l;
    if (name == "third_turn_square_sum") return 3 * l;
    if (name == "sixth_turn_square_sum") return 6 * l;
    throw UsageError("identity '" + std::string(name) + "' takes a single parameter");
}

IdentityCase evaluate_identity(std::string_view name, std::span<const std::int64_t> params) {
    const int arity = identity_arity(name);
    if (static_cast<int>(params.size()) != arity)
        throw UsageError(std::string(name) + " expects " + std::to_string(arity) + " parameter(s)");
    require_positive(name, params);
    if (arity == 2 && params[1] > identity_max_m(name, params[0]))
        throw UsageError(std::string(name) + ": m out of range for l=" + std::to_string(params[0]));
    if (name == "chu_vandermonde") return chu_vandermonde(params[0], params[1]);
    if (name == "chu_vandermonde_central") return chu_vandermonde_central(params[0]);
    if (name == "half_turn_square_sum") return half_turn_square_sum(params[0], params[1]);
    if (name == "central_square_sum") return central_square_sum(params[0]);
    if (name == "third_turn_square_sum") return third_turn_square_sum(params[0], params[1]);
    if (name == "third_turn_central_square_sum") return third_turn_central_square_sum(params[0]);
    return sixth_turn_square_sum(params[0], params[1]);
}

std::vector<IdentityCase> check_identity(std::string_view name, std::int64_t lo, std::int64_t hi) {
    const int arity = identity_arity(name);
    if (lo < 1 || hi < lo) throw UsageError("identity range must satisfy 1 <= lo <= hi");
    std::vector<IdentityCase> out;
    for (std::int64_t p = lo; p <= hi; ++p) {
        if (arity == 1) {
            const std::int64_t args[] = {p};
            out.push_back(evaluate_identity(name, args));
            continue;
        }
        for (std::int64_t m = 1; m <= identity_max_m(name, p); ++m) {
            const std::int64_t args[] = {p, m};
            out.push_back(evaluate_identity(name, args));
        }
    }
    return out;
}

}  // namespace cyclosum
