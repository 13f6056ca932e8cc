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

#include "cyclosum/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "cyclosum/errors.hpp"

namespace cyclosum {

namespace {

using Poly = std::vector<BigInt>;

void trim(Poly& p) {
    while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact quotient of num by a monic divisor; throws if the remainder is nonzero.
Poly exact_divide(Poly num, const Poly& divisor) {
    const std::size_t dd = divisor.size() - 1;
    if (num.size() < divisor.size()) throw std::logic_error("exact_divide: degree too small");
    Poly q(num.size() - dd, 0);
    for (std::size_t i = num.size(); i-- > dd;) {
        const BigInt c = num[i];
        if (c == 0) continue;
        q[i - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * divisor[j];
    }
    for (std::size_t i = 0; i < dd; ++i)
        if (num[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
    return q;
}

std::vector<std::int64_t> divisors(std::int64_t d) {
    std::vector<std::int64_t> out;
    for (std::int64_t e = 1; e * e <= d; ++e) {
        if (d % e) continue;
        out.push_back(e);
        if (e != d / e) out.push_back(d / e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Reduce p (length d after folding) modulo the monic min_poly in place.
void reduce_in_place(Poly& p, const Poly& min_poly) {
    const std::size_t phi = min_poly.size() - 1;
    for (std::size_t i = p.size(); i-- > phi;) {
        if (p[i] == 0) continue;
        const BigInt c = p[i];
        for (std::size_t j = 0; j < phi; ++j) p[i - phi + j] -= c * min_poly[j];
        p[i] = 0;
    }
    p.resize(phi);
}

}  // namespace

bool CycElem::is_zero() const {
    return std::all_of(coeffs.begin(), coeffs.end(), [](const BigInt& c) { return c == 0; });
}

bool operator<(const CycElem& a, const CycElem& b) {
    if (a.order != b.order) return a.order < b.order;
    return std::lexicographical_compare(a.coeffs.begin(), a.coeffs.end(), b.coeffs.begin(),
                                        b.coeffs.end());
}

std::int64_t euler_phi(std::int64_t d) {
    std::int64_t result = d;
    for (std::int64_t p = 2; p * p <= d; ++p) {
        if (d % p) continue;
        while (d % p == 0) d /= p;
        result -= result / p;
    }
    if (d > 1) result -= result / d;
    return result;
}

std::vector<BigInt> cyclotomic_polynomial(std::int64_t d) {
    if (d < 1) throw UsageError("cyclotomic_polynomial: order must be positive");
    std::map<std::int64_t, Poly> known;
    for (std::int64_t e : divisors(d)) {
        Poly xe(static_cast<std::size_t>(e) + 1, 0);
        xe[0] = -1;
        xe[static_cast<std::size_t>(e)] = 1;
        for (auto& [f, phi_f] : known)
            if (e % f == 0) xe = exact_divide(std::move(xe), phi_f);
        trim(xe);
        known.emplace(e, std::move(xe));
    }
    return known.at(d);
}

CyclotomicContext::CyclotomicContext(std::int64_t N, std::int64_t l) {
    if (N < 1) throw UsageError("N must be >= 1 (got " + std::to_string(N) + ")");
    if (l < 0 || l >= N)
        throw UsageError("l must lie in [0, N-1] (got l=" + std::to_string(l) +
                         ", N=" + std::to_string(N) + ")");
    auto data = std::make_shared<Data>();
    data->N = N;
    data->l = l;
    data->g = std::gcd(N, l);
    data->d = N / data->g;
    data->min_poly = cyclotomic_polynomial(data->d);
    data->phi = static_cast<std::int64_t>(data->min_poly.size()) - 1;

    const auto d = static_cast<std::size_t>(data->d);
    const auto phi = static_cast<std::size_t>(data->phi);
    data->powers.reserve(d);
    for (std::size_t e = 0; e < d; ++e) {
        Poly p(std::max(d, phi), 0);
        p[e] = 1;
        reduce_in_place(p, data->min_poly);
        data->powers.push_back(CycElem{d, std::move(p)});
    }

    // Enumerators sum at most N rows; keep N * bound well inside int64.
    BigInt bound = 0;
    for (const auto& p : data->powers)
        for (const auto& c : p.coeffs) bound = std::max(bound, BigInt(abs(c)));
    if (bound * N < BigInt(std::numeric_limits<std::int64_t>::max() / 4)) {
        data->small_bound = bound.convert_to<std::int64_t>();
        data->small_powers.reserve(d * phi);
        for (const auto& p : data->powers)
            for (const auto& c : p.coeffs) data->small_powers.push_back(c.convert_to<std::int64_t>());
    }
    data_ = std::move(data);
}

std::int64_t CyclotomicContext::exponent_of(std::int64_t n) const {
    if (n < 1 || n > N())
        throw UsageError("sample index must lie in [1, N] (got " + std::to_string(n) + ")");
    const auto prod = static_cast<__int128>(l()) * n;
    return static_cast<std::int64_t>(prod % N()) / gcd();
}

CycElem CyclotomicContext::zero() const {
    return CycElem{static_cast<std::uint64_t>(order()),
                   std::vector<BigInt>(static_cast<std::size_t>(phi()), 0)};
}

CycElem CyclotomicContext::one() const { return constant(1); }

CycElem CyclotomicContext::constant(const BigInt& value) const {
    CycElem r = zero();
    r.coeffs[0] = value;
    return r;
}

CycElem CyclotomicContext::zeta_power(std::int64_t e) const {
    const std::int64_t d = order();
    e %= d;
    if (e < 0) e += d;
    return data_->powers[static_cast<std::size_t>(e)];
}

CycElem CyclotomicContext::root_power(std::int64_t n) const { return zeta_power(exponent_of(n)); }

CycElem CyclotomicContext::subset_sum(std::span<const std::int64_t> indices) const {
    std::vector<std::int64_t> hist(static_cast<std::size_t>(order()), 0);
    for (std::int64_t n : indices) ++hist[static_cast<std::size_t>(exponent_of(n))];
    return reduce(std::span<const std::int64_t>(hist));
}

CycElem CyclotomicContext::reduce(std::span<const BigInt> poly) const {
    const auto d = static_cast<std::size_t>(order());
    Poly folded(std::max(d, static_cast<std::size_t>(phi())), 0);
    // x^d == 1 modulo Phi_d, so fold exponents first.
    for (std::size_t i = 0; i < poly.size(); ++i)
        if (poly[i] != 0) folded[i % d] += poly[i];
    reduce_in_place(folded, min_poly());
    return CycElem{d, std::move(folded)};
}

CycElem CyclotomicContext::reduce(std::span<const std::int64_t> poly) const {
    Poly p(poly.begin(), poly.end());
    return reduce(std::span<const BigInt>(p));
}

void CyclotomicContext::check(const CycElem& a) const {
    if (a.order != static_cast<std::uint64_t>(order()) ||
        a.coeffs.size() != static_cast<std::size_t>(phi()))
        throw ContextMismatch("element of Z[zeta_" + std::to_string(a.order) +
                              "] used in Z[zeta_" + std::to_string(order()) + "]");
}

CycElem CyclotomicContext::add(const CycElem& a, const CycElem& b) const {
    check(a);
    check(b);
    CycElem r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] += b.coeffs[i];
    return r;
}

CycElem CyclotomicContext::subtract(const CycElem& a, const CycElem& b) const {
    check(a);
    check(b);
    CycElem r = a;
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) r.coeffs[i] -= b.coeffs[i];
    return r;
}

CycElem CyclotomicContext::negate(const CycElem& a) const {
    check(a);
    CycElem r = a;
    for (auto& c : r.coeffs) c = -c;
    return r;
}

CycElem CyclotomicContext::scale(const CycElem& a, const BigInt& s) const {
    check(a);
    CycElem r = a;
    for (auto& c : r.coeffs) c *= s;
    return r;
}

CycElem CyclotomicContext::multiply(const CycElem& a, const CycElem& b) const {
    check(a);
    check(b);
    const std::size_t n = a.coeffs.size();
    Poly prod(2 * n - 1, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (std::size_t j = 0; j < n; ++j) prod[i + j] += a.coeffs[i] * b.coeffs[j];
    }
    return reduce(std::span<const BigInt>(prod));
}

CycElem CyclotomicContext::power(const CycElem& a, std::uint64_t k) const {
    check(a);
    CycElem result = one();
    CycElem base = a;
    while (k) {
        if (k & 1) result = multiply(result, base);
        k >>= 1;
        if (k) base = multiply(base, base);
    }
    return result;
}

CycElem CyclotomicContext::conjugate(const CycElem& a) const {
    check(a);
    const auto d = static_cast<std::size_t>(order());
    Poly p(std::max(d, a.coeffs.size()), 0);
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) p[(d - i) % d] += a.coeffs[i];
    return reduce(std::span<const BigInt>(p));
}

Classification CyclotomicContext::classify(const CycElem& a) const {
    check(a);
    Classification c;
    c.is_real = conjugate(a) == a;
    c.is_rational = std::all_of(a.coeffs.begin() + 1, a.coeffs.end(),
                                [](const BigInt& v) { return v == 0; });
    if (c.is_rational) c.rational_value = a.coeffs[0];
    return c;
}

std::complex<double> CyclotomicContext::to_complex(const CycElem& a) const {
    check(a);
    const double d = static_cast<double>(order());
    std::complex<double> z{0.0, 0.0};
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] == 0) continue;
        const double angle = -2.0 * std::numbers::pi * static_cast<double>(i) / d;
        z += a.coeffs[i].convert_to<double>() * std::polar(1.0, angle);
    }
    return z;
}

CycRat CyclotomicContext::make_rat(CycElem num, BigInt den) const {
    check(num);
    if (den == 0) throw std::domain_error("CycRat with zero denominator");
    if (den < 0) {
        den = -den;
        for (auto& c : num.coeffs) c = -c;
    }
    BigInt g = den;
    for (const auto& c : num.coeffs) {
        if (g == 1) break;
        if (c != 0) g = boost::multiprecision::gcd(g, c);
    }
    if (num.is_zero()) g = den;
    if (g != 1) {
        for (auto& c : num.coeffs) c /= g;
        den /= g;
    }
    return CycRat{std::move(num), std::move(den)};
}

CycRat CyclotomicContext::add(const CycRat& a, const CycRat& b) const {
    return make_rat(add(scale(a.num, b.den), scale(b.num, a.den)), a.den * b.den);
}

CycRat CyclotomicContext::subtract(const CycRat& a, const CycRat& b) const {
    return make_rat(subtract(scale(a.num, b.den), scale(b.num, a.den)), a.den * b.den);
}

CycRat CyclotomicContext::multiply(const CycRat& a, const CycRat& b) const {
    return make_rat(multiply(a.num, b.num), a.den * b.den);
}

CycRat CyclotomicContext::divide(const CycRat& a, const BigInt& s) const {
    return make_rat(a.num, a.den * s);
}

CycRat CyclotomicContext::conjugate(const CycRat& a) const {
    return CycRat{conjugate(a.num), a.den};
}

Classification CyclotomicContext::classify(const CycRat& a) const {
    Classification c = classify(a.num);
    // A rational_value is only meaningful for integral elements; see rational_value().
    if (c.is_rational && a.den != 1) c.rational_value.reset();
    return c;
}

std::optional<BigRational> CyclotomicContext::rational_value(const CycRat& a) const {
    const Classification c = classify(a.num);
    if (!c.is_rational) return std::nullopt;
    return BigRational(a.num.coeffs[0], a.den);
}

std::complex<double> CyclotomicContext::to_complex(const CycRat& a) const {
    check(a.num);
    const double d = static_cast<double>(order());
    std::complex<double> z{0.0, 0.0};
    for (std::size_t i = 0; i < a.num.coeffs.size(); ++i) {
        if (a.num.coeffs[i] == 0) continue;
        const double c = BigRational(a.num.coeffs[i], a.den).convert_to<double>();
        z += c * std::polar(1.0, -2.0 * std::numbers::pi * static_cast<double>(i) / d);
    }
    return z;
}

std::span<const std::int64_t> CyclotomicContext::small_power_table() const {
    return data_->small_powers;
}

}  // namespace cyclosum
