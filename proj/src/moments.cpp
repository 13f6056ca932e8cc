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

#include "cyclosum/moments.hpp"

#include <stdexcept>
#include <string>

#include "cyclosum/errors.hpp"

namespace cyclosum {

CycRat expectation(const CyclotomicContext& ctx, const AtomMap& atoms, const BigInt& denominator,
                   const std::function<CycElem(const CycElem&)>& f) {
    CycElem acc = ctx.zero();
    for (const auto& [z, weight] : atoms) acc = ctx.add(acc, ctx.scale(f(z), weight));
    return ctx.make_rat(std::move(acc), denominator);
}

MomentReport moment_of_law(const CyclotomicContext& ctx, const AtomMap& atoms, const BigInt& denominator,
                           std::uint64_t k) {
    if (k == 0) throw UsageError("moment order must be >= 1");
    MomentReport r;
    r.k = k;
    r.value = expectation(ctx, atoms, denominator, [&](const CycElem& z) { return ctx.power(z, k); });
    const Classification c = ctx.classify(r.value);
    r.is_real = c.is_real;
    r.is_rational = c.is_rational;
    r.predicted_zero = k % static_cast<std::uint64_t>(ctx.order()) != 0;
    r.numeric = ctx.to_complex(r.value);
    return r;
}

BigRational variance_of_law(const CyclotomicContext& ctx, const AtomMap& atoms, const BigInt& denominator) {
    const CycRat second =
        expectation(ctx, atoms, denominator, [&](const CycElem& z) { return ctx.multiply(z, ctx.conjugate(z)); });
    const CycRat mean = expectation(ctx, atoms, denominator, [](const CycElem& z) { return z; });
    const CycRat var = ctx.subtract(second, ctx.multiply(mean, ctx.conjugate(mean)));
    auto q = ctx.rational_value(var);
    if (!q) throw std::logic_error("variance is not rational");
    return *q;
}

MomentReport moment(const ExactPMF& pmf, std::uint64_t k) {
    return moment_of_law(pmf.ctx, pmf.entries, pmf.denominator, k);
}

BigRational variance(const ExactPMF& pmf) { return variance_of_law(pmf.ctx, pmf.entries, pmf.denominator); }

CycRat component_moments(const ExactPMF& pmf, unsigned a, unsigned b) {
    if (a + b == 0) throw UsageError("component_moments: a + b must be >= 1");
    const auto& ctx = pmf.ctx;
    return expectation(ctx, pmf.entries, pmf.denominator, [&](const CycElem& z) {
        const CycElem zc = ctx.conjugate(z);
        return ctx.multiply(ctx.power(ctx.add(z, zc), a), ctx.power(ctx.subtract(z, zc), b));
    });
}

CycRat componentwise_square_expectation(const ExactPMF& pmf) {
    // With u = 2U and v = 2jV:  E[U^2] = E[u^2]/4,  E[V^2] = -E[v^2]/4,
    // 2j E[UV] = E[uv]/2, so the total is (E[u^2] - E[v^2] - 2 E[uv]) / 4.
    const auto& ctx = pmf.ctx;
    const CycRat uu = component_moments(pmf, 2, 0);
    const CycRat vv = component_moments(pmf, 0, 2);
    const CycRat uv = component_moments(pmf, 1, 1);
    const CycRat two_uv{ctx.scale(uv.num, 2), uv.den};
    return ctx.divide(ctx.subtract(ctx.subtract(uu, vv), two_uv), 4);
}

BigInt power_sum(const CyclotomicContext& ctx, std::uint64_t n) {
    if (n == 0) throw UsageError("power_sum: n must be >= 1");
    const auto d = static_cast<std::uint64_t>(ctx.order());
    CycElem acc = ctx.zero();
    for (std::int64_t k = 1; k <= ctx.N(); ++k) {
        // (w^k)^n = zeta^(e_k * n mod d)
        const auto e = static_cast<std::uint64_t>(ctx.exponent_of(k));
        acc = ctx.add(acc, ctx.zeta_power(static_cast<std::int64_t>((e % d) * (n % d) % d)));
    }
    const Classification c = ctx.classify(acc);
    if (!c.is_rational) throw std::logic_error("power sum is not rational");
    return *c.rational_value;
}

std::vector<CycRat> elementary_symmetric_sequence(const CyclotomicContext& ctx, std::uint64_t n_max) {
    std::vector<BigInt> p(n_max + 1, 0);
    for (std::uint64_t i = 1; i <= n_max; ++i) p[i] = power_sum(ctx, i);
    std::vector<CycRat> sigma;
    sigma.reserve(n_max + 1);
    sigma.push_back(ctx.make_rat(ctx.one(), 1));
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        CycRat acc = ctx.make_rat(ctx.zero(), 1);
        for (std::uint64_t i = 1; i <= n; ++i) {
            const BigInt sign = (i % 2 == 1) ? 1 : -1;
            const CycRat term{ctx.scale(sigma[n - i].num, sign * p[i]), sigma[n - i].den};
            acc = ctx.add(acc, term);
        }
        sigma.push_back(ctx.divide(acc, BigInt(n)));
    }
    return sigma;
}

CycRat elementary_symmetric(const CyclotomicContext& ctx, std::uint64_t n) {
    if (n < 1 || n > static_cast<std::uint64_t>(ctx.N()))
        throw UsageError("elementary_symmetric: n must lie in [1, N] (got " + std::to_string(n) + ")");
    return elementary_symmetric_sequence(ctx, n).back();
}

}  // namespace cyclosum
