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

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "cyclosum/bigint.hpp"
#include "cyclosum/cyclotomic.hpp"
#include "cyclosum/subset_distribution.hpp"

namespace cyclosum {

struct MomentReport {
    std::uint64_t k = 1;
    CycRat value;
    bool is_real = false;
    bool is_rational = false;
    bool predicted_zero = false;  // d does not divide k
    std::complex<double> numeric;
};

/// sum_z weight(z) * f(z) / denominator, exactly.
CycRat expectation(const CyclotomicContext& ctx, const AtomMap& atoms, const BigInt& denominator,
                   const std::function<CycElem(const CycElem&)>& f);

/// E[Z^k] for a law given as weighted atoms.
MomentReport moment_of_law(const CyclotomicContext& ctx, const AtomMap& atoms, const BigInt& denominator,
                           std::uint64_t k);
/// E|Z|^2 - |E Z|^2; the value must be rational.
BigRational variance_of_law(const CyclotomicContext& ctx, const AtomMap& atoms, const BigInt& denominator);

/// Plain algebraic moment E[X^k].
MomentReport moment(const ExactPMF& pmf, std::uint64_t k);
BigRational variance(const ExactPMF& pmf);

/// E[(2U)^a (2jV)^b], kept in the integral keys z + conj z and z - conj z.
CycRat component_moments(const ExactPMF& pmf, unsigned a, unsigned b);

/// E[U^2] + E[V^2] - 2j E[UV]: the square expectation assembled from the
/// real and imaginary parts (distinct from the algebraic E[X^2]).
CycRat componentwise_square_expectation(const ExactPMF& pmf);

/// p_n = sum_{k=1}^N w^(k n); N when d | n and 0 otherwise.
BigInt power_sum(const CyclotomicContext& ctx, std::uint64_t n);

/// sigma_1..sigma_n of (w, ..., w^N) via the Newton-Girard recurrence
/// n sigma_n = sum_{i=1}^n (-1)^(i-1) sigma_{n-i} p_i. Element 0 is sigma_0 = 1.
std::vector<CycRat> elementary_symmetric_sequence(const CyclotomicContext& ctx, std::uint64_t n_max);
CycRat elementary_symmetric(const CyclotomicContext& ctx, std::uint64_t n);

}  // namespace cyclosum
