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
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "cyclosum/bigint.hpp"

namespace cyclosum {

/// An element of Z[zeta_d], zeta_d = exp(-2*pi*i/d), stored in the reduced
/// power basis {1, zeta, ..., zeta^(phi(d)-1)}. Because the basis is reduced
/// modulo the minimal polynomial of zeta, two elements are equal as complex
/// numbers iff their coefficient vectors are equal.
struct CycElem {
    std::uint64_t order = 1;
    std::vector<BigInt> coeffs;

    bool is_zero() const;

    friend bool operator==(const CycElem&, const CycElem&) = default;
};

/// Lexicographic order on (order, coeffs); used for sorted containers and
/// reproducible output.
bool operator<(const CycElem& a, const CycElem& b);

/// num / den with den > 0 and gcd(den, content(num)) == 1.
struct CycRat {
    CycElem num;
    BigInt den{1};

    bool is_zero() const { return num.is_zero(); }

    friend bool operator==(const CycRat&, const CycRat&) = default;
};

struct Classification {
    bool is_real = false;
    bool is_rational = false;
    std::optional<BigInt> rational_value;
};

/// The ring in which the roots w^n = exp(-2*pi*i*l*n/N) live.
///
/// With g = gcd(N, l) (gcd(N, 0) = N) the root w has multiplicative order
/// d = N / g and w^n = zeta_d^((l*n mod N) / g). Immutable and cheap to copy;
/// copies share the precomputed tables.
class CyclotomicContext {
public:
    CyclotomicContext(std::int64_t N, std::int64_t l);

    std::int64_t N() const { return data_->N; }
    std::int64_t l() const { return data_->l; }
    std::int64_t gcd() const { return data_->g; }
    std::int64_t order() const { return data_->d; }
    std::int64_t phi() const { return data_->phi; }

    /// Monic Phi_d, constant term first, length phi + 1.
    const std::vector<BigInt>& min_poly() const { return data_->min_poly; }

    /// (l*n mod N) / g for n in [1, N].
    std::int64_t exponent_of(std::int64_t n) const;

    CycElem zero() const;
    CycElem one() const;
    CycElem constant(const BigInt& value) const;
    /// zeta^e for any integer e (taken modulo d).
    CycElem zeta_power(std::int64_t e) const;
    /// w^n for n in [1, N].
    CycElem root_power(std::int64_t n) const;
    /// Sum of w^n over the given 1-based indices.
    CycElem subset_sum(std::span<const std::int64_t> indices) const;

    /// Canonical representative of sum_i poly[i] * zeta^i.
    CycElem reduce(std::span<const BigInt> poly) const;
    CycElem reduce(std::span<const std::int64_t> poly) const;

    CycElem add(const CycElem& a, const CycElem& b) const;
    CycElem subtract(const CycElem& a, const CycElem& b) const;
    CycElem negate(const CycElem& a) const;
    CycElem multiply(const CycElem& a, const CycElem& b) const;
    CycElem scale(const CycElem& a, const BigInt& s) const;
    CycElem power(const CycElem& a, std::uint64_t k) const;
    /// Complex conjugation, zeta -> zeta^(d-1).
    CycElem conjugate(const CycElem& a) const;

    Classification classify(const CycElem& a) const;
    std::complex<double> to_complex(const CycElem& a) const;

    // Field-of-fractions helpers.
    CycRat make_rat(CycElem num, BigInt den) const;
    CycRat add(const CycRat& a, const CycRat& b) const;
    CycRat subtract(const CycRat& a, const CycRat& b) const;
    CycRat multiply(const CycRat& a, const CycRat& b) const;
    CycRat divide(const CycRat& a, const BigInt& s) const;
    CycRat conjugate(const CycRat& a) const;
    Classification classify(const CycRat& a) const;
    /// The rational value when a lies in Q.
    std::optional<BigRational> rational_value(const CycRat& a) const;
    std::complex<double> to_complex(const CycRat& a) const;

    /// Reduced zeta^e, e in [0, d), as int64 rows of length phi when every
    /// coefficient fits comfortably; empty otherwise. Used by enumerators.
    std::span<const std::int64_t> small_power_table() const;
    /// Largest |coefficient| in small_power_table().
    std::int64_t small_power_bound() const { return data_->small_bound; }

    void check(const CycElem& a) const;

private:
    struct Data {
        std::int64_t N = 1, l = 0, g = 1, d = 1, phi = 1;
        std::vector<BigInt> min_poly;
        std::vector<CycElem> powers;  // zeta^e reduced, e in [0, d)
        std::vector<std::int64_t> small_powers;
        std::int64_t small_bound = 0;
    };
    std::shared_ptr<const Data> data_;
};

/// Phi_d by exact division of x^d - 1 by Phi_e over proper divisors e of d.
std::vector<BigInt> cyclotomic_polynomial(std::int64_t d);

std::int64_t euler_phi(std::int64_t d);

}  // namespace cyclosum
