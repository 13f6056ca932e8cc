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

#include <complex>
#include <cstring>
#include <random>

#include "doctest.h"

#include "cyclosum/kernels.hpp"

using namespace cyclosum::kernels;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_SUITE("kernels") {

TEST_CASE("scalar is always available and listed first") {
    const auto all = available();
    REQUIRE_FALSE(all.empty());
    CHECK(all.front()->isa == Isa::Scalar);
    CHECK(&scalar_kernels() == all.front());
    CHECK(select(Isa::Scalar));
    CHECK(active().isa == Isa::Scalar);
    select(all.back()->isa);
}

TEST_CASE("root sums are bit-identical across variants") {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> val(-1.0, 1.0);
    const std::size_t table = 97;
    std::vector<double> re(table), im(table);
    for (std::size_t i = 0; i < table; ++i) {
        re[i] = val(rng);
        im[i] = val(rng) * 1e-3;
    }
    for (std::size_t n = 0; n <= 131; ++n) {
        std::vector<std::uint32_t> exps(n);
        for (auto& e : exps) e = static_cast<std::uint32_t>(rng() % table);
        const ComplexSum ref = scalar_kernels().root_sum(exps.data(), n, re.data(), im.data());
        double naive_re = 0;
        for (auto e : exps) naive_re += re[e];
        CHECK(ref.re == doctest::Approx(naive_re).epsilon(1e-12));
        for (const KernelSet* k : available()) {
            const ComplexSum got = k->root_sum(exps.data(), n, re.data(), im.data());
            CAPTURE(k->name);
            CAPTURE(n);
            CHECK(same_bits(got.re, ref.re));
            CHECK(same_bits(got.im, ref.im));
        }
    }
}

TEST_CASE("conjugate dot products are bit-identical across variants") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> val(-2.0, 2.0);
    for (std::size_t n = 0; n <= 70; ++n) {
        std::vector<double> ar(n), ai(n), br(n), bi(n);
        for (std::size_t i = 0; i < n; ++i) {
            ar[i] = val(rng);
            ai[i] = val(rng);
            br[i] = val(rng);
            bi[i] = val(rng);
        }
        const ComplexSum ref = scalar_kernels().conj_dot(ar.data(), ai.data(), br.data(), bi.data(), n);
        std::complex<double> naive{0, 0};
        for (std::size_t i = 0; i < n; ++i) naive += std::conj(std::complex<double>(ar[i], ai[i])) * std::complex<double>(br[i], bi[i]);
        CHECK(ref.re == doctest::Approx(naive.real()).epsilon(1e-12).scale(10));
        CHECK(ref.im == doctest::Approx(naive.imag()).epsilon(1e-12).scale(10));
        for (const KernelSet* k : available()) {
            const ComplexSum got = k->conj_dot(ar.data(), ai.data(), br.data(), bi.data(), n);
            CAPTURE(k->name);
            CAPTURE(n);
            CHECK(same_bits(got.re, ref.re));
            CHECK(same_bits(got.im, ref.im));
        }
    }
}

}
