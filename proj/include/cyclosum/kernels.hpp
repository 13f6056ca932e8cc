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

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

// Floating-point inner loops with a scalar reference and SIMD variants.
//
// Every variant accumulates in four lanes (element i goes to lane i % 4) and
// combines them as (l0 + l1) + (l2 + l3), with no fused multiply-add. The
// scalar reference follows the same order, so all variants are bit-identical.

namespace cyclosum::kernels {

struct ComplexSum {
    double re = 0.0;
    double im = 0.0;
};

/// sum_i (re_table[exps[i]], im_table[exps[i]])
using RootSumFn = ComplexSum (*)(const std::uint32_t* exps, std::size_t n, const double* re_table,
                                 const double* im_table);
/// sum_i conj(a_i) * b_i over split real/imaginary arrays.
using ConjDotFn = ComplexSum (*)(const double* a_re, const double* a_im, const double* b_re,
                                 const double* b_im, std::size_t n);

enum class Isa { Scalar, Avx2, Neon };

struct KernelSet {
    Isa isa;
    std::string_view name;
    RootSumFn root_sum;
    ConjDotFn conj_dot;
};

const KernelSet& scalar_kernels();

/// Variants compiled in and supported by the running CPU, scalar first.
std::vector<const KernelSet*> available();

/// The dispatched set: best available unless CYCLOSUM_SIMD=scalar|avx2|neon
/// says otherwise (falls back to scalar when the request is unavailable).
const KernelSet& active();

/// Overrides the dispatch; returns false when `isa` is unavailable.
bool select(Isa isa);

namespace detail {
ComplexSum root_sum_scalar(const std::uint32_t*, std::size_t, const double*, const double*);
ComplexSum conj_dot_scalar(const double*, const double*, const double*, const double*, std::size_t);
#if defined(CYCLOSUM_HAVE_AVX2)
ComplexSum root_sum_avx2(const std::uint32_t*, std::size_t, const double*, const double*);
ComplexSum conj_dot_avx2(const double*, const double*, const double*, const double*, std::size_t);
#endif
#if defined(CYCLOSUM_HAVE_NEON)
ComplexSum root_sum_neon(const std::uint32_t*, std::size_t, const double*, const double*);
ComplexSum conj_dot_neon(const double*, const double*, const double*, const double*, std::size_t);
#endif
}  // namespace detail

}  // namespace cyclosum::kernels
