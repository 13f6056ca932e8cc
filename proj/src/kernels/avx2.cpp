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

#include <immintrin.h>

#include "cyclosum/kernels.hpp"

namespace cyclosum::kernels::detail {

namespace {

ComplexSum finish(__m256d re, __m256d im, std::size_t done, std::size_t n, const auto& tail) {
    alignas(32) double r[4];
    alignas(32) double m[4];
    _mm256_store_pd(r, re);
    _mm256_store_pd(m, im);
    for (std::size_t i = done; i < n; ++i) tail(i, r[i % 4], m[i % 4]);
    return {(r[0] + r[1]) + (r[2] + r[3]), (m[0] + m[1]) + (m[2] + m[3])};
}

}  // namespace

ComplexSum root_sum_avx2(const std::uint32_t* exps, std::size_t n, const double* re_table,
                         const double* im_table) {
    __m256d re = _mm256_setzero_pd();
    __m256d im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m128i idx = _mm_loadu_si128(reinterpret_cast<const __m128i*>(exps + i));
        re = _mm256_add_pd(re, _mm256_i32gather_pd(re_table, idx, 8));
        im = _mm256_add_pd(im, _mm256_i32gather_pd(im_table, idx, 8));
    }
    return finish(re, im, i, n, [&](std::size_t k, double& r, double& m) {
        r += re_table[exps[k]];
        m += im_table[exps[k]];
    });
}

ComplexSum conj_dot_avx2(const double* a_re, const double* a_im, const double* b_re, const double* b_im,
                         std::size_t n) {
    __m256d re = _mm256_setzero_pd();
    __m256d im = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d ar = _mm256_loadu_pd(a_re + i);
        const __m256d ai = _mm256_loadu_pd(a_im + i);
        const __m256d br = _mm256_loadu_pd(b_re + i);
        const __m256d bi = _mm256_loadu_pd(b_im + i);
        re = _mm256_add_pd(re, _mm256_mul_pd(ar, br));
        re = _mm256_add_pd(re, _mm256_mul_pd(ai, bi));
        im = _mm256_add_pd(im, _mm256_mul_pd(ar, bi));
        im = _mm256_sub_pd(im, _mm256_mul_pd(ai, br));
    }
    return finish(re, im, i, n, [&](std::size_t k, double& r, double& m) {
        r = r + a_re[k] * b_re[k];
        r = r + a_im[k] * b_im[k];
        m = m + a_re[k] * b_im[k];
        m = m - a_im[k] * b_re[k];
    });
}

}  // namespace cyclosum::kernels::detail
