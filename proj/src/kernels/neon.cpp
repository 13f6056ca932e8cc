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

#include <arm_neon.h>

#include "cyclosum/kernels.hpp"

// Two float64x2 accumulators stand in for the four reference lanes:
// lo holds lanes 0-1, hi holds lanes 2-3.

namespace cyclosum::kernels::detail {

namespace {

template <class Tail>
ComplexSum finish(float64x2_t re_lo, float64x2_t re_hi, float64x2_t im_lo, float64x2_t im_hi, std::size_t done,
                  std::size_t n, Tail&& tail) {
    double r[4];
    double m[4];
    vst1q_f64(r, re_lo);
    vst1q_f64(r + 2, re_hi);
    vst1q_f64(m, im_lo);
    vst1q_f64(m + 2, im_hi);
    for (std::size_t i = done; i < n; ++i) tail(i, r[i % 4], m[i % 4]);
    return {(r[0] + r[1]) + (r[2] + r[3]), (m[0] + m[1]) + (m[2] + m[3])};
}

}  // namespace

ComplexSum root_sum_neon(const std::uint32_t* exps, std::size_t n, const double* re_table,
                         const double* im_table) {
    float64x2_t re_lo = vdupq_n_f64(0.0), re_hi = vdupq_n_f64(0.0);
    float64x2_t im_lo = vdupq_n_f64(0.0), im_hi = vdupq_n_f64(0.0);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const double r[4] = {re_table[exps[i]], re_table[exps[i + 1]], re_table[exps[i + 2]], re_table[exps[i + 3]]};
        const double m[4] = {im_table[exps[i]], im_table[exps[i + 1]], im_table[exps[i + 2]], im_table[exps[i + 3]]};
        re_lo = vaddq_f64(re_lo, vld1q_f64(r));
        re_hi = vaddq_f64(re_hi, vld1q_f64(r + 2));
        im_lo = vaddq_f64(im_lo, vld1q_f64(m));
        im_hi = vaddq_f64(im_hi, vld1q_f64(m + 2));
    }
    return finish(re_lo, re_hi, im_lo, im_hi, i, n, [&](std::size_t k, double& r, double& m) {
        r += re_table[exps[k]];
        m += im_table[exps[k]];
    });
}

ComplexSum conj_dot_neon(const double* a_re, const double* a_im, const double* b_re, const double* b_im,
                         std::size_t n) {
    float64x2_t re[2] = {vdupq_n_f64(0.0), vdupq_n_f64(0.0)};
    float64x2_t im[2] = {vdupq_n_f64(0.0), vdupq_n_f64(0.0)};
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        for (std::size_t h = 0; h < 2; ++h) {
            const std::size_t o = i + 2 * h;
            const float64x2_t ar = vld1q_f64(a_re + o);
            const float64x2_t ai = vld1q_f64(a_im + o);
            const float64x2_t br = vld1q_f64(b_re + o);
            const float64x2_t bi = vld1q_f64(b_im + o);
            re[h] = vaddq_f64(re[h], vmulq_f64(ar, br));
            re[h] = vaddq_f64(re[h], vmulq_f64(ai, bi));
            im[h] = vaddq_f64(im[h], vmulq_f64(ar, bi));
            im[h] = vsubq_f64(im[h], vmulq_f64(ai, br));
        }
    }
    return finish(re[0], re[1], im[0], im[1], i, n, [&](std::size_t k, double& r, double& m) {
        r = r + a_re[k] * b_re[k];
        r = r + a_im[k] * b_im[k];
        m = m + a_re[k] * b_im[k];
        m = m - a_im[k] * b_re[k];
    });
}

}  // namespace cyclosum::kernels::detail
