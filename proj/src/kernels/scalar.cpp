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

#include "cyclosum/kernels.hpp"

namespace cyclosum::kernels::detail {

ComplexSum root_sum_scalar(const std::uint32_t* exps, std::size_t n, const double* re_table,
                           const double* im_table) {
    double re[4] = {0.0, 0.0, 0.0, 0.0};
    double im[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        re[i % 4] += re_table[exps[i]];
        im[i % 4] += im_table[exps[i]];
    }
    return {(re[0] + re[1]) + (re[2] + re[3]), (im[0] + im[1]) + (im[2] + im[3])};
}

ComplexSum conj_dot_scalar(const double* a_re, const double* a_im, const double* b_re, const double* b_im,
                           std::size_t n) {
    double re[4] = {0.0, 0.0, 0.0, 0.0};
    double im[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t j = i % 4;
        re[j] = re[j] + a_re[i] * b_re[i];
        re[j] = re[j] + a_im[i] * b_im[i];
        im[j] = im[j] + a_re[i] * b_im[i];
        im[j] = im[j] - a_im[i] * b_re[i];
    }
    return {(re[0] + re[1]) + (re[2] + re[3]), (im[0] + im[1]) + (im[2] + im[3])};
}

}  // namespace cyclosum::kernels::detail
