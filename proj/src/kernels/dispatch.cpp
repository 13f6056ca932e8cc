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

#include <atomic>
#include <cstdlib>
#include <string>

#include "cyclosum/kernels.hpp"

namespace cyclosum::kernels {

namespace {

constexpr KernelSet kScalar{Isa::Scalar, "scalar", &detail::root_sum_scalar, &detail::conj_dot_scalar};
#if defined(CYCLOSUM_HAVE_AVX2)
constexpr KernelSet kAvx2{Isa::Avx2, "avx2", &detail::root_sum_avx2, &detail::conj_dot_avx2};
#endif
#if defined(CYCLOSUM_HAVE_NEON)
constexpr KernelSet kNeon{Isa::Neon, "neon", &detail::root_sum_neon, &detail::conj_dot_neon};
#endif

bool cpu_has_avx2() {
#if defined(CYCLOSUM_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const KernelSet* find(Isa isa) {
    for (const KernelSet* k : available())
        if (k->isa == isa) return k;
    return nullptr;
}

const KernelSet* initial() {
    const auto all = available();
    const KernelSet* best = all.back();
    if (const char* env = std::getenv("CYCLOSUM_SIMD")) {
        const std::string want(env);
        if (want == "scalar") return &kScalar;
        for (const KernelSet* k : all)
            if (k->name == want) return k;
        if (want != "auto") return &kScalar;
    }
    return best;
}

std::atomic<const KernelSet*>& slot() {
    static std::atomic<const KernelSet*> current{initial()};
    return current;
}

}  // namespace

const KernelSet& scalar_kernels() { return kScalar; }

std::vector<const KernelSet*> available() {
    std::vector<const KernelSet*> out{&kScalar};
#if defined(CYCLOSUM_HAVE_AVX2)
    if (cpu_has_avx2()) out.push_back(&kAvx2);
#endif
#if defined(CYCLOSUM_HAVE_NEON)
    out.push_back(&kNeon);
#endif
    return out;
}

const KernelSet& active() { return *slot().load(std::memory_order_acquire); }

bool select(Isa isa) {
    const KernelSet* k = find(isa);
    if (!k) return false;
    slot().store(k, std::memory_order_release);
    return true;
}

}  // namespace cyclosum::kernels
