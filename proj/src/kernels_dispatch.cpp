// Copyright 2026 The Duality Games Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <atomic>
#include <cstdlib>
#include <string_view>

#include "duality/kernels.hpp"

namespace duality::kernels {

#if defined(DUALITY_HAVE_AVX2)
const KernelTable &avx2_table_unchecked();
#endif

const KernelTable *avx2_table() {
#if defined(DUALITY_HAVE_AVX2)
    static const bool supported = [] {
        __builtin_cpu_init();
        return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    }();
    if (supported) {
        return &avx2_table_unchecked();
    }
#endif
    return nullptr;
}

namespace {

const KernelTable *initial_table() {
    const char *env = std::getenv("DUALITY_KERNELS");
    const std::string_view forced = env != nullptr ? env : "";
    if (forced == "scalar") {
        return &scalar_table();
    }
    if (const KernelTable *simd = avx2_table()) {
        return simd;
    }
    return &scalar_table();
}

std::atomic<const KernelTable *> &slot() {
    static std::atomic<const KernelTable *> current{initial_table()};
    return current;
}

} // namespace

const KernelTable &active() {
    return *slot().load(std::memory_order_acquire);
}

void set_active(const KernelTable &table) {
    slot().store(&table, std::memory_order_release);
}

} // namespace duality::kernels
