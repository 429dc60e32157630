#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "gtf/simd/kernels.hpp"

namespace gtf::simd {

#if !defined(GTF_HAVE_AVX2)
const KernelTable* avx2_kernels() { return nullptr; }
#endif

namespace {

bool cpu_has_avx2() {
#if defined(GTF_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable* initial_table() {
    if (const char* env = std::getenv("GTF_SIMD")) {
        const std::string want(env);
        if (want == "scalar") return &scalar_kernels();
        if (want == "avx2" && cpu_has_avx2()) return avx2_kernels();
    }
    return cpu_has_avx2() ? avx2_kernels() : &scalar_kernels();
}

std::atomic<const KernelTable*>& active() {
    static std::atomic<const KernelTable*> table{initial_table()};
    return table;
}

}  // namespace

bool backend_available(Backend b) {
    switch (b) {
        case Backend::scalar:
            return true;
        case Backend::avx2:
            return cpu_has_avx2();
    }
    return false;
}

const KernelTable& kernels() { return *active().load(std::memory_order_acquire); }

const KernelTable& kernels(Backend b) {
    if (!backend_available(b)) throw std::runtime_error("SIMD backend not available on this CPU/build");
    return b == Backend::scalar ? scalar_kernels() : *avx2_kernels();
}

void select_backend(Backend b) { active().store(&kernels(b), std::memory_order_release); }

Backend active_backend() { return kernels().backend; }

}  // namespace gtf::simd
