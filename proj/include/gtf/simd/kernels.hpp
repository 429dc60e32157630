#pragma once

// Inner loops of dense complex series arithmetic. Each backend implements
// the same table; the scalar table is the reference the others are tested
// against. The active backend is chosen once at startup from CPU features
// and may be overridden with GTF_SIMD=scalar|avx2 or select_backend().

#include <complex>
#include <cstddef>
#include <string_view>

namespace gtf::simd {

using cplx = std::complex<double>;

enum class Backend { scalar, avx2 };

struct KernelTable {
    Backend backend;
    std::string_view name;
    /// dst[k] += alpha * x[k]
    void (*caxpy)(cplx* dst, cplx alpha, const cplx* x, std::size_t len);
    /// dst[k] = a[k] + alpha * b[k]
    void (*cwaxpy)(cplx* dst, const cplx* a, cplx alpha, const cplx* b, std::size_t len);
    /// max_k |a[k] - b[k]|
    double (*max_abs_diff)(const cplx* a, const cplx* b, std::size_t len);
};

const KernelTable& scalar_kernels();
/// Null when the binary was built without AVX2 support.
const KernelTable* avx2_kernels();

bool backend_available(Backend b);
const KernelTable& kernels();
const KernelTable& kernels(Backend b);
void select_backend(Backend b);
Backend active_backend();

}  // namespace gtf::simd
