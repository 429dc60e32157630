#include <algorithm>
#include <cmath>

#include "gtf/simd/kernels.hpp"

namespace gtf::simd {

namespace {

void caxpy_scalar(cplx* dst, cplx alpha, const cplx* x, std::size_t len) {
    const double ar = alpha.real();
    const double ai = alpha.imag();
    for (std::size_t k = 0; k < len; ++k) {
        const double xr = x[k].real();
        const double xi = x[k].imag();
        dst[k] = {dst[k].real() + (ar * xr - ai * xi), dst[k].imag() + (ar * xi + ai * xr)};
    }
}

void cwaxpy_scalar(cplx* dst, const cplx* a, cplx alpha, const cplx* b, std::size_t len) {
    const double ar = alpha.real();
    const double ai = alpha.imag();
    for (std::size_t k = 0; k < len; ++k) {
        const double br = b[k].real();
        const double bi = b[k].imag();
        dst[k] = {a[k].real() + (ar * br - ai * bi), a[k].imag() + (ar * bi + ai * br)};
    }
}

double max_abs_diff_scalar(const cplx* a, const cplx* b, std::size_t len) {
    double worst = 0.0;
    for (std::size_t k = 0; k < len; ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
    return worst;
}

}  // namespace

const KernelTable& scalar_kernels() {
    static const KernelTable table{Backend::scalar, "scalar", caxpy_scalar, cwaxpy_scalar, max_abs_diff_scalar};
    return table;
}

}  // namespace gtf::simd
