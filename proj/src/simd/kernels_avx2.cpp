// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.

#include <immintrin.h>

#include <algorithm>
#include <cmath>

#include "gtf/simd/kernels.hpp"

namespace gtf::simd {

namespace {

// Two interleaved complex numbers per register: [re0, im0, re1, im1].
inline __m256d cmul_by(__m256d x, __m256d alpha_re, __m256d alpha_im_signed) {
    const __m256d swapped = _mm256_permute_pd(x, 0b0101);
    return _mm256_fmadd_pd(alpha_re, x, _mm256_mul_pd(alpha_im_signed, swapped));
}

void caxpy_avx2(cplx* dst, cplx alpha, const cplx* x, std::size_t len) {
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_setr_pd(-alpha.imag(), alpha.imag(), -alpha.imag(), alpha.imag());
    auto* d = reinterpret_cast<double*>(dst);
    const auto* s = reinterpret_cast<const double*>(x);
    std::size_t k = 0;
    for (; k + 2 <= len; k += 2) {
        const __m256d xv = _mm256_loadu_pd(s + 2 * k);
        const __m256d dv = _mm256_loadu_pd(d + 2 * k);
        _mm256_storeu_pd(d + 2 * k, _mm256_add_pd(dv, cmul_by(xv, ar, ai)));
    }
    for (; k < len; ++k) {
        const double xr = x[k].real();
        const double xi = x[k].imag();
        dst[k] = {dst[k].real() + (alpha.real() * xr - alpha.imag() * xi),
                  dst[k].imag() + (alpha.real() * xi + alpha.imag() * xr)};
    }
}

void cwaxpy_avx2(cplx* dst, const cplx* a, cplx alpha, const cplx* b, std::size_t len) {
    const __m256d ar = _mm256_set1_pd(alpha.real());
    const __m256d ai = _mm256_setr_pd(-alpha.imag(), alpha.imag(), -alpha.imag(), alpha.imag());
    auto* d = reinterpret_cast<double*>(dst);
    const auto* av = reinterpret_cast<const double*>(a);
    const auto* bv = reinterpret_cast<const double*>(b);
    std::size_t k = 0;
    for (; k + 2 <= len; k += 2) {
        const __m256d x = _mm256_loadu_pd(bv + 2 * k);
        const __m256d base = _mm256_loadu_pd(av + 2 * k);
        _mm256_storeu_pd(d + 2 * k, _mm256_add_pd(base, cmul_by(x, ar, ai)));
    }
    for (; k < len; ++k) {
        const double br = b[k].real();
        const double bi = b[k].imag();
        dst[k] = {a[k].real() + (alpha.real() * br - alpha.imag() * bi),
                  a[k].imag() + (alpha.real() * bi + alpha.imag() * br)};
    }
}

double max_abs_diff_avx2(const cplx* a, const cplx* b, std::size_t len) {
    const auto* av = reinterpret_cast<const double*>(a);
    const auto* bv = reinterpret_cast<const double*>(b);
    __m256d worst = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 2 <= len; k += 2) {
        const __m256d diff = _mm256_sub_pd(_mm256_loadu_pd(av + 2 * k), _mm256_loadu_pd(bv + 2 * k));
        const __m256d sq = _mm256_mul_pd(diff, diff);
        // [re0²+im0², ., re1²+im1², .]
        const __m256d norm2 = _mm256_hadd_pd(sq, sq);
        worst = _mm256_max_pd(worst, norm2);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, worst);
    double best2 = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
    double out = std::sqrt(best2);
    for (; k < len; ++k) out = std::max(out, std::abs(a[k] - b[k]));
    return out;
}

}  // namespace

const KernelTable* avx2_kernels() {
    static const KernelTable table{Backend::avx2, "avx2", caxpy_avx2, cwaxpy_avx2, max_abs_diff_avx2};
    return &table;
}

}  // namespace gtf::simd
