#include "gtf/dense_series.hpp"

namespace gtf {

DenseSeries::DenseSeries(int n, int order) : n_(n), order_(order) {
    if (n < 1 || order < 0) throw ContractError("invalid dense series shape");
    std::size_t p = 1;
    std::size_t off = 0;
    for (int d = 0; d <= order; ++d) {
        powers_.push_back(p);
        offsets_.push_back(off);
        off += p;
        p *= static_cast<std::size_t>(n);
    }
    data_.assign(off, Complex{});
}

DenseSeries DenseSeries::unit(int n, int order) {
    DenseSeries s(n, order);
    s.data_[0] = 1.0;
    return s;
}

std::size_t DenseSeries::index_of(Word w) const {
    std::size_t idx = 0;
    for (int k = 0; k < w.degree(); ++k) idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>(w[k] - 1);
    return level_offset(w.degree()) + idx;
}

Word DenseSeries::word_at(std::size_t index) const {
    int d = 0;
    while (d < order_ && index >= offsets_[static_cast<std::size_t>(d + 1)]) ++d;
    std::size_t rel = index - offsets_[static_cast<std::size_t>(d)];
    std::vector<int> letters(static_cast<std::size_t>(d));
    for (int k = d - 1; k >= 0; --k) {
        letters[static_cast<std::size_t>(k)] = static_cast<int>(rel % static_cast<std::size_t>(n_)) + 1;
        rel /= static_cast<std::size_t>(n_);
    }
    return Word::from_letters(letters);
}

DenseSeries DenseSeries::from_sparse(const FreeSeries<Complex>& s) {
    DenseSeries out(s.generators(), s.order());
    for (const auto& [w, c] : s.terms()) out.data_[out.index_of(w)] = c;
    return out;
}

FreeSeries<Complex> DenseSeries::to_sparse() const {
    FreeSeries<Complex>::Builder b(n_, order_);
    for (int d = 0; d <= order_; ++d) {
        const Complex* lv = level(d);
        for (std::size_t k = 0; k < level_size(d); ++k)
            if (lv[k] != Complex{}) b.add(word_at(level_offset(d) + k), lv[k]);
    }
    return std::move(b).build();
}

void DenseSeries::set_zero() { std::fill(data_.begin(), data_.end(), Complex{}); }

DenseSeries mul(const DenseSeries& a, const DenseSeries& b) {
    if (!a.same_shape(b)) throw ContractError("dense series shape mismatch");
    const auto& k = simd::kernels();
    DenseSeries out(a.generators(), a.order());
    for (int d = 0; d <= a.order(); ++d) {
        Complex* dst = out.level(d);
        for (int p = 0; p <= d; ++p) {
            const int q = d - p;
            const Complex* lhs = a.level(p);
            const Complex* rhs = b.level(q);
            const std::size_t block = b.level_size(q);
            for (std::size_t i = 0; i < a.level_size(p); ++i) {
                if (lhs[i] == Complex{}) continue;
                k.caxpy(dst + i * block, lhs[i], rhs, block);
            }
        }
    }
    return out;
}

void axpy_into(DenseSeries& out, const DenseSeries& a, Complex alpha, const DenseSeries& b) {
    if (!a.same_shape(b) || !out.same_shape(a)) throw ContractError("dense series shape mismatch");
    simd::kernels().cwaxpy(out.data().data(), a.data().data(), alpha, b.data().data(), a.size());
}

double max_abs_diff(const DenseSeries& a, const DenseSeries& b) {
    if (!a.same_shape(b)) throw ContractError("dense series shape mismatch");
    return simd::kernels().max_abs_diff(a.data().data(), b.data().data(), a.size());
}

void left_multiply(const LowDegreeElement& omega, const DenseSeries& h, DenseSeries& out) {
    const auto& k = simd::kernels();
    const int n = h.generators();
    out.set_zero();
    for (int d = 1; d <= h.order(); ++d) {
        const std::size_t block1 = h.level_size(d - 1);
        for (int i = 0; i < n; ++i) {
            const Complex c = omega.linear.empty() ? Complex{} : omega.linear[static_cast<std::size_t>(i)];
            if (c != Complex{}) k.caxpy(out.level(d) + static_cast<std::size_t>(i) * block1, c, h.level(d - 1), block1);
        }
        if (d >= 2 && !omega.quadratic.empty()) {
            const std::size_t block2 = h.level_size(d - 2);
            for (int ij = 0; ij < n * n; ++ij) {
                const Complex c = omega.quadratic[static_cast<std::size_t>(ij)];
                if (c != Complex{})
                    k.caxpy(out.level(d) + static_cast<std::size_t>(ij) * block2, c, h.level(d - 2), block2);
            }
        }
    }
}

DenseSeries exp_times(const LowDegreeElement& omega, const DenseSeries& h) {
    // S_N = h, S_{k-1} = h + ω S_k / k, result S_0.
    DenseSeries acc = h;
    DenseSeries tmp(h.generators(), h.order());
    for (int k = h.order(); k >= 1; --k) {
        left_multiply(omega, acc, tmp);
        axpy_into(acc, h, Complex(1.0 / k, 0.0), tmp);
    }
    return acc;
}

}  // namespace gtf
