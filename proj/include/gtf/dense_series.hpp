#pragma once

// Dense complex truncated series: every word of degree ≤ N has a slot, level
// d stored contiguously in base-n order. Used on the numeric hot paths
// (holonomy, ODE transport) where supports are full anyway.

#include <span>
#include <vector>

#include "gtf/free_series.hpp"
#include "gtf/simd/kernels.hpp"

namespace gtf {

class DenseSeries {
public:
    DenseSeries(int n, int order);
    static DenseSeries unit(int n, int order);
    static DenseSeries from_sparse(const FreeSeries<Complex>& s);

    FreeSeries<Complex> to_sparse() const;

    int generators() const noexcept { return n_; }
    int order() const noexcept { return order_; }
    std::size_t size() const noexcept { return data_.size(); }
    std::size_t level_offset(int d) const noexcept { return offsets_[static_cast<std::size_t>(d)]; }
    std::size_t level_size(int d) const noexcept { return powers_[static_cast<std::size_t>(d)]; }
    std::size_t index_of(Word w) const;
    Word word_at(std::size_t index) const;

    std::span<Complex> data() noexcept { return data_; }
    std::span<const Complex> data() const noexcept { return data_; }
    Complex* level(int d) noexcept { return data_.data() + level_offset(d); }
    const Complex* level(int d) const noexcept { return data_.data() + level_offset(d); }

    void set_zero();
    bool same_shape(const DenseSeries& o) const noexcept { return n_ == o.n_ && order_ == o.order_; }

private:
    int n_;
    int order_;
    std::vector<std::size_t> powers_;
    std::vector<std::size_t> offsets_;
    std::vector<Complex> data_;
};

/// Truncated concatenation product.
DenseSeries mul(const DenseSeries& a, const DenseSeries& b);
/// out = a + alpha * b (shapes must agree).
void axpy_into(DenseSeries& out, const DenseSeries& a, Complex alpha, const DenseSeries& b);
double max_abs_diff(const DenseSeries& a, const DenseSeries& b);

/// A Lie-type element with components only in degrees 1 and 2:
/// Σ linear[i] a_i + Σ quadratic[i*n+j] a_i a_j.
struct LowDegreeElement {
    std::vector<Complex> linear;
    std::vector<Complex> quadratic;
};

/// out = ω · h.
void left_multiply(const LowDegreeElement& omega, const DenseSeries& h, DenseSeries& out);
/// exp(ω) · h, by Horner's scheme on the truncated exponential.
DenseSeries exp_times(const LowDegreeElement& omega, const DenseSeries& h);

}  // namespace gtf
