#pragma once

// Canonical sparse coefficient maps shared by every series type: free
// series over linear words, tensor squares, cyclic series and pairs of
// cyclic words. Values are immutable once built; Builder accumulates terms.

#include <algorithm>
#include <cmath>
#include <map>
#include <string>
#include <utility>

#include "gtf/errors.hpp"
#include "gtf/scalar.hpp"

namespace gtf {

template <class K>
concept GradedKey = requires(const K& k) {
    { k.degree() } -> std::convertible_to<int>;
    { k.max_letter() } -> std::convertible_to<int>;
};

template <GradedKey Key, SeriesScalar S>
class SparseSeries {
public:
    using key_type = Key;
    using scalar_type = S;
    using Terms = std::map<Key, S>;

    class Builder {
    public:
        Builder(int n, int order) : n_(n), order_(order) { check_shape(n, order); }

        /// Adds c to the coefficient of k; keys above the truncation order are discarded.
        Builder& add(const Key& k, const S& c) {
            if (k.degree() > order_) return *this;
            if (k.max_letter() > n_)
                throw ContractError("generator index " + std::to_string(k.max_letter()) +
                                    " exceeds generator count " + std::to_string(n_));
            auto [it, inserted] = terms_.try_emplace(k, c);
            if (!inserted) it->second += c;
            return *this;
        }
        Builder& add(const SparseSeries& s, const S& scale) {
            check_compatible(s);
            for (const auto& [k, c] : s.terms()) add(k, c * scale);
            return *this;
        }
        Builder& add(const SparseSeries& s) {
            check_compatible(s);
            for (const auto& [k, c] : s.terms()) add(k, c);
            return *this;
        }
        int generators() const noexcept { return n_; }
        int order() const noexcept { return order_; }

        SparseSeries build() && {
            std::erase_if(terms_, [](const auto& kv) { return ScalarTraits<S>::is_zero(kv.second); });
            return SparseSeries(n_, order_, std::move(terms_));
        }

    private:
        void check_compatible(const SparseSeries& s) const {
            if (s.generators() != n_ || s.order() != order_)
                throw ContractError("series shape mismatch in accumulation");
        }

        int n_;
        int order_;
        Terms terms_;
    };

    SparseSeries(int n, int order) : n_(n), order_(order) { check_shape(n, order); }

    int generators() const noexcept { return n_; }
    int order() const noexcept { return order_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    S coefficient(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? S(0) : it->second;
    }

    /// Highest degree carrying a nonzero coefficient, -1 for the zero series.
    int top_degree() const {
        int d = -1;
        for (const auto& [k, c] : terms_) d = std::max(d, k.degree());
        return d;
    }

    SparseSeries degree_part(int d) const {
        Builder b(n_, order_);
        for (const auto& [k, c] : terms_)
            if (k.degree() == d) b.add(k, c);
        return std::move(b).build();
    }

    /// Same order, coefficients above degree d dropped.
    SparseSeries truncated(int d) const {
        Builder b(n_, order_);
        for (const auto& [k, c] : terms_)
            if (k.degree() <= d) b.add(k, c);
        return std::move(b).build();
    }

    /// Same coefficients re-homed at another truncation order.
    SparseSeries with_order(int order) const {
        Builder b(n_, order);
        for (const auto& [k, c] : terms_) b.add(k, c);
        return std::move(b).build();
    }

    friend SparseSeries operator+(const SparseSeries& a, const SparseSeries& b) {
        a.require_same_shape(b);
        Builder out(a.n_, a.order_);
        out.add(a);
        out.add(b);
        return std::move(out).build();
    }
    friend SparseSeries operator-(const SparseSeries& a, const SparseSeries& b) {
        a.require_same_shape(b);
        Builder out(a.n_, a.order_);
        out.add(a);
        out.add(b, S(-1));
        return std::move(out).build();
    }
    friend SparseSeries operator-(const SparseSeries& a) { return a * S(-1); }
    friend SparseSeries operator*(const SparseSeries& a, const S& c) {
        Builder out(a.n_, a.order_);
        out.add(a, c);
        return std::move(out).build();
    }
    friend SparseSeries operator*(const S& c, const SparseSeries& a) { return a * c; }

    friend bool operator==(const SparseSeries& a, const SparseSeries& b) {
        return a.n_ == b.n_ && a.order_ == b.order_ && a.terms_ == b.terms_;
    }

    void require_same_shape(const SparseSeries& other) const {
        if (n_ != other.n_ || order_ != other.order_)
            throw ContractError("series shape mismatch: (n=" + std::to_string(n_) + ", N=" +
                                std::to_string(order_) + ") vs (n=" + std::to_string(other.n_) +
                                ", N=" + std::to_string(other.order_) + ")");
    }

private:
    SparseSeries(int n, int order, Terms terms) : n_(n), order_(order), terms_(std::move(terms)) {}

    static void check_shape(int n, int order) {
        if (n < 1) throw ContractError("generator count must be at least 1");
        if (order < 0) throw ContractError("truncation order must be non-negative");
    }

    int n_;
    int order_;
    Terms terms_;
};

/// Coefficientwise sup-norm of a - b, over the union of supports.
template <GradedKey Key, SeriesScalar S>
double max_abs_diff(const SparseSeries<Key, S>& a, const SparseSeries<Key, S>& b) {
    double worst = 0.0;
    auto ia = a.terms().begin();
    auto ib = b.terms().begin();
    const auto ea = a.terms().end();
    const auto eb = b.terms().end();
    while (ia != ea || ib != eb) {
        S d;
        if (ib == eb || (ia != ea && ia->first < ib->first)) {
            d = ia->second;
            ++ia;
        } else if (ia == ea || ib->first < ia->first) {
            d = ib->second;
            ++ib;
        } else {
            d = ia->second - ib->second;
            ++ia;
            ++ib;
        }
        worst = std::max(worst, ScalarTraits<S>::magnitude(d));
    }
    return worst;
}

template <GradedKey Key, SeriesScalar S>
double max_abs_coefficient(const SparseSeries<Key, S>& a) {
    double worst = 0.0;
    for (const auto& [k, c] : a.terms()) worst = std::max(worst, ScalarTraits<S>::magnitude(c));
    return worst;
}

/// Coefficients converted to the complex realization.
template <GradedKey Key, SeriesScalar S>
SparseSeries<Key, Complex> to_complex(const SparseSeries<Key, S>& a) {
    typename SparseSeries<Key, Complex>::Builder b(a.generators(), a.order());
    for (const auto& [k, c] : a.terms()) b.add(k, ScalarTraits<S>::to_complex(c));
    return std::move(b).build();
}

}  // namespace gtf
