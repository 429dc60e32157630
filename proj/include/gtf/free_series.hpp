#pragma once

// Truncated free associative algebra T(a_1..a_n) up to degree N, its Hopf
// structure (each a_i primitive) and the group of group-like elements.

#include <span>
#include <vector>

#include "gtf/sparse_series.hpp"
#include "gtf/word.hpp"

namespace gtf {

struct WordPair {
    Word left;
    Word right;

    int degree() const noexcept { return left.degree() + right.degree(); }
    int max_letter() const noexcept { return std::max(left.max_letter(), right.max_letter()); }
    friend auto operator<=>(const WordPair&, const WordPair&) = default;
};

template <SeriesScalar S>
using FreeSeries = SparseSeries<Word, S>;

/// Element of TH ⊗ TH, bounded in total degree.
template <SeriesScalar S>
using TensorSquareSeries = SparseSeries<WordPair, S>;

template <SeriesScalar S>
FreeSeries<S> unit_series(int n, int order) {
    typename FreeSeries<S>::Builder b(n, order);
    b.add(Word{}, S(1));
    return std::move(b).build();
}

template <SeriesScalar S>
FreeSeries<S> generator_series(int n, int order, int i) {
    if (i < 1 || i > n) throw DomainError("generator index out of range");
    typename FreeSeries<S>::Builder b(n, order);
    b.add(Word::letter(i), S(1));
    return std::move(b).build();
}

template <SeriesScalar S>
FreeSeries<S> monomial_series(int n, int order, Word w, const S& c) {
    typename FreeSeries<S>::Builder b(n, order);
    b.add(w, c);
    return std::move(b).build();
}

template <SeriesScalar S>
FreeSeries<S> mul(const FreeSeries<S>& u, const FreeSeries<S>& v) {
    u.require_same_shape(v);
    const int order = u.order();
    typename FreeSeries<S>::Builder out(u.generators(), order);
    for (const auto& [wu, cu] : u.terms()) {
        const int room = order - wu.degree();
        for (const auto& [wv, cv] : v.terms()) {
            // terms are sorted by degree first
            if (wv.degree() > room) break;
            out.add(wu * wv, cu * cv);
        }
    }
    return std::move(out).build();
}

template <SeriesScalar S>
FreeSeries<S> operator*(const FreeSeries<S>& u, const FreeSeries<S>& v) {
    return mul(u, v);
}

template <SeriesScalar S>
FreeSeries<S> commutator(const FreeSeries<S>& u, const FreeSeries<S>& v) {
    return mul(u, v) - mul(v, u);
}

template <SeriesScalar S>
S constant_term(const FreeSeries<S>& u) {
    return u.coefficient(Word{});
}

namespace detail {

template <SeriesScalar S>
bool is_exactly_one(const S& c) {
    if constexpr (ScalarTraits<S>::exact) {
        return c == S(1);
    } else {
        return std::abs(c - S(1)) < 1e-12;
    }
}

}  // namespace detail

template <SeriesScalar S>
FreeSeries<S> exp(const FreeSeries<S>& u) {
    if (!ScalarTraits<S>::is_zero(constant_term(u)))
        throw DomainError("exp requires a series with zero constant term");
    const auto one = unit_series<S>(u.generators(), u.order());
    FreeSeries<S> acc = one;
    for (int k = u.order(); k >= 1; --k) acc = one + mul(u, acc) * ScalarTraits<S>::from_ratio(1, k);
    return acc;
}

template <SeriesScalar S>
FreeSeries<S> log(const FreeSeries<S>& g) {
    if (!detail::is_exactly_one(constant_term(g)))
        throw DomainError("log requires a series with constant term 1");
    const auto one = unit_series<S>(g.generators(), g.order());
    const FreeSeries<S> x = g - one;
    // x - x^2/2 + x^3/3 - ... evaluated as x(1 - x(1/2 - x(1/3 - ...)))
    FreeSeries<S> acc = one * ScalarTraits<S>::from_ratio(1, std::max(g.order(), 1));
    for (int k = g.order() - 1; k >= 1; --k)
        acc = one * ScalarTraits<S>::from_ratio(1, k) - mul(x, acc);
    return mul(x, acc);
}

template <SeriesScalar S>
FreeSeries<S> bch(const FreeSeries<S>& u, const FreeSeries<S>& v) {
    return log(mul(exp(u), exp(v)));
}

template <SeriesScalar S>
FreeSeries<S> inverse(const FreeSeries<S>& g) {
    const S c = constant_term(g);
    if (ScalarTraits<S>::is_zero(c)) throw DomainError("inverse requires a nonzero constant term");
    const S cinv = S(1) / c;
    const auto one = unit_series<S>(g.generators(), g.order());
    const FreeSeries<S> y = g * cinv - one;
    // (1 + y)^{-1} = 1 - y + y^2 - ...
    FreeSeries<S> acc = one;
    for (int k = 0; k < g.order(); ++k) acc = one - mul(y, acc);
    return acc * cinv;
}

template <SeriesScalar S>
FreeSeries<S> conjugate(const FreeSeries<S>& g, const FreeSeries<S>& h) {
    return mul(mul(h, g), inverse(h));
}

/// u ⊗ v, truncated at total degree N.
template <SeriesScalar S>
TensorSquareSeries<S> tensor(const FreeSeries<S>& u, const FreeSeries<S>& v) {
    u.require_same_shape(v);
    typename TensorSquareSeries<S>::Builder out(u.generators(), u.order());
    for (const auto& [wu, cu] : u.terms())
        for (const auto& [wv, cv] : v.terms()) {
            if (wu.degree() + wv.degree() > u.order()) break;
            out.add({wu, wv}, cu * cv);
        }
    return std::move(out).build();
}

/// Legwise product (u⊗v)(p⊗q) = up ⊗ vq.
template <SeriesScalar S>
TensorSquareSeries<S> mul(const TensorSquareSeries<S>& a, const TensorSquareSeries<S>& b) {
    a.require_same_shape(b);
    typename TensorSquareSeries<S>::Builder out(a.generators(), a.order());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms())
            out.add({ka.left * kb.left, ka.right * kb.right}, ca * cb);
    return std::move(out).build();
}

/// Swaps the two tensor legs.
template <SeriesScalar S>
TensorSquareSeries<S> flip(const TensorSquareSeries<S>& a) {
    typename TensorSquareSeries<S>::Builder out(a.generators(), a.order());
    for (const auto& [k, c] : a.terms()) out.add({k.right, k.left}, c);
    return std::move(out).build();
}

/// The algebra morphism with Δ(a_i) = a_i⊗1 + 1⊗a_i: each word splits over
/// all subsets of its positions.
template <SeriesScalar S>
TensorSquareSeries<S> coproduct(const FreeSeries<S>& g) {
    typename TensorSquareSeries<S>::Builder out(g.generators(), g.order());
    for (const auto& [w, c] : g.terms()) {
        const int k = w.degree();
        std::vector<int> left, right;
        for (unsigned mask = 0; mask < (1u << k); ++mask) {
            left.clear();
            right.clear();
            for (int pos = 0; pos < k; ++pos) ((mask >> pos) & 1u ? left : right).push_back(w[pos]);
            out.add({Word::from_letters(left), Word::from_letters(right)}, c);
        }
    }
    return std::move(out).build();
}

template <SeriesScalar S>
bool is_grouplike(const FreeSeries<S>& g, double tol = 0.0) {
    const auto delta = coproduct(g);
    const auto square = tensor(g, g);
    if constexpr (ScalarTraits<S>::exact) {
        return delta == square;
    } else {
        return max_abs_diff(delta, square) <= tol;
    }
}

/// The algebra morphism a_i ↦ images[i-1], applied to g and truncated at N.
template <SeriesScalar S>
FreeSeries<S> substitute(const FreeSeries<S>& g, std::span<const FreeSeries<S>> images) {
    if (static_cast<int>(images.size()) != g.generators())
        throw ContractError("substitute needs one image per generator");
    if (images.empty()) return g;
    const int n_out = images.front().generators();
    const int order = g.order();
    for (const auto& img : images) {
        if (img.generators() != n_out || img.order() != order)
            throw ContractError("substitution images must share generator count and order");
        if (!ScalarTraits<S>::is_zero(constant_term(img)))
            throw DomainError("substitution images must have zero constant term");
    }
    // Products of images along word prefixes, memoized.
    std::map<Word, FreeSeries<S>> prefix;
    prefix.emplace(Word{}, unit_series<S>(n_out, order));
    typename FreeSeries<S>::Builder out(n_out, order);
    for (const auto& [w, c] : g.terms()) {
        Word built{};
        const FreeSeries<S>* current = &prefix.at(Word{});
        for (int pos = 0; pos < w.degree(); ++pos) {
            const Word next = built * Word::letter(w[pos]);
            auto it = prefix.find(next);
            if (it == prefix.end())
                it = prefix.emplace(next, mul(*current, images[w[pos] - 1])).first;
            current = &it->second;
            built = next;
        }
        out.add(*current, c);
    }
    return std::move(out).build();
}

template <SeriesScalar S>
FreeSeries<S> substitute(const FreeSeries<S>& g, std::initializer_list<FreeSeries<S>> images) {
    std::vector<FreeSeries<S>> v(images);
    return substitute(g, std::span<const FreeSeries<S>>(v));
}

}  // namespace gtf
