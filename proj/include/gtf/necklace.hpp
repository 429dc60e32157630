#pragma once

// Cyclic words, trace maps, double derivations and the necklace Lie
// bialgebra built from the KKS double bracket {a_i, a_j} = δ_ij (1⊗a_i - a_i⊗1).
//
// Tensor legs multiply as (u⊗v)(p⊗q) = up ⊗ vq throughout.

#include <vector>

#include "gtf/free_series.hpp"

namespace gtf {

/// Index of the lexicographically least rotation (Booth's algorithm).
int least_rotation(std::span<const int> letters);

/// A word up to rotation, stored as its least rotation.
class CyclicWord {
public:
    CyclicWord() = default;
    static CyclicWord of(Word w);

    const Word& word() const noexcept { return rep_; }
    int degree() const noexcept { return rep_.degree(); }
    int max_letter() const noexcept { return rep_.max_letter(); }
    std::string to_string() const { return "|" + rep_.to_string() + "|"; }

    friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

private:
    explicit CyclicWord(Word canonical) : rep_(canonical) {}
    Word rep_;
};

struct CyclicPair {
    CyclicWord left;
    CyclicWord right;

    int degree() const noexcept { return left.degree() + right.degree(); }
    int max_letter() const noexcept { return std::max(left.max_letter(), right.max_letter()); }
    friend auto operator<=>(const CyclicPair&, const CyclicPair&) = default;
};

struct CyclicTriple {
    CyclicWord first;
    CyclicWord second;
    CyclicWord third;

    int degree() const noexcept { return first.degree() + second.degree() + third.degree(); }
    int max_letter() const noexcept {
        return std::max({first.max_letter(), second.max_letter(), third.max_letter()});
    }
    friend auto operator<=>(const CyclicTriple&, const CyclicTriple&) = default;
};

template <SeriesScalar S>
using CyclicSeries = SparseSeries<CyclicWord, S>;
template <SeriesScalar S>
using CyclicPairSeries = SparseSeries<CyclicPair, S>;
template <SeriesScalar S>
using CyclicTripleSeries = SparseSeries<CyclicTriple, S>;

template <SeriesScalar S>
CyclicSeries<S> cyclic_monomial(int n, int order, Word w, const S& c = S(1)) {
    typename CyclicSeries<S>::Builder b(n, order);
    b.add(CyclicWord::of(w), c);
    return std::move(b).build();
}

/// Projection TH → |TH|.
template <SeriesScalar S>
CyclicSeries<S> trace(const FreeSeries<S>& u) {
    typename CyclicSeries<S>::Builder out(u.generators(), u.order());
    for (const auto& [w, c] : u.terms()) out.add(CyclicWord::of(w), c);
    return std::move(out).build();
}

/// Representative in TH: each cyclic word lifted to its stored rotation.
template <SeriesScalar S>
FreeSeries<S> lift(const CyclicSeries<S>& psi) {
    typename FreeSeries<S>::Builder out(psi.generators(), psi.order());
    for (const auto& [cw, c] : psi.terms()) out.add(cw.word(), c);
    return std::move(out).build();
}

/// Tr(a⊗b) = |ab|.
template <SeriesScalar S>
CyclicSeries<S> tr_pair(const TensorSquareSeries<S>& t) {
    typename CyclicSeries<S>::Builder out(t.generators(), t.order());
    for (const auto& [k, c] : t.terms()) out.add(CyclicWord::of(k.left * k.right), c);
    return std::move(out).build();
}

/// Tr¹²(a⊗b) = |a| ⊗ |b|.
template <SeriesScalar S>
CyclicPairSeries<S> tr12_pair(const TensorSquareSeries<S>& t) {
    typename CyclicPairSeries<S>::Builder out(t.generators(), t.order());
    for (const auto& [k, c] : t.terms()) out.add({CyclicWord::of(k.left), CyclicWord::of(k.right)}, c);
    return std::move(out).build();
}

namespace detail {
inline void check_index(int i, int n) {
    if (i < 1 || i > n)
        throw DomainError("generator index " + std::to_string(i) + " out of range 1.." + std::to_string(n));
}
}  // namespace detail

/// ∂_i : |TH| → TH. On |c_1…c_k| it sums c_{m+1}…c_k c_1…c_{m-1} over positions m with c_m = a_i.
template <SeriesScalar S>
FreeSeries<S> partial(int i, const CyclicSeries<S>& psi) {
    detail::check_index(i, psi.generators());
    typename FreeSeries<S>::Builder out(psi.generators(), psi.order());
    for (const auto& [cw, c] : psi.terms()) {
        const Word& w = cw.word();
        const int k = w.degree();
        for (int m = 0; m < k; ++m)
            if (w[m] == i) out.add(w.slice(m + 1, k - m - 1) * w.slice(0, m), c);
    }
    return std::move(out).build();
}

/// Double derivation ∂_i : TH → TH⊗TH with ∂_i(u a_i v) = u ⊗ v.
template <SeriesScalar S>
TensorSquareSeries<S> double_derivation(int i, const FreeSeries<S>& u) {
    detail::check_index(i, u.generators());
    typename TensorSquareSeries<S>::Builder out(u.generators(), u.order());
    for (const auto& [w, c] : u.terms()) {
        const int k = w.degree();
        for (int m = 0; m < k; ++m)
            if (w[m] == i) out.add({w.slice(0, m), w.slice(m + 1, k - m - 1)}, c);
    }
    return std::move(out).build();
}

/// ∂_i∂_j : |TH| → TH⊗TH. Sums w(t←s) ⊗ w(s←t) over ordered position pairs with c_s = a_i, c_t = a_j,
/// where w(t←s) is the run of letters strictly after s and before t.
template <SeriesScalar S>
TensorSquareSeries<S> second_partial(int i, int j, const CyclicSeries<S>& psi) {
    detail::check_index(j, psi.generators());
    return double_derivation(j, partial(i, psi));
}

/// {a_i, a_j} = δ_ij (1⊗a_i - a_i⊗1).
template <SeriesScalar S>
TensorSquareSeries<S> kks_double_bracket(int n, int order, int i, int j) {
    detail::check_index(i, n);
    detail::check_index(j, n);
    typename TensorSquareSeries<S>::Builder out(n, order);
    if (i == j) {
        out.add({Word{}, Word::letter(i)}, S(1));
        out.add({Word::letter(i), Word{}}, S(-1));
    }
    return std::move(out).build();
}

/// [ψ, ψ'] = Σ_ij Tr((∂_iψ ⊗ ∂_jψ'){a_i, a_j}).
template <SeriesScalar S>
CyclicSeries<S> necklace_bracket(const CyclicSeries<S>& psi, const CyclicSeries<S>& phi) {
    psi.require_same_shape(phi);
    const int n = psi.generators();
    const int order = psi.order();
    typename CyclicSeries<S>::Builder out(n, order);
    for (int i = 1; i <= n; ++i) {
        const auto di = partial(i, psi);
        if (di.is_zero()) continue;
        const auto dj = partial(i, phi);
        if (dj.is_zero()) continue;
        out.add(tr_pair(mul(tensor(di, dj), kks_double_bracket<S>(n, order, i, i))));
    }
    return std::move(out).build();
}

/// δψ = Σ_ij Tr¹²((∂_i∂_jψ){a_i, a_j}).
template <SeriesScalar S>
CyclicPairSeries<S> necklace_cobracket(const CyclicSeries<S>& psi) {
    const int n = psi.generators();
    const int order = psi.order();
    typename CyclicPairSeries<S>::Builder out(n, order);
    for (int i = 1; i <= n; ++i) {
        const auto dd = second_partial(i, i, psi);
        if (dd.is_zero()) continue;
        out.add(tr12_pair(mul(dd, kks_double_bracket<S>(n, order, i, i))));
    }
    return std::move(out).build();
}

/// |u| ∧ |v| = |u|⊗|v| - |v|⊗|u|, extended bilinearly.
template <SeriesScalar S>
CyclicPairSeries<S> wedge(const CyclicSeries<S>& a, const CyclicSeries<S>& b) {
    a.require_same_shape(b);
    typename CyclicPairSeries<S>::Builder out(a.generators(), a.order());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            out.add({ka, kb}, ca * cb);
            out.add({kb, ka}, -(ca * cb));
        }
    return std::move(out).build();
}

template <SeriesScalar S>
CyclicPairSeries<S> cyclic_tensor(const CyclicSeries<S>& a, const CyclicSeries<S>& b) {
    a.require_same_shape(b);
    typename CyclicPairSeries<S>::Builder out(a.generators(), a.order());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) out.add({ka, kb}, ca * cb);
    return std::move(out).build();
}

template <SeriesScalar S>
CyclicPairSeries<S> flip(const CyclicPairSeries<S>& p) {
    typename CyclicPairSeries<S>::Builder out(p.generators(), p.order());
    for (const auto& [k, c] : p.terms()) out.add({k.right, k.left}, c);
    return std::move(out).build();
}

/// ψ · (a⊗b) = [ψ,a]⊗b + a⊗[ψ,b], the adjoint action on the tensor square.
template <SeriesScalar S>
CyclicPairSeries<S> adjoint_action(const CyclicSeries<S>& psi, const CyclicPairSeries<S>& p) {
    const int n = p.generators();
    const int order = p.order();
    typename CyclicPairSeries<S>::Builder out(n, order);
    for (const auto& [k, c] : p.terms()) {
        const auto left = necklace_bracket(psi, cyclic_monomial<S>(n, order, k.left.word()));
        const auto right = necklace_bracket(psi, cyclic_monomial<S>(n, order, k.right.word()));
        for (const auto& [kl, cl] : left.terms()) out.add({kl, k.right}, c * cl);
        for (const auto& [kr, cr] : right.terms()) out.add({k.left, kr}, c * cr);
    }
    return std::move(out).build();
}

/// (δ ⊗ id) applied to a pair series.
template <SeriesScalar S>
CyclicTripleSeries<S> cobracket_first_leg(const CyclicPairSeries<S>& p) {
    const int n = p.generators();
    const int order = p.order();
    typename CyclicTripleSeries<S>::Builder out(n, order);
    for (const auto& [k, c] : p.terms()) {
        const auto d = necklace_cobracket(cyclic_monomial<S>(n, order, k.left.word()));
        for (const auto& [kd, cd] : d.terms()) out.add({kd.left, kd.right, k.right}, c * cd);
    }
    return std::move(out).build();
}

/// Cyclic permutation of tensor legs: x⊗y⊗z ↦ z⊗x⊗y.
template <SeriesScalar S>
CyclicTripleSeries<S> rotate_legs(const CyclicTripleSeries<S>& t) {
    typename CyclicTripleSeries<S>::Builder out(t.generators(), t.order());
    for (const auto& [k, c] : t.terms()) out.add({k.third, k.first, k.second}, c);
    return std::move(out).build();
}

}  // namespace gtf
