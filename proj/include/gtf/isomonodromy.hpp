#pragma once

// Drinfeld-Kohno action on TH and |TH|, parallel transport of |TH|-valued
// sections over configuration space, and the Schlesinger system.

#include <vector>

#include "gtf/dense_series.hpp"
#include "gtf/geometry.hpp"
#include "gtf/necklace.hpp"

namespace gtf {

/// Derivation with a_i ↦ [a_i, a_j], a_j ↦ [a_j, a_i], other generators fixed.
template <SeriesScalar S>
FreeSeries<S> ad_tij(int i, int j, const FreeSeries<S>& u) {
    const int n = u.generators();
    if (i == j || i < 1 || j < 1 || i > n || j > n)
        throw DomainError("ad(t_ij) needs distinct indices in 1.." + std::to_string(n));
    typename FreeSeries<S>::Builder out(n, u.order());
    const Word ij = Word::from_letters({i, j}), ji = Word::from_letters({j, i});
    for (const auto& [w, c] : u.terms()) {
        if (w.degree() + 1 > u.order()) continue;
        const int k = w.degree();
        for (int m = 0; m < k; ++m) {
            if (w[m] != i && w[m] != j) continue;
            const Word head = w.slice(0, m), tail = w.slice(m + 1, k - m - 1);
            const Word& plus = w[m] == i ? ij : ji;
            const Word& minus = w[m] == i ? ji : ij;
            out.add(head * plus * tail, c);
            out.add(head * minus * tail, -c);
        }
    }
    return std::move(out).build();
}

template <SeriesScalar S>
CyclicSeries<S> ad_tij(int i, int j, const CyclicSeries<S>& psi) {
    return trace(ad_tij(i, j, lift(psi)));
}

/// ad(c) = Σ_{i<j} ad(t_ij); on TH this is u ↦ [u, a_1 + … + a_n].
template <SeriesScalar S>
FreeSeries<S> ad_central(const FreeSeries<S>& u) {
    typename FreeSeries<S>::Builder out(u.generators(), u.order());
    for (int i = 1; i <= u.generators(); ++i)
        for (int j = i + 1; j <= u.generators(); ++j) out.add(ad_tij(i, j, u));
    return std::move(out).build();
}

/// Σ_{i<j} ad(t_ij) ψ on |TH|; identically zero.
template <SeriesScalar S>
CyclicSeries<S> central_action_on_cyclic(const CyclicSeries<S>& psi) {
    return trace(ad_central(lift(psi)));
}

/// Piecewise-linear motion of the punctures; waypoint k lists all n positions.
class ConfPath {
public:
    explicit ConfPath(std::vector<std::vector<Complex>> waypoints, double collision_fraction = 1e-3);

    int generators() const noexcept { return static_cast<int>(waypoints_.front().size()); }
    const std::vector<std::vector<Complex>>& waypoints() const noexcept { return waypoints_; }
    const std::vector<Complex>& start() const { return waypoints_.front(); }
    const std::vector<Complex>& end() const { return waypoints_.back(); }
    ConfPath reversed() const;

private:
    std::vector<std::vector<Complex>> waypoints_;
};

struct TransportOptions {
    double tol = 1e-10;
    int max_steps = 200000;
};

/// Sign s in ψ' = s (1/2πi) Σ_{i<j} ((u_i - u_j)/(z_i - z_j)) ad(t_ij) ψ, fixed by matching
/// transported sections against directly recomputed |W| (see tests/test_isomonodromy.cpp).
inline constexpr int kTransportSign = +1;

CyclicSeries<Complex> nabla_transport(const CyclicSeries<Complex>& psi0, const ConfPath& path,
                                      const TransportOptions& opts = {});
/// dx_k/ds = (1/2πi) Σ_{i≠k} [x_k, x_i] (u_i - u_k)/(z_k - z_i).
std::vector<FreeSeries<Complex>> schlesinger_flow(const std::vector<FreeSeries<Complex>>& x, const ConfPath& path,
                                                  const TransportOptions& opts = {});

struct FlatSectionReport {
    CyclicSeries<Complex> transported;
    CyclicSeries<Complex> direct;
    double deviation = 0.0;
    bool pass = false;
    /// |W_γ| at the start configuration.
    CyclicSeries<Complex> initial{1, 0};
};

/// Distance from each puncture to the loop.
std::vector<double> disk_radii(const PolylineLoop& loop, const std::vector<Complex>& punctures);

/// Transports |W_γ| from the start configuration and compares with |W_γ| recomputed at the end.
/// Each puncture must stay strictly inside the disk around its start position that avoids the loop.
FlatSectionReport verify_flat_section(const PolylineLoop& loop, const ConfPath& path, int order, double tol,
                                      const TransportOptions& opts = {});

}  // namespace gtf
