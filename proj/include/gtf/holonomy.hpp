#pragma once

// Truncated holonomy of the connection d - A, A = (1/2πi) Σ a_i dz/(z - z_i),
// along polylines; the maps W and |W|; regularized solutions at 0 and 1, the
// KZ associator, and the associated Kashiwara-Vergne automorphism.
//
// Conventions: for a path traversed first then second, Hol(second ∘ first) =
// Hol(second) · Hol(first). A group word g_1 g_2 … g_k (traversal order) maps
// to Hol(g_k) ⋯ Hol(g_1).

#include <span>
#include <vector>

#include "gtf/dense_series.hpp"
#include "gtf/geometry.hpp"
#include "gtf/group_word.hpp"
#include "gtf/necklace.hpp"

namespace gtf {

struct ConnectionData {
    std::vector<Complex> punctures;
    int order;

    ConnectionData(std::vector<Complex> punctures, int order);
    ConnectionData(const Configuration& cfg, int order) : ConnectionData(cfg.complex_view(), order) {}
    int generators() const noexcept { return static_cast<int>(punctures.size()); }
};

struct HolonomyOptions {
    double tol = 1e-9;
    int max_depth = 24;
    /// Closer approach to a puncture than this is rejected.
    double guard = 1e-12;
};

using HolonomySeries = FreeSeries<Complex>;

/// Holonomy along the open polyline through the given points.
HolonomySeries path_holonomy(std::span<const Complex> path, const ConnectionData& conn,
                             const HolonomyOptions& opts = {});
/// Holonomy around a closed polyline, based at its first vertex.
HolonomySeries loop_holonomy(const PolylineLoop& loop, const ConnectionData& conn, const HolonomyOptions& opts = {});
/// Dense variant used by the transport code; applies the path to `h` in place.
void apply_path(std::span<const Complex> path, const ConnectionData& conn, const HolonomyOptions& opts,
                DenseSeries& h);

/// Holonomies of the standard lollipops γ_1..γ_n based at `basepoint`: up to a level above
/// every puncture, across, down into a small counterclockwise square around z_i, and back.
/// The basepoint must avoid the cut rays; the result is in the cut-ray basis of surface_geometry.
std::vector<HolonomySeries> generator_holonomies(const ConnectionData& conn, Complex basepoint,
                                                 const HolonomyOptions& opts = {});

/// images[i-1] for letter i, its inverse for letter -i; later letters multiply on the left.
HolonomySeries evaluate_word(std::span<const HolonomySeries> images, std::span<const int> letters);

CyclicSeries<Complex> W_of_class(const ConjClass& c, const ConnectionData& conn, Complex basepoint,
                                 const HolonomyOptions& opts = {});
CyclicSeries<Complex> W_of_class(const ConjClass& c, std::span<const HolonomySeries> generators);

/// Ψ_0(p) (endpoint 0) or Ψ_1(p) (endpoint 1) for punctures 0 and 1, with x = a_1, y = a_2.
HolonomySeries regularized_solution(int endpoint, double p, int order, const HolonomyOptions& opts = {});

/// Φ_KZ = Ψ_1(p)^{-1} Ψ_0(p).
HolonomySeries kz_associator(int order, const HolonomyOptions& opts = {}, double p = 0.5);

struct KVImages {
    HolonomySeries fx;
    HolonomySeries fy;
};

/// F(x) = Φ(x,-x-y) x Φ(x,-x-y)^{-1}, F(y) = e^{-(x+y)/2} Φ(y,-x-y) y Φ(y,-x-y)^{-1} e^{(x+y)/2}.
KVImages kv_automorphism(const HolonomySeries& phi);

enum class RhoKind { kz, f };

/// Images of γ_0, γ_1: (e^x, Φ^{-1} e^y Φ) for kz; (exp F(x), exp F(y)) for f.
std::vector<HolonomySeries> rho_images(RhoKind kind, const HolonomySeries& phi);

}  // namespace gtf
