#pragma once

// Both sides of the formality identities for concrete loops:
//   |W|(geometric bracket)   vs  necklace bracket of |W|-images,
//   |W|⊗|W|(geometric cobracket) vs necklace cobracket of the |W|-image.
// Inputs go through loop_holonomy of the polylines themselves; output classes
// through the generator holonomies, so the two sides share no computation
// beyond the connection.

#include "gtf/holonomy.hpp"
#include "gtf/surface.hpp"

namespace gtf {

template <class T>
struct Residual {
    T geometric;
    T algebraic;
    double deviation = 0.0;
};

class FormalityContext {
public:
    FormalityContext(Configuration cfg, int order, HolonomyOptions opts = {});

    const Configuration& configuration() const noexcept { return cfg_; }
    int order() const noexcept { return order_; }

    /// |W| of a loop, at truncation order `order` (defaults to the context order).
    CyclicSeries<Complex> W_of_loop(const PolylineLoop& loop, int order = -1) const;
    CyclicSeries<Complex> W(const ConjClass& c) const;
    CyclicSeries<Complex> W(const ClassCombination& c) const;
    CyclicPairSeries<Complex> W(const ClassPairCombination& c) const;

    Residual<CyclicSeries<Complex>> bracket(const PolylineLoop& a, const PolylineLoop& b) const;
    /// Compared through total degree N; the necklace side needs |W| at order N + 1.
    Residual<CyclicPairSeries<Complex>> cobracket(const PolylineLoop& a) const;

private:
    Configuration cfg_;
    int order_;
    HolonomyOptions opts_;
    std::vector<HolonomySeries> gens_;
};

/// A point left of and below every puncture (off all cut rays).
Complex default_basepoint(const Configuration& cfg);

}  // namespace gtf
