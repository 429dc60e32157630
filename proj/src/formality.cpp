#include "gtf/formality.hpp"

#include <algorithm>

namespace gtf {

Complex default_basepoint(const Configuration& cfg) {
    double xmin = 0.0, ymin = 0.0;
    bool first = true;
    for (const auto& p : cfg.punctures()) {
        const Complex z = p.to_complex();
        xmin = first ? z.real() : std::min(xmin, z.real());
        ymin = first ? z.imag() : std::min(ymin, z.imag());
        first = false;
    }
    return {xmin - 1.0, ymin - 1.0};
}

FormalityContext::FormalityContext(Configuration cfg, int order, HolonomyOptions opts)
    : cfg_(std::move(cfg)), order_(order), opts_(opts) {
    if (order < 1) throw ContractError("truncation order must be at least 1");
    gens_ = generator_holonomies(ConnectionData(cfg_, order_), default_basepoint(cfg_), opts_);
}

CyclicSeries<Complex> FormalityContext::W_of_loop(const PolylineLoop& loop, int order) const {
    return trace(loop_holonomy(loop, ConnectionData(cfg_, order < 0 ? order_ : order), opts_));
}

CyclicSeries<Complex> FormalityContext::W(const ConjClass& c) const { return W_of_class(c, gens_); }

CyclicSeries<Complex> FormalityContext::W(const ClassCombination& c) const {
    CyclicSeries<Complex>::Builder b(cfg_.size(), order_);
    for (const auto& [cls, v] : c) b.add(W(cls), Complex(static_cast<double>(v), 0.0));
    return std::move(b).build();
}

CyclicPairSeries<Complex> FormalityContext::W(const ClassPairCombination& c) const {
    CyclicPairSeries<Complex>::Builder b(cfg_.size(), order_);
    for (const auto& [key, v] : c) {
        const auto l = W(key.first), r = W(key.second);
        for (const auto& [k1, c1] : l.terms())
            for (const auto& [k2, c2] : r.terms())
                b.add(CyclicPair{k1, k2}, c1 * c2 * static_cast<double>(v));
    }
    return std::move(b).build();
}

Residual<CyclicSeries<Complex>> FormalityContext::bracket(const PolylineLoop& a, const PolylineLoop& b) const {
    Residual<CyclicSeries<Complex>> out{W(goldman_bracket_geometric(a, b, cfg_)),
                                        necklace_bracket(W_of_loop(a), W_of_loop(b)), 0.0};
    out.deviation = max_abs_diff(out.geometric, out.algebraic);
    return out;
}

Residual<CyclicPairSeries<Complex>> FormalityContext::cobracket(const PolylineLoop& a) const {
    Residual<CyclicPairSeries<Complex>> out{W(turaev_cobracket_geometric(a, cfg_).total()),
                                            necklace_cobracket(W_of_loop(a, order_ + 1)).with_order(order_), 0.0};
    out.deviation = max_abs_diff(out.geometric, out.algebraic);
    return out;
}

}  // namespace gtf
