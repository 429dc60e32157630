#pragma once

// Loops in the punctured plane: words read off cut-ray crossings, the
// geometric Goldman bracket and Turaev cobracket (blackboard framing), and
// synthesis of generic polyline representatives for conjugacy classes.

#include <cstdint>
#include <span>

#include "gtf/geometry.hpp"
#include "gtf/group_word.hpp"

namespace gtf {

/// A crossing of the cut ray below z_i: letter +i for increasing x, -i otherwise.
struct RayCrossing {
    LoopPosition position;
    int letter;
};

/// Ray crossings in traversal order from the start of edge 0.
std::vector<RayCrossing> ray_crossings(const PolylineLoop& loop, const Configuration& cfg);
ConjClass word_of_loop(const PolylineLoop& loop, const Configuration& cfg);

/// Σ ε_p · class(a ∗_p b) over the intersection points p.
ClassCombination goldman_bracket_geometric(const PolylineLoop& a, const PolylineLoop& b, const Configuration& cfg);

struct CobracketValue {
    /// Σ ε_i · class(γ(t_i←s_i)) ⊗ class(γ(s_i←t_i)) over the doubly counted self-intersections.
    ClassPairCombination pairs;
    int rotation = 0;
    ConjClass loop_class;

    /// Pair terms plus rotation · (class(1) ∧ class(γ)), oriented by the frozen rotation sign.
    ClassPairCombination total() const;
};

CobracketValue turaev_cobracket_geometric(const PolylineLoop& a, const Configuration& cfg);

struct SynthesisSchedule {
    int max_attempts = 12;
    /// Selects a different (homotopic) family of representatives.
    std::uint32_t variant = 0;
};

/// Rectilinear lollipop representative of a class; generic and round-trips through word_of_loop.
PolylineLoop loop_from_word(const ConjClass& w, const Configuration& cfg, const SynthesisSchedule& schedule = {});
/// As above but from an arbitrary (possibly unreduced) letter sequence, one lollipop per letter.
PolylineLoop loop_from_letters(std::span<const int> letters, const Configuration& cfg,
                               const SynthesisSchedule& schedule = {});
/// Representatives that are individually and mutually generic.
std::vector<PolylineLoop> loops_from_words(std::span<const ConjClass> words, const Configuration& cfg,
                                           const SynthesisSchedule& schedule = {});

}  // namespace gtf
