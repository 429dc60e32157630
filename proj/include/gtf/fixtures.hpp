#pragma once

// Hand-built polylines: calibration curves for the sign conventions and
// fixed cases of the verification suites.

#include "gtf/surface.hpp"

namespace gtf::fixtures {

inline Rational r(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}
inline Point pt(long x, long y, long den = 1) { return {r(x, den), r(y, den)}; }

/// Unit directions of a rational "octagon" (not regular, but convex and symmetric).
inline const std::vector<Point>& octagon_dirs() {
    static const std::vector<Point> d = {pt(10, 0, 10), pt(7, 7, 10),   pt(0, 10, 10), pt(-7, 7, 10),
                                         pt(-10, 0, 10), pt(-7, -7, 10), pt(0, -10, 10), pt(7, -7, 10)};
    return d;
}

/// Counterclockwise octagon of the given radius around c.
inline PolylineLoop octagon(const Point& c, const Rational& radius) {
    std::vector<Point> v;
    for (const auto& d : octagon_dirs()) v.push_back(c + radius * d);
    return PolylineLoop(std::move(v));
}

/// Axis-stretched octagon (an "ellipse").
inline PolylineLoop ellipse(const Point& c, const Rational& rx, const Rational& ry) {
    std::vector<Point> v;
    for (const auto& d : octagon_dirs()) v.push_back({c.x + rx * d.x, c.y + ry * d.y});
    return PolylineLoop(std::move(v));
}

/// Octagon traced twice with growing radius: one self-intersection, rotation number 2.
inline PolylineLoop doubly_wound(const Point& c, const Rational& r0, const Rational& step) {
    std::vector<Point> v;
    for (int k = 0; k < 16; ++k) v.push_back(c + (r0 + k * step) * octagon_dirs()[static_cast<std::size_t>(k % 8)]);
    return PolylineLoop(std::move(v));
}

/// Bowtie figure-eight through the origin: counterclockwise lobe on the left,
/// clockwise lobe on the right, scaled by `size`.
inline PolylineLoop figure_eight(const Rational& size) {
    return PolylineLoop({size * pt(-2, 1), size * pt(-2, -1), size * pt(2, 1), size * pt(2, -1)});
}

/// Punctures inside the two lobes of figure_eight(1).
inline Configuration figure_eight_punctures() {
    return Configuration({{r(-3, 2), r(1, 10)}, {r(3, 2), r(-1, 10)}});
}

/// Two-puncture configuration used by the calibration and bracket fixtures.
inline Configuration two_punctures() { return Configuration({pt(0, 0), pt(10, 1, 5)}); }

/// Circle around z1 of two_punctures().
inline PolylineLoop calibration_circle() { return octagon({r(1, 10), r(1, 7)}, r(1, 2)); }
/// Ellipse around both punctures of two_punctures(), meeting calibration_circle() twice.
inline PolylineLoop calibration_ellipse() { return ellipse({r(1), r(1, 7)}, r(5, 4), r(1)); }

/// Three punctures on a slightly tilted line.
inline Configuration three_punctures() { return Configuration({pt(0, 0), pt(10, 1, 5), pt(20, -1, 5)}); }
/// Ellipses around {z1, z2} and {z2, z3} of three_punctures(), crossing twice near z2.
inline PolylineLoop left_pair_ellipse() { return ellipse({r(1), r(1, 7)}, r(5, 4), r(1)); }
inline PolylineLoop right_pair_ellipse() { return ellipse({r(3), r(-1, 9)}, r(5, 4), r(1)); }

/// Disjoint circles around z1 and z2 of two_punctures().
inline PolylineLoop left_small_circle() { return octagon({r(1, 10), r(1, 7)}, r(1, 2)); }
inline PolylineLoop right_small_circle() { return octagon({r(19, 10), r(1, 7)}, r(1, 2)); }

}  // namespace gtf::fixtures
