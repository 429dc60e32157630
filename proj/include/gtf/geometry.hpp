#pragma once

// Exact planar primitives: rational points, puncture configurations,
// closed polylines, transverse intersections and rotation numbers.
// Every predicate is decided in exact rational arithmetic.

#include <span>
#include <vector>

#include "gtf/scalar.hpp"

namespace gtf {

struct Point {
    Rational x;
    Rational y;

    Complex to_complex() const { return {x.get_d(), y.get_d()}; }
    friend bool operator==(const Point&, const Point&) = default;
};

Point operator+(const Point& a, const Point& b);
Point operator-(const Point& a, const Point& b);
Point operator*(const Rational& s, const Point& p);
Rational cross(const Point& a, const Point& b);
Rational dot(const Point& a, const Point& b);
std::string to_string(const Point& p);

/// Punctures z_1..z_n with pairwise distinct x-coordinates (each carries a vertical cut ray downwards).
class Configuration {
public:
    explicit Configuration(std::vector<Point> punctures);

    int size() const noexcept { return static_cast<int>(punctures_.size()); }
    const Point& operator[](int i) const { return punctures_[static_cast<std::size_t>(i)]; }
    const std::vector<Point>& punctures() const noexcept { return punctures_; }
    std::vector<Complex> complex_view() const;

private:
    std::vector<Point> punctures_;
};

/// Closed polyline; the edge k runs from vertex k to vertex k+1 (mod size).
class PolylineLoop {
public:
    explicit PolylineLoop(std::vector<Point> vertices);

    std::size_t size() const noexcept { return vertices_.size(); }
    const Point& vertex(std::size_t k) const { return vertices_[k % vertices_.size()]; }
    const std::vector<Point>& vertices() const noexcept { return vertices_; }
    Point edge_start(std::size_t k) const { return vertex(k); }
    Point edge_end(std::size_t k) const { return vertex(k + 1); }

    PolylineLoop reversed() const;
    /// Image under z ↦ a z + b with a = (ar + i ai), b = (br + i bi), a ≠ 0.
    PolylineLoop transformed(const Rational& ar, const Rational& ai, const Rational& br, const Rational& bi) const;
    /// Inserts the midpoint of every edge.
    PolylineLoop subdivided() const;
    std::vector<Complex> complex_view() const;

private:
    std::vector<Point> vertices_;
};

Configuration transformed(const Configuration& cfg, const Rational& ar, const Rational& ai, const Rational& br,
                          const Rational& bi);

/// A point on a loop: edge index and parameter in [0, 1) along that edge.
struct LoopPosition {
    std::size_t edge = 0;
    Rational param;

    friend bool operator==(const LoopPosition&, const LoopPosition&) = default;
    friend bool operator<(const LoopPosition& a, const LoopPosition& b) {
        return a.edge != b.edge ? a.edge < b.edge : a.param < b.param;
    }
};

struct IntersectionDatum {
    LoopPosition first;
    LoopPosition second;
    Point point;
    /// Sign of det(tangent of first, tangent of second), scaled by the frozen geometric sign convention.
    int sign = 0;
};

/// Transverse intersections of two loops, in no particular geometric meaning of order
/// (sorted by position on the first loop).
std::vector<IntersectionDatum> intersections(const PolylineLoop& a, const PolylineLoop& b);
/// Self-intersections, each double point listed twice with roles swapped and signs negated.
std::vector<IntersectionDatum> self_intersections(const PolylineLoop& a);
/// Total signed turning of the tangent, in full turns.
int rotation_number(const PolylineLoop& a);

/// Throws GenericityError if the loop touches a puncture.
void check_avoids_punctures(const PolylineLoop& a, const Configuration& cfg);

}  // namespace gtf
