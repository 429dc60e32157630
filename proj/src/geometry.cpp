#include "gtf/geometry.hpp"

#include <algorithm>
#include <optional>

#include "gtf/calibration.hpp"
#include "gtf/errors.hpp"

namespace gtf {

Point operator+(const Point& a, const Point& b) { return {a.x + b.x, a.y + b.y}; }
Point operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Point operator*(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }
Rational cross(const Point& a, const Point& b) { return a.x * b.y - a.y * b.x; }
Rational dot(const Point& a, const Point& b) { return a.x * b.x + a.y * b.y; }
std::string to_string(const Point& p) { return "(" + format_rational(p.x) + ", " + format_rational(p.y) + ")"; }

Configuration::Configuration(std::vector<Point> punctures) : punctures_(std::move(punctures)) {
    if (punctures_.empty()) throw DomainError("configuration needs at least one puncture");
    for (std::size_t i = 0; i < punctures_.size(); ++i)
        for (std::size_t j = i + 1; j < punctures_.size(); ++j) {
            if (punctures_[i] == punctures_[j])
                throw DomainError("punctures z" + std::to_string(i + 1) + " and z" + std::to_string(j + 1) +
                                  " coincide");
            if (punctures_[i].x == punctures_[j].x)
                throw GenericityError("punctures z" + std::to_string(i + 1) + " and z" + std::to_string(j + 1) +
                                      " share x = " + format_rational(punctures_[i].x) +
                                      "; shift one of them horizontally");
        }
}

std::vector<Complex> Configuration::complex_view() const {
    std::vector<Complex> out;
    for (const auto& p : punctures_) out.push_back(p.to_complex());
    return out;
}

PolylineLoop::PolylineLoop(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 3) throw DomainError("a polyline loop needs at least 3 vertices");
    for (std::size_t k = 0; k < vertices_.size(); ++k)
        if (vertices_[k] == vertex(k + 1))
            throw GenericityError("zero-length edge at vertex " + std::to_string(k) + " " + to_string(vertices_[k]));
}

PolylineLoop PolylineLoop::reversed() const {
    std::vector<Point> v(vertices_.rbegin(), vertices_.rend());
    return PolylineLoop(std::move(v));
}

namespace {
Point affine(const Point& p, const Rational& ar, const Rational& ai, const Rational& br, const Rational& bi) {
    return {ar * p.x - ai * p.y + br, ai * p.x + ar * p.y + bi};
}
}  // namespace

PolylineLoop PolylineLoop::transformed(const Rational& ar, const Rational& ai, const Rational& br,
                                       const Rational& bi) const {
    if (sgn(ar) == 0 && sgn(ai) == 0) throw DomainError("affine map needs a ≠ 0");
    std::vector<Point> v;
    for (const auto& p : vertices_) v.push_back(affine(p, ar, ai, br, bi));
    return PolylineLoop(std::move(v));
}

Configuration transformed(const Configuration& cfg, const Rational& ar, const Rational& ai, const Rational& br,
                          const Rational& bi) {
    if (sgn(ar) == 0 && sgn(ai) == 0) throw DomainError("affine map needs a ≠ 0");
    std::vector<Point> v;
    for (const auto& p : cfg.punctures()) v.push_back(affine(p, ar, ai, br, bi));
    return Configuration(std::move(v));
}

PolylineLoop PolylineLoop::subdivided() const {
    std::vector<Point> v;
    const Rational half(1, 2);
    for (std::size_t k = 0; k < vertices_.size(); ++k) {
        v.push_back(vertices_[k]);
        v.push_back(half * (vertices_[k] + vertex(k + 1)));
    }
    return PolylineLoop(std::move(v));
}

std::vector<Complex> PolylineLoop::complex_view() const {
    std::vector<Complex> out;
    for (const auto& p : vertices_) out.push_back(p.to_complex());
    return out;
}

namespace {

struct Hit {
    Rational t;
    Rational u;
    int det_sign;
};

// Intersection of edge p0→p1 with edge q0→q1. `shared` marks adjacent edges meeting at p1 == q0.
std::optional<Hit> segment_hit(const Point& p0, const Point& p1, const Point& q0, const Point& q1, bool shared,
                               const char* context) {
    const Point r = p1 - p0;
    const Point s = q1 - q0;
    const Rational d = cross(r, s);
    const Point w = q0 - p0;
    if (sgn(d) == 0) {
        if (sgn(cross(w, r)) != 0) return std::nullopt;  // parallel, disjoint
        const Rational rr = dot(r, r);
        Rational t0 = dot(w, r) / rr;
        Rational t1 = dot(q1 - p0, r) / rr;
        if (t0 > t1) std::swap(t0, t1);
        const Rational lo = std::max(t0, Rational(0));
        const Rational hi = std::min(t1, Rational(1));
        if (lo > hi) return std::nullopt;
        if (shared && lo == hi) return std::nullopt;  // straight continuation through the shared vertex
        throw GenericityError(std::string(context) + ": collinear overlapping edges near " + to_string(p0));
    }
    const Rational t = cross(w, s) / d;
    const Rational u = cross(w, r) / d;
    if (t < 0 || t > 1 || u < 0 || u > 1) return std::nullopt;
    if (shared && t == 1 && sgn(u) == 0) return std::nullopt;
    if (t == 0 || t == 1 || sgn(u) == 0 || u == 1)
        throw GenericityError(std::string(context) + ": vertex lies on another edge at " + to_string(p0 + t * r));
    return Hit{t, u, sgn(d)};
}

void reject_repeated_points(const std::vector<IntersectionDatum>& data, const char* context) {
    for (std::size_t i = 0; i < data.size(); ++i)
        for (std::size_t j = i + 1; j < data.size(); ++j)
            if (data[i].point == data[j].point)
                throw GenericityError(std::string(context) + ": more than two strands meet at " +
                                      to_string(data[i].point));
}

bool by_first(const IntersectionDatum& a, const IntersectionDatum& b) {
    return a.first < b.first || (a.first == b.first && a.second < b.second);
}

}  // namespace

std::vector<IntersectionDatum> intersections(const PolylineLoop& a, const PolylineLoop& b) {
    std::vector<IntersectionDatum> out;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) {
            const auto hit =
                segment_hit(a.edge_start(i), a.edge_end(i), b.edge_start(j), b.edge_end(j), false, "intersections");
            if (!hit) continue;
            out.push_back({{i, hit->t},
                           {j, hit->u},
                           a.edge_start(i) + hit->t * (a.edge_end(i) - a.edge_start(i)),
                           calibration::kIntersectionSign * hit->det_sign});
        }
    reject_repeated_points(out, "intersections");
    std::sort(out.begin(), out.end(), by_first);
    return out;
}

std::vector<IntersectionDatum> self_intersections(const PolylineLoop& a) {
    std::vector<IntersectionDatum> once;
    const std::size_t m = a.size();
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const bool i_then_j = j == i + 1;
            const bool j_then_i = i == 0 && j == m - 1;
            std::optional<Hit> hit;
            if (j_then_i) {
                // edge m-1 ends where edge 0 starts
                const auto h = segment_hit(a.edge_start(j), a.edge_end(j), a.edge_start(i), a.edge_end(i), true,
                                           "self_intersections");
                if (h) hit = Hit{h->u, h->t, -h->det_sign};
            } else {
                hit = segment_hit(a.edge_start(i), a.edge_end(i), a.edge_start(j), a.edge_end(j), i_then_j,
                                  "self_intersections");
            }
            if (!hit) continue;
            once.push_back({{i, hit->t},
                            {j, hit->u},
                            a.edge_start(i) + hit->t * (a.edge_end(i) - a.edge_start(i)),
                            calibration::kIntersectionSign * hit->det_sign});
        }
    reject_repeated_points(once, "self_intersections");
    std::vector<IntersectionDatum> out;
    for (const auto& d : once) {
        out.push_back(d);
        out.push_back({d.second, d.first, d.point, -d.sign});
    }
    std::sort(out.begin(), out.end(), by_first);
    return out;
}

int rotation_number(const PolylineLoop& a) {
    // Count signed passages of the tangent direction through the positive x-axis.
    auto upper = [](const Point& d) { return sgn(d.y) > 0 || (sgn(d.y) == 0 && sgn(d.x) > 0); };
    int turns = 0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const Point d0 = a.edge_end(k) - a.edge_start(k);
        const Point d1 = a.edge_end(k + 1) - a.edge_start(k + 1);
        const int c = sgn(cross(d0, d1));
        if (c == 0) {
            if (sgn(dot(d0, d1)) < 0)
                throw GenericityError("rotation_number: edge reverses direction at " + to_string(a.vertex(k + 1)));
            continue;
        }
        if (c > 0 && !upper(d0) && upper(d1)) ++turns;
        if (c < 0 && upper(d0) && !upper(d1)) --turns;
    }
    return turns;
}

void check_avoids_punctures(const PolylineLoop& a, const Configuration& cfg) {
    for (int i = 0; i < cfg.size(); ++i) {
        const Point& z = cfg[i];
        for (std::size_t k = 0; k < a.size(); ++k) {
            const Point p0 = a.edge_start(k), p1 = a.edge_end(k);
            if (sgn(cross(p1 - p0, z - p0)) != 0) continue;
            const Rational t = dot(z - p0, p1 - p0) / dot(p1 - p0, p1 - p0);
            if (t >= 0 && t <= 1)
                throw GenericityError("loop passes through puncture z" + std::to_string(i + 1) + " " + to_string(z));
        }
    }
}

}  // namespace gtf
