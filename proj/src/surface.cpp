#include "gtf/surface.hpp"

#include <algorithm>

#include "gtf/calibration.hpp"
#include "gtf/errors.hpp"

namespace gtf {

std::vector<RayCrossing> ray_crossings(const PolylineLoop& loop, const Configuration& cfg) {
    check_avoids_punctures(loop, cfg);
    std::vector<RayCrossing> out;
    for (std::size_t k = 0; k < loop.size(); ++k) {
        const Point p0 = loop.edge_start(k), p1 = loop.edge_end(k);
        std::vector<RayCrossing> edge_hits;
        for (int i = 0; i < cfg.size(); ++i) {
            const Point& z = cfg[i];
            if (p0.x == z.x && p0.y < z.y)
                throw GenericityError("vertex " + to_string(p0) + " lies on the cut ray of z" + std::to_string(i + 1));
            const int s0 = sgn(p0.x - z.x), s1 = sgn(p1.x - z.x);
            if (s0 * s1 >= 0) continue;
            const Rational t = (z.x - p0.x) / (p1.x - p0.x);
            const Rational y = p0.y + t * (p1.y - p0.y);
            if (y < z.y) edge_hits.push_back({{k, t}, s1 > 0 ? i + 1 : -(i + 1)});
        }
        std::sort(edge_hits.begin(), edge_hits.end(),
                  [](const RayCrossing& a, const RayCrossing& b) { return a.position.param < b.position.param; });
        out.insert(out.end(), edge_hits.begin(), edge_hits.end());
    }
    return out;
}

ConjClass word_of_loop(const PolylineLoop& loop, const Configuration& cfg) {
    std::vector<int> letters;
    for (const auto& c : ray_crossings(loop, cfg)) letters.push_back(c.letter);
    return ConjClass::of(std::move(letters));
}

namespace {

// Letters met strictly after `from` and strictly before `to`, going forward cyclically.
// With from == to the whole loop is read starting at that position.
std::vector<int> letters_between(const std::vector<RayCrossing>& crossings, const LoopPosition& from,
                                 const LoopPosition& to) {
    std::vector<int> out;
    const bool wraps = !(from < to);
    for (const auto& c : crossings)
        if (from < c.position && (wraps || c.position < to)) out.push_back(c.letter);
    if (wraps)
        for (const auto& c : crossings)
            if (c.position < to) out.push_back(c.letter);
    return out;
}

void reject_points_on_rays(const std::vector<IntersectionDatum>& data, const Configuration& cfg) {
    for (const auto& d : data)
        for (int i = 0; i < cfg.size(); ++i)
            if (d.point.x == cfg[i].x && d.point.y < cfg[i].y)
                throw GenericityError("intersection point " + to_string(d.point) + " lies on the cut ray of z" +
                                      std::to_string(i + 1));
}

}  // namespace

ClassCombination goldman_bracket_geometric(const PolylineLoop& a, const PolylineLoop& b, const Configuration& cfg) {
    const auto ca = ray_crossings(a, cfg);
    const auto cb = ray_crossings(b, cfg);
    const auto hits = intersections(a, b);
    reject_points_on_rays(hits, cfg);
    ClassCombination out;
    for (const auto& h : hits) {
        auto letters = letters_between(ca, h.first, h.first);
        const auto tail = letters_between(cb, h.second, h.second);
        letters.insert(letters.end(), tail.begin(), tail.end());
        add_term(out, ConjClass::of(std::move(letters)), h.sign);
    }
    return out;
}

ClassPairCombination CobracketValue::total() const {
    ClassPairCombination out = pairs;
    const long long r = static_cast<long long>(rotation) * calibration::kRotationSign;
    add_term(out, ConjClass{}, loop_class, r);
    add_term(out, loop_class, ConjClass{}, -r);
    return out;
}

CobracketValue turaev_cobracket_geometric(const PolylineLoop& a, const Configuration& cfg) {
    const auto crossings = ray_crossings(a, cfg);
    const auto selfs = self_intersections(a);
    reject_points_on_rays(selfs, cfg);
    CobracketValue out;
    for (const auto& d : selfs)
        add_term(out.pairs, ConjClass::of(letters_between(crossings, d.first, d.second)),
                 ConjClass::of(letters_between(crossings, d.second, d.first)), d.sign);
    out.rotation = rotation_number(a);
    std::vector<int> all;
    for (const auto& c : crossings) all.push_back(c.letter);
    out.loop_class = ConjClass::of(std::move(all));
    return out;
}

// ---------------------------------------------------------------------------
// Synthesis.
//
// Each letter becomes a strand: from a horizontal connector above every
// puncture, a vertical stem drops to a rectangular head around the puncture
// (counterclockwise for γ_i, clockwise for γ_i^{-1}) whose bottom side crosses
// the cut ray once, and a second stem climbs back to the next connector.
// Every vertical edge gets its own x and every horizontal edge its own y, so
// all contacts are transverse double points away from the rays.

namespace {

struct Frame {
    Rational radius;  // heads stay within this distance of their puncture
    Rational x_min, y_min, y_max;
};

Frame frame_of(const Configuration& cfg) {
    Frame f;
    f.x_min = f.y_min = f.y_max = Rational(0);
    std::vector<Rational> xs;
    for (const auto& p : cfg.punctures()) xs.push_back(p.x);
    std::sort(xs.begin(), xs.end());
    f.radius = Rational(1);
    for (std::size_t k = 1; k < xs.size(); ++k) f.radius = std::min(f.radius, Rational((xs[k] - xs[k - 1]) / 4));
    f.x_min = xs.front();
    f.y_min = f.y_max = cfg[0].y;
    for (const auto& p : cfg.punctures()) {
        f.y_min = std::min(f.y_min, p.y);
        f.y_max = std::max(f.y_max, p.y);
    }
    return f;
}

Rational rq(long num, long den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

PolylineLoop build_loop(std::span<const int> letters, const Configuration& cfg, const Frame& fr, int slot0,
                        int slots, const Rational& theta) {
    const Rational& R = fr.radius;
    auto frac = [&](int slot) -> Rational { return (Rational(slot + 1) + theta) / Rational(slots + 2); };
    std::vector<Point> v;
    if (letters.empty()) {
        const Rational f = frac(slot0);
        const Rational left = fr.x_min - R * (2 + f), right = fr.x_min - R * (1 + f / 4);
        const Rational bottom = fr.y_min - R * (1 + f), top = fr.y_max + R * (rq(11, 10) + f);
        v = {{left, bottom}, {right, bottom}, {right, top}, {left, top}};
        return PolylineLoop(std::move(v));
    }
    const int k_count = static_cast<int>(letters.size());
    auto height = [&](int k) -> Rational { return fr.y_max + R * (rq(11, 10) + frac(slot0 + (k % k_count))); };
    for (int k = 0; k < k_count; ++k) {
        const int letter = letters[static_cast<std::size_t>(k)];
        const int i = std::abs(letter);
        if (i < 1 || i > cfg.size())
            throw DomainError("letter " + std::to_string(letter) + " names no puncture of the configuration");
        const Point& z = cfg[i - 1];
        const Rational f = frac(slot0 + k);
        const Rational s = letter > 0 ? Rational(1) : Rational(-1);  // mirror for inverse letters
        const Rational c_down = R * (rq(1, 10) + f / 10), c_up = R * (rq(3, 10) + f / 10);
        const Rational side = R * (rq(5, 10) + f / 10), far = R * (rq(7, 10) + f / 10);
        const Rational arrive = R * (rq(6, 10) + 3 * f / 10), close = R * (rq(2, 10) + 3 * f / 10);
        const Rational below = R * (rq(3, 10) + 6 * f / 10);
        const Rational xd = z.x + s * c_down, xu = z.x + s * c_up;
        v.push_back({xd, height(k)});
        v.push_back({xd, z.y + arrive});
        v.push_back({z.x - s * side, z.y + arrive});
        v.push_back({z.x - s * side, z.y - below});
        v.push_back({z.x + s * far, z.y - below});
        v.push_back({z.x + s * far, z.y + close});
        v.push_back({xu, z.y + close});
        v.push_back({xu, height(k + 1)});
    }
    return PolylineLoop(std::move(v));
}

Rational jitter(std::uint32_t variant, int attempt) {
    const long step = static_cast<long>((variant * 37u + static_cast<std::uint32_t>(attempt) * 11u) % 97u);
    return rq(step, 194);
}

std::vector<PolylineLoop> synthesize(std::span<const std::vector<int>> words, const Configuration& cfg,
                                     const SynthesisSchedule& schedule) {
    const Frame fr = frame_of(cfg);
    int slots = 0;
    for (const auto& w : words) slots += std::max<int>(1, static_cast<int>(w.size()));
    std::string last_failure = "no attempts made";
    for (int attempt = 0; attempt < schedule.max_attempts; ++attempt) {
        const Rational theta = jitter(schedule.variant, attempt);
        std::vector<PolylineLoop> loops;
        try {
            int slot = 0;
            for (const auto& w : words) {
                loops.push_back(build_loop(w, cfg, fr, slot, slots, theta));
                slot += std::max<int>(1, static_cast<int>(w.size()));
            }
            for (std::size_t a = 0; a < loops.size(); ++a) {
                if (word_of_loop(loops[a], cfg) != ConjClass::of(words[a]))
                    throw GenericityError("synthesized loop does not reproduce its word");
                reject_points_on_rays(self_intersections(loops[a]), cfg);
                for (std::size_t b = a + 1; b < loops.size(); ++b)
                    reject_points_on_rays(intersections(loops[a], loops[b]), cfg);
            }
            return loops;
        } catch (const GenericityError& e) {
            last_failure = e.what();
        }
    }
    throw SynthesisError("could not synthesize generic loops after " + std::to_string(schedule.max_attempts) +
                         " attempts: " + last_failure);
}

}  // namespace

PolylineLoop loop_from_letters(std::span<const int> letters, const Configuration& cfg,
                               const SynthesisSchedule& schedule) {
    const std::vector<int> w(letters.begin(), letters.end());
    return synthesize(std::span<const std::vector<int>>(&w, 1), cfg, schedule).front();
}

PolylineLoop loop_from_word(const ConjClass& w, const Configuration& cfg, const SynthesisSchedule& schedule) {
    return loop_from_letters(w.letters(), cfg, schedule);
}

std::vector<PolylineLoop> loops_from_words(std::span<const ConjClass> words, const Configuration& cfg,
                                           const SynthesisSchedule& schedule) {
    std::vector<std::vector<int>> ws;
    for (const auto& w : words) ws.push_back(w.letters());
    return synthesize(ws, cfg, schedule);
}

}  // namespace gtf
