#include "doctest.h"
#include "gtf/fixtures.hpp"
#include "gtf/calibration.hpp"
#include "gtf/errors.hpp"
#include "support.hpp"

using namespace gtf;
using namespace gtf::fixtures;

namespace {

ConjClass cls(std::vector<int> letters) { return ConjClass::of(std::move(letters)); }

// Vertices of a loop walked once from the point at `pos` back to just before it.
std::vector<Point> walk_from(const PolylineLoop& loop, const LoopPosition& pos, const Point& p,
                             const LoopPosition* stop = nullptr) {
    std::vector<Point> out{p};
    const std::size_t m = loop.size();
    if (!stop) {
        for (std::size_t s = 1; s <= m; ++s) {
            const Point& v = loop.vertex(pos.edge + s);
            if (!(s == m && sgn(pos.param) == 0)) out.push_back(v);
        }
        return out;
    }
    // walk until the edge containing `stop`
    std::size_t e = pos.edge;
    bool first = true;
    while (true) {
        if (e % m == stop->edge && (!first || pos < *stop)) break;
        out.push_back(loop.vertex(e + 1));
        ++e;
        first = false;
    }
    return out;
}

std::vector<Point> dedupe(std::vector<Point> v) {
    std::vector<Point> out;
    for (const auto& p : v)
        if (out.empty() || !(out.back() == p)) out.push_back(p);
    while (out.size() > 1 && out.front() == out.back()) out.pop_back();
    return out;
}

int double_det_sign(const PolylineLoop& a, std::size_t ea, const PolylineLoop& b, std::size_t eb) {
    const Complex da = a.edge_end(ea).to_complex() - a.edge_start(ea).to_complex();
    const Complex db = b.edge_end(eb).to_complex() - b.edge_start(eb).to_complex();
    const double d = da.real() * db.imag() - da.imag() * db.real();
    return d > 0 ? 1 : -1;
}

// Oracle: build each concatenated polyline explicitly and read its word.
ClassCombination bracket_oracle(const PolylineLoop& a, const PolylineLoop& b, const Configuration& cfg) {
    ClassCombination out;
    for (const auto& h : intersections(a, b)) {
        auto v = walk_from(a, h.first, h.point);
        const auto vb = walk_from(b, h.second, h.point);
        v.insert(v.end(), vb.begin(), vb.end());
        const int eps = calibration::kIntersectionSign * double_det_sign(a, h.first.edge, b, h.second.edge);
        add_term(out, word_of_loop(PolylineLoop(dedupe(v)), cfg), eps);
    }
    return out;
}

ClassPairCombination cobracket_pairs_oracle(const PolylineLoop& a, const Configuration& cfg) {
    ClassPairCombination out;
    for (const auto& d : self_intersections(a)) {
        const auto left = dedupe(walk_from(a, d.first, d.point, &d.second));
        const auto right = dedupe(walk_from(a, d.second, d.point, &d.first));
        const int eps = calibration::kIntersectionSign * double_det_sign(a, d.first.edge, a, d.second.edge);
        auto word_of = [&](const std::vector<Point>& v) {
            // a two-point "loop" is a degenerate back-and-forth segment: trivial class
            return v.size() < 3 ? ConjClass{} : word_of_loop(PolylineLoop(v), cfg);
        };
        add_term(out, word_of(left), word_of(right), eps);
    }
    return out;
}

ClassCombination negated(ClassCombination c) {
    for (auto& [k, v] : c) v = -v;
    return c;
}

}  // namespace

TEST_CASE("group words and conjugacy classes") {
    CHECK(GroupWord::reduce({1, 2, -2, 1}).letters() == std::vector<int>{1, 1});
    CHECK(GroupWord::reduce({1, -1}).is_identity());
    CHECK(cls({1, 2, -1}) == cls({2}));
    CHECK(cls({2, 1}) == cls({1, 2}));
    CHECK(cls({-1, 2, 1}).letters() == std::vector<int>{2});
    CHECK(cls({1, 2}).inverse() == cls({-2, -1}));
    CHECK_THROWS_AS(GroupWord::reduce({0}), DomainError);
}

TEST_CASE("configuration validation") {
    CHECK_THROWS_AS(Configuration({pt(0, 0), pt(0, 1)}), GenericityError);
    CHECK_THROWS_AS(Configuration({pt(1, 1), pt(1, 1)}), DomainError);
    CHECK_THROWS_AS(Configuration(std::vector<Point>{}), DomainError);
    CHECK_THROWS_AS(PolylineLoop({pt(0, 0), pt(1, 0)}), DomainError);
    CHECK_THROWS_AS(PolylineLoop({pt(0, 0), pt(1, 0), pt(1, 0)}), GenericityError);
}

TEST_CASE("word_of_loop examples") {
    const Configuration cfg({pt(0, 0), pt(5, 0)});
    const PolylineLoop tri({pt(-1, -1), pt(2, -1), pt(0, 2)});
    CHECK(word_of_loop(tri, cfg) == cls({1}));
    CHECK(word_of_loop(tri.reversed(), cfg) == cls({-1}));
    const PolylineLoop away({pt(10, 10), pt(11, 10), pt(10, 11)});
    CHECK(word_of_loop(away, cfg).is_trivial());
    const Configuration one({{r(1, 7), r(1, 11)}});
    CHECK(word_of_loop(doubly_wound(pt(0, 0), r(1), r(1, 20)), one) == cls({1, 1}));
    CHECK(word_of_loop(figure_eight(r(1)), figure_eight_punctures()) == cls({1, -2}));
}

TEST_CASE("word_of_loop rejects degenerate crossings") {
    const Configuration cfg({pt(0, 0)});
    // vertex on the cut ray
    CHECK_THROWS_AS(word_of_loop(PolylineLoop({pt(0, -1), pt(1, 1), pt(-1, 1)}), cfg), GenericityError);
    // edge through the puncture
    CHECK_THROWS_AS(word_of_loop(PolylineLoop({pt(-1, 0), pt(1, 0), pt(0, 2)}), cfg), GenericityError);
    // vertex at the puncture
    CHECK_THROWS_AS(word_of_loop(PolylineLoop({pt(0, 0), pt(1, 1), pt(-1, 1)}), cfg), GenericityError);
    // vertex directly above the puncture is fine
    CHECK(word_of_loop(PolylineLoop({pt(0, 1), pt(-1, -1), pt(1, -1)}), cfg) == cls({1}));
}

TEST_CASE("intersections") {
    const auto a = octagon(pt(0, 0), r(1));
    CHECK(intersections(a, octagon(pt(10, 0), r(1))).empty());
    // two triangles crossing in exactly two points
    const PolylineLoop t1({pt(0, 0), pt(4, 0), pt(2, 3)});
    const PolylineLoop t2({pt(2, 1), pt(6, 1), pt(4, 4)});
    const auto hits = intersections(t1, t2);
    REQUIRE(hits.size() == 2);
    CHECK(hits[0].sign + hits[1].sign == 0);
    for (const auto& h : hits)
        CHECK(h.sign == calibration::kIntersectionSign * double_det_sign(t1, h.first.edge, t2, h.second.edge));
    // shared vertex is a degenerate contact
    CHECK_THROWS_AS(intersections(t1, PolylineLoop({pt(4, 0), pt(6, -1), pt(6, 1)})), GenericityError);
    // collinear overlap
    CHECK_THROWS_AS(intersections(t1, PolylineLoop({pt(1, 0), pt(3, 0), pt(2, -2)})), GenericityError);
}

TEST_CASE("self_intersections") {
    CHECK(self_intersections(octagon(pt(0, 0), r(1))).empty());
    const auto f8 = self_intersections(figure_eight(r(1)));
    REQUIRE(f8.size() == 2);
    CHECK(f8[0].point == f8[1].point);
    CHECK(f8[0].sign == -f8[1].sign);
    CHECK(f8[0].first == f8[1].second);
    const auto dw = self_intersections(doubly_wound(pt(0, 0), r(1), r(1, 20)));
    CHECK(dw.size() == 2);
}

TEST_CASE("rotation numbers") {
    CHECK(rotation_number(PolylineLoop({pt(0, 0), pt(1, 0), pt(0, 1)})) == 1);
    CHECK(rotation_number(PolylineLoop({pt(0, 0), pt(0, 1), pt(1, 1), pt(1, 0)})) == -1);
    CHECK(rotation_number(figure_eight(r(1))) == 0);
    CHECK(rotation_number(doubly_wound(pt(0, 0), r(1), r(1, 20))) == 2);
    CHECK(rotation_number(doubly_wound(pt(0, 0), r(1), r(1, 20)).reversed()) == -2);
    CHECK_THROWS_AS(rotation_number(PolylineLoop({pt(0, 0), pt(2, 0), pt(1, 0), pt(1, 1)})), GenericityError);
}

TEST_CASE("goldman bracket examples") {
    const Configuration cfg = two_punctures();
    const Point off{r(1, 10), r(1, 7)};
    CHECK(goldman_bracket_geometric(octagon(cfg[0] + off, r(1, 2)), octagon(cfg[1] + off, r(1, 2)), cfg).empty());
    CHECK(goldman_bracket_geometric(octagon(cfg[0] + off, r(1, 3)), octagon(cfg[0] + off, r(2, 3)), cfg).empty());
    const auto circle = calibration_circle();
    const auto ell = calibration_ellipse();
    REQUIRE(intersections(circle, ell).size() == 2);
    const auto br = goldman_bracket_geometric(circle, ell, cfg);
    CHECK(br == bracket_oracle(circle, ell, cfg));
    CHECK(goldman_bracket_geometric(ell, circle, cfg) == negated(br));
}

TEST_CASE("turaev cobracket examples") {
    const Configuration cfg = two_punctures();
    const auto circle = octagon({r(1, 10), r(1, 7)}, r(1));
    auto embedded = turaev_cobracket_geometric(circle, cfg);
    CHECK(embedded.pairs.empty());
    CHECK(embedded.rotation == 1);
    CHECK(embedded.loop_class == cls({1}));
    ClassPairCombination expect;
    add_term(expect, ConjClass{}, cls({1}), calibration::kRotationSign);
    add_term(expect, cls({1}), ConjClass{}, -calibration::kRotationSign);
    CHECK(embedded.total() == expect);

    CHECK(turaev_cobracket_geometric(octagon(pt(-5, 5), r(1)), cfg).total().empty());

    const Configuration one({{r(1, 7), r(1, 11)}});
    const auto dw = doubly_wound(pt(0, 0), r(1), r(1, 20));
    const auto d = turaev_cobracket_geometric(dw, one);
    CHECK(d.pairs.empty());  // both sub-loops are γ1, the two orders cancel
    CHECK(d.rotation == 2);
    CHECK(d.pairs == cobracket_pairs_oracle(dw, one));

    const auto f8 = figure_eight(r(1));
    const auto cfg8 = figure_eight_punctures();
    const auto d8 = turaev_cobracket_geometric(f8, cfg8);
    CHECK(d8.pairs == cobracket_pairs_oracle(f8, cfg8));
    CHECK(d8.pairs.size() == 2);
    CHECK(d8.rotation == 0);
}

TEST_CASE("loop_from_word examples") {
    const Configuration cfg({pt(0, 0), pt(3, 1), {r(-2), r(1, 2)}});
    for (const auto& w : {cls({1}), cls({1, 2}), cls({1, 2, -1}), cls({}), cls({-3, -3, 2, 1, -2})}) {
        const auto loop = loop_from_word(w, cfg);
        CHECK(word_of_loop(loop, cfg) == w);
        CHECK_NOTHROW(self_intersections(loop));
    }
    CHECK(word_of_loop(loop_from_word(cls({1, 2, -1}), cfg), cfg) == cls({2}));
    CHECK_THROWS_AS(loop_from_word(cls({4}), cfg), DomainError);
}

TEST_CASE("loop synthesis on random words stays generic") {
    gtf::testing::Gen g(17);
    const Configuration cfg({pt(0, 0), {r(1), r(1, 100)}, {r(2), r(1, 3)}});
    for (int t = 0; t < 40; ++t) {
        std::vector<int> letters(static_cast<std::size_t>(g.uniform(0, 6)));
        for (auto& l : letters) l = g.uniform(1, 3) * (g.uniform(0, 1) ? 1 : -1);
        const ConjClass w = cls(letters);
        const auto loop = loop_from_word(w, cfg, {.variant = static_cast<std::uint32_t>(t)});
        CHECK(word_of_loop(loop, cfg) == w);
        const auto raw = loop_from_letters(letters, cfg);
        CHECK(word_of_loop(raw, cfg) == w);
    }
    std::vector<ConjClass> ws{cls({1, 2}), cls({1, 2}), cls({-3, 1}), cls({})};
    const auto loops = loops_from_words(ws, cfg);
    for (std::size_t a = 0; a < loops.size(); ++a) {
        CHECK(word_of_loop(loops[a], cfg) == ws[a]);
        for (std::size_t b = a + 1; b < loops.size(); ++b) CHECK_NOTHROW(goldman_bracket_geometric(loops[a], loops[b], cfg));
    }
}

TEST_CASE("invariance under subdivision and positive affine maps") {
    const Configuration cfg = two_punctures();
    const std::vector<ConjClass> ws{cls({1, 2, 2}), cls({-1, 2})};
    const auto loops = loops_from_words(ws, cfg);
    const auto br = goldman_bracket_geometric(loops[0], loops[1], cfg);
    const auto cb = turaev_cobracket_geometric(loops[0], cfg);
    CHECK(goldman_bracket_geometric(loops[0].subdivided(), loops[1], cfg) == br);
    CHECK(word_of_loop(loops[0].subdivided(), cfg) == ws[0]);
    for (const auto& [a, b] : std::vector<std::pair<Rational, Rational>>{{r(2), r(0)}, {r(1, 3), r(5)}, {r(7, 2), r(-1, 9)}}) {
        const auto c2 = transformed(cfg, a, 0, b, b / 2);
        const auto l0 = loops[0].transformed(a, 0, b, b / 2), l1 = loops[1].transformed(a, 0, b, b / 2);
        CHECK(word_of_loop(l0, c2) == ws[0]);
        CHECK(goldman_bracket_geometric(l0, l1, c2) == br);
        const auto cb2 = turaev_cobracket_geometric(l0, c2);
        CHECK(cb2.total() == cb.total());
        CHECK(rotation_number(l0) == rotation_number(loops[0]));
    }
}
