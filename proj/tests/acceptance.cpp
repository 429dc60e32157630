// Acceptance run: one PASS/FAIL line per criterion; exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <thread>

#include "gtf/fixtures.hpp"
#include "gtf/formality.hpp"
#include "gtf/isomonodromy.hpp"
#include "gtf/verify.hpp"

using namespace gtf;
using namespace gtf::fixtures;
using C = Complex;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, f, args...);
    return buf;
}

int workers() { return static_cast<int>(std::max(1u, std::min(8u, std::thread::hardware_concurrency()))); }

RunConfig base_config() {
    RunConfig rc;
    rc.order = 4;
    rc.tol = 1e-6;
    rc.seed = 20240917;
    rc.workers = workers();
    return rc;
}

Outcome from_report(const VerificationReport& r, std::string extra = {}) {
    std::string d = fmt("%zu/%zu cases, max deviation %.3e", r.passed(), r.cases.size(), r.max_deviation());
    if (!extra.empty()) d += ", " + extra;
    for (const auto& c : r.cases)
        if (!c.pass) {
            d += "; first failure: " + c.label + (c.error.empty() ? "" : " (" + c.error + ")");
            break;
        }
    return {r.pass(), d};
}

std::size_t count_prefix(const VerificationReport& r, const std::string& prefix) {
    std::size_t k = 0;
    for (const auto& c : r.cases)
        if (c.label.rfind(prefix, 0) == 0) ++k;
    return k;
}

Outcome formality_bracket() {
    const auto r = verify_formality_bracket(base_config());
    const auto n2 = count_prefix(r, "n=2 random"), n3 = count_prefix(r, "n=3 random");
    auto out = from_report(r, fmt("%zu pairs at n=2, %zu at n=3", n2, n3));
    out.pass = out.pass && n2 >= 20 && n3 >= 20;
    return out;
}

Outcome formality_cobracket() {
    const auto r = verify_formality_cobracket(base_config());
    const bool calib = count_prefix(r, "doubly wound") == 1 && count_prefix(r, "figure eight") == 1 &&
                       count_prefix(r, "embedded circle") == 1;
    auto out = from_report(r, calib ? "calibration curves included" : "calibration curves missing");
    out.pass = out.pass && calib && r.cases.size() >= 20;
    return out;
}

Outcome axioms() {
    RunConfig rc = base_config();
    rc.cases = 200;
    rc.max_degree = 5;
    const auto r = verify_axioms(rc);
    auto out = from_report(r, "exact rational arithmetic");
    out.pass = out.pass && r.cases.size() == 200 && r.max_deviation() == 0.0;
    return out;
}

Outcome holonomy_sanity() {
    HolonomyOptions opts;
    opts.tol = 1e-11;
    const auto cfg = three_punctures();
    double worst_homotopy = 0.0, worst_grouplike = 0.0, worst_closed_form = 0.0;
    int pairs = 0;
    auto grouplike_defect = [](const HolonomySeries& h) { return max_abs_diff(coproduct(h), tensor(h, h)); };

    // Paths with common endpoints passing above the punctures; the region
    // between the two lies in y >= 1 and contains no puncture.
    const ConnectionData conn(cfg, 4);
    for (int k = 0; k < 5; ++k) {
        const C a(-1.0, -1.0 - 0.1 * k), b(5.0, -1.0 + 0.1 * k);
        const std::vector<C> p1{a, {-1.0, 1.0}, {5.0, 1.0}, b};
        const std::vector<C> p2{a, {-1.0, 1.5 + 0.2 * k}, {2.0, 3.0 + 0.1 * k}, {5.0, 1.5}, b};
        const auto h1 = path_holonomy(p1, conn, opts), h2 = path_holonomy(p2, conn, opts);
        worst_homotopy = std::max(worst_homotopy, max_abs_diff(h1, h2));
        worst_grouplike = std::max({worst_grouplike, grouplike_defect(h1), grouplike_defect(h2)});
        ++pairs;
    }
    // Freely homotopic loops: inserted cancelling letters and a different
    // representative family; compared through |W|.
    const std::vector<std::pair<std::vector<int>, std::vector<int>>> loops = {
        {{1, 2}, {1, 3, -3, 2}},
        {{1, -2, 3}, {1, -2, 2, -2, 3}},
        {{2, 2, -1}, {2, 1, -1, 2, -1}},
        {{1, 3, -2}, {3, -2, 1}},
        {{-3, 1, 2, 2}, {-3, 1, 2, 2}}};
    for (std::size_t k = 0; k < loops.size(); ++k) {
        SynthesisSchedule other;
        other.variant = static_cast<std::uint32_t>(k + 3);
        const auto l1 = loop_from_letters(loops[k].first, cfg);
        const auto l2 = loop_from_letters(loops[k].second, cfg, other);
        const auto h1 = loop_holonomy(l1, conn, opts), h2 = loop_holonomy(l2, conn, opts);
        worst_homotopy = std::max(worst_homotopy, max_abs_diff(trace(h1), trace(h2)));
        worst_grouplike = std::max({worst_grouplike, grouplike_defect(h1), grouplike_defect(h2)});
        ++pairs;
    }
    for (int order = 1; order <= 6; ++order) {
        const ConnectionData single(std::vector<C>{{0.3, -0.2}}, order);
        const auto h = loop_holonomy(octagon({r(3, 10), r(-1, 5)}, r(1, 2)), single, opts);
        worst_closed_form = std::max(worst_closed_form, max_abs_diff(h, exp(generator_series<C>(1, order, 1))));
        worst_grouplike = std::max(worst_grouplike, grouplike_defect(h));
    }
    const bool pass = pairs == 10 && worst_homotopy < 1e-8 && worst_grouplike < 1e-8 && worst_closed_form < 1e-8;
    return {pass, fmt("%d homotopic pairs, max %.3e; group-like defect %.3e; exp(a1) N<=6 max %.3e", pairs,
                      worst_homotopy, worst_grouplike, worst_closed_form)};
}

Outcome kz_associator_checks() {
    HolonomyOptions opts;
    opts.tol = 1e-10;
    const auto phi = kz_associator(4, opts);
    const auto lphi = log(phi);
    const Word x = Word::letter(1), y = Word::letter(2), xy = Word::from_letters({1, 2});
    const double deg1 = std::max(std::abs(lphi.coefficient(x)), std::abs(lphi.coefficient(y)));
    const double comm = std::abs(lphi.coefficient(xy));
    const double p_dep = max_abs_diff(kz_associator(4, opts, 1.0 / 3.0), kz_associator(4, opts, 2.0 / 3.0));
    const bool pass = deg1 < 1e-6 && std::abs(comm - 1.0 / 24.0) < 1e-6 && p_dep < 1e-6;
    return {pass, fmt("degree-1 max %.3e; |xy coefficient of log| = %.12f (1/24 = %.12f); p=1/3 vs 2/3 %.3e", deg1,
                      comm, 1.0 / 24.0, p_dep)};
}

Outcome kv_equivalence() {
    RunConfig rc = base_config();
    rc.tol = 1e-5;
    return from_report(verify_kv_equivalence(rc), "all reduced words of length <= 4");
}

Outcome isomonodromy() {
    RunConfig rc = base_config();
    rc.cases = 5;
    const auto r = verify_isomonodromy(rc);
    double worst_round_trip = 0.0;
    for (const auto& c : r.cases)
        if (c.details.contains("round_trip_deviation"))
            worst_round_trip = std::max(worst_round_trip, c.details["round_trip_deviation"].get<double>());
    return from_report(r, fmt("worst round trip %.3e", worst_round_trip));
}

/// Seeded rational series in the free and cyclic realizations.
struct Source {
    std::mt19937_64 rng;
    int uniform(int lo, int hi) { return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); }
    FreeSeries<Rational> series(int n, int order, int max_deg) {
        FreeSeries<Rational>::Builder b(n, order);
        const int terms = uniform(1, 4);
        for (int t = 0; t < terms; ++t) {
            std::vector<int> letters(static_cast<std::size_t>(uniform(1, max_deg)));
            for (auto& l : letters) l = uniform(1, n);
            int num = uniform(-4, 4);
            b.add(Word::from_letters(letters), ScalarTraits<Rational>::from_ratio(num == 0 ? 1 : num, uniform(1, 3)));
        }
        return std::move(b).build();
    }
};

Outcome algebraic_identities() {
    Source src{std::mt19937_64(515)};
    int central = 0, derivation = 0, commuting = 0, checks = 0;
    for (int t = 0; t < 40; ++t) {
        const int n = 2 + t % 3;
        const int order = 10;
        const auto u = src.series(n, order, 5), v = src.series(n, order, 5);
        ++checks;
        if (central_action_on_cyclic(trace(u)).is_zero()) ++central;
        const int i = src.uniform(1, n);
        int j = src.uniform(1, n - 1);
        if (j >= i) ++j;
        if (ad_tij(i, j, mul(u, v)) == mul(ad_tij(i, j, u), v) + mul(u, ad_tij(i, j, v))) ++derivation;
        const auto w = src.series(4, order, 5);
        const auto lhs = ad_tij(1, 2, ad_tij(3, 4, w)), rhs = ad_tij(3, 4, ad_tij(1, 2, w));
        const auto lhs_c = ad_tij(1, 3, ad_tij(2, 4, trace(w))), rhs_c = ad_tij(2, 4, ad_tij(1, 3, trace(w)));
        if (lhs == rhs && lhs_c == rhs_c) ++commuting;
    }
    const bool pass = central == checks && derivation == checks && commuting == checks;
    return {pass, fmt("central %d/%d, derivation %d/%d, disjoint commutation %d/%d (exact)", central, checks,
                      derivation, checks, commuting, checks)};
}

Outcome gamma_equivariance() {
    HolonomyOptions opts;
    opts.tol = 1e-10;
    const auto cfg = three_punctures();
    struct Affine {
        Rational ar, ai, br, bi;
    };
    const std::vector<Affine> maps = {{r(2), r(0), r(1, 3), r(-1, 2)},
                                      {r(1, 2), r(0), r(-3), r(5, 7)},
                                      {r(3, 5), r(4, 5), r(0), r(0)},
                                      {r(-1), r(1, 9), r(2), r(1)},
                                      {r(1, 7), r(-3, 2), r(-1, 4), r(3)}};
    const std::vector<ConjClass> classes = {ConjClass::of(std::vector<int>{1, 2, -3}),
                                            ConjClass::of(std::vector<int>{2, 2, -1, 3}),
                                            ConjClass::of(std::vector<int>{-1, 3})};
    double worst = 0.0, moved = 0.0;
    for (const auto& c : classes) {
        const auto loop = loop_from_word(c, cfg);
        const auto w0 = trace(loop_holonomy(loop, ConnectionData(cfg, 4), opts));
        for (const auto& m : maps) {
            const auto cfg2 = transformed(cfg, m.ar, m.ai, m.br, m.bi);
            const auto loop2 = loop.transformed(m.ar, m.ai, m.br, m.bi);
            const auto w1 = trace(loop_holonomy(loop2, ConnectionData(cfg2, 4), opts));
            worst = std::max(worst, max_abs_diff(w0, w1));
            // the same loop against unmoved punctures is a different picture
            moved = std::max(moved, max_abs_diff(w0, trace(loop_holonomy(loop2, ConnectionData(cfg, 4), opts))));
        }
    }
    return {worst < 1e-6, fmt("5 maps x %zu loops, max deviation %.3e (control, punctures not moved: %.3e)",
                              classes.size(), worst, moved)};
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"formality, bracket", formality_bracket},
        {"formality, cobracket", formality_cobracket},
        {"necklace Lie bialgebra axioms", axioms},
        {"holonomy sanity", holonomy_sanity},
        {"KZ associator", kz_associator_checks},
        {"equivalence of W, rho_KZ and rho_F", kv_equivalence},
        {"isomonodromy", isomonodromy},
        {"algebraic identities of ad(t_ij)", algebraic_identities},
        {"affine equivariance of |W|", gamma_equivariance}};
    bool all = true;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[k].second();
        } catch (const std::exception& e) {
            o = {false, std::string("error: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("criterion %zu %-38s %s  [%s; %.1fs]\n", k + 1, criteria[k].first, o.pass ? "PASS" : "FAIL",
                    o.detail.c_str(), secs);
        std::fflush(stdout);
        all = all && o.pass;
    }
    std::printf("%s\n", all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
    return all ? 0 : 1;
}
