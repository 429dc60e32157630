#include "gtf/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <memory>
#include <numbers>
#include <random>
#include <thread>

#include "gtf/calibration.hpp"
#include "gtf/fixtures.hpp"
#include "gtf/formality.hpp"
#include "gtf/isomonodromy.hpp"

namespace gtf {

using io::json;

void RunConfig::validate() const {
    if (order < 1) throw DomainError("truncation order must be at least 1");
    if (!(tol > 0.0)) throw DomainError("tolerance must be positive");
    if (workers < 1) throw DomainError("worker count must be at least 1");
    if (cases && *cases < 0) throw DomainError("case count must be non-negative");
    if (max_word_length < 1) throw DomainError("word length cap must be at least 1");
    if (max_degree < 1 || max_degree > kMaxWordLength)
        throw DomainError("degree cap must lie in 1.." + std::to_string(kMaxWordLength));
    if (order + 1 > kMaxWordLength) throw DomainError("truncation order exceeds the supported word length");
}

double RunConfig::holonomy_tol() const { return std::min(1e-9, tol * 1e-3); }

bool VerificationReport::pass() const {
    return std::all_of(cases.begin(), cases.end(), [](const CaseRecord& c) { return c.pass; });
}

std::size_t VerificationReport::passed() const {
    return static_cast<std::size_t>(std::count_if(cases.begin(), cases.end(), [](const CaseRecord& c) { return c.pass; }));
}

double VerificationReport::max_deviation() const {
    double worst = 0.0;
    for (const auto& c : cases)
        if (c.deviation) worst = std::max(worst, *c.deviation);
    return worst;
}

json VerificationReport::to_json() const {
    json conf{{"order", config.order},
              {"tol", config.tol},
              {"seed", config.seed},
              {"max_word_length", config.max_word_length},
              {"max_degree", config.max_degree},
              {"associator", config.associator ? "supplied" : "computed"}};
    conf["cases"] = config.cases ? json(*config.cases) : json("default");
    if (config.punctures) conf["punctures"] = io::to_json(*config.punctures)["punctures"];
    json list = json::array();
    for (std::size_t k = 0; k < cases.size(); ++k) {
        const auto& c = cases[k];
        json rec{{"index", k}, {"label", c.label}, {"inputs", c.inputs}, {"lhs", c.lhs}, {"rhs", c.rhs},
                 {"deviation", c.deviation ? json(*c.deviation) : json(nullptr)}, {"pass", c.pass}};
        if (!c.details.is_null()) rec["details"] = c.details;
        if (!c.error.empty()) rec["error"] = c.error;
        list.push_back(std::move(rec));
    }
    return json{{"suite", suite},
                {"config", std::move(conf)},
                {"calibration",
                 {{"intersection_sign", calibration::kIntersectionSign},
                  {"rotation_sign", calibration::kRotationSign},
                  {"necklace_sign", calibration::kNecklaceSign},
                  {"transport_sign", kTransportSign}}},
                {"cases", std::move(list)},
                {"summary",
                 {{"cases", cases.size()}, {"passed", passed()}, {"max_deviation", max_deviation()}, {"pass", pass()}}}};
}

std::string VerificationReport::summary() const {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s: %zu/%zu cases passed, max deviation %.3e (tol %.1e) %s\n", suite.c_str(),
                  passed(), cases.size(), max_deviation(), config.tol, pass() ? "PASS" : "FAIL");
    std::string out = buf;
    for (std::size_t k = 0; k < cases.size(); ++k) {
        const auto& c = cases[k];
        if (c.pass) continue;
        out += "  FAIL #" + std::to_string(k) + " " + c.label;
        if (!c.error.empty()) {
            out += ": " + c.error;
        } else if (c.deviation) {
            std::snprintf(buf, sizeof buf, ": deviation %.3e", *c.deviation);
            out += buf;
        }
        out += '\n';
    }
    return out;
}

std::vector<CaseRecord> run_cases(const std::vector<CaseTask>& tasks, int workers) {
    std::vector<CaseRecord> out(tasks.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t k = next++; k < tasks.size(); k = next++) {
            CaseRecord& rec = out[k];
            rec.label = tasks[k].label;
            rec.inputs = tasks[k].inputs;
            try {
                tasks[k].evaluate(rec);
            } catch (const std::exception& e) {
                rec.deviation.reset();
                rec.pass = false;
                rec.error = e.what();
            }
        }
    };
    const std::size_t n = std::min<std::size_t>(static_cast<std::size_t>(std::max(workers, 1)), tasks.size());
    if (n <= 1) {
        work();
        return out;
    }
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(work);
    pool.clear();
    return out;
}

std::vector<std::vector<int>> reduced_words(int n, int max_length) {
    std::vector<std::vector<int>> out;
    std::vector<std::vector<int>> frontier{{}};
    for (int len = 1; len <= max_length; ++len) {
        std::vector<std::vector<int>> next;
        for (const auto& w : frontier)
            for (int g = 1; g <= n; ++g)
                for (int s : {1, -1}) {
                    const int l = s * g;
                    if (!w.empty() && w.back() == -l) continue;
                    auto v = w;
                    v.push_back(l);
                    next.push_back(v);
                }
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

namespace {

enum SuiteTag : std::uint64_t { kBracketTag = 1, kCobracketTag = 2, kIsoTag = 3, kAxiomTag = 4 };

std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

bool is_peripheral(const ConjClass& c, int n) {
    if (c.is_trivial()) return true;
    const auto& l = c.letters();
    if (std::all_of(l.begin(), l.end(), [&](int x) { return x == l.front(); })) return true;
    if (l.size() % static_cast<std::size_t>(n) != 0) return false;
    std::vector<int> power;
    for (std::size_t k = 0; k < l.size() / static_cast<std::size_t>(n); ++k)
        for (int g = 1; g <= n; ++g) power.push_back(g);
    const auto outer = ConjClass::of(power);
    return c == outer || c == outer.inverse();
}

class CaseRng {
public:
    CaseRng(std::uint64_t seed, std::uint64_t tag, std::uint64_t group, std::uint64_t index)
        : rng_(splitmix(splitmix(splitmix(seed) ^ tag) ^ (group << 32) ^ index)) {}
    int uniform(int lo, int hi) { return lo + static_cast<int>(rng_() % static_cast<std::uint64_t>(hi - lo + 1)); }
    double uniform_real(double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(rng_() >> 11) * 0x1.0p-53);
    }
    /// A class that is not freely homotopic to a multiple of a boundary
    /// component; those are central for the bracket. With one puncture every
    /// class is peripheral and any nontrivial class is returned.
    ConjClass non_peripheral_class(int n, int max_length) {
        for (;;) {
            std::vector<int> letters(static_cast<std::size_t>(uniform(2, std::max(2, max_length))));
            for (auto& l : letters) l = uniform(1, n) * (uniform(0, 1) ? 1 : -1);
            auto c = ConjClass::of(letters);
            if (n == 1 ? !c.is_trivial() : !is_peripheral(c, n)) return c;
        }
    }
    Rational small_rational() {
        int num = uniform(-5, 5);
        if (num == 0) num = 1;
        return ScalarTraits<Rational>::from_ratio(num, uniform(1, 4));
    }
    CyclicSeries<Rational> cyclic(int n, int order, int min_deg, int max_deg, bool homogeneous) {
        CyclicSeries<Rational>::Builder b(n, order);
        const int d0 = uniform(min_deg, max_deg);
        const int terms = uniform(1, 3);
        for (int t = 0; t < terms; ++t) {
            std::vector<int> letters(static_cast<std::size_t>(homogeneous ? d0 : uniform(min_deg, max_deg)));
            for (auto& l : letters) l = uniform(1, n);
            b.add(CyclicWord::of(Word::from_letters(letters)), small_rational());
        }
        return std::move(b).build();
    }

private:
    std::mt19937_64 rng_;
};

struct NamedConfig {
    std::string name;
    Configuration cfg;
};

std::vector<NamedConfig> formality_configs(const RunConfig& rc) {
    if (rc.punctures) return {{"n=" + std::to_string(rc.punctures->size()), *rc.punctures}};
    return {{"n=2", fixtures::two_punctures()}, {"n=3", fixtures::three_punctures()}};
}

HolonomyOptions holonomy_options(const RunConfig& rc) {
    HolonomyOptions o;
    o.tol = rc.holonomy_tol();
    return o;
}

template <class T>
void fill(CaseRecord& rec, const Residual<T>& res, double tol) {
    rec.lhs = io::to_json(res.geometric);
    rec.rhs = io::to_json(res.algebraic);
    rec.deviation = res.deviation;
    rec.pass = res.deviation < tol;
}

json class_list(std::initializer_list<ConjClass> cs) {
    json out = json::array();
    for (const auto& c : cs) out.push_back(io::to_json(c));
    return out;
}

/// Context shared by the cases of one configuration; construction errors are reported per case.
struct SharedContext {
    std::shared_ptr<const FormalityContext> ctx;
    std::string error;

    const FormalityContext& get() const {
        if (!ctx) throw AccuracyError("generator holonomies unavailable: " + error, 0.0);
        return *ctx;
    }
};

SharedContext make_context(const Configuration& cfg, const RunConfig& rc) {
    try {
        return {std::make_shared<const FormalityContext>(cfg, rc.order, holonomy_options(rc)), {}};
    } catch (const std::exception& e) {
        return {nullptr, e.what()};
    }
}

}  // namespace

VerificationReport verify_formality_bracket(const RunConfig& rc) {
    rc.validate();
    const int per_config = rc.cases.value_or(20);
    std::vector<CaseTask> tasks;
    const double tol = rc.tol;

    if (!rc.punctures) {
        struct Fixed {
            const char* label;
            Configuration cfg;
            PolylineLoop a, b;
        };
        const std::vector<Fixed> fixed = {
            {"disjoint circles", fixtures::two_punctures(), fixtures::left_small_circle(), fixtures::right_small_circle()},
            {"circle and ellipse", fixtures::two_punctures(), fixtures::calibration_circle(),
             fixtures::calibration_ellipse()},
            {"overlapping ellipses", fixtures::three_punctures(), fixtures::left_pair_ellipse(),
             fixtures::right_pair_ellipse()}};
        for (const auto& f : fixed) {
            json inputs{{"configuration", io::to_json(f.cfg)}, {"curves", {io::to_json(f.a), io::to_json(f.b)}}};
            tasks.push_back({f.label, std::move(inputs), [f, rc, tol](CaseRecord& rec) {
                                 const FormalityContext ctx(f.cfg, rc.order, holonomy_options(rc));
                                 fill(rec, ctx.bracket(f.a, f.b), tol);
                                 rec.details = {{"geometric_classes", io::to_json(goldman_bracket_geometric(f.a, f.b, f.cfg))}};
                             }});
        }
    }

    const auto configs = formality_configs(rc);
    for (std::size_t g = 0; g < configs.size(); ++g) {
        const auto shared = make_context(configs[g].cfg, rc);
        const int n = configs[g].cfg.size();
        for (int k = 0; k < per_config; ++k) {
            CaseRng rng(rc.seed, kBracketTag, g, static_cast<std::uint64_t>(k));
            const ConjClass a = rng.non_peripheral_class(n, rc.max_word_length);
            const ConjClass b = rng.non_peripheral_class(n, rc.max_word_length);
            json inputs{{"configuration", io::to_json(configs[g].cfg)}, {"classes", class_list({a, b})}};
            tasks.push_back({configs[g].name + " random #" + std::to_string(k), std::move(inputs),
                             [shared, a, b, k, tol](CaseRecord& rec) {
                                 const auto& ctx = shared.get();
                                 const std::vector<ConjClass> words{a, b};
                                 SynthesisSchedule sched;
                                 sched.variant = static_cast<std::uint32_t>(k);
                                 const auto loops = loops_from_words(words, ctx.configuration(), sched);
                                 fill(rec, ctx.bracket(loops[0], loops[1]), tol);
                                 rec.details = {
                                     {"geometric_classes",
                                      io::to_json(goldman_bracket_geometric(loops[0], loops[1], ctx.configuration()))}};
                             }});
        }
    }
    return {"formality-bracket", rc, run_cases(tasks, rc.workers)};
}

VerificationReport verify_formality_cobracket(const RunConfig& rc) {
    rc.validate();
    const int per_config = rc.cases.value_or(20);
    std::vector<CaseTask> tasks;
    const double tol = rc.tol;

    if (!rc.punctures) {
        struct Fixed {
            const char* label;
            Configuration cfg;
            PolylineLoop loop;
        };
        using fixtures::r;
        const std::vector<Fixed> fixed = {
            {"doubly wound circle", Configuration({{r(1, 7), r(1, 11)}}), fixtures::doubly_wound(fixtures::pt(0, 0), r(1), r(1, 20))},
            {"figure eight", fixtures::figure_eight_punctures(), fixtures::figure_eight(r(1))},
            {"embedded circle", fixtures::two_punctures(), fixtures::calibration_circle()},
            {"embedded ellipse", fixtures::two_punctures(), fixtures::calibration_ellipse()}};
        for (const auto& f : fixed) {
            json inputs{{"configuration", io::to_json(f.cfg)}, {"curves", {io::to_json(f.loop)}}};
            tasks.push_back({f.label, std::move(inputs), [f, rc, tol](CaseRecord& rec) {
                                 const FormalityContext ctx(f.cfg, rc.order, holonomy_options(rc));
                                 fill(rec, ctx.cobracket(f.loop), tol);
                                 rec.details = {{"geometric", io::to_json(turaev_cobracket_geometric(f.loop, f.cfg))}};
                             }});
        }
    }

    const auto configs = formality_configs(rc);
    for (std::size_t g = 0; g < configs.size(); ++g) {
        const auto shared = make_context(configs[g].cfg, rc);
        const int n = configs[g].cfg.size();
        for (int k = 0; k < per_config; ++k) {
            CaseRng rng(rc.seed, kCobracketTag, g, static_cast<std::uint64_t>(k));
            const ConjClass a = rng.non_peripheral_class(n, rc.max_word_length);
            json inputs{{"configuration", io::to_json(configs[g].cfg)}, {"classes", class_list({a})}};
            tasks.push_back({configs[g].name + " random #" + std::to_string(k), std::move(inputs),
                             [shared, a, k, tol](CaseRecord& rec) {
                                 const auto& ctx = shared.get();
                                 SynthesisSchedule sched;
                                 sched.variant = static_cast<std::uint32_t>(k);
                                 const auto loop = loop_from_word(a, ctx.configuration(), sched);
                                 fill(rec, ctx.cobracket(loop), tol);
                                 rec.details = {
                                     {"geometric", io::to_json(turaev_cobracket_geometric(loop, ctx.configuration()))}};
                             }});
        }
    }
    return {"formality-cobracket", rc, run_cases(tasks, rc.workers)};
}

VerificationReport verify_isomonodromy(const RunConfig& rc) {
    rc.validate();
    const int count = rc.cases.value_or(5);
    const Configuration cfg = rc.punctures.value_or(fixtures::three_punctures());
    const int n = cfg.size();
    const double tol = rc.tol;
    const double round_trip_tol = std::min(1e-8, rc.tol);
    std::vector<CaseTask> tasks;
    for (int k = 0; k < count; ++k) {
        CaseRng rng(rc.seed, kIsoTag, 0, static_cast<std::uint64_t>(k));
        const ConjClass c = rng.non_peripheral_class(n, rc.max_word_length);
        // Motion fractions: two legs, each puncture moving to a point at
        // fraction rho < 0.7 of its disk radius.
        std::vector<std::pair<double, double>> legs;
        for (int leg = 0; leg < 2; ++leg)
            for (int i = 0; i < n; ++i)
                legs.emplace_back(rng.uniform_real(0.15, 0.65), rng.uniform_real(0.0, 2.0 * std::numbers::pi));
        json inputs{{"configuration", io::to_json(cfg)}, {"classes", class_list({c})}};
        tasks.push_back({"path #" + std::to_string(k), std::move(inputs),
                         [cfg, c, k, n, legs, rc, tol, round_trip_tol](CaseRecord& rec) {
                             SynthesisSchedule sched;
                             sched.variant = static_cast<std::uint32_t>(k);
                             const auto loop = loop_from_word(c, cfg, sched);
                             const auto z0 = cfg.complex_view();
                             const auto radii = disk_radii(loop, z0);
                             std::vector<std::vector<Complex>> waypoints{z0};
                             for (int leg = 0; leg < 2; ++leg) {
                                 auto z = z0;
                                 for (int i = 0; i < n; ++i) {
                                     const auto [rho, theta] = legs[static_cast<std::size_t>(leg * n + i)];
                                     z[static_cast<std::size_t>(i)] += std::polar(rho * radii[static_cast<std::size_t>(i)], theta);
                                 }
                                 waypoints.push_back(std::move(z));
                             }
                             const ConfPath path(waypoints);
                             const auto rep = verify_flat_section(loop, path, rc.order, tol);
                             const auto back = nabla_transport(rep.transported, path.reversed());
                             const double round_trip = max_abs_diff(back, rep.initial);
                             rec.lhs = io::to_json(rep.transported);
                             rec.rhs = io::to_json(rep.direct);
                             rec.deviation = rep.deviation;
                             rec.pass = rep.pass && round_trip < round_trip_tol;
                             rec.details = {{"path", io::to_json(path)},
                                            {"curve", io::to_json(loop)},
                                            {"section_change", max_abs_diff(rep.direct, rep.initial)},
                                            {"round_trip_deviation", round_trip},
                                            {"round_trip_tol", round_trip_tol}};
                         }});
    }
    return {"isomonodromy", rc, run_cases(tasks, rc.workers)};
}

namespace {

CyclicTripleSeries<Rational> leg_cyclic_sum(const CyclicTripleSeries<Rational>& t) {
    const auto r1 = rotate_legs(t);
    return t + r1 + rotate_legs(r1);
}

}  // namespace

VerificationReport verify_axioms(const RunConfig& rc) {
    rc.validate();
    const int count = rc.cases.value_or(200);
    const int max_deg = rc.max_degree;
    std::vector<CaseTask> tasks;
    for (int k = 0; k < count; ++k) {
        const int n = 1 + k % 3;
        const int order = std::min(kMaxWordLength, 3 * max_deg);
        CaseRng rng(rc.seed, kAxiomTag, 0, static_cast<std::uint64_t>(k));
        const auto a = rng.cyclic(n, order, 1, max_deg, true);
        const auto b = rng.cyclic(n, order, 1, max_deg, true);
        const auto c = rng.cyclic(n, order, 1, max_deg, true);
        const auto d = rng.cyclic(n, order, 1, max_deg, false);
        const auto x = rng.cyclic(n, order, 1, max_deg, false);
        const auto y = rng.cyclic(n, order, 1, max_deg, false);
        json inputs{{"n", n}, {"N", order}, {"a", io::to_json(a)}, {"b", io::to_json(b)}, {"c", io::to_json(c)},
                    {"d", io::to_json(d)}, {"x", io::to_json(x)}, {"y", io::to_json(y)}};
        tasks.push_back({"n=" + std::to_string(n) + " #" + std::to_string(k), std::move(inputs),
                         [a, b, c, d, x, y, n](CaseRecord& rec) {
                             const auto ab = necklace_bracket(a, b);
                             const auto antisym = ab + necklace_bracket(b, a);
                             const auto jacobi = necklace_bracket(ab, c) + necklace_bracket(necklace_bracket(b, c), a) +
                                                 necklace_bracket(necklace_bracket(c, a), b);
                             const auto dd = necklace_cobracket(d);
                             const auto co_antisym = dd + flip(dd);
                             const auto co_jacobi = leg_cyclic_sum(cobracket_first_leg(dd));
                             const auto cocycle = necklace_cobracket(necklace_bracket(x, y)) -
                                                  (adjoint_action(x, necklace_cobracket(y)) -
                                                   adjoint_action(y, necklace_cobracket(x)));
                             const auto central = n >= 2 ? central_action_on_cyclic(a) : CyclicSeries<Rational>(n, a.order());
                             json sizes{{"antisymmetry", antisym.size()},     {"jacobi", jacobi.size()},
                                        {"co_antisymmetry", co_antisym.size()}, {"co_jacobi", co_jacobi.size()},
                                        {"cocycle", cocycle.size()},           {"central_action", central.size()}};
                             rec.lhs = {{"bracket_ab", io::to_json(ab)}, {"cobracket_d", io::to_json(dd)}};
                             rec.rhs = {{"bracket_ba", io::to_json(necklace_bracket(b, a))}};
                             rec.details = {{"residual_terms", sizes}};
                             rec.deviation = std::max({max_abs_coefficient(antisym), max_abs_coefficient(jacobi),
                                                       max_abs_coefficient(co_antisym), max_abs_coefficient(co_jacobi),
                                                       max_abs_coefficient(cocycle), max_abs_coefficient(central)});
                             rec.pass = antisym.is_zero() && jacobi.is_zero() && co_antisym.is_zero() &&
                                        co_jacobi.is_zero() && cocycle.is_zero() && central.is_zero();
                         }});
    }
    return {"axioms", rc, run_cases(tasks, rc.workers)};
}

VerificationReport verify_kv_equivalence(const RunConfig& rc) {
    rc.validate();
    const auto opts = holonomy_options(rc);
    struct Shared {
        std::vector<HolonomySeries> w, kz, f;
        std::string error;
    };
    auto shared = std::make_shared<Shared>();
    try {
        HolonomySeries phi = rc.associator ? *rc.associator : kz_associator(rc.order, opts);
        if (phi.generators() != 2) throw DomainError("associator must be a series in 2 generators");
        if (phi.order() < rc.order) throw DomainError("associator truncation order is below N");
        phi = phi.with_order(rc.order);
        shared->kz = rho_images(RhoKind::kz, phi);
        shared->f = rho_images(RhoKind::f, phi);
        const ConnectionData conn(std::vector<Complex>{{0.0, 0.0}, {1.0, 0.0}}, rc.order);
        shared->w = generator_holonomies(conn, {1.0 / 3.0, 0.0}, opts);
    } catch (const std::exception& e) {
        shared->error = e.what();
    }
    std::vector<CaseTask> tasks;
    const double tol = rc.tol;
    for (const auto& word : reduced_words(2, 4)) {
        tasks.push_back({GroupWord::reduce(word).to_string(), json{{"word", word}}, [shared, word, tol](CaseRecord& rec) {
                             if (!shared->error.empty()) throw AccuracyError(shared->error, 0.0);
                             const auto tw = trace(evaluate_word(shared->w, word));
                             const auto tkz = trace(evaluate_word(shared->kz, word));
                             const auto tf = trace(evaluate_word(shared->f, word));
                             const double d1 = max_abs_diff(tw, tkz), d2 = max_abs_diff(tkz, tf), d3 = max_abs_diff(tw, tf);
                             rec.lhs = io::to_json(tf);
                             rec.rhs = io::to_json(tw);
                             rec.details = {{"trace_rho_kz", io::to_json(tkz)},
                                            {"W_vs_rho_kz", d1},
                                            {"rho_kz_vs_rho_f", d2},
                                            {"W_vs_rho_f", d3}};
                             rec.deviation = std::max({d1, d2, d3});
                             rec.pass = *rec.deviation < tol;
                         }});
    }
    return {"kv-equivalence", rc, run_cases(tasks, rc.workers)};
}

VerificationReport run_suite(const std::string& name, const RunConfig& cfg) {
    if (name == "formality-bracket") return verify_formality_bracket(cfg);
    if (name == "formality-cobracket") return verify_formality_cobracket(cfg);
    if (name == "isomonodromy") return verify_isomonodromy(cfg);
    if (name == "axioms") return verify_axioms(cfg);
    if (name == "kv-equivalence") return verify_kv_equivalence(cfg);
    throw DomainError("unknown suite '" + name + "'");
}

}  // namespace gtf
