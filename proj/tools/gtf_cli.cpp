// gtf: geometric and necklace Lie bialgebra operations, holonomy and the
// verification suites.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

#include "gtf/io.hpp"
#include "gtf/verify.hpp"

using namespace gtf;
using io::json;

namespace {

void emit(const json& j, const std::string& out) {
    if (out.empty())
        std::cout << j.dump(2) << '\n';
    else
        io::write_file(out, j);
}

template <SeriesScalar S>
json necklace_op(const std::string& op, const std::vector<json>& docs) {
    std::vector<CyclicSeries<S>> xs;
    for (const auto& d : docs) xs.push_back(io::cyclic_series_from_json<S>(d));
    if (op == "bracket") return io::to_json(necklace_bracket(xs[0], xs[1]));
    return io::to_json(necklace_cobracket(xs[0]));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Goldman-Turaev formality toolkit"};
    app.require_subcommand(1);

    std::string out, punctures, assoc;
    int degree = 4;
    double tol = 0.0;
    int max_depth = HolonomyOptions{}.max_depth;

    auto* bracket = app.add_subcommand("bracket-geom", "Geometric Goldman bracket of two curves");
    std::string curve_a, curve_b;
    bracket->add_option("curve_a", curve_a, "First curve file")->required()->check(CLI::ExistingFile);
    bracket->add_option("curve_b", curve_b, "Second curve file")->required()->check(CLI::ExistingFile);

    auto* cobracket = app.add_subcommand("cobracket-geom", "Geometric Turaev cobracket of a curve (blackboard framing)");
    std::string curve;
    cobracket->add_option("curve", curve, "Curve file")->required()->check(CLI::ExistingFile);

    for (auto* sub : {bracket, cobracket}) {
        sub->add_option("--punctures", punctures, "Configuration file")->required()->check(CLI::ExistingFile);
        sub->add_option("--out", out, "Output file (default: stdout)");
    }

    auto* necklace = app.add_subcommand("necklace", "Necklace bracket or cobracket of cyclic series");
    std::string op;
    std::vector<std::string> series_files;
    necklace->add_option("op", op, "bracket | cobracket")->required()->check(CLI::IsMember({"bracket", "cobracket"}));
    necklace->add_option("series", series_files, "Cyclic series files")->required()->check(CLI::ExistingFile);
    necklace->add_option("--out", out, "Output file (default: stdout)");

    auto* holonomy = app.add_subcommand("holonomy", "|W| of a curve: the trace of its KZ holonomy");
    holonomy->add_option("curve", curve, "Curve file")->required()->check(CLI::ExistingFile);
    holonomy->add_option("--punctures", punctures, "Configuration file")->required()->check(CLI::ExistingFile);
    holonomy->add_option("--degree", degree, "Truncation order N")->check(CLI::Range(1, kMaxWordLength));
    holonomy->add_option("--tol", tol, "Holonomy tolerance (default 1e-9)")->check(CLI::PositiveNumber);
    holonomy->add_option("--max-depth", max_depth, "Bisection depth budget")->check(CLI::Range(1, 60));
    holonomy->add_option("--out", out, "Output file (default: stdout)");

    auto* associator = app.add_subcommand("associator", "KZ associator as a free series in x, y");
    double p = 0.5;
    associator->add_option("--degree", degree, "Truncation order N")->check(CLI::Range(1, kMaxWordLength));
    associator->add_option("--tol", tol, "Holonomy tolerance (default 1e-10)")->check(CLI::PositiveNumber);
    associator->add_option("--point", p, "Normalization point p in (0, 1)")->check(CLI::Range(0.0, 1.0));
    associator->add_option("--max-depth", max_depth, "Bisection depth budget")->check(CLI::Range(1, 60));
    associator->add_option("--out", out, "Output file (default: stdout)");

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    std::string suite;
    RunConfig rc;
    int cases = -1;
    verify->add_option("suite", suite, "Suite name")->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--degree", rc.order, "Truncation order N")->check(CLI::Range(1, kMaxWordLength - 1));
    verify->add_option("--tol", rc.tol, "Comparison tolerance")->check(CLI::PositiveNumber);
    verify->add_option("--seed", rc.seed, "Random seed");
    verify->add_option("--punctures", punctures, "Configuration file (replaces the default configurations)")
        ->check(CLI::ExistingFile);
    verify->add_option("--assoc", assoc, "Associator file (kv-equivalence)")->check(CLI::ExistingFile);
    verify->add_option("--cases", cases, "Random cases per configuration (suite default if omitted)")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--workers", rc.workers, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--max-length", rc.max_word_length, "Word length cap for random loops")
        ->check(CLI::Range(1, kMaxWordLength));
    verify->add_option("--max-degree", rc.max_degree, "Degree cap for the axiom battery")
        ->check(CLI::Range(1, kMaxWordLength));
    verify->add_option("--out", out, "Report file (JSON)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bracket->parsed()) {
            const auto cfg = io::config_from_json(io::read_file(punctures));
            emit(io::to_json(goldman_bracket_geometric(io::curve_from_json(io::read_file(curve_a)),
                                                       io::curve_from_json(io::read_file(curve_b)), cfg)),
                 out);
        } else if (cobracket->parsed()) {
            const auto cfg = io::config_from_json(io::read_file(punctures));
            emit(io::to_json(turaev_cobracket_geometric(io::curve_from_json(io::read_file(curve)), cfg)), out);
        } else if (necklace->parsed()) {
            const std::size_t need = op == "bracket" ? 2 : 1;
            if (series_files.size() != need)
                throw DomainError("necklace " + op + " takes " + std::to_string(need) + " series file(s)");
            std::vector<json> docs;
            bool exact = true;
            for (const auto& f : series_files) {
                docs.push_back(io::read_file(f));
                exact = exact && io::scalar_kind(docs.back()) == "rational";
            }
            emit(exact ? necklace_op<Rational>(op, docs) : necklace_op<Complex>(op, docs), out);
        } else if (holonomy->parsed()) {
            const auto cfg = io::config_from_json(io::read_file(punctures));
            HolonomyOptions opts;
            if (tol > 0) opts.tol = tol;
            opts.max_depth = max_depth;
            const auto loop = io::curve_from_json(io::read_file(curve));
            emit(io::to_json(trace(loop_holonomy(loop, ConnectionData(cfg, degree), opts))), out);
        } else if (associator->parsed()) {
            HolonomyOptions opts;
            opts.tol = tol > 0 ? tol : 1e-10;
            opts.max_depth = max_depth;
            if (!(p > 0.0 && p < 1.0)) throw DomainError("normalization point must lie strictly between 0 and 1");
            emit(io::to_json(kz_associator(degree, opts, p)), out);
        } else if (verify->parsed()) {
            if (cases >= 0) rc.cases = cases;
            if (!punctures.empty()) rc.punctures = io::config_from_json(io::read_file(punctures));
            if (!assoc.empty()) rc.associator = io::free_series_from_json<Complex>(io::read_file(assoc));
            const auto report = run_suite(suite, rc);
            if (!out.empty()) io::write_file(out, report.to_json());
            std::cout << report.summary();
            return report.pass() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
