#pragma once

// Verification harness: seeded suites of pure cases evaluated on a worker
// pool, reduced in case order into a report.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "gtf/holonomy.hpp"
#include "gtf/io.hpp"

namespace gtf {

struct RunConfig {
    int order = 4;
    double tol = 1e-6;
    std::uint64_t seed = 1;
    /// Random cases per configuration; each suite has its own default when unset.
    std::optional<int> cases;
    int workers = 1;
    int max_word_length = 5;
    /// Degree cap for the algebraic batteries.
    int max_degree = 5;
    std::optional<Configuration> punctures;
    /// Replaces the computed KZ associator (n = 2 free series).
    std::optional<HolonomySeries> associator;

    void validate() const;
    /// Holonomy tolerance derived from tol.
    double holonomy_tol() const;
};

struct CaseRecord {
    std::string label;
    io::json inputs;
    io::json lhs;
    io::json rhs;
    /// Coefficientwise max deviation; absent when the case raised.
    std::optional<double> deviation;
    bool pass = false;
    io::json details;
    std::string error;
};

struct VerificationReport {
    std::string suite;
    RunConfig config;
    std::vector<CaseRecord> cases;

    bool pass() const;
    std::size_t passed() const;
    double max_deviation() const;
    io::json to_json() const;
    std::string summary() const;
};

/// A case whose inputs are known up front; evaluate() fills lhs, rhs,
/// deviation, pass and details. Exceptions are recorded, not propagated.
struct CaseTask {
    std::string label;
    io::json inputs;
    std::function<void(CaseRecord&)> evaluate;
};

std::vector<CaseRecord> run_cases(const std::vector<CaseTask>& tasks, int workers);

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {"formality-bracket", "formality-cobracket", "isomonodromy",
                                                   "axioms", "kv-equivalence"};
    return names;
}

VerificationReport verify_formality_bracket(const RunConfig& cfg);
VerificationReport verify_formality_cobracket(const RunConfig& cfg);
VerificationReport verify_isomonodromy(const RunConfig& cfg);
VerificationReport verify_axioms(const RunConfig& cfg);
VerificationReport verify_kv_equivalence(const RunConfig& cfg);
/// Dispatch by suite name; DomainError for unknown names.
VerificationReport run_suite(const std::string& name, const RunConfig& cfg);

/// All reduced words of length 1..max_length in generators 1..n.
std::vector<std::vector<int>> reduced_words(int n, int max_length);

}  // namespace gtf
