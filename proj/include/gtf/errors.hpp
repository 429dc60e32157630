#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace gtf {

/// Operands disagree on generator count, truncation order or scalar kind.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A geometric input is degenerate (non-transverse contact, vertex on a cut ray, ...).
class GenericityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A numeric procedure failed to reach its requested tolerance.
class AccuracyError : public std::runtime_error {
public:
    AccuracyError(const std::string& what, double worst_delta)
        : std::runtime_error(what + " (worst coefficient delta " + format_delta(worst_delta) + ")"),
          worst_delta_(worst_delta) {}
    double worst_delta() const noexcept { return worst_delta_; }

private:
    static std::string format_delta(double d) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.3e", d);
        return buf;
    }
    double worst_delta_;
};

/// loop_from_word could not produce a generic representative.
class SynthesisError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input files.
class FormatError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

}  // namespace gtf
