#pragma once

// Scalar realizations for series coefficients: exact rationals (GMP) and
// double-precision complex numbers.

#include <gmpxx.h>

#include <atomic>
#include <cmath>
#include <complex>
#include <string>
#include <string_view>

namespace gtf {

using Rational = mpq_class;
using Complex = std::complex<double>;

/// Magnitude below which approximate coefficients are dropped from sparse storage.
/// Exact zeros are always dropped; this floor never acts as a tolerance.
double denormal_floor() noexcept;
void set_denormal_floor(double floor) noexcept;

template <class S>
struct ScalarTraits;

template <>
struct ScalarTraits<Rational> {
    static constexpr bool exact = true;
    static constexpr std::string_view name = "rational";

    static bool is_zero(const Rational& x) { return sgn(x) == 0; }
    static Rational from_int(long v) { return Rational(v); }
    static Rational from_ratio(long num, long den) {
        Rational r(num, den);
        r.canonicalize();
        return r;
    }
    static double magnitude(const Rational& x) { return std::abs(x.get_d()); }
    static Complex to_complex(const Rational& x) { return {x.get_d(), 0.0}; }
};

template <>
struct ScalarTraits<Complex> {
    static constexpr bool exact = false;
    static constexpr std::string_view name = "complex";

    static bool is_zero(const Complex& x) {
        const double floor = denormal_floor();
        return std::abs(x.real()) < floor && std::abs(x.imag()) < floor;
    }
    static Complex from_int(long v) { return {static_cast<double>(v), 0.0}; }
    static Complex from_ratio(long num, long den) {
        return {static_cast<double>(num) / static_cast<double>(den), 0.0};
    }
    static double magnitude(const Complex& x) { return std::abs(x); }
    static Complex to_complex(const Complex& x) { return x; }
};

template <class S>
concept SeriesScalar = requires { ScalarTraits<S>::exact; };

/// Parses "p/q" or "p" into a canonical rational.
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& q);

}  // namespace gtf
