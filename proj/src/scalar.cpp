#include "gtf/scalar.hpp"

#include "gtf/errors.hpp"

namespace gtf {

namespace {
std::atomic<double> g_denormal_floor{1e-300};
}

double denormal_floor() noexcept { return g_denormal_floor.load(std::memory_order_relaxed); }

void set_denormal_floor(double floor) noexcept { g_denormal_floor.store(floor, std::memory_order_relaxed); }

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw FormatError("empty rational literal");
    Rational q;
    if (q.set_str(s, 10) != 0) throw FormatError("malformed rational literal '" + s + "'");
    if (q.get_den() == 0) throw FormatError("zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string format_rational(const Rational& q) { return q.get_str(10); }

}  // namespace gtf
