#include "gtf/holonomy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>

namespace gtf {

namespace {

constexpr Complex kTwoPiI{0.0, 2.0 * std::numbers::pi};

double distance_to_segment(Complex z, Complex p, Complex q) {
    const Complex d = q - p;
    const double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(z - p);
    const double t = std::clamp(((z - p) * std::conj(d)).real() / len2, 0.0, 1.0);
    return std::abs(z - (p + t * d));
}

// Fourth-order Magnus exponent on one segment: exact ∫A plus the Gauss-point commutator term.
LowDegreeElement magnus(const ConnectionData& conn, Complex p, Complex q) {
    const int n = conn.generators();
    LowDegreeElement om;
    om.linear.resize(static_cast<std::size_t>(n));
    om.quadratic.assign(static_cast<std::size_t>(n * n), Complex{});
    const double g = std::sqrt(3.0) / 6.0;
    std::vector<Complex> m1(static_cast<std::size_t>(n)), m2(static_cast<std::size_t>(n));
    const Complex z1 = p + (0.5 - g) * (q - p), z2 = p + (0.5 + g) * (q - p);
    for (int i = 0; i < n; ++i) {
        const Complex zi = conn.punctures[static_cast<std::size_t>(i)];
        om.linear[static_cast<std::size_t>(i)] = std::log((q - zi) / (p - zi)) / kTwoPiI;
        m1[static_cast<std::size_t>(i)] = (q - p) / (z1 - zi) / kTwoPiI;
        m2[static_cast<std::size_t>(i)] = (q - p) / (z2 - zi) / kTwoPiI;
    }
    const double w = std::sqrt(3.0) / 12.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
            om.quadratic[ui * static_cast<std::size_t>(n) + uj] = w * (m2[ui] * m1[uj] - m1[ui] * m2[uj]);
        }
    return om;
}

double max_abs(const DenseSeries& s) {
    double m = 0.0;
    for (const auto& c : s.data()) m = std::max(m, std::abs(c));
    return m;
}

struct SegmentWalker {
    const ConnectionData& conn;
    const HolonomyOptions& opts;
    double tol_per_length;
    DenseSeries unit;

    void run(Complex p, Complex q, int depth, DenseSeries& h) {
        const Complex mid = 0.5 * (p + q);
        const auto whole = magnus(conn, p, q);
        const auto first = magnus(conn, p, mid);
        const auto second = magnus(conn, mid, q);
        const DenseSeries coarse = exp_times(whole, unit);
        const DenseSeries fine = exp_times(second, exp_times(first, unit));
        const double delta = max_abs_diff(coarse, fine);
        const double floor = 64.0 * std::numeric_limits<double>::epsilon() * max_abs(fine);
        if (delta <= std::max(tol_per_length * std::abs(q - p), floor)) {
            h = exp_times(second, exp_times(first, h));
            return;
        }
        if (depth >= opts.max_depth)
            throw AccuracyError("path holonomy did not converge within subdivision depth " +
                                    std::to_string(opts.max_depth),
                                delta);
        run(p, mid, depth + 1, h);
        run(mid, q, depth + 1, h);
    }
};

}  // namespace

ConnectionData::ConnectionData(std::vector<Complex> pts, int ord) : punctures(std::move(pts)), order(ord) {
    if (punctures.empty()) throw DomainError("connection needs at least one puncture");
    if (order < 0) throw DomainError("negative truncation order");
    for (std::size_t i = 0; i < punctures.size(); ++i)
        for (std::size_t j = i + 1; j < punctures.size(); ++j)
            if (punctures[i] == punctures[j]) throw DomainError("punctures coincide");
}

void apply_path(std::span<const Complex> path, const ConnectionData& conn, const HolonomyOptions& opts,
                DenseSeries& h) {
    if (!(opts.tol > 0.0)) throw DomainError("holonomy tolerance must be positive");
    if (h.generators() != conn.generators() || h.order() != conn.order)
        throw ContractError("holonomy state does not match the connection shape");
    double total = 0.0;
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
        for (std::size_t i = 0; i < conn.punctures.size(); ++i)
            if (distance_to_segment(conn.punctures[i], path[k], path[k + 1]) < opts.guard)
                throw DomainError("path passes within the guard distance of puncture z" + std::to_string(i + 1));
        total += std::abs(path[k + 1] - path[k]);
    }
    if (total == 0.0) return;
    SegmentWalker walker{conn, opts, opts.tol / total, DenseSeries::unit(conn.generators(), conn.order)};
    for (std::size_t k = 0; k + 1 < path.size(); ++k)
        if (path[k] != path[k + 1]) walker.run(path[k], path[k + 1], 0, h);
}

HolonomySeries path_holonomy(std::span<const Complex> path, const ConnectionData& conn, const HolonomyOptions& opts) {
    DenseSeries h = DenseSeries::unit(conn.generators(), conn.order);
    apply_path(path, conn, opts, h);
    return h.to_sparse();
}

HolonomySeries loop_holonomy(const PolylineLoop& loop, const ConnectionData& conn, const HolonomyOptions& opts) {
    auto pts = loop.complex_view();
    pts.push_back(pts.front());
    return path_holonomy(pts, conn, opts);
}

std::vector<HolonomySeries> generator_holonomies(const ConnectionData& conn, Complex basepoint,
                                                 const HolonomyOptions& opts) {
    const int n = conn.generators();
    std::vector<double> xs;
    double y_top = conn.punctures.front().imag();
    for (const auto& z : conn.punctures) {
        xs.push_back(z.real());
        y_top = std::max(y_top, z.imag());
    }
    std::sort(xs.begin(), xs.end());
    double radius = 1.0;
    for (std::size_t k = 1; k < xs.size(); ++k) {
        if (xs[k] == xs[k - 1]) throw DomainError("punctures share an x-coordinate");
        radius = std::min(radius, (xs[k] - xs[k - 1]) / 4.0);
    }
    for (int i = 0; i < n; ++i) {
        const Complex z = conn.punctures[static_cast<std::size_t>(i)];
        if (basepoint.real() == z.real() && basepoint.imag() <= z.imag())
            throw DomainError("basepoint lies on the cut ray of z" + std::to_string(i + 1));
    }
    y_top += radius;
    const double r = radius / 2.0;
    std::vector<HolonomySeries> out;
    for (int i = 0; i < n; ++i) {
        const Complex z = conn.punctures[static_cast<std::size_t>(i)];
        const double stem = z.real() + r / 4.0;
        const std::vector<Complex> to{basepoint, {basepoint.real(), y_top}, {stem, y_top}, {stem, z.imag() + r}};
        const std::vector<Complex> square{{stem, z.imag() + r},      {z.real() - r, z.imag() + r},
                                          {z.real() - r, z.imag() - r}, {z.real() + r, z.imag() - r},
                                          {z.real() + r, z.imag() + r}, {stem, z.imag() + r}};
        const auto h_to = path_holonomy(to, conn, opts);
        const auto h_sq = path_holonomy(square, conn, opts);
        out.push_back(mul(mul(inverse(h_to), h_sq), h_to));
    }
    return out;
}

HolonomySeries evaluate_word(std::span<const HolonomySeries> images, std::span<const int> letters) {
    if (images.empty()) throw ContractError("evaluate_word needs generator images");
    const int n = images.front().generators(), order = images.front().order();
    HolonomySeries acc = unit_series<Complex>(n, order);
    std::vector<std::optional<HolonomySeries>> inverses(images.size());
    for (int l : letters) {
        const auto idx = static_cast<std::size_t>(std::abs(l) - 1);
        if (l == 0 || idx >= images.size())
            throw DomainError("letter " + std::to_string(l) + " has no generator image");
        if (l > 0) {
            acc = mul(images[idx], acc);
        } else {
            if (!inverses[idx]) inverses[idx] = inverse(images[idx]);
            acc = mul(*inverses[idx], acc);
        }
    }
    return acc;
}

CyclicSeries<Complex> W_of_class(const ConjClass& c, std::span<const HolonomySeries> generators) {
    return trace(evaluate_word(generators, c.letters()));
}

CyclicSeries<Complex> W_of_class(const ConjClass& c, const ConnectionData& conn, Complex basepoint,
                                 const HolonomyOptions& opts) {
    if (c.max_generator() > conn.generators()) throw DomainError("class uses more generators than punctures");
    const auto gens = generator_holonomies(conn, basepoint, opts);
    return W_of_class(c, gens);
}

namespace {

// Local solution P(ε) ε^{U} of dΨ/dw = (U/w + V/(w-1)) Ψ, with U = u/2πi, V = v/2πi.
HolonomySeries frobenius_solution(int u, int v, double eps, int order) {
    const int n = 2;
    const auto U = generator_series<Complex>(n, order, u) * (1.0 / kTwoPiI);
    const auto V = generator_series<Complex>(n, order, v) * (1.0 / kTwoPiI);
    HolonomySeries partial_sum = unit_series<Complex>(n, order);  // Σ_{j<k} P_j
    HolonomySeries value = unit_series<Complex>(n, order);        // Σ_j P_j ε^j
    double eps_k = 1.0;
    for (int k = 1; k <= 400; ++k) {
        eps_k *= eps;
        const HolonomySeries rhs = -mul(V, partial_sum);
        // (k - ad_U)^{-1} rhs = Σ_j ad_U^j(rhs) / k^{j+1}
        HolonomySeries term = rhs * (1.0 / k);
        HolonomySeries pk = term;
        for (int j = 1; j <= order && !term.is_zero(); ++j) {
            term = commutator(U, term) * (1.0 / k);
            pk = pk + term;
        }
        partial_sum = partial_sum + pk;
        value = value + pk * eps_k;
        if (eps_k * (1.0 + max_abs_coefficient(pk)) < 1e-18) break;
    }
    return mul(value, exp(U * std::log(eps)));
}

}  // namespace

HolonomySeries regularized_solution(int endpoint, double p, int order, const HolonomyOptions& opts) {
    if (endpoint != 0 && endpoint != 1) throw DomainError("endpoint must be 0 or 1");
    if (!(p > 0.0 && p < 1.0)) throw DomainError("p must lie strictly inside (0, 1)");
    const ConnectionData conn({Complex(0.0, 0.0), Complex(1.0, 0.0)}, order);
    const double dist = endpoint == 0 ? p : 1.0 - p;
    HolonomySeries previous(2, order);
    std::string trace_log;
    double last_delta = 0.0;
    for (int k = 1; k <= 12; ++k) {
        const double eps = dist * std::ldexp(1.0, -k);
        const Complex start = endpoint == 0 ? Complex(eps, 0.0) : Complex(1.0 - eps, 0.0);
        const HolonomySeries local =
            endpoint == 0 ? frobenius_solution(1, 2, eps, order) : frobenius_solution(2, 1, eps, order);
        const std::vector<Complex> path{start, Complex(p, 0.0)};
        const HolonomySeries psi = mul(path_holonomy(path, conn, opts), local);
        if (k > 1) {
            last_delta = max_abs_diff(psi, previous);
            trace_log += " eps=" + std::to_string(eps) + ":" + std::to_string(last_delta);
            if (last_delta < 10.0 * opts.tol) return psi;
        }
        previous = psi;
    }
    throw AccuracyError("regularized solution unstable along eps sequence:" + trace_log, last_delta);
}

HolonomySeries kz_associator(int order, const HolonomyOptions& opts, double p) {
    if (order < 2) throw DomainError("associator needs truncation order >= 2");
    const auto psi0 = regularized_solution(0, p, order, opts);
    const auto psi1 = regularized_solution(1, p, order, opts);
    return mul(inverse(psi1), psi0);
}

KVImages kv_automorphism(const HolonomySeries& phi) {
    if (phi.generators() != 2) throw ContractError("associator must have two generators");
    const int order = phi.order();
    const auto x = generator_series<Complex>(2, order, 1);
    const auto y = generator_series<Complex>(2, order, 2);
    const auto s = -x - y;
    const std::vector<HolonomySeries> into_x{x, s}, into_y{y, s};
    const auto phi_x = substitute(phi, std::span<const HolonomySeries>(into_x));
    const auto phi_y = substitute(phi, std::span<const HolonomySeries>(into_y));
    const auto half = exp((x + y) * Complex(-0.5, 0.0));
    return {conjugate(x, phi_x), conjugate(conjugate(y, phi_y), half)};
}

std::vector<HolonomySeries> rho_images(RhoKind kind, const HolonomySeries& phi) {
    if (phi.generators() != 2) throw ContractError("associator must have two generators");
    const int order = phi.order();
    if (kind == RhoKind::kz) {
        const auto x = generator_series<Complex>(2, order, 1);
        const auto y = generator_series<Complex>(2, order, 2);
        return {exp(x), conjugate(exp(y), inverse(phi))};
    }
    const auto kv = kv_automorphism(phi);
    return {exp(kv.fx), exp(kv.fy)};
}

}  // namespace gtf
