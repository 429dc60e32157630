#include "gtf/isomonodromy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "gtf/holonomy.hpp"

namespace gtf {

namespace {

constexpr Complex kTwoPiI{0.0, 2.0 * std::numbers::pi};

// Minimum of |a + s (b - a)| over s in [0, 1].
double min_norm_on_segment(Complex a, Complex b) {
    const Complex d = b - a;
    const double len2 = std::norm(d);
    double t = len2 == 0.0 ? 0.0 : std::clamp(-(a * std::conj(d)).real() / len2, 0.0, 1.0);
    return std::abs(a + t * d);
}

// Derivation acting on generators by quadratic images: a_k ↦ Σ q_k[p n + r] a_p a_r.
struct QuadraticDerivation {
    int n;
    std::vector<std::vector<Complex>> images;
};

void apply(const QuadraticDerivation& der, const DenseSeries& in, DenseSeries& out) {
    out.set_zero();
    const auto n = static_cast<std::size_t>(der.n);
    for (int d = 1; d < in.order(); ++d) {
        const Complex* src = in.level(d);
        Complex* dst = out.level(d + 1);
        const std::size_t size = in.level_size(d);
        std::size_t tail = 1;  // n^{d-m-1}
        for (int m = d - 1; m >= 0; --m) {
            const std::size_t block = tail * n;  // n^{d-m}
            for (std::size_t idx = 0; idx < size; ++idx) {
                const Complex c = src[idx];
                if (c == Complex{}) continue;
                const std::size_t prefix = idx / block;
                const std::size_t letter = (idx / tail) % n;
                const std::size_t suffix = idx % tail;
                const auto& q = der.images[letter];
                for (std::size_t pr = 0; pr < n * n; ++pr)
                    if (q[pr] != Complex{}) dst[(prefix * n * n + pr) * tail + suffix] += q[pr] * c;
            }
            tail = block;
        }
    }
}

// The derivation Σ_{i<j} w_ij ad(t_ij) scaled by sign/2πi, with w_ij = (u_i - u_j)/(z_i - z_j).
QuadraticDerivation transport_generator(const std::vector<Complex>& z, const std::vector<Complex>& u) {
    const int n = static_cast<int>(z.size());
    QuadraticDerivation der{n, std::vector<std::vector<Complex>>(z.size(), std::vector<Complex>(z.size() * z.size()))};
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (i == j) continue;
            const auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
            const Complex w = static_cast<double>(kTransportSign) * (u[ui] - u[uj]) / (z[ui] - z[uj]) / kTwoPiI;
            // a_i ↦ w [a_i, a_j]
            der.images[ui][ui * z.size() + uj] += w;
            der.images[ui][uj * z.size() + ui] -= w;
        }
    return der;
}

template <class Rhs>
void integrate(const ConfPath& path, const TransportOptions& opts, std::vector<DenseSeries>& state, Rhs rhs) {
    // Classical RK4 with step doubling, per segment of the configuration path.
    const auto& wps = path.waypoints();
    int steps = 0;
    auto combine = [](std::vector<DenseSeries>& dst, const std::vector<DenseSeries>& a, Complex alpha,
                      const std::vector<DenseSeries>& b) {
        for (std::size_t k = 0; k < dst.size(); ++k) axpy_into(dst[k], a[k], alpha, b[k]);
    };
    for (std::size_t seg = 0; seg + 1 < wps.size(); ++seg) {
        const auto& z0 = wps[seg];
        const auto& z1 = wps[seg + 1];
        std::vector<Complex> u(z0.size());
        double speed = 0.0;
        for (std::size_t k = 0; k < z0.size(); ++k) {
            u[k] = z1[k] - z0[k];
            speed = std::max(speed, std::abs(u[k]));
        }
        if (speed == 0.0) continue;
        auto at = [&](double s) {
            std::vector<Complex> z(z0.size());
            for (std::size_t k = 0; k < z.size(); ++k) z[k] = z0[k] + s * u[k];
            return z;
        };
        auto rk4 = [&](const std::vector<DenseSeries>& y, double s, double h) {
            std::vector<DenseSeries> k1 = y, k2 = y, k3 = y, k4 = y, tmp = y, out = y;
            rhs(at(s), u, y, k1);
            combine(tmp, y, h / 2, k1);
            rhs(at(s + h / 2), u, tmp, k2);
            combine(tmp, y, h / 2, k2);
            rhs(at(s + h / 2), u, tmp, k3);
            combine(tmp, y, h, k3);
            rhs(at(s + h), u, tmp, k4);
            combine(out, y, h / 6, k1);
            combine(out, out, h / 3, k2);
            combine(out, out, h / 3, k3);
            combine(out, out, h / 6, k4);
            return out;
        };
        double s = 0.0, h = 0.125;
        while (s < 1.0) {
            h = std::min(h, 1.0 - s);
            const auto coarse = rk4(state, s, h);
            const auto half = rk4(state, s, h / 2);
            const auto fine = rk4(half, s + h / 2, h / 2);
            double err = 0.0;
            for (std::size_t k = 0; k < state.size(); ++k) err = std::max(err, max_abs_diff(coarse[k], fine[k]));
            if (++steps > opts.max_steps) throw AccuracyError("transport exceeded its step budget", err);
            if (err <= opts.tol * h || h < 1e-12) {
                if (err > opts.tol * h) throw AccuracyError("transport step size underflow", err);
                state = fine;
                s += h;
                h *= err > 0.0 ? std::clamp(0.9 * std::pow(opts.tol * h / err, 0.2), 0.5, 2.0) : 2.0;
            } else {
                h *= std::clamp(0.9 * std::pow(opts.tol * h / err, 0.2), 0.1, 0.5);
            }
        }
    }
}

}  // namespace

ConfPath::ConfPath(std::vector<std::vector<Complex>> waypoints, double collision_fraction)
    : waypoints_(std::move(waypoints)) {
    if (waypoints_.empty()) throw DomainError("configuration path needs at least one waypoint");
    const std::size_t n = waypoints_.front().size();
    if (n == 0) throw DomainError("configuration path needs punctures");
    for (const auto& w : waypoints_)
        if (w.size() != n) throw DomainError("waypoints disagree on the number of punctures");
    double diameter = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            diameter = std::max(diameter, std::abs(waypoints_.front()[i] - waypoints_.front()[j]));
    const double delta_min = collision_fraction * diameter;
    for (std::size_t k = 0; k < waypoints_.size(); ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                const Complex a = waypoints_[k][i] - waypoints_[k][j];
                const Complex b = k + 1 < waypoints_.size() ? waypoints_[k + 1][i] - waypoints_[k + 1][j] : a;
                if (min_norm_on_segment(a, b) <= delta_min)
                    throw DomainError("punctures z" + std::to_string(i + 1) + " and z" + std::to_string(j + 1) +
                                      " come closer than the collision guard on leg " + std::to_string(k));
            }
}

ConfPath ConfPath::reversed() const {
    return ConfPath(std::vector<std::vector<Complex>>(waypoints_.rbegin(), waypoints_.rend()));
}

CyclicSeries<Complex> nabla_transport(const CyclicSeries<Complex>& psi0, const ConfPath& path,
                                      const TransportOptions& opts) {
    if (psi0.generators() != path.generators()) throw ContractError("section and path disagree on n");
    // Transport a linear lift; the flow is by derivations, which preserve commutators, so it descends.
    std::vector<DenseSeries> state{DenseSeries::from_sparse(lift(psi0))};
    integrate(path, opts, state,
              [](const std::vector<Complex>& z, const std::vector<Complex>& u, const std::vector<DenseSeries>& y,
                 std::vector<DenseSeries>& dy) { apply(transport_generator(z, u), y[0], dy[0]); });
    return trace(state[0].to_sparse());
}

std::vector<FreeSeries<Complex>> schlesinger_flow(const std::vector<FreeSeries<Complex>>& x, const ConfPath& path,
                                                  const TransportOptions& opts) {
    const int n = path.generators();
    if (static_cast<int>(x.size()) != n) throw ContractError("need one series per puncture");
    std::vector<DenseSeries> state;
    for (const auto& xk : x) {
        if (std::abs(xk.coefficient(Word{})) != 0.0) throw DomainError("Schlesinger data must have zero constant term");
        state.push_back(DenseSeries::from_sparse(xk));
    }
    integrate(path, opts, state,
              [n](const std::vector<Complex>& z, const std::vector<Complex>& u, const std::vector<DenseSeries>& y,
                  std::vector<DenseSeries>& dy) {
                  for (int k = 0; k < n; ++k) {
                      const auto uk = static_cast<std::size_t>(k);
                      dy[uk].set_zero();
                      for (int i = 0; i < n; ++i) {
                          if (i == k) continue;
                          const auto ui = static_cast<std::size_t>(i);
                          const Complex w = (u[ui] - u[uk]) / (z[uk] - z[ui]) / kTwoPiI;
                          const DenseSeries comm = mul(y[uk], y[ui]);
                          const DenseSeries back = mul(y[ui], y[uk]);
                          axpy_into(dy[uk], dy[uk], w, comm);
                          axpy_into(dy[uk], dy[uk], -w, back);
                      }
                  }
              });
    std::vector<FreeSeries<Complex>> out;
    for (const auto& s : state) out.push_back(s.to_sparse());
    return out;
}

std::vector<double> disk_radii(const PolylineLoop& loop, const std::vector<Complex>& punctures) {
    const auto pts = loop.complex_view();
    std::vector<double> out;
    for (const Complex& z : punctures) {
        double radius = std::numeric_limits<double>::infinity();
        for (std::size_t k = 0; k < pts.size(); ++k)
            radius = std::min(radius, min_norm_on_segment(pts[k] - z, pts[(k + 1) % pts.size()] - z));
        out.push_back(radius);
    }
    return out;
}

FlatSectionReport verify_flat_section(const PolylineLoop& loop, const ConfPath& path, int order, double tol,
                                      const TransportOptions& opts) {
    const auto& start = path.start();
    const auto radii = disk_radii(loop, start);
    for (std::size_t i = 0; i < start.size(); ++i)
        for (const auto& w : path.waypoints())
            if (!(std::abs(w[i] - start[i]) < radii[i]))
                throw DomainError("puncture z" + std::to_string(i + 1) + " leaves its disk around the start position");
    HolonomyOptions hopts;
    hopts.tol = std::min(1e-10, tol * 1e-3);
    auto psi0 = trace(loop_holonomy(loop, ConnectionData(start, order), hopts));
    FlatSectionReport rep{nabla_transport(psi0, path, opts),
                          trace(loop_holonomy(loop, ConnectionData(path.end(), order), hopts)), 0.0, false,
                          std::move(psi0)};
    rep.deviation = max_abs_diff(rep.transported, rep.direct);
    rep.pass = rep.deviation < tol;
    return rep;
}

}  // namespace gtf
