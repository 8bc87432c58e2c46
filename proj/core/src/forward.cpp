#include "wradon/forward.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wradon/errors.hpp"
#include "wradon/gauss_legendre.hpp"
#include "wradon/kahan.hpp"

namespace wradon {

namespace {

const GaussRule& cached_angle_rule(int n) {
    // Per-thread cache; rules for small n are reused across millions of planes.
    thread_local std::vector<GaussRule> cache;
    if (static_cast<int>(cache.size()) <= n) cache.resize(n + 1);
    if (cache[n].nodes.empty()) cache[n] = gauss_legendre_angle(n);
    return cache[n];
}

const GaussRule& cached_rule(int n) {
    thread_local std::vector<GaussRule> cache;
    if (static_cast<int>(cache.size()) <= n) cache.resize(n + 1);
    if (cache[n].nodes.empty()) cache[n] = gauss_legendre(n);
    return cache[n];
}

struct PlaneSetup {
    const PlaneFrame& frame;
    Vec3 foot;
    PlaneContext ctx;
};

Vec3 plane_point(const PlaneSetup& ps, double s, double t) {
    return ps.foot + s * ps.frame.e1.vec() + t * ps.frame.e2.vec();
}

/// Integral over one primitive section of V(x, y) * density(y).
void integrate_section(const Section& sec, const DensitySpec& density, double sign, const Weight& weight,
                       const PlaneSetup& ps, int n_nodes, KahanSum& acc) {
    if (std::holds_alternative<std::monostate>(sec)) return;
    if (weight.kind() == WeightKind::constant && density.is_constant()) {
        acc.add(sign * density.base * section_area(sec));
        return;
    }
    const GaussRule& ang = cached_angle_rule(n_nodes);
    const GaussRule& lin = cached_rule(n_nodes);
    const std::vector<double> bps = section_breakpoints(sec);
    for (std::size_t b = 0; b + 1 < bps.size(); ++b) {
        const double mid = 0.5 * (bps[b] + bps[b + 1]);
        const double half = 0.5 * (bps[b + 1] - bps[b]);
        if (!(half > 0.0)) continue;
        for (int k = 0; k < n_nodes; ++k) {
            const double th = ang.nodes[k];
            const double s = mid + half * std::sin(th);
            const double jac = ang.weights[k] * half * std::cos(th);
            const auto chord = section_chord(sec, s);
            if (!chord) continue;
            const auto [t0, t1] = *chord;
            double line = 0.0;
            if (density.is_constant()) {
                line = density.base * weight.chord_integral(ps.ctx, s, t0, t1);
            } else {
                const double tm = 0.5 * (t0 + t1);
                const double th2 = 0.5 * (t1 - t0);
                for (int q = 0; q < n_nodes; ++q) {
                    const double t = tm + th2 * lin.nodes[q];
                    const Vec3 y = plane_point(ps, s, t);
                    line += lin.weights[q] * th2 * weight(ps.ctx.x, y) * density.value(y);
                }
            }
            acc.add(sign * jac * line);
        }
    }
}

double sections_integral(const Phantom& phantom, const Weight& weight, const PlaneSetup& ps, double p, int n_nodes) {
    KahanSum acc;
    const auto& regions = phantom.regions();
    const auto& dens = phantom.densities();
    for (std::size_t i = 0; i < regions.size(); ++i) {
        const Region& r = regions[i];
        integrate_section(plane_section(r.outer, ps.frame, p), dens[i], 1.0, weight, ps, n_nodes, acc);
        for (const Solid& h : r.holes)
            integrate_section(plane_section(h, ps.frame, p), dens[i], -1.0, weight, ps, n_nodes, acc);
    }
    return acc.value();
}

double midpoint_integral(const Phantom& phantom, const Weight& weight, const PlaneSetup& ps, double p,
                         const PlaneQuadratureSpec& pq) {
    const Ball& bb = phantom.bounding_ball();
    const double reach = norm(bb.center) + bb.radius;
    const double needed = std::sqrt(std::max(0.0, reach * reach - p * p));
    const double S = pq.half_extent > 0.0 ? pq.half_extent : reach;
    if (S < needed * (1.0 - 1e-12))
        throw InvalidArgument("plane quadrature half_extent " + std::to_string(S) +
                              " does not cover G on this plane (needs " + std::to_string(needed) + ")");

    const Vec3& w = ps.frame.omega.vec();
    const double dw = p - dot(bb.center, w);
    const double r2_plane = bb.radius * bb.radius - dw * dw;
    if (!(r2_plane > 0.0)) return 0.0;
    const double cs = dot(bb.center, ps.frame.e1.vec());
    const double ct = dot(bb.center, ps.frame.e2.vec());

    const int n = pq.n_cells;
    const double h = 2.0 * S / n;
    KahanSum acc;
    for (int i = 0; i < n; ++i) {
        const double s = -S + (i + 0.5) * h;
        const double r2 = r2_plane - (s - cs) * (s - cs);
        if (!(r2 > 0.0)) continue;
        const double r = std::sqrt(r2);
        const int j0 = std::max(0, static_cast<int>(std::ceil((ct - r + S) / h - 0.5)));
        const int j1 = std::min(n - 1, static_cast<int>(std::floor((ct + r + S) / h - 0.5)));
        for (int j = j0; j <= j1; ++j) {
            const double t = -S + (j + 0.5) * h;
            const Vec3 y = plane_point(ps, s, t);
            const double v = eval_density(phantom, y);
            if (v == 0.0) continue;
            acc.add(weight(ps.ctx.x, y) * v);
        }
    }
    return acc.value() * h * h;
}

double integral_on_plane(const Phantom& phantom, const Weight& weight, const Vec3& x, const PlaneFrame& frame, double p,
                         const PlaneQuadratureSpec& pq) {
    const PlaneSetup ps{frame, p * frame.omega.vec(),
                        PlaneContext{x, p, Point2{dot(x, frame.e1.vec()), dot(x, frame.e2.vec())}}};
    if (pq.scheme == PlaneScheme::sections) return sections_integral(phantom, weight, ps, p, pq.chord_nodes);
    return midpoint_integral(phantom, weight, ps, p, pq);
}

}  // namespace

std::string_view to_string(PlaneScheme scheme) {
    return scheme == PlaneScheme::midpoint ? "midpoint" : "sections";
}

PlaneScheme plane_scheme_from_string(std::string_view name) {
    if (name == "midpoint") return PlaneScheme::midpoint;
    if (name == "sections") return PlaneScheme::sections;
    throw Unsupported("unknown plane quadrature scheme '" + std::string(name) + "'");
}

void PlaneQuadratureSpec::validate() const {
    if (n_cells < 8) throw InvalidArgument("plane quadrature: n_cells must be >= 8");
    if (!(half_extent >= 0.0) || !std::isfinite(half_extent))
        throw InvalidArgument("plane quadrature: half_extent must be >= 0 (0 = auto)");
    if (chord_nodes < 1 || chord_nodes > 256) throw InvalidArgument("plane quadrature: chord_nodes must be in [1, 256]");
}

double covering_half_extent(const Phantom& phantom) {
    const Ball& bb = phantom.bounding_ball();
    return norm(bb.center) + bb.radius;
}

double plane_integral(const Phantom& phantom, const Weight& weight, const Vec3& x, const PlaneFrame& frame,
                      const PlaneQuadratureSpec& pq) {
    return integral_on_plane(phantom, weight, x, frame, dot(x, frame.omega.vec()), pq);
}

double weighted_radon(const Phantom& phantom, const Weight& weight, const Vec3& x, const Direction& omega,
                      const PlaneQuadratureSpec& pq) {
    pq.validate();
    return plane_integral(phantom, weight, x, plane_frame(omega), pq);
}

double classical_radon(const Phantom& phantom, const Direction& omega, double p, const PlaneQuadratureSpec& pq) {
    // Same code path as weighted_radon, with the foot point as x and p taken as given.
    pq.validate();
    return integral_on_plane(phantom, Weight::constant(), p * omega.vec(), plane_frame(omega), p, pq);
}

ContinuityProfile continuity_profile(const Phantom& phantom, const Direction& omega, double p_min, double p_max,
                                     int n_samples, const PlaneQuadratureSpec& pq) {
    if (n_samples < 16) throw InvalidArgument("continuity_profile: n_samples must be >= 16");
    if (!(p_max > p_min)) throw InvalidArgument("continuity_profile: p_max must exceed p_min");
    pq.validate();
    const PlaneFrame frame = plane_frame(omega);
    const Weight one = Weight::constant();
    ContinuityProfile prof;
    prof.samples.reserve(n_samples);
    for (int k = 0; k < n_samples; ++k) {
        const double p = p_min + (p_max - p_min) * k / (n_samples - 1);
        const double v = integral_on_plane(phantom, one, p * omega.vec(), frame, p, pq);
        if (!prof.samples.empty())
            prof.max_adjacent_diff = std::max(prof.max_adjacent_diff, std::abs(v - prof.samples.back().second));
        prof.samples.emplace_back(p, v);
    }
    return prof;
}

}  // namespace wradon
