#include "wradon/identities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "wradon/errors.hpp"
#include "wradon/kahan.hpp"

namespace wradon {

double gamma_half_integer(int twice_arg) {
    if (twice_arg < 1) throw InvalidArgument("gamma_half_integer: argument must be positive");
    double g;
    int k;
    if (twice_arg % 2 == 0) {
        g = 1.0;  // Gamma(1)
        k = 2;
    } else {
        g = std::sqrt(std::numbers::pi);  // Gamma(1/2)
        k = 1;
    }
    for (; k < twice_arg; k += 2) g *= 0.5 * k;  // Gamma(a + 1) = a Gamma(a)
    return g;
}

double BetaConstants::consistency_residual() const {
    return std::abs(beta1 * beta2 * beta3 / (2.0 * m) - theorem1_coeff) / std::abs(theorem1_coeff);
}

BetaConstants beta_constants(int m) {
    if (m < 1) throw InvalidArgument("beta_constants: m must be >= 1");
    const double pi = std::numbers::pi;
    BetaConstants b;
    b.m = m;
    b.n = 2 * m + 1;
    const double sign = (m % 2 == 0) ? 1.0 : -1.0;
    b.beta1 = 2.0 * m * std::pow(pi, m) / gamma_half_integer(2 * (m + 1));
    b.beta3 = 2.0 * std::pow(pi, 0.5 * b.n) * (2.0 - b.n) / gamma_half_integer(b.n);
    b.theorem1_coeff = 2.0 * sign * std::pow(2.0 * pi, 2 * m);
    b.beta2 = b.theorem1_coeff * 2.0 * m / (b.beta1 * b.beta3);
    b.beta2_literal = sign * std::pow(2.0, b.n) * gamma_half_integer(3) * gamma_half_integer(2 * (m + 1)) *
                      gamma_half_integer(b.n) / (pi * (2.0 - b.n));
    return b;
}

double check_eq4(const Vec3& eta, const SphereQuadrature& squad) {
    const double en = norm(eta);
    if (en == 0.0) return 0.0;
    KahanSum acc;
    for (std::size_t k = 0; k < squad.size(); ++k) acc.add(squad.weights[k] * std::abs(dot(eta, squad.nodes[k].vec())));
    const double exact = 2.0 * std::numbers::pi * en;
    return std::abs(acc.value() - exact) / exact;
}

double volume_potential(const Phantom& phantom, const Weight& weight, const Vec3& x, int n_radial,
                        const SphereQuadrature& squad) {
    if (n_radial < 8) throw InvalidArgument("volume_potential: n_radial must be >= 8");
    const auto& regions = phantom.regions();
    const auto& dens = phantom.densities();
    KahanSum total;
    for (std::size_t k = 0; k < squad.size(); ++k) {
        const Vec3& u = squad.nodes[k].vec();
        KahanSum ray;
        auto add_interval = [&](double r0, double r1, const DensitySpec& d, double sign) {
            r0 = std::max(r0, 0.0);
            if (!(r1 > r0)) return;
            const double dr = (r1 - r0) / n_radial;
            for (int i = 0; i < n_radial; ++i) {
                const double r = r0 + (i + 0.5) * dr;
                const Vec3 y = x + r * u;
                // r^2 dr from the volume element divided by |y - x| = r.
                ray.add(sign * r * dr * weight(x, y) * d.value(y));
            }
        };
        for (std::size_t i = 0; i < regions.size(); ++i) {
            if (auto iv = clip_line(regions[i].outer, x, u)) add_interval(iv->first, iv->second, dens[i], 1.0);
            for (const Solid& h : regions[i].holes)
                if (auto iv = clip_line(h, x, u)) add_interval(iv->first, iv->second, dens[i], -1.0);
        }
        total.add(squad.weights[k] * ray.value());
    }
    return total.value();
}

Lemma2Check check_lemma2(const Phantom& phantom, const Weight& weight, const Vec3& x, const SphereQuadrature& squad,
                         const PlaneQuadratureSpec& pq, int n_radial) {
    pq.validate();
    KahanSum lhs;
    for (std::size_t k = 0; k < squad.size(); ++k)
        lhs.add(squad.weights[k] * plane_integral(phantom, weight, x, plane_frame(squad.nodes[k]), pq));
    Lemma2Check c;
    c.lhs = lhs.value();
    c.rhs = beta_constants(1).beta1 * volume_potential(phantom, weight, x, n_radial, squad);
    c.rel_err = std::abs(c.lhs - c.rhs) / std::max(std::abs(c.rhs), 1e-30);
    return c;
}

}  // namespace wradon
