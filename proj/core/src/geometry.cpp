#include "wradon/geometry.hpp"

#include <cmath>
#include <numbers>

#include "wradon/errors.hpp"
#include "wradon/gauss_legendre.hpp"

namespace wradon {

Direction::Direction(const Vec3& v) {
    const double n = norm(v);
    if (!(n > 0.0) || !std::isfinite(n)) throw InvalidArgument("Direction: vector must be finite and non-zero");
    v_ = v * (1.0 / n);
}

PlaneFrame plane_frame(const Direction& omega) {
    const Vec3& w = omega.vec();
    int axis = 0;
    double best = std::abs(w.x);
    for (int i = 1; i < 3; ++i) {
        if (std::abs(w[i]) < best) {
            best = std::abs(w[i]);
            axis = i;
        }
    }
    Vec3 a{};
    a[axis] = 1.0;
    const Direction e1(a - dot(a, w) * w);
    const Direction e2(cross(w, e1.vec()));
    return PlaneFrame{omega, e1, e2};
}

SphereQuadrature sphere_quadrature(int n_polar) {
    if (n_polar < 2) throw InvalidArgument("sphere_quadrature: n_polar must be >= 2");
    const GaussRule gl = gauss_legendre(n_polar);
    const int n_azimuth = 2 * n_polar;
    const double dphi = 2.0 * std::numbers::pi / n_azimuth;

    SphereQuadrature q;
    q.nodes.reserve(static_cast<std::size_t>(n_polar) * n_azimuth);
    q.weights.reserve(static_cast<std::size_t>(n_polar) * n_azimuth);
    for (int i = 0; i < n_polar; ++i) {
        const double ct = gl.nodes[i];
        const double st = std::sqrt((1.0 - ct) * (1.0 + ct));
        for (int k = 0; k < n_azimuth; ++k) {
            const double phi = (k + 0.25) * dphi;
            q.nodes.emplace_back(Vec3{st * std::cos(phi), st * std::sin(phi), ct});
            q.weights.push_back(gl.weights[i] * dphi);
        }
    }
    return q;
}

}  // namespace wradon
