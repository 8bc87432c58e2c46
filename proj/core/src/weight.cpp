#include "wradon/weight.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wradon/errors.hpp"
#include "wradon/phantom.hpp"

namespace wradon {

namespace {

/// erf(b) - erf(a) without cancellation in the tails.
double erf_diff(double a, double b) {
    if (a > 0.0 && b > 0.0) return std::erfc(a) - std::erfc(b);
    if (a < 0.0 && b < 0.0) return std::erfc(-b) - std::erfc(-a);
    return std::erf(b) - std::erf(a);
}

}  // namespace

std::string_view to_string(WeightKind kind) {
    switch (kind) {
        case WeightKind::constant: return "constant";
        case WeightKind::gaussian_bump: return "gaussian_bump";
        case WeightKind::polynomial: return "polynomial";
    }
    return "unknown";
}

WeightKind weight_kind_from_string(std::string_view name) {
    if (name == "constant") return WeightKind::constant;
    if (name == "gaussian_bump") return WeightKind::gaussian_bump;
    if (name == "polynomial") return WeightKind::polynomial;
    throw Unsupported("unknown weight kind '" + std::string(name) + "'");
}

Weight Weight::constant() { return Weight(WeightKind::constant, 0.0, 1.0, 1.0); }

Weight Weight::gaussian_bump(double amplitude, double sigma) {
    if (!std::isfinite(amplitude)) throw InvalidArgument("gaussian_bump: amplitude must be finite");
    if (!(sigma > 0.0) || !std::isfinite(sigma)) throw InvalidArgument("gaussian_bump: sigma must be > 0");
    if (amplitude == -1.0) throw InvalidArgument("gaussian_bump: amplitude -1 makes V(x,x) = 0");
    return Weight(WeightKind::gaussian_bump, amplitude, sigma, 1.0);
}

Weight Weight::polynomial(double amplitude, const Phantom& phantom) {
    if (!(std::abs(amplitude) < 1.0))
        throw InvalidArgument("polynomial weight: |amplitude| must be < 1 for V > 0 on G x G");
    const Box3 b = phantom.bbox();
    double l2 = 0.0;
    for (int k = 0; k < 8; ++k) {
        const Vec3 c{(k & 1) ? b.hi.x : b.lo.x, (k & 2) ? b.hi.y : b.lo.y, (k & 4) ? b.hi.z : b.lo.z};
        l2 = std::max(l2, norm2(c));
    }
    return Weight(WeightKind::polynomial, amplitude, 1.0, std::sqrt(l2));
}

double Weight::operator()(const Vec3& x, const Vec3& y) const {
    switch (kind_) {
        case WeightKind::constant: return 1.0;
        case WeightKind::gaussian_bump: return 1.0 + amplitude_ * std::exp(-norm2(x - y) / (sigma_ * sigma_));
        case WeightKind::polynomial: return 1.0 + amplitude_ * dot(x, y) / (scale_ * scale_);
    }
    return 1.0;
}

double Weight::chord_integral(const PlaneContext& ctx, double s, double t0, double t1) const {
    const double len = t1 - t0;
    switch (kind_) {
        case WeightKind::constant: return len;
        case WeightKind::gaussian_bump: {
            const double ds = s - ctx.x_in_plane.s;
            const double g = std::exp(-ds * ds / (sigma_ * sigma_));
            const double e = erf_diff((t0 - ctx.x_in_plane.t) / sigma_, (t1 - ctx.x_in_plane.t) / sigma_);
            return len + amplitude_ * g * 0.5 * std::sqrt(std::numbers::pi) * sigma_ * e;
        }
        case WeightKind::polynomial: {
            // x . y = p^2 + s*xs + t*xt for y in the plane through x.
            const double l2 = scale_ * scale_;
            const double base = ctx.p * ctx.p + s * ctx.x_in_plane.s;
            return len * (1.0 + amplitude_ * base / l2) +
                   amplitude_ * ctx.x_in_plane.t / l2 * 0.5 * (t1 * t1 - t0 * t0);
        }
    }
    return len;
}

}  // namespace wradon
