#pragma once

#include <string_view>

#include "wradon/geometry.hpp"
#include "wradon/solids.hpp"
#include "wradon/vec3.hpp"

namespace wradon {

class Phantom;

enum class WeightKind { constant, gaussian_bump, polynomial };

std::string_view to_string(WeightKind kind);
WeightKind weight_kind_from_string(std::string_view name);

/// Hyperplane through x = foot + xs*e1 + xt*e2 with the frame's coordinates, where foot = p*omega.
struct PlaneContext {
    Vec3 x;
    double p = 0.0;
    Point2 x_in_plane;
};

/// Smooth weight V(x, y). All built-ins are C-infinity and satisfy V(x, x) != 0 on G.
class Weight {
public:
    /// V == 1.
    static Weight constant();
    /// V = 1 + a * exp(-|x - y|^2 / sigma^2). Requires sigma > 0 and a != -1.
    static Weight gaussian_bump(double amplitude, double sigma);
    /// V = 1 + a * (x . y) / L^2 with L the largest |corner| of G's bounding box; requires |a| < 1
    /// so that V > 0 on G x G.
    static Weight polynomial(double amplitude, const Phantom& phantom);

    WeightKind kind() const { return kind_; }
    double amplitude() const { return amplitude_; }
    double sigma() const { return sigma_; }
    double scale() const { return scale_; }

    double operator()(const Vec3& x, const Vec3& y) const;
    double diagonal(const Vec3& x) const { return (*this)(x, x); }

    /// Closed form of the integral over t in [t0, t1] of V(x, foot + s*e1 + t*e2).
    double chord_integral(const PlaneContext& ctx, double s, double t0, double t1) const;

private:
    Weight(WeightKind kind, double a, double sigma, double scale)
        : kind_(kind), amplitude_(a), sigma_(sigma), scale_(scale) {}

    WeightKind kind_;
    double amplitude_;
    double sigma_;
    double scale_;
};

}  // namespace wradon
