#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "wradon/geometry.hpp"
#include "wradon/phantom.hpp"
#include "wradon/weight.hpp"

namespace wradon {

enum class PlaneScheme {
    /// Midpoint rule on the square [-S, S]^2 of the plane around its foot point.
    midpoint,
    /// Exact plane sections of the phantom's solids, closed-form chord integrals of the weight,
    /// Gauss-Legendre across chords between geometric breakpoints.
    sections,
};

std::string_view to_string(PlaneScheme scheme);
PlaneScheme plane_scheme_from_string(std::string_view name);

struct PlaneQuadratureSpec {
    PlaneScheme scheme = PlaneScheme::midpoint;
    /// Half side S of the midpoint patch; 0 selects the covering value for the phantom.
    double half_extent = 0.0;
    /// Midpoint cells per axis (>= 8).
    int n_cells = 256;
    /// Gauss nodes per breakpoint interval (and per chord for non-constant densities) for `sections`.
    int chord_nodes = 8;

    /// Throws InvalidArgument on out-of-range fields.
    void validate() const;
};

/// Smallest midpoint half extent that covers G on every plane.
double covering_half_extent(const Phantom& phantom);

/// Integral of V(x, y) v(y) over the hyperplane through x with the given frame's normal.
/// `frame` must equal plane_frame(frame.omega); weighted_radon and the grid pipeline share this path.
double plane_integral(const Phantom& phantom, const Weight& weight, const Vec3& x, const PlaneFrame& frame,
                      const PlaneQuadratureSpec& pq);

/// [Uv](x, omega).
double weighted_radon(const Phantom& phantom, const Weight& weight, const Vec3& x, const Direction& omega,
                      const PlaneQuadratureSpec& pq);

/// [Rv](omega, p): weighted_radon with V == 1 at the foot point p*omega.
double classical_radon(const Phantom& phantom, const Direction& omega, double p, const PlaneQuadratureSpec& pq);

struct ContinuityProfile {
    std::vector<std::pair<double, double>> samples;  // (p, [Rv](omega, p))
    double max_adjacent_diff = 0.0;
};

/// Uniform p-profile of the classical transform on [p_min, p_max]; n_samples >= 16.
ContinuityProfile continuity_profile(const Phantom& phantom, const Direction& omega, double p_min, double p_max,
                                     int n_samples, const PlaneQuadratureSpec& pq);

}  // namespace wradon
