#pragma once

#include "wradon/forward.hpp"
#include "wradon/geometry.hpp"
#include "wradon/phantom.hpp"
#include "wradon/weight.hpp"

namespace wradon {

/// Constants of the odd-dimensional (n = 2m + 1) sphere-average identities.
struct BetaConstants {
    int m = 1;
    int n = 3;
    /// 2 m pi^m / m!  (sphere average of the transform vs. the 1/|y - x| potential).
    double beta1 = 0.0;
    /// Coefficient of (Laplacian)^m |y - x| = beta2 |y - x|^(2-n), taken from the consistency identity.
    double beta2 = 0.0;
    /// The same coefficient evaluated from its printed Gamma-function expression.
    double beta2_literal = 0.0;
    /// 2 pi^(n/2) (2 - n) / Gamma(n/2)  (Laplacian of the Newtonian-type potential).
    double beta3 = 0.0;
    /// 2 (-1)^m (2 pi)^(2m): coefficient of V(x,x) v(x) in the indicator.
    double theorem1_coeff = 0.0;

    /// |beta1 beta2 beta3 / (2m) - theorem1_coeff| / |theorem1_coeff|.
    double consistency_residual() const;
};

/// Gamma at positive integers and half-integers (arg = k/2, k >= 1) by exact recurrence.
double gamma_half_integer(int twice_arg);

/// Throws InvalidArgument for m < 1.
BetaConstants beta_constants(int m);

/// Relative residual of the sphere integral of |eta . omega| against 2 pi |eta|; 0 for eta = 0.
double check_eq4(const Vec3& eta, const SphereQuadrature& squad);

/// Integral of V(x, y) v(y) / |y - x| over G by shells centred at x: per direction, the ray is clipped
/// to each region and each clipped interval gets an n_radial-cell midpoint rule in r (the r^2 Jacobian
/// cancels the singularity). Throws InvalidArgument for n_radial < 8.
double volume_potential(const Phantom& phantom, const Weight& weight, const Vec3& x, int n_radial,
                        const SphereQuadrature& squad);

struct Lemma2Check {
    double lhs = 0.0;
    double rhs = 0.0;
    double rel_err = 0.0;
};

/// Sphere sum of weighted_radon at x against beta1 * volume_potential(x).
Lemma2Check check_lemma2(const Phantom& phantom, const Weight& weight, const Vec3& x, const SphereQuadrature& squad,
                         const PlaneQuadratureSpec& pq, int n_radial);

}  // namespace wradon
