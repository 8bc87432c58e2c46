#pragma once

#include <vector>

#include "wradon/vec3.hpp"

namespace wradon {

/// Unit vector on the sphere. Normalized on construction.
class Direction {
public:
    /// Throws InvalidArgument for a zero or non-finite vector.
    explicit Direction(const Vec3& v);

    const Vec3& vec() const { return v_; }
    double operator[](int i) const { return v_[i]; }
    Direction operator-() const { return Direction(-v_, Normalized{}); }

    friend bool operator==(const Direction&, const Direction&) = default;

private:
    struct Normalized {};
    Direction(const Vec3& v, Normalized) : v_(v) {}
    Vec3 v_;
};

/// Right-handed orthonormal frame (e1, e2, omega) spanning the hyperplane with normal omega.
struct PlaneFrame {
    Direction omega;
    Direction e1;
    Direction e2;
};

/// Deterministic frame completion: e1 is Gram-Schmidt of the canonical axis least aligned with
/// omega (lowest index on ties), e2 = omega x e1.
PlaneFrame plane_frame(const Direction& omega);

/// Node/weight set on the unit sphere; weights in steradians.
struct SphereQuadrature {
    std::vector<Direction> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }
};

/// Product rule: n_polar Gauss-Legendre nodes in cos(theta) times 2*n_polar uniform azimuths, shifted by a
/// quarter step so no node lies on a coordinate plane.
/// Node order is polar-major. Throws InvalidArgument for n_polar < 2.
SphereQuadrature sphere_quadrature(int n_polar);

}  // namespace wradon
