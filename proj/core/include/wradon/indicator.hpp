#pragma once

#include "wradon/forward.hpp"
#include "wradon/geometry.hpp"
#include "wradon/grid.hpp"
#include "wradon/phantom.hpp"
#include "wradon/weight.hpp"

namespace wradon {

struct IndicatorConfig {
    GridGeometry grid;
    SphereQuadrature squad;
    PlaneQuadratureSpec pq;
    /// Power of the Laplacian; the grid pipeline supports m = 1 (n = 3) only.
    int m = 1;
    /// 0 = WRADON_WORKERS / hardware concurrency.
    int workers = 0;
    /// Optional 3x3x3 box average of the sphere-average field before differentiation.
    bool presmooth = false;

    /// Full pipeline validation: grid covers G's box inflated by m layers, 2h below the phantom's
    /// smallest feature, n_polar >= 2/h, and for midpoint planes n_cells >= 4 * diameter / h.
    void validate(const Phantom& phantom) const;
};

/// I(x) = sum_l w_l [Uv](x, omega_l) at every grid node. Output is independent of the worker count.
/// Throws NumericalError naming the node and direction on a non-finite plane integral.
ScalarGrid3 sphere_average_field(const Phantom& phantom, const Weight& weight, const IndicatorConfig& cfg);

/// m applications of the 7-point Laplacian; each application drops one layer per face.
ScalarGrid3 iterated_laplacian(const ScalarGrid3& grid, int m, int workers = 1);

/// 3x3x3 box average; drops one layer per face.
ScalarGrid3 box_smooth(const ScalarGrid3& grid);

struct IndicatorResult {
    ScalarGrid3 sphere_average;
    ScalarGrid3 indicator;
};

/// Validates cfg, then sphere average, optional smoothing and the iterated Laplacian.
IndicatorResult compute_indicator(const Phantom& phantom, const Weight& weight, const IndicatorConfig& cfg);

/// (Laplacian)^m of the sphere-average field; approximates 2(-1)^m (2 pi)^(2m) V(x,x) v(x) + Phi(x).
ScalarGrid3 indicator_field(const Phantom& phantom, const Weight& weight, const IndicatorConfig& cfg);

}  // namespace wradon
