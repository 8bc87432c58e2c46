#pragma once

#include <cstddef>

#include "wradon/grid.hpp"
#include "wradon/indicator.hpp"
#include "wradon/point_cloud.hpp"

namespace wradon {

struct DetectOptions {
    /// Faces below floor * Dmax are never flagged.
    double floor = 1e-6;
    /// Jump readout window: along the face axis, nodes [i - window + 1, i + window] around face (i, i+1).
    int window = 3;
    int workers = 1;
};

/// Flags grid faces whose adjacent-node difference exceeds tau * (largest difference), emits face
/// midpoints, and estimates the jump at each as the value range over the readout window. The window
/// spans the two-cell transition the 7-point stencil produces across an interface. Midpoints closer than
/// h/2 are merged keeping the larger estimate. Throws InvalidArgument unless 0 < tau < 1 and all values
/// are finite.
BoundaryPointCloud detect_jumps(const ScalarGrid3& field, double tau, const DetectOptions& opts = {});

/// Same, also reporting the absolute threshold applied (0 for a constant field).
BoundaryPointCloud detect_jumps(const ScalarGrid3& field, double tau, const DetectOptions& opts, double& threshold);

/// Exact symmetric Hausdorff distance via grid-bucketed nearest-neighbour search.
/// Throws InvalidArgument if either cloud is empty.
double hausdorff(const BoundaryPointCloud& a, const BoundaryPointCloud& b, int workers = 1);

/// Largest distance from a point of `from` to its nearest neighbour in `to`.
double directed_hausdorff(const BoundaryPointCloud& from, const BoundaryPointCloud& to, int workers = 1);

struct DetectionReport {
    double hausdorff_to_truth = 0.0;
    std::size_t n_detected = 0;
    double mean_jump = 0.0;
    double threshold_used = 0.0;
};

/// Scores a detected cloud against true_boundary_sample(phantom, n_truth). An empty cloud scores infinity.
DetectionReport evaluate_detection(const BoundaryPointCloud& detected, const Phantom& phantom, double threshold_used,
                                   std::size_t n_truth = 20000, int workers = 1);

struct UniquenessResult {
    DetectionReport a;
    DetectionReport b;
    BoundaryPointCloud cloud_a;
    BoundaryPointCloud cloud_b;
    double cross_hausdorff = 0.0;
};

/// Full pipeline on both (phantom, weight) pairs with a shared configuration; compares the detected
/// boundaries with each other and with their own ground truth.
UniquenessResult uniqueness_experiment(const Phantom& phantom_a, const Weight& weight_a, const Phantom& phantom_b,
                                       const Weight& weight_b, const IndicatorConfig& cfg, double tau,
                                       std::size_t n_truth = 20000);

}  // namespace wradon
