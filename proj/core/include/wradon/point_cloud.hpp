#pragma once

#include <filesystem>
#include <vector>

#include "wradon/vec3.hpp"

namespace wradon {

/// Boundary points with one jump magnitude per point (detected or ground truth).
struct BoundaryPointCloud {
    std::vector<Vec3> points;
    std::vector<double> jump_estimates;

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
};

/// CSV with header x,y,z,jump_estimate and 17 significant digits.
void write_point_cloud_csv(const BoundaryPointCloud& cloud, const std::filesystem::path& path);
BoundaryPointCloud read_point_cloud_csv(const std::filesystem::path& path);

}  // namespace wradon
