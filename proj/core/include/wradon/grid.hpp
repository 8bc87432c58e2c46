#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "wradon/vec3.hpp"

namespace wradon {

/// Geometry of a regular isotropic grid; node (i, j, k) sits at origin + h*(i, j, k).
struct GridGeometry {
    Vec3 origin;
    double spacing = 0.1;
    std::array<int, 3> dims{2, 2, 2};

    std::size_t size() const {
        return static_cast<std::size_t>(dims[0]) * static_cast<std::size_t>(dims[1]) * static_cast<std::size_t>(dims[2]);
    }
    /// Flat index; k (z) fastest, then j (y), then i (x).
    std::size_t index(int i, int j, int k) const {
        return (static_cast<std::size_t>(i) * dims[1] + static_cast<std::size_t>(j)) * dims[2] + static_cast<std::size_t>(k);
    }
    std::array<int, 3> unflatten(std::size_t idx) const {
        const int k = static_cast<int>(idx % dims[2]);
        idx /= dims[2];
        const int j = static_cast<int>(idx % dims[1]);
        return {static_cast<int>(idx / dims[1]), j, k};
    }
    Vec3 node(int i, int j, int k) const { return origin + spacing * Vec3{double(i), double(j), double(k)}; }
    Box3 box() const { return {origin, node(dims[0] - 1, dims[1] - 1, dims[2] - 1)}; }

    /// Throws InvalidArgument if spacing <= 0 or any dim < 2.
    void validate() const;

    /// Smallest grid with spacing h covering `box` (lower corner at box.lo).
    static GridGeometry covering(const Box3& box, double h);

    friend bool operator==(const GridGeometry&, const GridGeometry&) = default;
};

/// Regular 3-D scalar field.
struct ScalarGrid3 {
    GridGeometry geometry;
    std::vector<double> values;

    ScalarGrid3() = default;
    explicit ScalarGrid3(GridGeometry g, double fill = 0.0) : geometry(g), values(g.size(), fill) {}

    double& at(int i, int j, int k) { return values[geometry.index(i, j, k)]; }
    double at(int i, int j, int k) const { return values[geometry.index(i, j, k)]; }
    const std::array<int, 3>& dims() const { return geometry.dims; }
    double spacing() const { return geometry.spacing; }

    bool all_finite() const;
};

/// Writes `<base>.json` (origin, spacing, dims, index_order "z-fastest", dtype "float64-le")
/// and `<base>.bin` (little-endian IEEE-754 doubles in flat index order).
void write_grid(const ScalarGrid3& grid, const std::filesystem::path& base);
/// Reads a grid written by write_grid; validates header and payload length.
ScalarGrid3 read_grid(const std::filesystem::path& base);
/// CSV with header i,j,k,x,y,z,value and 17 significant digits.
void write_grid_csv(const ScalarGrid3& grid, const std::filesystem::path& path);

}  // namespace wradon
