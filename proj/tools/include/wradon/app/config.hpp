#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "wradon/forward.hpp"
#include "wradon/indicator.hpp"
#include "wradon/phantom.hpp"
#include "wradon/weight.hpp"

namespace wradon::app {

struct PhantomConfig {
    PhantomKind kind = PhantomKind::ball;
    double radius = 1.0;
    Vec3 center{};
    double delta = 0.5;
    std::vector<Ball> balls;           // three_ball only; empty means built-in layout
    std::vector<DensitySpec> densities; // empty means per-kind defaults
};

struct WeightConfig {
    WeightKind kind = WeightKind::constant;
    double amplitude = 0.5;
    double sigma = 1.0;
};

struct GridConfig {
    double h = 0.05;
    // Both set, or both unset (grid then covers the phantom bbox inflated by m cells plus one).
    std::optional<Vec3> origin;
    std::optional<std::array<int, 3>> dims;
};

struct QuadratureConfig {
    int n_polar = 64;
    PlaneScheme scheme = PlaneScheme::sections;
    int n_cells = 256;
    double half_extent = 0.0;
    int n_radial = 128;
    int chord_nodes = 8;
};

struct DetectionConfig {
    double tau = 0.25;
    std::size_t n_truth = 20000;
    int window = 3;
};

struct ForwardSample {
    Vec3 x;
    Vec3 omega;
};

struct RunConfig {
    PhantomConfig phantom;
    WeightConfig weight;
    GridConfig grid;
    QuadratureConfig quadrature;
    DetectionConfig detection;
    std::vector<ForwardSample> forward;
    std::string output_dir = "out";
    int workers = 0;
    std::uint64_t seed = 1;
    int m = 1;
    bool presmooth = false;

    /// Field-level range checks; throws InvalidArgument("<field>: <problem>").
    void validate() const;
};

RunConfig parse_config(const std::string& json_text);
std::string serialize_config(const RunConfig& cfg);
RunConfig load_config(const std::filesystem::path& path);
void save_config(const RunConfig& cfg, const std::filesystem::path& path);

/// FNV-1a 64 over the canonical serialization, as 16 hex digits.
std::string config_hash(const RunConfig& cfg);

std::vector<DensitySpec> effective_densities(const PhantomConfig& pc);
Phantom build_phantom(const RunConfig& cfg);
Weight build_weight(const RunConfig& cfg, const Phantom& phantom);
GridGeometry build_grid(const RunConfig& cfg, const Box3& cover);
IndicatorConfig build_indicator_config(const RunConfig& cfg, const Phantom& phantom);
PlaneQuadratureSpec build_plane_quadrature(const RunConfig& cfg);

}  // namespace wradon::app
