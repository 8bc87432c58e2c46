#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "wradon/point_cloud.hpp"
#include "wradon/solids.hpp"
#include "wradon/vec3.hpp"

namespace wradon {

/// Per-region density c + a*sin(|y - y0| / s); Lipschitz with constant |a|/s.
struct DensitySpec {
    double base = 1.0;
    double ripple_amp = 0.0;
    double ripple_scale = 1.0;
    Vec3 ripple_center{};

    double value(const Vec3& y) const;
    bool is_constant() const { return ripple_amp == 0.0; }
    double lipschitz() const;
};

/// Subregion G_i = outer minus holes. Holes are disjoint and contained in outer.
/// Points on a hole's surface belong to the hole's own region (closed inequalities win).
struct Region {
    int label = 1;
    Solid outer;
    std::vector<Solid> holes;

    bool contains(const Vec3& y) const;
    Box3 bbox() const { return bounding_box(outer); }
    double boundary_distance(const Vec3& y) const;
};

/// Part of the interface surface dG0 between region `inner` and region `outer` (0 = exterior).
struct Interface {
    Solid surface;
    int inner = 1;
    int outer = 0;
};

enum class PhantomKind { ball, cube_in_ball, three_ball };

std::string_view to_string(PhantomKind kind);
/// Throws Unsupported for unknown names.
PhantomKind phantom_kind_from_string(std::string_view name);

/// Piecewise-Hoelder density on a partitioned domain G (built-in generalized-convex layouts).
class Phantom {
public:
    /// Single ball of radius R: G = G_1 = B(center, R).
    static Phantom ball(double radius, DensitySpec density, Vec3 center = {});
    /// Cube of half-side delta inside B(0, 2*delta): G_1 = cube, G_2 = ball minus closed cube.
    static Phantom cube_in_ball(double delta, DensitySpec cube, DensitySpec shell);
    /// Two disjoint balls inside an enclosing ball: G_1 = B_1, G_2 = B_2, G_3 = B_3 minus both.
    static Phantom three_ball(Ball b1, Ball b2, Ball b3, DensitySpec d1, DensitySpec d2, DensitySpec d3);

    PhantomKind kind() const { return kind_; }
    const std::vector<Region>& regions() const { return regions_; }
    const std::vector<DensitySpec>& densities() const { return densities_; }
    const std::vector<Interface>& interfaces() const { return interfaces_; }
    /// The closure of G as a solid.
    const Solid& domain() const { return domain_; }
    Box3 bbox() const { return bounding_box(domain_); }
    /// Ball enclosing G.
    const Ball& bounding_ball() const { return bounding_ball_; }
    /// Smallest geometric feature (radius, half-side or gap between surfaces).
    double min_feature_size() const { return feature_size_; }

    /// 1-based region label containing y, or 0 outside G.
    int region_of(const Vec3& y) const;
    /// Density spec for a label; label 0 yields the zero density.
    DensitySpec density_of(int label) const;

    /// Copy with every density scaled by s (geometry unchanged).
    Phantom scaled(double s) const;

private:
    Phantom() = default;
    void validate() const;

    PhantomKind kind_ = PhantomKind::ball;
    std::vector<Region> regions_;
    std::vector<DensitySpec> densities_;
    std::vector<Interface> interfaces_;
    Solid domain_;
    Ball bounding_ball_;
    double feature_size_ = 0.0;
};

/// v(y): region density inside G, 0 outside.
double eval_density(const Phantom& phantom, const Vec3& y);

/// Area of the plane section of a ball of radius R at distance d from its center.
double radon_ball_oracle(double radius, double d);

/// Integral of c/|y - x| over a ball of radius R, at distance r of x from the center.
double potential_ball_oracle(double radius, double c, double r);

/// n_points samples on dG0 split across interfaces by area; jump_estimates carry [v]_{inner,outer}.
BoundaryPointCloud true_boundary_sample(const Phantom& phantom, std::size_t n_points);

/// [v(z)]_{i,j} = [v(z)]_j - [v(z)]_i for a point on the shared boundary of regions i and j
/// (label 0 = exterior of G). Throws InvalidArgument if z is not within 1e-9 of both boundaries.
double jump(const Phantom& phantom, const Vec3& z, int i, int j);

}  // namespace wradon
