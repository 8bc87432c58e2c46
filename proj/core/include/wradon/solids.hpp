#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "wradon/geometry.hpp"
#include "wradon/vec3.hpp"

namespace wradon {

/// In-plane coordinates relative to the plane's foot point p*omega: y = p*omega + s*e1 + t*e2.
struct Point2 {
    double s = 0.0;
    double t = 0.0;
};

struct Disk {
    Point2 center;
    double radius = 0.0;
};

/// Convex polygon, counter-clockwise in (s, t).
struct Polygon {
    std::vector<Point2> vertices;
};

/// Intersection of a solid with a hyperplane. monostate = empty (or measure zero).
using Section = std::variant<std::monostate, Disk, Polygon>;

double section_area(const Section& sec);
/// Sorted s-coordinates where the chord structure of the section changes.
std::vector<double> section_breakpoints(const Section& sec);
/// Chord [t0, t1] of the section on the line s = const; nullopt when the line misses.
std::optional<std::pair<double, double>> section_chord(const Section& sec, double s);

struct Ball {
    Vec3 center;
    double radius = 1.0;
};

/// Axis-aligned cube {y : |y_i - center_i| <= half_side}.
struct Cube {
    Vec3 center;
    double half_side = 0.5;
};

using Solid = std::variant<Ball, Cube>;

/// Closed membership test.
bool contains(const Solid& solid, const Vec3& y);
/// Euclidean distance from y to the solid's surface.
double surface_distance(const Solid& solid, const Vec3& y);
/// Outward unit normal at (or near) a surface point; for cubes, of the nearest face.
Vec3 surface_normal(const Solid& solid, const Vec3& y);
Box3 bounding_box(const Solid& solid);
double surface_area(const Solid& solid);
/// Parameter interval {t : o + t*u inside}, nullopt if the line misses or only touches.
std::optional<std::pair<double, double>> clip_line(const Solid& solid, const Vec3& o, const Vec3& u);
/// Section with the plane {y : y.omega = p}, expressed in the frame's foot-anchored coordinates.
Section plane_section(const Solid& solid, const PlaneFrame& frame, double p);
/// n quasi-uniform points on the surface (Fibonacci lattice on spheres, golden lattice per cube face).
std::vector<Vec3> sample_surface(const Solid& solid, std::size_t n);

}  // namespace wradon
