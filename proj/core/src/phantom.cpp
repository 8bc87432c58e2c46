#include "wradon/phantom.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "wradon/errors.hpp"

namespace wradon {

double DensitySpec::value(const Vec3& y) const {
    if (ripple_amp == 0.0) return base;
    return base + ripple_amp * std::sin(distance(y, ripple_center) / ripple_scale);
}

double DensitySpec::lipschitz() const { return ripple_amp == 0.0 ? 0.0 : std::abs(ripple_amp) / ripple_scale; }

bool Region::contains(const Vec3& y) const {
    if (!wradon::contains(outer, y)) return false;
    for (const auto& h : holes)
        if (wradon::contains(h, y)) return false;
    return true;
}

double Region::boundary_distance(const Vec3& y) const {
    double d = surface_distance(outer, y);
    for (const auto& h : holes) d = std::min(d, surface_distance(h, y));
    return d;
}

std::string_view to_string(PhantomKind kind) {
    switch (kind) {
        case PhantomKind::ball: return "ball";
        case PhantomKind::cube_in_ball: return "cube_in_ball";
        case PhantomKind::three_ball: return "three_ball";
    }
    return "unknown";
}

PhantomKind phantom_kind_from_string(std::string_view name) {
    if (name == "ball") return PhantomKind::ball;
    if (name == "cube_in_ball") return PhantomKind::cube_in_ball;
    if (name == "three_ball") return PhantomKind::three_ball;
    throw Unsupported("unknown phantom kind '" + std::string(name) + "'");
}

Phantom Phantom::ball(double radius, DensitySpec density, Vec3 center) {
    if (!(radius > 0.0)) throw InvalidArgument("ball phantom: radius must be > 0");
    Phantom ph;
    ph.kind_ = PhantomKind::ball;
    const Ball b{center, radius};
    ph.regions_.push_back(Region{1, b, {}});
    ph.densities_.push_back(density);
    ph.interfaces_.push_back(Interface{b, 1, 0});
    ph.domain_ = b;
    ph.bounding_ball_ = b;
    ph.feature_size_ = radius;
    ph.validate();
    return ph;
}

Phantom Phantom::cube_in_ball(double delta, DensitySpec cube, DensitySpec shell) {
    if (!(delta > 0.0)) throw InvalidArgument("cube_in_ball phantom: delta must be > 0");
    Phantom ph;
    ph.kind_ = PhantomKind::cube_in_ball;
    const Cube c{{}, delta};
    const Ball b{{}, 2.0 * delta};
    ph.regions_.push_back(Region{1, c, {}});
    ph.regions_.push_back(Region{2, b, {c}});
    ph.densities_ = {cube, shell};
    ph.interfaces_ = {Interface{c, 1, 2}, Interface{b, 2, 0}};
    ph.domain_ = b;
    ph.bounding_ball_ = b;
    ph.feature_size_ = std::min(delta, (2.0 - std::numbers::sqrt3) * delta);
    ph.validate();
    return ph;
}

Phantom Phantom::three_ball(Ball b1, Ball b2, Ball b3, DensitySpec d1, DensitySpec d2, DensitySpec d3) {
    if (!(b1.radius > 0.0 && b2.radius > 0.0 && b3.radius > 0.0))
        throw InvalidArgument("three_ball phantom: radii must be > 0");
    const double gap12 = distance(b1.center, b2.center) - b1.radius - b2.radius;
    const double gap13 = b3.radius - distance(b1.center, b3.center) - b1.radius;
    const double gap23 = b3.radius - distance(b2.center, b3.center) - b2.radius;
    if (!(gap12 > 0.0)) throw InvalidArgument("three_ball phantom: inner balls must be at positive distance");
    if (!(gap13 > 0.0 && gap23 > 0.0))
        throw InvalidArgument("three_ball phantom: inner balls must lie strictly inside the enclosing ball");
    Phantom ph;
    ph.kind_ = PhantomKind::three_ball;
    ph.regions_.push_back(Region{1, b1, {}});
    ph.regions_.push_back(Region{2, b2, {}});
    ph.regions_.push_back(Region{3, b3, {b1, b2}});
    ph.densities_ = {d1, d2, d3};
    ph.interfaces_ = {Interface{b1, 1, 3}, Interface{b2, 2, 3}, Interface{b3, 3, 0}};
    ph.domain_ = b3;
    ph.bounding_ball_ = b3;
    ph.feature_size_ = std::min({b1.radius, b2.radius, gap12, gap13, gap23});
    ph.validate();
    return ph;
}

void Phantom::validate() const {
    for (const auto& d : densities_) {
        if (!std::isfinite(d.base) || !std::isfinite(d.ripple_amp))
            throw InvalidArgument("density: base and ripple_amp must be finite");
        if (d.ripple_amp != 0.0 && !(d.ripple_scale > 0.0))
            throw InvalidArgument("density: ripple_scale must be > 0 when ripple_amp != 0");
    }
}

int Phantom::region_of(const Vec3& y) const {
    for (const auto& r : regions_)
        if (r.contains(y)) return r.label;
    return 0;
}

DensitySpec Phantom::density_of(int label) const {
    if (label == 0) return DensitySpec{0.0, 0.0, 1.0, {}};
    if (label < 0 || label > static_cast<int>(densities_.size()))
        throw InvalidArgument("region label " + std::to_string(label) + " out of range");
    return densities_[label - 1];
}

Phantom Phantom::scaled(double s) const {
    Phantom copy = *this;
    for (auto& d : copy.densities_) {
        d.base *= s;
        d.ripple_amp *= s;
    }
    return copy;
}

double eval_density(const Phantom& phantom, const Vec3& y) {
    const auto& regions = phantom.regions();
    for (std::size_t i = 0; i < regions.size(); ++i)
        if (regions[i].contains(y)) return phantom.densities()[i].value(y);
    return 0.0;
}

double radon_ball_oracle(double radius, double d) {
    if (!(radius > 0.0)) throw InvalidArgument("radon_ball_oracle: R must be > 0");
    if (std::abs(d) >= radius) return 0.0;
    return std::numbers::pi * (radius * radius - d * d);
}

double potential_ball_oracle(double radius, double c, double r) {
    if (!(radius > 0.0)) throw InvalidArgument("potential_ball_oracle: R must be > 0");
    if (r < 0.0) throw InvalidArgument("potential_ball_oracle: r must be >= 0");
    if (r <= radius) return c * 2.0 * std::numbers::pi * (radius * radius - r * r / 3.0);
    return c * (4.0 * std::numbers::pi / 3.0) * radius * radius * radius / r;
}

BoundaryPointCloud true_boundary_sample(const Phantom& phantom, std::size_t n_points) {
    if (n_points == 0) throw InvalidArgument("true_boundary_sample: n_points must be > 0");
    const auto& ifaces = phantom.interfaces();
    if (ifaces.empty()) throw Unsupported("true_boundary_sample: phantom has no analytic interfaces");
    double total = 0.0;
    for (const auto& f : ifaces) total += surface_area(f.surface);

    BoundaryPointCloud cloud;
    cloud.points.reserve(n_points);
    cloud.jump_estimates.reserve(n_points);
    std::size_t used = 0;
    for (std::size_t k = 0; k < ifaces.size(); ++k) {
        const auto& f = ifaces[k];
        std::size_t m = (k + 1 == ifaces.size())
                            ? n_points - used
                            : static_cast<std::size_t>(std::llround(n_points * surface_area(f.surface) / total));
        m = std::min(m, n_points - used);
        used += m;
        const DensitySpec din = phantom.density_of(f.inner);
        const DensitySpec dout = phantom.density_of(f.outer);
        for (const Vec3& p : sample_surface(f.surface, m)) {
            cloud.points.push_back(p);
            cloud.jump_estimates.push_back(dout.value(p) - din.value(p));
        }
    }
    return cloud;
}

double jump(const Phantom& phantom, const Vec3& z, int i, int j) {
    constexpr double kTol = 1e-9;
    auto boundary_distance = [&](int label) {
        if (label == 0) return surface_distance(phantom.domain(), z);
        if (label < 0 || label > static_cast<int>(phantom.regions().size()))
            throw InvalidArgument("jump: region label " + std::to_string(label) + " out of range");
        return phantom.regions()[label - 1].boundary_distance(z);
    };
    if (i == j) throw InvalidArgument("jump: regions must differ");
    if (boundary_distance(i) > kTol || boundary_distance(j) > kTol)
        throw InvalidArgument("jump: point is not on the shared boundary of regions " + std::to_string(i) +
                              " and " + std::to_string(j));
    return phantom.density_of(j).value(z) - phantom.density_of(i).value(z);
}

}  // namespace wradon
