#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wradon/errors.hpp"
#include "wradon/geometry.hpp"
#include "wradon/phantom.hpp"
#include "wradon/solids.hpp"

using namespace wradon;

namespace {
// Polygon/disk area by counting lattice points of a fine (s,t) grid.
double lattice_area(const Section& sec, double half, int n) {
    const double d = 2.0 * half / n;
    long count = 0;
    for (int i = 0; i < n; ++i) {
        const double s = -half + (i + 0.5) * d;
        auto ch = section_chord(sec, s);
        if (!ch) continue;
        for (int j = 0; j < n; ++j) {
            const double t = -half + (j + 0.5) * d;
            if (t >= ch->first && t <= ch->second) ++count;
        }
    }
    return count * d * d;
}
}  // namespace

TEST_CASE("solids: membership, distance, bounding boxes") {
    const Solid b = Ball{{0.0, 0.0, 0.0}, 1.0};
    const Solid c = Cube{{0.0, 0.0, 0.0}, 0.5};
    CHECK(contains(b, {1.0, 0.0, 0.0}));
    CHECK_FALSE(contains(b, {1.0 + 1e-12, 0.0, 0.0}));
    CHECK(contains(c, {0.5, 0.5, -0.5}));
    CHECK(surface_distance(b, {0.2, 0.0, 0.0}) == doctest::Approx(0.8));
    CHECK(surface_distance(c, {0.0, 0.2, 0.0}) == doctest::Approx(0.3));
    CHECK(surface_distance(c, {1.5, 0.0, 0.0}) == doctest::Approx(1.0));
    CHECK(surface_distance(c, {1.5, 1.5, 0.0}) == doctest::Approx(std::sqrt(2.0)));
    CHECK(surface_area(b) == doctest::Approx(4.0 * oracle::pi));
    CHECK(surface_area(c) == doctest::Approx(6.0));
    const Box3 bb = bounding_box(b);
    CHECK(bb.lo.x == -1.0);
    CHECK(bb.hi.z == 1.0);
}

TEST_CASE("solids: line clipping") {
    const auto bc = clip_line(Ball{{0, 0, 0}, 1.0}, {0.0, 0.0, 0.0}, {1.0, 0.0, 0.0});
    REQUIRE(bc);
    CHECK(bc->first == doctest::Approx(-1.0));
    CHECK(bc->second == doctest::Approx(1.0));
    CHECK_FALSE(clip_line(Ball{{0, 0, 0}, 1.0}, {0.0, 2.0, 0.0}, {1.0, 0.0, 0.0}));
    const auto cc = clip_line(Cube{{0, 0, 0}, 0.5}, {-2.0, 0.1, 0.1}, {1.0, 0.0, 0.0});
    REQUIRE(cc);
    CHECK(cc->first == doctest::Approx(1.5));
    CHECK(cc->second == doctest::Approx(2.5));
}

TEST_CASE("plane sections match areas from an independent lattice count") {
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> up(-0.9, 0.9);
    for (int i = 0; i < 25; ++i) {
        const Direction w(oracle::random_unit(rng));
        const PlaneFrame f = plane_frame(w);
        const double p = up(rng);
        const Section sb = plane_section(Ball{{0.1, -0.2, 0.05}, 1.0}, f, p);
        const double d = p - dot(Vec3{0.1, -0.2, 0.05}, w.vec());
        CHECK(section_area(sb) == doctest::Approx(oracle::disk_area(1.0, d)).epsilon(1e-12));
        const Section sc = plane_section(Cube{{0.0, 0.0, 0.0}, 0.5}, f, 0.5 * p);
        CHECK(std::abs(section_area(sc) - lattice_area(sc, 1.0, 1200)) <= 4e-3);
    }
    // axis-aligned plane through a cube: a unit square
    const PlaneFrame fz = plane_frame(Direction(Vec3{0, 0, 1}));
    CHECK(section_area(plane_section(Cube{{0, 0, 0}, 0.5}, fz, 0.1)) == doctest::Approx(1.0));
    CHECK(std::holds_alternative<std::monostate>(plane_section(Cube{{0, 0, 0}, 0.5}, fz, 0.7)));
}

TEST_CASE("surface samples lie on the surface") {
    for (const auto& p : sample_surface(Ball{{0, 0, 0}, 1.0}, 1000)) CHECK(std::abs(norm(p) - 1.0) <= 1e-12);
    const auto cs = sample_surface(Cube{{0, 0, 0}, 0.5}, 600);
    CHECK(cs.size() == 600);
    for (const auto& p : cs) CHECK(surface_distance(Cube{{0, 0, 0}, 0.5}, p) <= 1e-12);
}

TEST_CASE("eval_density examples") {
    const Phantom ball = Phantom::ball(1.0, DensitySpec{1.0});
    CHECK(eval_density(ball, {0.2, 0.0, 0.0}) == 1.0);
    CHECK(eval_density(ball, {2.0, 0.0, 0.0}) == 0.0);
    const Phantom cib = Phantom::cube_in_ball(0.5, DensitySpec{2.0}, DensitySpec{0.7});
    CHECK(eval_density(cib, {0.6, 0.0, 0.0}) == 0.7);
    CHECK(eval_density(cib, {0.2, 0.1, 0.0}) == 2.0);
    CHECK(eval_density(cib, {1.01, 0.0, 0.0}) == 0.0);
    // boundary points resolve to the first region whose closed predicate holds
    CHECK(eval_density(cib, {0.5, 0.0, 0.0}) == 2.0);
}

TEST_CASE("radon and potential ball oracles") {
    CHECK(radon_ball_oracle(1.0, 0.0) == doctest::Approx(oracle::pi));
    CHECK(radon_ball_oracle(1.0, 0.6) == doctest::Approx(0.64 * oracle::pi));
    CHECK(radon_ball_oracle(1.0, 1.2) == 0.0);
    CHECK_THROWS_AS(radon_ball_oracle(0.0, 0.1), InvalidArgument);
    CHECK(potential_ball_oracle(1.0, 1.0, 0.0) == doctest::Approx(2.0 * oracle::pi));
    CHECK(potential_ball_oracle(1.0, 1.0, 2.0) == doctest::Approx(2.0 * oracle::pi / 3.0));
    CHECK(potential_ball_oracle(1.3, 2.0, 1.3) == doctest::Approx(2.0 * 4.0 * oracle::pi / 3.0 * 1.69));
    // radial quadrature of the integral of 1/|y| over the unit ball
    double s = 0.0;
    const int n = 2000;
    for (int i = 0; i < n; ++i) s += 4.0 * oracle::pi * ((i + 0.5) / n) / n;
    CHECK(potential_ball_oracle(1.0, 1.0, 0.0) == doctest::Approx(s).epsilon(1e-6));
    for (double r : {0.0, 0.4, 1.0, 1.7, 3.0})
        CHECK(potential_ball_oracle(1.0, 1.0, r) == doctest::Approx(oracle::ball_potential(1.0, r)));
}

TEST_CASE("true boundary samples") {
    const auto tb = true_boundary_sample(Phantom::ball(1.0, DensitySpec{1.0}), 1000);
    CHECK(tb.size() == 1000);
    for (const auto& p : tb.points) CHECK(std::abs(norm(p) - 1.0) <= 1e-12);
    const Phantom cib = Phantom::cube_in_ball(0.5, DensitySpec{2.0}, DensitySpec{0.5});
    const auto tc = true_boundary_sample(cib, 4000);
    CHECK(tc.size() == 4000);
    int on_cube = 0, on_sphere = 0;
    for (std::size_t i = 0; i < tc.size(); ++i) {
        const Vec3& p = tc.points[i];
        if (std::abs(norm(p) - 1.0) <= 1e-12) {
            ++on_sphere;
            CHECK(tc.jump_estimates[i] == doctest::Approx(-0.5));
        } else {
            CHECK(surface_distance(Cube{{0, 0, 0}, 0.5}, p) <= 1e-12);
            ++on_cube;
            CHECK(tc.jump_estimates[i] == doctest::Approx(-1.5));
        }
        // straddle check: density differs across the surface
        const Vec3 n = on_sphere && std::abs(norm(p) - 1.0) <= 1e-12 ? p : surface_normal(Cube{{0, 0, 0}, 0.5}, p);
        CHECK(eval_density(cib, p + 1e-3 * n) != eval_density(cib, p - 1e-3 * n));
    }
    CHECK(on_cube > 0);
    CHECK(on_sphere > 0);
}

TEST_CASE("jump examples and antisymmetry") {
    const Phantom cib = Phantom::cube_in_ball(0.5, DensitySpec{2.0}, DensitySpec{0.5});
    CHECK(jump(cib, {0.5, 0.0, 0.0}, 1, 2) == doctest::Approx(-1.5));
    CHECK(jump(cib, {0.5, 0.0, 0.0}, 2, 1) == doctest::Approx(1.5));
    CHECK_THROWS_AS(jump(cib, {0.3, 0.0, 0.0}, 1, 2), InvalidArgument);
    DensitySpec r1{2.0, 0.1, 0.5, {0.0, 0.0, 0.0}};
    DensitySpec r2{0.5, 0.2, 0.3, {0.1, 0.0, 0.0}};
    const Phantom rip = Phantom::cube_in_ball(0.5, r1, r2);
    const Vec3 z{0.5, 0.2, -0.1};
    const double expect = r2.value(z) - r1.value(z);
    CHECK(jump(rip, z, 1, 2) == doctest::Approx(expect).epsilon(1e-14));
    CHECK(jump(rip, z, 1, 2) == -jump(rip, z, 2, 1));
}

TEST_CASE("phantom construction errors") {
    CHECK_THROWS_AS(Phantom::ball(-1.0, DensitySpec{1.0}), InvalidArgument);
    CHECK_THROWS_AS(Phantom::cube_in_ball(0.0, DensitySpec{1.0}, DensitySpec{1.0}), InvalidArgument);
    CHECK_THROWS_AS(Phantom::three_ball(Ball{{-0.2, 0, 0}, 0.3}, Ball{{0.2, 0, 0}, 0.3}, Ball{{0, 0, 0}, 1.0},
                                        DensitySpec{1}, DensitySpec{1}, DensitySpec{1}),
                    InvalidArgument);
    CHECK_THROWS_AS(phantom_kind_from_string("torus"), Unsupported);
    CHECK(phantom_kind_from_string("three_ball") == PhantomKind::three_ball);
}

TEST_CASE("disjointness and support on 1e5 random points") {
    const Phantom tb = Phantom::three_ball(Ball{{-0.4, 0, 0}, 0.3}, Ball{{0.4, 0, 0}, 0.3}, Ball{{0, 0, 0}, 1.0},
                                           DensitySpec{2.0}, DensitySpec{0.5}, DensitySpec{1.0});
    const Phantom cib = Phantom::cube_in_ball(0.5, DensitySpec{2.0}, DensitySpec{0.5});
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(-1.2, 1.2);
    for (const Phantom* ph : {&tb, &cib}) {
        int bad = 0;
        for (int i = 0; i < 100000; ++i) {
            const Vec3 y{u(rng), u(rng), u(rng)};
            int members = 0;
            for (const auto& r : ph->regions()) members += r.contains(y) ? 1 : 0;
            if (members > 1) ++bad;
            if (norm(y) > 1.0 + 1e-12 && eval_density(*ph, y) != 0.0) ++bad;
            if (norm(y) < 1.0 - 1e-9 && members == 0) ++bad;
        }
        CHECK(bad == 0);
    }
}

TEST_CASE("Lipschitz bound of rippled densities") {
    const DensitySpec d{1.0, 0.3, 0.2, {0.1, 0.2, 0.0}};
    CHECK(d.lipschitz() == doctest::Approx(0.3 / 0.2));
    const Phantom ph = Phantom::ball(1.0, d);
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> u(-0.55, 0.55);
    int bad = 0;
    for (int i = 0; i < 10000; ++i) {
        const Vec3 a{u(rng), u(rng), u(rng)}, b{u(rng), u(rng), u(rng)};
        if (std::abs(eval_density(ph, a) - eval_density(ph, b)) > d.lipschitz() * distance(a, b) + 1e-15) ++bad;
    }
    CHECK(bad == 0);
    CHECK(DensitySpec{2.0}.lipschitz() == 0.0);
}

TEST_CASE("scaled phantom scales densities only") {
    const Phantom cib = Phantom::cube_in_ball(0.5, DensitySpec{2.0}, DensitySpec{0.5, 0.1, 0.3});
    const Phantom s = cib.scaled(3.0);
    CHECK(s.bounding_ball().radius == cib.bounding_ball().radius);
    CHECK(eval_density(s, {0.1, 0.0, 0.0}) == 6.0);
    CHECK(eval_density(s, {0.8, 0.1, 0.0}) == doctest::Approx(3.0 * eval_density(cib, {0.8, 0.1, 0.0})));
}
