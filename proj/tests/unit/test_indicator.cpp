#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "wradon/errors.hpp"
#include "wradon/indicator.hpp"

using namespace wradon;

namespace {
IndicatorConfig coarse(const Phantom& ph, double h, int n_polar) {
    IndicatorConfig c;
    c.grid = GridGeometry::covering(ph.bbox().inflated(2.0 * h), h);
    c.squad = sphere_quadrature(n_polar);
    c.pq.scheme = PlaneScheme::sections;
    c.workers = 1;
    return c;
}
}  // namespace

TEST_CASE("sphere average of the ball against the closed form") {
    const Phantom ball = Phantom::ball(1.0, DensitySpec{1.0});
    IndicatorConfig c;
    c.grid = GridGeometry{{-2.0, -2.0, -2.0}, 0.5, {9, 9, 9}};
    c.squad = sphere_quadrature(48);
    c.pq.scheme = PlaneScheme::sections;
    const ScalarGrid3 I = sphere_average_field(ball, Weight::constant(), c);
    CHECK(I.at(4, 4, 4) == doctest::Approx(4.0 * oracle::pi * oracle::pi).epsilon(1e-3));
    const double at2 = 2.0 * oracle::pi * (4.0 * oracle::pi / 3.0) / 2.0;
    CHECK(I.at(8, 4, 4) == doctest::Approx(at2).epsilon(1e-2));
    for (std::size_t n = 0; n < I.values.size(); ++n) {
        const auto [i, j, k] = c.grid.unflatten(n);
        const double r = norm(c.grid.node(i, j, k));
        CHECK(I.values[n] == doctest::Approx(oracle::ball_sphere_average(1.0, r)).epsilon(2e-3));
    }
    c.pq.scheme = PlaneScheme::midpoint;
    c.pq.n_cells = 128;
    c.grid = GridGeometry{{0.0, 0.0, 0.0}, 0.5, {2, 2, 2}};
    c.squad = sphere_quadrature(8);
    const ScalarGrid3 M = sphere_average_field(ball, Weight::constant(), c);
    // cell counting on the disk edge, first order in the cell size
    CHECK(M.at(0, 0, 0) == doctest::Approx(4.0 * oracle::pi * oracle::pi).epsilon(5e-3));
}

TEST_CASE("zero density gives zero fields") {
    const Phantom z = Phantom::ball(1.0, DensitySpec{0.0});
    const IndicatorConfig c = coarse(z, 0.2, 10);
    const IndicatorResult r = compute_indicator(z, Weight::gaussian_bump(0.5, 1.0), c);
    for (double v : r.sphere_average.values) CHECK(v == 0.0);
    for (double v : r.indicator.values) CHECK(v == 0.0);
}

TEST_CASE("iterated laplacian examples") {
    GridGeometry g{{-0.7, 0.2, 1.1}, 0.1, {7, 8, 9}};
    ScalarGrid3 q(g), lin(g);
    for (int i = 0; i < 7; ++i)
        for (int j = 0; j < 8; ++j)
            for (int k = 0; k < 9; ++k) {
                const Vec3 x = g.node(i, j, k);
                q.at(i, j, k) = norm2(x);
                lin.at(i, j, k) = 2.0 * x.x - 3.0 * x.y + 0.5 * x.z + 1.0;
            }
    const ScalarGrid3 lq = iterated_laplacian(q, 1);
    CHECK(lq.dims() == std::array<int, 3>{5, 6, 7});
    CHECK(lq.geometry.origin.x == doctest::Approx(-0.6));
    for (double v : lq.values) CHECK(std::abs(v - 6.0) <= 1e-9);
    for (double v : iterated_laplacian(lin, 1).values) CHECK(std::abs(v) <= 1e-9);
    const ScalarGrid3 twice = iterated_laplacian(iterated_laplacian(q, 1), 1);
    const ScalarGrid3 m2 = iterated_laplacian(q, 2);
    CHECK(m2.values == twice.values);
    CHECK(m2.geometry == twice.geometry);
    CHECK(iterated_laplacian(q, 1, 3).values == lq.values);
    CHECK_THROWS_AS(iterated_laplacian(q, 4), InvalidArgument);
}

TEST_CASE("indicator of the ball: interior value, sign, linearity, determinism") {
    const Phantom ball = Phantom::ball(1.0, DensitySpec{1.0});
    const double h = 0.1;
    IndicatorConfig c = coarse(ball, h, 24);
    const ScalarGrid3 f = indicator_field(ball, Weight::constant(), c);
    const double K = 8.0 * oracle::pi * oracle::pi;
    int interior = 0;
    for (std::size_t n = 0; n < f.values.size(); ++n) {
        const auto [i, j, k] = f.geometry.unflatten(n);
        const double r = norm(f.geometry.node(i, j, k));
        if (r <= 1.0 - 3.0 * h) {
            ++interior;
            CHECK(std::abs(f.values[n] + K) <= 0.02 * K);
        }
    }
    CHECK(interior > 100);

    const Phantom ball3 = Phantom::ball(1.0, DensitySpec{3.0});
    const ScalarGrid3 f3 = indicator_field(ball3, Weight::constant(), c);
    for (std::size_t n = 0; n < f.values.size(); ++n)
        CHECK(std::abs(f3.values[n] - 3.0 * f.values[n]) <= 1e-10 * std::max(1.0, std::abs(3.0 * f.values[n])));

    c.workers = 3;
    const ScalarGrid3 fp = indicator_field(ball, Weight::constant(), c);
    CHECK(fp.values == f.values);

    const Weight g = Weight::gaussian_bump(0.5, 1.0);
    c.workers = 1;
    const ScalarGrid3 fg = indicator_field(ball, g, c);
    const auto mid = fg.dims();
    CHECK(fg.at(mid[0] / 2, mid[1] / 2, mid[2] / 2) < 0.0);
}

TEST_CASE("sphere average is continuous: adjacent differences scale with h") {
    const Phantom cib = Phantom::cube_in_ball(0.5, DensitySpec{2.0}, DensitySpec{0.5});
    auto max_diff = [&](double h) {
        IndicatorConfig c = coarse(cib, h, 16);
        const ScalarGrid3 I = sphere_average_field(cib, Weight::constant(), c);
        double m = 0.0;
        const auto d = I.dims();
        for (int i = 0; i + 1 < d[0]; ++i)
            for (int j = 0; j < d[1]; ++j)
                for (int k = 0; k < d[2]; ++k) m = std::max(m, std::abs(I.at(i + 1, j, k) - I.at(i, j, k)));
        return m;
    };
    const double r = max_diff(0.1) / max_diff(0.2);
    CHECK(r == doctest::Approx(0.5).epsilon(0.3));
}

TEST_CASE("config validation") {
    const Phantom ball = Phantom::ball(1.0, DensitySpec{1.0});
    IndicatorConfig c = coarse(ball, 0.1, 24);
    CHECK_NOTHROW(c.validate(ball));
    IndicatorConfig few = c;
    few.squad = sphere_quadrature(12);
    CHECK_THROWS_AS(few.validate(ball), InvalidArgument);
    IndicatorConfig small = c;
    small.grid = GridGeometry::covering(Box3{{-0.5, -0.5, -0.5}, {0.5, 0.5, 0.5}}, 0.1);
    CHECK_THROWS_AS(small.validate(ball), InvalidArgument);
    IndicatorConfig mid = c;
    mid.pq.scheme = PlaneScheme::midpoint;
    mid.pq.n_cells = 64;
    CHECK_THROWS_AS(mid.validate(ball), InvalidArgument);
    IndicatorConfig m2 = c;
    m2.m = 2;
    CHECK_THROWS_AS(m2.validate(ball), InvalidArgument);
    const Phantom cib = Phantom::cube_in_ball(0.5, DensitySpec{2.0}, DensitySpec{0.5});
    IndicatorConfig coarse_cib = coarse(cib, 0.1, 24);
    CHECK_THROWS_AS(coarse_cib.validate(cib), InvalidArgument);
}

TEST_CASE("non-finite values abort with node and direction") {
    const Phantom huge = Phantom::ball(1.0, DensitySpec{1e308});
    IndicatorConfig c = coarse(huge, 0.25, 8);
    try {
        sphere_average_field(huge, Weight::constant(), c);
        FAIL("expected NumericalError");
    } catch (const NumericalError& e) {
        CHECK(e.node() >= 0);
        CHECK(e.direction() >= 0);
    }
}

TEST_CASE("box smoothing shrinks the grid and preserves linear fields") {
    GridGeometry g{{0, 0, 0}, 0.1, {5, 5, 5}};
    ScalarGrid3 a(g);
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            for (int k = 0; k < 5; ++k) a.at(i, j, k) = i + 2.0 * j - k;
    const ScalarGrid3 s = box_smooth(a);
    CHECK(s.dims() == std::array<int, 3>{3, 3, 3});
    CHECK(s.at(1, 1, 1) == doctest::Approx(a.at(2, 2, 2)));
}
