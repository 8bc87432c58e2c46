#include <doctest.h>

#include <string>

#include "wradon/app/config.hpp"
#include "wradon/errors.hpp"

using namespace wradon;
using namespace wradon::app;

namespace {
std::string error_of(const std::string& text) {
    try {
        parse_config(text);
    } catch (const InvalidArgument& e) {
        return e.what();
    }
    return "";
}
}  // namespace

TEST_CASE("defaults round-trip") {
    const RunConfig a;
    const RunConfig b = parse_config(serialize_config(a));
    CHECK(serialize_config(b) == serialize_config(a));
    CHECK(config_hash(a) == config_hash(b));
    CHECK(config_hash(a).size() == 16);
}

TEST_CASE("a fully populated config round-trips losslessly") {
    RunConfig a;
    a.phantom.kind = PhantomKind::three_ball;
    a.phantom.balls = {Ball{{-0.4, 0.1, 0.0}, 0.3}, Ball{{0.4, 0.0, 1.0 / 3.0}, 0.25}, Ball{{0, 0, 0}, 1.0}};
    a.phantom.densities = {DensitySpec{0.1 + 0.2, 0.01, 0.7, {1e-300, -2.5, 3.0}}, DensitySpec{2.0}, DensitySpec{1.0}};
    a.weight = {WeightKind::gaussian_bump, 0.123456789012345678, 0.9};
    a.grid.h = 0.04;
    a.grid.origin = Vec3{-1.2, -1.2, -1.2};
    a.grid.dims = std::array<int, 3>{61, 61, 62};
    a.quadrature = {50, PlaneScheme::midpoint, 300, 1.7, 64, 6};
    a.detection = {0.3, 1234, 2};
    a.forward = {{{0.1, 0.2, 0.3}, {0.0, 0.0, 1.0}}};
    a.output_dir = "some/dir";
    a.workers = 3;
    a.seed = 18446744073709551615ull;
    a.presmooth = true;
    const RunConfig b = parse_config(serialize_config(a));
    CHECK(serialize_config(b) == serialize_config(a));
    CHECK(b.phantom.densities[0].base == 0.1 + 0.2);
    CHECK(b.phantom.densities[0].ripple_center.x == 1e-300);
    CHECK(b.weight.amplitude == 0.123456789012345678);
    CHECK(b.seed == a.seed);
    CHECK(*b.grid.dims == *a.grid.dims);
    CHECK(b.quadrature.scheme == PlaneScheme::midpoint);
    a.workers = 4;
    CHECK(config_hash(a) != config_hash(b));
}

TEST_CASE("field-level validation messages") {
    CHECK(error_of(R"({"grid": {"h": -0.05}})").rfind("grid.h:", 0) == 0);
    CHECK(error_of(R"({"grid": {"hh": 0.05}})").rfind("grid.hh: unknown field", 0) == 0);
    CHECK(error_of(R"({"quadrature": {"n_polar": 1}})").rfind("quadrature.n_polar:", 0) == 0);
    CHECK(error_of(R"({"quadrature": {"n_polar": 3.5}})").rfind("quadrature.n_polar: expected an integer", 0) == 0);
    CHECK(error_of(R"({"quadrature": {"scheme": "adaptive"}})").rfind("quadrature.scheme:", 0) == 0);
    CHECK(error_of(R"({"phantom": {"kind": "torus"}})").rfind("phantom.kind:", 0) == 0);
    CHECK(error_of(R"({"phantom": {"densities": [{"base": 1}, {"base": 2}]}})").rfind("phantom.densities:", 0) == 0);
    CHECK(error_of(R"({"weight": {"kind": "polynomial", "amplitude": 1.5}})").rfind("weight.amplitude:", 0) == 0);
    CHECK(error_of(R"({"detection": {"tau": 1.0}})").rfind("detection.tau:", 0) == 0);
    CHECK(error_of(R"({"m": 2})").rfind("m:", 0) == 0);
    CHECK(error_of(R"({"grid": {"h": 0.05, "dims": [10, 10, 10]}})").rfind("grid:", 0) == 0);
    CHECK(error_of(R"({"forward": [{"x": [0, 0, 0], "omega": [0, 0, 0]}]})").rfind("forward[0].omega:", 0) == 0);
    CHECK(error_of("{ not json").rfind("config: malformed JSON", 0) == 0);
    CHECK(error_of(R"({"workers": -1})").rfind("workers:", 0) == 0);
}

TEST_CASE("building phantoms, weights and grids") {
    RunConfig c;
    Phantom ball = build_phantom(c);
    CHECK(ball.kind() == PhantomKind::ball);
    CHECK(eval_density(ball, {0, 0, 0}) == 1.0);
    c.phantom.kind = PhantomKind::cube_in_ball;
    const Phantom cib = build_phantom(c);
    CHECK(eval_density(cib, {0.1, 0, 0}) == 2.0);
    CHECK(eval_density(cib, {0.8, 0, 0}) == 1.0);
    c.phantom.kind = PhantomKind::three_ball;
    const Phantom tb = build_phantom(c);
    CHECK(tb.regions().size() == 3);
    c.weight.kind = WeightKind::gaussian_bump;
    CHECK(build_weight(c, tb).diagonal({0, 0, 0}) == 1.5);

    RunConfig d;
    const IndicatorConfig ic = build_indicator_config(d, build_phantom(d));
    CHECK(ic.grid.spacing == 0.05);
    CHECK(ic.squad.size() == 2u * 64u * 64u);
    CHECK(ic.pq.scheme == PlaneScheme::sections);
    CHECK_NOTHROW(ic.validate(build_phantom(d)));
    CHECK(ic.grid.box().contains(Box3{{-1.1, -1.1, -1.1}, {1.1, 1.1, 1.1}}));
}
