#include <benchmark/benchmark.h>

#include <random>

#include "wradon/detect.hpp"
#include "wradon/forward.hpp"
#include "wradon/indicator.hpp"

using namespace wradon;

namespace {

const Direction kOmega(Vec3{0.36, -0.48, 0.8});

void BM_weighted_radon_sections(benchmark::State& state) {
    const Phantom ph = Phantom::cube_in_ball(0.5, DensitySpec{2.0}, DensitySpec{1.0});
    const Weight w = state.range(0) ? Weight::gaussian_bump(0.5, 1.0) : Weight::constant();
    PlaneQuadratureSpec pq;
    pq.scheme = PlaneScheme::sections;
    const Vec3 x{0.1, 0.2, -0.3};
    for (auto _ : state) benchmark::DoNotOptimize(weighted_radon(ph, w, x, kOmega, pq));
}
BENCHMARK(BM_weighted_radon_sections)->Arg(0)->Arg(1);

void BM_weighted_radon_midpoint(benchmark::State& state) {
    const Phantom ph = Phantom::ball(1.0, DensitySpec{1.0});
    const Weight w = Weight::gaussian_bump(0.5, 1.0);
    PlaneQuadratureSpec pq;
    pq.scheme = PlaneScheme::midpoint;
    pq.n_cells = static_cast<int>(state.range(0));
    const Vec3 x{0.1, 0.2, -0.3};
    for (auto _ : state) benchmark::DoNotOptimize(weighted_radon(ph, w, x, kOmega, pq));
}
BENCHMARK(BM_weighted_radon_midpoint)->Arg(64)->Arg(256);

// one grid of sphere averages, small enough to time repeatedly
void BM_sphere_average(benchmark::State& state) {
    const Phantom ph = Phantom::ball(1.0, DensitySpec{1.0});
    IndicatorConfig c;
    c.grid = GridGeometry{{-1.0, -1.0, -1.0}, 0.25, {9, 9, 9}};
    c.squad = sphere_quadrature(static_cast<int>(state.range(0)));
    c.pq.scheme = PlaneScheme::sections;
    c.workers = 1;
    for (auto _ : state) benchmark::DoNotOptimize(sphere_average_field(ph, Weight::constant(), c));
    state.SetItemsProcessed(state.iterations() * c.grid.size() * c.squad.size());
}
BENCHMARK(BM_sphere_average)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

BoundaryPointCloud sphere_cloud(std::size_t n, double r, unsigned seed) {
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> nd(0.0, 1.0);
    BoundaryPointCloud c;
    for (std::size_t i = 0; i < n; ++i) {
        const Vec3 v{nd(rng), nd(rng), nd(rng)};
        c.points.push_back(v * (r / norm(v)));
        c.jump_estimates.push_back(1.0);
    }
    return c;
}

void BM_hausdorff(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const BoundaryPointCloud a = sphere_cloud(n, 1.0, 1), b = sphere_cloud(n, 1.02, 2);
    for (auto _ : state) benchmark::DoNotOptimize(hausdorff(a, b));
}
BENCHMARK(BM_hausdorff)->Arg(1000)->Arg(20000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
