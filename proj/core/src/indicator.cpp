#include "wradon/indicator.hpp"

#include <cmath>
#include <string>

#include "wradon/errors.hpp"
#include "wradon/kahan.hpp"
#include "wradon/parallel.hpp"

namespace wradon {

void IndicatorConfig::validate(const Phantom& phantom) const {
    grid.validate();
    pq.validate();
    if (squad.size() == 0) throw InvalidArgument("indicator: empty sphere quadrature");
    if (m != 1) throw InvalidArgument("indicator: the grid pipeline supports m = 1 only");
    const double h = grid.spacing;
    const Box3 need = phantom.bbox().inflated(m * h);
    const Box3 have = grid.box();
    for (int a = 0; a < 3; ++a) {
        if (have.lo[a] > need.lo[a] + 1e-12 || have.hi[a] < need.hi[a] - 1e-12)
            throw InvalidArgument("indicator: grid does not cover the phantom box inflated by m layers");
    }
    if (!(2.0 * h < phantom.min_feature_size()))
        throw InvalidArgument("indicator: spacing too coarse, need 2h < " + std::to_string(phantom.min_feature_size()));
    const double n_polar = std::sqrt(0.5 * static_cast<double>(squad.size()));
    if (n_polar < 2.0 / h - 1e-9)
        throw InvalidArgument("indicator: n_polar must be >= 2/h = " + std::to_string(2.0 / h));
    if (pq.scheme == PlaneScheme::midpoint) {
        const double diam = 2.0 * phantom.bounding_ball().radius;
        if (pq.n_cells < 4.0 * diam / h - 1e-9)
            throw InvalidArgument("indicator: n_cells must be >= 4*diameter/h = " + std::to_string(4.0 * diam / h));
    }
}

ScalarGrid3 sphere_average_field(const Phantom& phantom, const Weight& weight, const IndicatorConfig& cfg) {
    cfg.grid.validate();
    cfg.pq.validate();
    if (cfg.squad.size() == 0) throw InvalidArgument("indicator: empty sphere quadrature");
    std::vector<PlaneFrame> frames;
    frames.reserve(cfg.squad.size());
    for (const auto& w : cfg.squad.nodes) frames.push_back(plane_frame(w));

    ScalarGrid3 out(cfg.grid);
    const auto& g = cfg.grid;
    parallel_for(g.size(), resolve_workers(cfg.workers), [&](std::size_t begin, std::size_t end) {
        for (std::size_t idx = begin; idx < end; ++idx) {
            const auto [i, j, k] = g.unflatten(idx);
            const Vec3 x = g.node(i, j, k);
            KahanSum acc;
            for (std::size_t l = 0; l < frames.size(); ++l) {
                const double v = plane_integral(phantom, weight, x, frames[l], cfg.pq);
                if (!std::isfinite(v))
                    throw NumericalError("non-finite weighted Radon value at node " + std::to_string(idx) +
                                             " (" + std::to_string(i) + "," + std::to_string(j) + "," +
                                             std::to_string(k) + "), direction " + std::to_string(l),
                                         static_cast<std::ptrdiff_t>(idx), static_cast<std::ptrdiff_t>(l));
                acc.add(cfg.squad.weights[l] * v);
            }
            out.values[idx] = acc.value();
        }
    });
    return out;
}

namespace {

ScalarGrid3 laplacian_once(const ScalarGrid3& in, int workers) {
    const auto& g = in.geometry;
    GridGeometry og;
    og.spacing = g.spacing;
    og.origin = g.origin + Vec3{g.spacing, g.spacing, g.spacing};
    og.dims = {g.dims[0] - 2, g.dims[1] - 2, g.dims[2] - 2};
    ScalarGrid3 out(og);
    const double inv_h2 = 1.0 / (g.spacing * g.spacing);
    parallel_for(static_cast<std::size_t>(og.dims[0]), workers, [&](std::size_t b, std::size_t e) {
        for (std::size_t oi = b; oi < e; ++oi) {
            const int i = static_cast<int>(oi) + 1;
            for (int j = 1; j <= og.dims[1]; ++j)
                for (int k = 1; k <= og.dims[2]; ++k) {
                    const double sum = in.at(i + 1, j, k) + in.at(i - 1, j, k) + in.at(i, j + 1, k) +
                                       in.at(i, j - 1, k) + in.at(i, j, k + 1) + in.at(i, j, k - 1);
                    out.at(i - 1, j - 1, k - 1) = (sum - 6.0 * in.at(i, j, k)) * inv_h2;
                }
        }
    });
    return out;
}

}  // namespace

ScalarGrid3 iterated_laplacian(const ScalarGrid3& grid, int m, int workers) {
    if (m < 1) throw InvalidArgument("iterated_laplacian: m must be >= 1");
    for (int d : grid.dims())
        if (d < 2 * m + 1) throw InvalidArgument("iterated_laplacian: grid needs >= 2m+1 nodes per axis");
    if (grid.values.size() != grid.geometry.size()) throw InvalidArgument("iterated_laplacian: values/dims mismatch");
    const int w = resolve_workers(workers);
    ScalarGrid3 cur = laplacian_once(grid, w);
    for (int r = 1; r < m; ++r) cur = laplacian_once(cur, w);
    return cur;
}

ScalarGrid3 box_smooth(const ScalarGrid3& in) {
    const auto& g = in.geometry;
    for (int d : g.dims)
        if (d < 3) throw InvalidArgument("box_smooth: grid needs >= 3 nodes per axis");
    GridGeometry og;
    og.spacing = g.spacing;
    og.origin = g.origin + Vec3{g.spacing, g.spacing, g.spacing};
    og.dims = {g.dims[0] - 2, g.dims[1] - 2, g.dims[2] - 2};
    ScalarGrid3 out(og);
    for (int i = 1; i + 1 < g.dims[0]; ++i)
        for (int j = 1; j + 1 < g.dims[1]; ++j)
            for (int k = 1; k + 1 < g.dims[2]; ++k) {
                double s = 0.0;
                for (int a = -1; a <= 1; ++a)
                    for (int b = -1; b <= 1; ++b)
                        for (int c = -1; c <= 1; ++c) s += in.at(i + a, j + b, k + c);
                out.at(i - 1, j - 1, k - 1) = s / 27.0;
            }
    return out;
}

IndicatorResult compute_indicator(const Phantom& phantom, const Weight& weight, const IndicatorConfig& cfg) {
    cfg.validate(phantom);
    IndicatorResult r;
    r.sphere_average = sphere_average_field(phantom, weight, cfg);
    const ScalarGrid3 base = cfg.presmooth ? box_smooth(r.sphere_average) : r.sphere_average;
    r.indicator = iterated_laplacian(base, cfg.m, cfg.workers);
    return r;
}

ScalarGrid3 indicator_field(const Phantom& phantom, const Weight& weight, const IndicatorConfig& cfg) {
    return compute_indicator(phantom, weight, cfg).indicator;
}

}  // namespace wradon
