#include "wradon/detect.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <unordered_map>
#include <vector>

#include "wradon/errors.hpp"
#include "wradon/parallel.hpp"

namespace wradon {

namespace {

struct CellKey {
    std::int64_t i, j, k;
    friend bool operator==(const CellKey&, const CellKey&) = default;
};

struct CellKeyHash {
    std::size_t operator()(const CellKey& c) const {
        std::uint64_t h = 1469598103934665603ull;
        for (std::int64_t v : {c.i, c.j, c.k}) {
            h ^= static_cast<std::uint64_t>(v);
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

/// Uniform bucket grid over a point set for exact nearest-neighbour queries.
class BucketIndex {
public:
    explicit BucketIndex(const std::vector<Vec3>& pts) : pts_(pts) {
        lo_ = hi_ = pts.front();
        for (const auto& p : pts)
            for (int a = 0; a < 3; ++a) {
                lo_[a] = std::min(lo_[a], p[a]);
                hi_[a] = std::max(hi_[a], p[a]);
            }
        double vol = 1.0;
        double ext_max = 0.0;
        for (int a = 0; a < 3; ++a) ext_max = std::max(ext_max, hi_[a] - lo_[a]);
        const double floor_ext = std::max(ext_max * 1e-3, 1e-12);
        for (int a = 0; a < 3; ++a) vol *= std::max(hi_[a] - lo_[a], floor_ext);
        cell_ = std::max(std::cbrt(vol / static_cast<double>(pts.size())) * 2.0, floor_ext);
        for (int a = 0; a < 3; ++a) ncell_[a] = static_cast<std::int64_t>(std::floor((hi_[a] - lo_[a]) / cell_)) + 1;
        for (std::size_t idx = 0; idx < pts.size(); ++idx) buckets_[key(pts[idx])].push_back(idx);
    }

    double nearest_distance(const Vec3& q) const {
        const CellKey c = raw_key(q);
        std::int64_t r0 = 0;
        const std::int64_t qc[3] = {c.i, c.j, c.k};
        for (int a = 0; a < 3; ++a) {
            if (qc[a] < 0) r0 = std::max(r0, -qc[a]);
            if (qc[a] >= ncell_[a]) r0 = std::max(r0, qc[a] - ncell_[a] + 1);
        }
        const std::int64_t r_max = r0 + std::max({ncell_[0], ncell_[1], ncell_[2]}) + 1;
        double best2 = std::numeric_limits<double>::infinity();
        for (std::int64_t r = r0; r <= r_max; ++r) {
            visit_ring(c, r, [&](const std::vector<std::size_t>& bucket) {
                for (std::size_t idx : bucket) best2 = std::min(best2, norm2(pts_[idx] - q));
            });
            const double bound = r * cell_;
            if (best2 <= bound * bound) break;
        }
        return std::sqrt(best2);
    }

private:
    CellKey raw_key(const Vec3& p) const {
        return {static_cast<std::int64_t>(std::floor((p.x - lo_.x) / cell_)),
                static_cast<std::int64_t>(std::floor((p.y - lo_.y) / cell_)),
                static_cast<std::int64_t>(std::floor((p.z - lo_.z) / cell_))};
    }
    CellKey key(const Vec3& p) const { return raw_key(p); }

    template <class F>
    void visit_ring(const CellKey& c, std::int64_t r, F&& f) const {
        const std::int64_t lo[3] = {std::max<std::int64_t>(c.i - r, 0), std::max<std::int64_t>(c.j - r, 0),
                                    std::max<std::int64_t>(c.k - r, 0)};
        const std::int64_t hi[3] = {std::min(c.i + r, ncell_[0] - 1), std::min(c.j + r, ncell_[1] - 1),
                                    std::min(c.k + r, ncell_[2] - 1)};
        for (std::int64_t i = lo[0]; i <= hi[0]; ++i)
            for (std::int64_t j = lo[1]; j <= hi[1]; ++j)
                for (std::int64_t k = lo[2]; k <= hi[2]; ++k) {
                    const std::int64_t cheb = std::max({std::abs(i - c.i), std::abs(j - c.j), std::abs(k - c.k)});
                    if (cheb != r) continue;
                    auto it = buckets_.find({i, j, k});
                    if (it != buckets_.end()) f(it->second);
                }
    }

    const std::vector<Vec3>& pts_;
    Vec3 lo_, hi_;
    double cell_ = 1.0;
    std::int64_t ncell_[3] = {1, 1, 1};
    std::unordered_map<CellKey, std::vector<std::size_t>, CellKeyHash> buckets_;
};

}  // namespace

BoundaryPointCloud detect_jumps(const ScalarGrid3& field, double tau, const DetectOptions& opts) {
    double threshold = 0.0;
    return detect_jumps(field, tau, opts, threshold);
}

BoundaryPointCloud detect_jumps(const ScalarGrid3& field, double tau, const DetectOptions& opts, double& threshold_out) {
    threshold_out = 0.0;
    if (!(tau > 0.0 && tau < 1.0)) throw InvalidArgument("detect_jumps: tau must be in (0, 1)");
    if (opts.window < 1) throw InvalidArgument("detect_jumps: window must be >= 1");
    if (!field.all_finite()) throw InvalidArgument("detect_jumps: field contains non-finite values");
    const auto& g = field.geometry;
    const double h = g.spacing;

    double dmax = 0.0;
    for (int a = 0; a < 3; ++a) {
        std::array<int, 3> lim = g.dims;
        lim[a] -= 1;
        for (int i = 0; i < lim[0]; ++i)
            for (int j = 0; j < lim[1]; ++j)
                for (int k = 0; k < lim[2]; ++k) {
                    std::array<int, 3> n{i, j, k};
                    n[a] += 1;
                    dmax = std::max(dmax, std::abs(field.at(n[0], n[1], n[2]) - field.at(i, j, k)));
                }
    }
    BoundaryPointCloud cloud;
    if (dmax == 0.0) return cloud;
    const double threshold = std::max(tau * dmax, opts.floor * dmax);
    threshold_out = threshold;

    // Candidates per (axis, i-slab), concatenated in slab order.
    const std::size_t n_slabs = 3 * static_cast<std::size_t>(g.dims[0]);
    std::vector<BoundaryPointCloud> slabs(n_slabs);
    parallel_for(n_slabs, resolve_workers(opts.workers), [&](std::size_t b, std::size_t e) {
        for (std::size_t sidx = b; sidx < e; ++sidx) {
            const int a = static_cast<int>(sidx / g.dims[0]);
            const int i = static_cast<int>(sidx % g.dims[0]);
            std::array<int, 3> lim = g.dims;
            lim[a] -= 1;
            if (i >= lim[0]) continue;
            auto& out = slabs[sidx];
            for (int j = 0; j < lim[1]; ++j)
                for (int k = 0; k < lim[2]; ++k) {
                    std::array<int, 3> n0{i, j, k};
                    std::array<int, 3> n1 = n0;
                    n1[a] += 1;
                    const double d = std::abs(field.at(n1[0], n1[1], n1[2]) - field.at(i, j, k));
                    if (!(d > threshold)) continue;
                    const int c0 = std::max(0, n0[a] - opts.window + 1);
                    const int c1 = std::min(g.dims[a] - 1, n0[a] + opts.window);
                    double vmin = std::numeric_limits<double>::infinity();
                    double vmax = -vmin;
                    std::array<int, 3> q = n0;
                    for (int c = c0; c <= c1; ++c) {
                        q[a] = c;
                        const double v = field.at(q[0], q[1], q[2]);
                        vmin = std::min(vmin, v);
                        vmax = std::max(vmax, v);
                    }
                    Vec3 mid = g.node(i, j, k);
                    mid[a] += 0.5 * h;
                    out.points.push_back(mid);
                    out.jump_estimates.push_back(vmax - vmin);
                }
        }
    });

    const double merge = 0.5 * h;
    const double cell = merge;
    std::unordered_map<CellKey, std::vector<std::size_t>, CellKeyHash> buckets;
    auto key_of = [&](const Vec3& p) {
        return CellKey{static_cast<std::int64_t>(std::floor((p.x - g.origin.x) / cell)),
                       static_cast<std::int64_t>(std::floor((p.y - g.origin.y) / cell)),
                       static_cast<std::int64_t>(std::floor((p.z - g.origin.z) / cell))};
    };
    for (const auto& slab : slabs) {
        for (std::size_t n = 0; n < slab.points.size(); ++n) {
            const Vec3& p = slab.points[n];
            const double est = slab.jump_estimates[n];
            const CellKey c = key_of(p);
            std::ptrdiff_t hit = -1;
            for (std::int64_t di = -1; di <= 1 && hit < 0; ++di)
                for (std::int64_t dj = -1; dj <= 1 && hit < 0; ++dj)
                    for (std::int64_t dk = -1; dk <= 1 && hit < 0; ++dk) {
                        auto it = buckets.find({c.i + di, c.j + dj, c.k + dk});
                        if (it == buckets.end()) continue;
                        for (std::size_t idx : it->second)
                            if (distance(cloud.points[idx], p) < merge) {
                                hit = static_cast<std::ptrdiff_t>(idx);
                                break;
                            }
                    }
            if (hit >= 0) {
                if (est > cloud.jump_estimates[hit]) {
                    cloud.jump_estimates[hit] = est;
                    cloud.points[hit] = p;
                }
                continue;
            }
            buckets[c].push_back(cloud.points.size());
            cloud.points.push_back(p);
            cloud.jump_estimates.push_back(est);
        }
    }
    return cloud;
}

double directed_hausdorff(const BoundaryPointCloud& from, const BoundaryPointCloud& to, int workers) {
    if (from.empty() || to.empty()) throw InvalidArgument("hausdorff: point clouds must be non-empty");
    const BucketIndex index(to.points);
    const int w = resolve_workers(workers);
    const std::size_t n = from.points.size();
    const std::size_t n_chunks = std::min<std::size_t>(n, 256);
    std::vector<double> chunk_max(n_chunks, 0.0);
    parallel_for(n_chunks, w, [&](std::size_t b, std::size_t e) {
        for (std::size_t c = b; c < e; ++c) {
            const std::size_t lo = c * n / n_chunks;
            const std::size_t hi = (c + 1) * n / n_chunks;
            double m = 0.0;
            for (std::size_t i = lo; i < hi; ++i) m = std::max(m, index.nearest_distance(from.points[i]));
            chunk_max[c] = m;
        }
    });
    return *std::max_element(chunk_max.begin(), chunk_max.end());
}

double hausdorff(const BoundaryPointCloud& a, const BoundaryPointCloud& b, int workers) {
    return std::max(directed_hausdorff(a, b, workers), directed_hausdorff(b, a, workers));
}

DetectionReport evaluate_detection(const BoundaryPointCloud& detected, const Phantom& phantom, double threshold_used,
                                   std::size_t n_truth, int workers) {
    DetectionReport r;
    r.n_detected = detected.size();
    r.threshold_used = threshold_used;
    if (!detected.empty()) {
        double s = 0.0;
        for (double v : detected.jump_estimates) s += v;
        r.mean_jump = s / static_cast<double>(detected.size());
        r.hausdorff_to_truth = hausdorff(detected, true_boundary_sample(phantom, n_truth), workers);
    } else {
        r.hausdorff_to_truth = std::numeric_limits<double>::infinity();
    }
    return r;
}

UniquenessResult uniqueness_experiment(const Phantom& phantom_a, const Weight& weight_a, const Phantom& phantom_b,
                                       const Weight& weight_b, const IndicatorConfig& cfg, double tau,
                                       std::size_t n_truth) {
    UniquenessResult res;
    DetectOptions opts;
    opts.workers = cfg.workers;
    double thr = 0.0;
    const ScalarGrid3 fa = indicator_field(phantom_a, weight_a, cfg);
    res.cloud_a = detect_jumps(fa, tau, opts, thr);
    res.a = evaluate_detection(res.cloud_a, phantom_a, thr, n_truth, cfg.workers);
    const ScalarGrid3 fb = indicator_field(phantom_b, weight_b, cfg);
    res.cloud_b = detect_jumps(fb, tau, opts, thr);
    res.b = evaluate_detection(res.cloud_b, phantom_b, thr, n_truth, cfg.workers);
    if (res.cloud_a.empty() || res.cloud_b.empty())
        throw NumericalError("uniqueness_experiment: a detection returned no boundary points");
    res.cross_hausdorff = hausdorff(res.cloud_a, res.cloud_b, cfg.workers);
    return res;
}

}  // namespace wradon
