#include "wradon/solids.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

namespace wradon {

namespace {

template <class... Fs>
struct Overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

constexpr double kGolden = 0.61803398874989484820;  // 1/phi

std::array<Vec3, 8> cube_vertices(const Cube& c) {
    std::array<Vec3, 8> v;
    for (int k = 0; k < 8; ++k) {
        v[k] = c.center + Vec3{(k & 1) ? c.half_side : -c.half_side, (k & 2) ? c.half_side : -c.half_side,
                               (k & 4) ? c.half_side : -c.half_side};
    }
    return v;
}

Polygon convex_order(std::vector<Point2> pts) {
    Polygon poly;
    if (pts.size() < 3) return poly;
    Point2 c{0.0, 0.0};
    for (const auto& p : pts) {
        c.s += p.s;
        c.t += p.t;
    }
    c.s /= static_cast<double>(pts.size());
    c.t /= static_cast<double>(pts.size());
    std::sort(pts.begin(), pts.end(), [&](const Point2& a, const Point2& b) {
        return std::atan2(a.t - c.t, a.s - c.s) < std::atan2(b.t - c.t, b.s - c.s);
    });
    double scale = 0.0;
    for (const auto& p : pts) scale = std::max({scale, std::abs(p.s - c.s), std::abs(p.t - c.t)});
    const double tol = 1e-13 * std::max(scale, 1e-300);
    for (const auto& p : pts) {
        if (!poly.vertices.empty()) {
            const auto& q = poly.vertices.back();
            if (std::abs(p.s - q.s) <= tol && std::abs(p.t - q.t) <= tol) continue;
        }
        poly.vertices.push_back(p);
    }
    while (poly.vertices.size() > 1) {
        const auto& a = poly.vertices.front();
        const auto& b = poly.vertices.back();
        if (std::abs(a.s - b.s) <= tol && std::abs(a.t - b.t) <= tol)
            poly.vertices.pop_back();
        else
            break;
    }
    if (poly.vertices.size() < 3) poly.vertices.clear();
    return poly;
}

}  // namespace

double section_area(const Section& sec) {
    return std::visit(Overloaded{
                          [](const std::monostate&) { return 0.0; },
                          [](const Disk& d) { return std::numbers::pi * d.radius * d.radius; },
                          [](const Polygon& p) {
                              double a = 0.0;
                              const std::size_t n = p.vertices.size();
                              for (std::size_t i = 0; i < n; ++i) {
                                  const auto& u = p.vertices[i];
                                  const auto& v = p.vertices[(i + 1) % n];
                                  a += u.s * v.t - v.s * u.t;
                              }
                              return 0.5 * std::abs(a);
                          },
                      },
                      sec);
}

std::vector<double> section_breakpoints(const Section& sec) {
    return std::visit(Overloaded{
                          [](const std::monostate&) { return std::vector<double>{}; },
                          [](const Disk& d) {
                              return std::vector<double>{d.center.s - d.radius, d.center.s + d.radius};
                          },
                          [](const Polygon& p) {
                              std::vector<double> s;
                              s.reserve(p.vertices.size());
                              for (const auto& v : p.vertices) s.push_back(v.s);
                              std::sort(s.begin(), s.end());
                              s.erase(std::unique(s.begin(), s.end()), s.end());
                              return s;
                          },
                      },
                      sec);
}

std::optional<std::pair<double, double>> section_chord(const Section& sec, double s) {
    using Chord = std::optional<std::pair<double, double>>;
    return std::visit(Overloaded{
                          [](const std::monostate&) -> Chord { return std::nullopt; },
                          [s](const Disk& d) -> Chord {
                              const double ds = s - d.center.s;
                              const double w2 = d.radius * d.radius - ds * ds;
                              if (!(w2 > 0.0)) return std::nullopt;
                              const double w = std::sqrt(w2);
                              return std::pair{d.center.t - w, d.center.t + w};
                          },
                          [s](const Polygon& p) -> Chord {
                              double lo = std::numeric_limits<double>::infinity();
                              double hi = -lo;
                              const std::size_t n = p.vertices.size();
                              for (std::size_t i = 0; i < n; ++i) {
                                  const auto& a = p.vertices[i];
                                  const auto& b = p.vertices[(i + 1) % n];
                                  if ((a.s - s) * (b.s - s) < 0.0) {
                                      const double t = a.t + (s - a.s) * (b.t - a.t) / (b.s - a.s);
                                      lo = std::min(lo, t);
                                      hi = std::max(hi, t);
                                  }
                              }
                              if (!(hi > lo)) return std::nullopt;
                              return std::pair{lo, hi};
                          },
                      },
                      sec);
}

bool contains(const Solid& solid, const Vec3& y) {
    return std::visit(Overloaded{
                          [&](const Ball& b) { return norm2(y - b.center) <= b.radius * b.radius; },
                          [&](const Cube& c) {
                              return std::abs(y.x - c.center.x) <= c.half_side &&
                                     std::abs(y.y - c.center.y) <= c.half_side &&
                                     std::abs(y.z - c.center.z) <= c.half_side;
                          },
                      },
                      solid);
}

double surface_distance(const Solid& solid, const Vec3& y) {
    return std::visit(Overloaded{
                          [&](const Ball& b) { return std::abs(distance(y, b.center) - b.radius); },
                          [&](const Cube& c) {
                              const Vec3 d = y - c.center;
                              std::array<double, 3> q{};
                              for (int i = 0; i < 3; ++i) q[i] = std::abs(d[i]) - c.half_side;
                              const double outside = std::sqrt(std::max(q[0], 0.0) * std::max(q[0], 0.0) +
                                                               std::max(q[1], 0.0) * std::max(q[1], 0.0) +
                                                               std::max(q[2], 0.0) * std::max(q[2], 0.0));
                              const double inside = std::min(std::max({q[0], q[1], q[2]}), 0.0);
                              return std::abs(outside + inside);
                          },
                      },
                      solid);
}

Vec3 surface_normal(const Solid& solid, const Vec3& y) {
    return std::visit(Overloaded{
                          [&](const Ball& b) { return Direction(y - b.center).vec(); },
                          [&](const Cube& c) {
                              const Vec3 d = y - c.center;
                              int axis = 0;
                              for (int i = 1; i < 3; ++i)
                                  if (std::abs(d[i]) > std::abs(d[axis])) axis = i;
                              Vec3 n{};
                              n[axis] = d[axis] >= 0.0 ? 1.0 : -1.0;
                              return n;
                          },
                      },
                      solid);
}

Box3 bounding_box(const Solid& solid) {
    return std::visit(Overloaded{
                          [](const Ball& b) {
                              const Vec3 r{b.radius, b.radius, b.radius};
                              return Box3{b.center - r, b.center + r};
                          },
                          [](const Cube& c) {
                              const Vec3 r{c.half_side, c.half_side, c.half_side};
                              return Box3{c.center - r, c.center + r};
                          },
                      },
                      solid);
}

double surface_area(const Solid& solid) {
    return std::visit(Overloaded{
                          [](const Ball& b) { return 4.0 * std::numbers::pi * b.radius * b.radius; },
                          [](const Cube& c) { return 24.0 * c.half_side * c.half_side; },
                      },
                      solid);
}

std::optional<std::pair<double, double>> clip_line(const Solid& solid, const Vec3& o, const Vec3& u) {
    using Interval = std::optional<std::pair<double, double>>;
    return std::visit(
        Overloaded{
            [&](const Ball& b) -> Interval {
                const Vec3 d = o - b.center;
                const double a = dot(u, u);
                const double bh = dot(d, u);
                const double c = dot(d, d) - b.radius * b.radius;
                const double disc = bh * bh - a * c;
                if (!(disc > 0.0)) return std::nullopt;
                const double sq = std::sqrt(disc);
                return std::pair{(-bh - sq) / a, (-bh + sq) / a};
            },
            [&](const Cube& c) -> Interval {
                double t0 = -std::numeric_limits<double>::infinity();
                double t1 = std::numeric_limits<double>::infinity();
                for (int i = 0; i < 3; ++i) {
                    const double lo = c.center[i] - c.half_side - o[i];
                    const double hi = c.center[i] + c.half_side - o[i];
                    if (u[i] == 0.0) {
                        if (lo > 0.0 || hi < 0.0) return std::nullopt;
                        continue;
                    }
                    double a = lo / u[i];
                    double b = hi / u[i];
                    if (a > b) std::swap(a, b);
                    t0 = std::max(t0, a);
                    t1 = std::min(t1, b);
                }
                if (!(t1 > t0)) return std::nullopt;
                return std::pair{t0, t1};
            },
        },
        solid);
}

Section plane_section(const Solid& solid, const PlaneFrame& frame, double p) {
    const Vec3& w = frame.omega.vec();
    const Vec3& e1 = frame.e1.vec();
    const Vec3& e2 = frame.e2.vec();
    return std::visit(Overloaded{
                          [&](const Ball& b) -> Section {
                              const double d = p - dot(b.center, w);
                              const double r2 = b.radius * b.radius - d * d;
                              if (!(r2 > 0.0)) return std::monostate{};
                              return Disk{{dot(b.center, e1), dot(b.center, e2)}, std::sqrt(r2)};
                          },
                          [&](const Cube& c) -> Section {
                              // Bounding-sphere rejection before the edge walk.
                              const double d = p - dot(c.center, w);
                              if (std::abs(d) >= c.half_side * std::numbers::sqrt3) return std::monostate{};
                              const auto v = cube_vertices(c);
                              std::array<double, 8> sd{};
                              for (int k = 0; k < 8; ++k) sd[k] = dot(v[k], w) - p;
                              std::vector<Point2> pts;
                              pts.reserve(12);
                              auto push = [&](const Vec3& y) { pts.push_back({dot(y, e1), dot(y, e2)}); };
                              for (int k = 0; k < 8; ++k)
                                  if (sd[k] == 0.0) push(v[k]);
                              for (int a = 0; a < 8; ++a) {
                                  for (int bit = 1; bit < 8; bit <<= 1) {
                                      const int b = a | bit;
                                      if (b == a) continue;
                                      if (sd[a] * sd[b] < 0.0) push(v[a] + (v[b] - v[a]) * (sd[a] / (sd[a] - sd[b])));
                                  }
                              }
                              Polygon poly = convex_order(std::move(pts));
                              if (poly.vertices.empty()) return std::monostate{};
                              return poly;
                          },
                      },
                      solid);
}

std::vector<Vec3> sample_surface(const Solid& solid, std::size_t n) {
    std::vector<Vec3> out;
    out.reserve(n);
    std::visit(Overloaded{
                   [&](const Ball& b) {
                       for (std::size_t i = 0; i < n; ++i) {
                           const double z = 1.0 - (2.0 * i + 1.0) / static_cast<double>(n);
                           const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
                           const double phi = 2.0 * std::numbers::pi * std::fmod(i * kGolden, 1.0);
                           const Vec3 u{r * std::cos(phi), r * std::sin(phi), z};
                           out.push_back(b.center + b.radius * u);
                       }
                   },
                   [&](const Cube& c) {
                       for (int face = 0; face < 6; ++face) {
                           const std::size_t m = n / 6 + (static_cast<std::size_t>(face) < n % 6 ? 1 : 0);
                           const int axis = face / 2;
                           const double sign = (face % 2 == 0) ? -1.0 : 1.0;
                           for (std::size_t i = 0; i < m; ++i) {
                               const double a = (i + 0.5) / static_cast<double>(m);
                               const double b = std::fmod(i * kGolden + 0.5, 1.0);
                               Vec3 y{};
                               y[axis] = sign * c.half_side;
                               y[(axis + 1) % 3] = (2.0 * a - 1.0) * c.half_side;
                               y[(axis + 2) % 3] = (2.0 * b - 1.0) * c.half_side;
                               out.push_back(c.center + y);
                           }
                       }
                   },
               },
               solid);
    return out;
}

}  // namespace wradon
