#pragma once

// Test-side reference computations. Each one is written from the definitions
// directly and shares no code path with the library routine it checks.

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <vector>

#include "icg/geom.hpp"
#include "icg/random.hpp"

namespace oracle {

using icg::Index;
using icg::Point;

inline double deg(double rad) { return rad * 180.0 / std::numbers::pi; }
inline double rad(double d) { return d * std::numbers::pi / 180.0; }

// Point at arc-length parameter s along a polyline.
inline Point along(const std::vector<Point>& path, const std::vector<double>& cum, double s) {
    const auto it = std::upper_bound(cum.begin(), cum.end(), s);
    std::size_t i = it == cum.begin() ? 0 : static_cast<std::size_t>(it - cum.begin()) - 1;
    i = std::min(i, path.size() - 2);
    const double len = cum[i + 1] - cum[i];
    const double t = len > 0.0 ? std::clamp((s - cum[i]) / len, 0.0, 1.0) : 0.0;
    return {path[i].x + t * (path[i + 1].x - path[i].x), path[i].y + t * (path[i + 1].y - path[i].y)};
}

// Definition check on sampled triples: for a <= b <= c along the path,
// |bc| <= |ac| (up to rounding, 1e-12 * diameter). The triples are every
// vertex triple, points approaching each vertex at geometrically shrinking
// distances paired with every later vertex, and uniform random triples.
inline bool sampled_self_approaching(const std::vector<Point>& path, std::size_t samples, std::uint64_t seed) {
    std::vector<double> cum{0.0};
    for (std::size_t i = 0; i + 1 < path.size(); ++i) cum.push_back(cum.back() + icg::dist(path[i], path[i + 1]));
    double diam = 0.0;
    for (const Point& p : path)
        for (const Point& q : path) diam = std::max(diam, icg::dist(p, q));
    const double tol = 1e-12 * diam;
    auto ok = [&](Point a, Point b, Point c) { return icg::dist(b, c) <= icg::dist(a, c) + tol; };
    const std::size_t n = path.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = j; k < n; ++k)
                if (!ok(path[i], path[j], path[k])) return false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const Point b = path[i + 1];
        const Point d = b - path[i];
        for (double f = 1.0; f > 1e-12; f *= 0.5) {
            const Point a = b - f * d;
            for (std::size_t k = i + 1; k < n; ++k)
                if (!ok(a, b, path[k])) return false;
        }
    }
    icg::Rng rng(seed);
    const double total = cum.back();
    for (std::size_t s = 0; s < samples; ++s) {
        double t[3] = {rng.uniform() * total, rng.uniform() * total, rng.uniform() * total};
        std::sort(t, t + 3);
        if (!ok(along(path, cum, t[0]), along(path, cum, t[1]), along(path, cum, t[2]))) return false;
    }
    return true;
}

// Most negative projection (p_k - p_{i+1}) . u_i over k > i + 1, relative to
// the path diameter; used to set aside paths that sit within rounding of the
// self-approaching boundary.
inline double worst_margin(const std::vector<Point>& path) {
    double diam = 0.0;
    for (const Point& p : path)
        for (const Point& q : path) diam = std::max(diam, icg::dist(p, q));
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 2 < path.size(); ++i) {
        const Point u = (1.0 / icg::dist(path[i], path[i + 1])) * (path[i + 1] - path[i]);
        for (std::size_t k = i + 2; k < path.size(); ++k) worst = std::min(worst, icg::dot(path[k] - path[i + 1], u));
    }
    return worst / diam;
}

inline std::vector<Point> reversed(std::vector<Point> p) {
    std::reverse(p.begin(), p.end());
    return p;
}

inline bool sampled_increasing_chord(const std::vector<Point>& path, std::size_t samples, std::uint64_t seed) {
    return sampled_self_approaching(path, samples, seed) && sampled_self_approaching(reversed(path), samples, seed + 1);
}

// Interior angle at a of triangle abc by the law of cosines, in degrees.
inline double angle_at(Point a, Point b, Point c) {
    const double x = icg::dist(b, c), y = icg::dist(a, c), z = icg::dist(a, b);
    return deg(std::acos(std::clamp((y * y + z * z - x * x) / (2.0 * y * z), -1.0, 1.0)));
}

// Gabriel test via disk center and radius.
inline std::vector<icg::Edge> gabriel_edges(const std::vector<Point>& p, double rel_tol = 1e-9) {
    double diam = 0.0;
    for (const Point& a : p)
        for (const Point& b : p) diam = std::max(diam, icg::dist(a, b));
    std::vector<icg::Edge> out;
    for (Index i = 0; i < p.size(); ++i) {
        for (Index j = i + 1; j < p.size(); ++j) {
            const Point m{0.5 * (p[i].x + p[j].x), 0.5 * (p[i].y + p[j].y)};
            const double r = 0.5 * icg::dist(p[i], p[j]);
            bool empty = true;
            for (Index k = 0; k < p.size() && empty; ++k) {
                if (k != i && k != j && icg::dist(p[k], m) <= r + rel_tol * diam) empty = false;
            }
            if (empty) out.push_back({i, j});
        }
    }
    return out;
}

// Hull membership by convex combinations: p_i is a hull vertex iff it lies in
// no triangle and on no segment spanned by other points.
inline bool in_triangle(Point p, Point a, Point b, Point c) {
    const double d1 = icg::cross(b - a, p - a), d2 = icg::cross(c - b, p - b), d3 = icg::cross(a - c, p - c);
    const bool neg = d1 < 0 || d2 < 0 || d3 < 0, pos = d1 > 0 || d2 > 0 || d3 > 0;
    return !(neg && pos);
}

inline bool on_segment(Point p, Point a, Point b) {
    return std::abs(icg::cross(b - a, p - a)) <= 1e-12 * icg::norm2(b - a) && icg::dot(p - a, p - b) <= 0.0;
}

inline std::vector<Index> hull_vertices_brute(const std::vector<Point>& p) {
    std::vector<Index> out;
    const std::size_t n = p.size();
    for (Index i = 0; i < n; ++i) {
        bool vertex = true;
        for (Index a = 0; a < n && vertex; ++a) {
            if (a == i) continue;
            for (Index b = a + 1; b < n && vertex; ++b) {
                if (b == i) continue;
                if (on_segment(p[i], p[a], p[b])) vertex = false;
                for (Index c = b + 1; c < n && vertex; ++c) {
                    if (c == i) continue;
                    if (std::abs(icg::cross(p[b] - p[a], p[c] - p[a])) > 0.0 && in_triangle(p[i], p[a], p[b], p[c]))
                        vertex = false;
                }
            }
        }
        if (vertex) out.push_back(i);
    }
    return out;
}

// Chains of a convex polygon under direction angle phi (degrees), computed by
// walking the polygon given in counterclockwise order. Returns membership in
// the clockwise chain from the minimum (included) to the maximum (excluded).
inline std::vector<char> first_chain(const std::vector<Point>& ccw_poly, double phi) {
    const std::size_t n = ccw_poly.size();
    const Point u{std::cos(rad(phi)), std::sin(rad(phi))};
    std::size_t lo = 0, hi = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (icg::dot(ccw_poly[k], u) < icg::dot(ccw_poly[lo], u)) lo = k;
        if (icg::dot(ccw_poly[k], u) > icg::dot(ccw_poly[hi], u)) hi = k;
    }
    std::vector<char> in(n, 0);
    for (std::size_t k = lo; k != hi; k = (k + n - 1) % n) in[k] = 1;  // clockwise = decreasing ccw index
    return in;
}

// Whether some d2 on a 0.1 degree grid over the half-turn clockwise from d1
// gives a balanced (d1, d2)-partition.
inline bool balanced_direction_exists(const std::vector<Point>& ccw_poly, double d1) {
    const std::size_t n = ccw_poly.size();
    const auto c1 = first_chain(ccw_poly, d1);
    for (int k = 1; k < 1800; ++k) {
        const auto c2 = first_chain(ccw_poly, d1 - 0.1 * k);
        std::size_t ad = 0, bc = 0;
        for (std::size_t i = 0; i < n; ++i) {
            (c1[i] == c2[i] ? ad : bc) += 1;
        }
        if (ad <= n / 2 + 1 && bc <= (n + 1) / 2 + 1) return true;
    }
    return false;
}

// Exact theta interval by scanning a fine grid: the set of theta (step in
// degrees) within 45 degrees of every edge slope. Returns the count of grid
// values accepted and one of them.
struct ThetaScan {
    std::size_t hits = 0;
    double any = 0.0;
};

inline ThetaScan scan_theta(const std::vector<Point>& path, double step) {
    ThetaScan out;
    for (double th = 0.0; th < 360.0; th += step) {
        bool ok = true;
        for (std::size_t i = 0; i + 1 < path.size() && ok; ++i) {
            const double s = deg(std::atan2(path[i + 1].y - path[i].y, path[i + 1].x - path[i].x));
            double d = std::fmod(std::abs(s - th), 360.0);
            d = std::min(d, 360.0 - d);
            ok = d <= 45.0 + 1e-9;
        }
        if (ok) {
            if (out.hits == 0) out.any = th;
            ++out.hits;
        }
    }
    return out;
}

// Edge budget recomputed from its recurrence.
inline std::size_t budget_f(std::size_t n) {
    std::vector<std::size_t> f(n + 1, 6);
    for (std::size_t m = 5; m <= n; ++m) f[m] = 2 * m + 2 * f[m / 2 + 1];
    return f[n];
}

// Random walk that stays a theta-path: every step's slope lies in the wedge.
inline std::vector<Point> random_theta_path(icg::Rng& rng, std::size_t edges, double theta) {
    std::vector<Point> p{{rng.uniform(-1, 1), rng.uniform(-1, 1)}};
    for (std::size_t i = 0; i < edges; ++i) {
        const double s = rad(theta + rng.uniform(-44.9, 44.9));
        const double len = rng.uniform(0.05, 1.0);
        p.push_back({p.back().x + len * std::cos(s), p.back().y + len * std::sin(s)});
    }
    return p;
}

// Random polyline with arbitrary turning (mostly not self-approaching).
inline std::vector<Point> random_path(icg::Rng& rng, std::size_t edges) {
    std::vector<Point> p{{rng.uniform(-1, 1), rng.uniform(-1, 1)}};
    double heading = rng.uniform(0, 360);
    const double spread = rng.uniform(10, 200);
    for (std::size_t i = 0; i < edges; ++i) {
        heading += rng.uniform(-spread / 2, spread / 2);
        const double len = rng.uniform(0.05, 1.0);
        p.push_back({p.back().x + len * std::cos(rad(heading)), p.back().y + len * std::sin(rad(heading))});
    }
    return p;
}

} // namespace oracle
