#include "icg/generators.hpp"

#include <algorithm>
#include <numbers>
#include <sstream>

#include "icg/random.hpp"

namespace icg {

namespace {

constexpr int kMaxRetries = 64;
constexpr double kPi = std::numbers::pi;

bool distinct_axes(const PointSet& ps) {
    try {
        require_generic(ps, Direction(0.0));
        require_generic(ps, Direction(90.0));
    } catch (const Error&) {
        return false;
    }
    return true;
}

[[noreturn]] void exhausted(const char* what, std::size_t n) {
    std::ostringstream msg;
    msg << what << ": retry budget exhausted for n = " << n;
    throw Error(ErrorKind::Internal, msg.str());
}

// n angles in [lo, lo + span), one per stratum, ascending.
std::vector<double> stratified(Rng& rng, std::size_t n, double lo, double span) {
    std::vector<double> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = lo + span * (static_cast<double>(k) + 0.1 + 0.8 * rng.uniform()) / static_cast<double>(n);
    }
    return out;
}

} // namespace

PointSet gen_convex(std::size_t n, std::uint64_t seed) {
    if (n < 2) {
        throw Error(ErrorKind::InvalidArgument, "gen_convex needs n >= 2");
    }
    Rng rng(seed);
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        const double ry = rng.uniform(0.5, 1.0);
        const double phi = rng.uniform(0.0, kPi);
        const double start = rng.uniform(0.0, 2.0 * kPi);
        // Keep the radial wobble well below the sagitta of the finest stratum.
        const double step = 2.0 * kPi / static_cast<double>(n);
        const double wobble = 1e-3 * step * step;
        std::vector<Point> pts;
        pts.reserve(n);
        for (double t : stratified(rng, n, start, 2.0 * kPi)) {
            const double r = 1.0 + rng.uniform(-wobble, wobble);
            const Point e{r * std::cos(t), r * ry * std::sin(t)};
            pts.push_back({e.x * std::cos(phi) - e.y * std::sin(phi), e.x * std::sin(phi) + e.y * std::cos(phi)});
        }
        if (find_duplicate(pts)) continue;
        PointSet ps(std::move(pts));
        if (is_convex_position(ps) && distinct_axes(ps)) {
            return ps;
        }
    }
    exhausted("gen_convex", n);
}

PointSet gen_onesided(std::size_t n, const Direction& d, std::uint64_t seed) {
    if (n < 2) {
        throw Error(ErrorKind::InvalidArgument, "gen_onesided needs n >= 2");
    }
    Rng rng(seed);
    const Point u = d.unit(), v = d.normal();
    for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
        const double span = rng.uniform(40.0, 160.0) * kPi / 180.0;
        // Arc angles measured from the +d axis must stay inside (0, pi) so the
        // projection onto d is monotone along the arc.
        const double lo = rng.uniform(0.05, kPi - span - 0.05 > 0.05 ? kPi - span - 0.05 : 0.05);
        const double side = rng.uniform() < 0.5 ? 1.0 : -1.0;
        const double radius = rng.uniform(0.5, 2.0);
        const Point centre{rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)};
        std::vector<Point> pts;
        pts.reserve(n);
        for (double t : stratified(rng, n, lo, span)) {
            // t measured from -d so that ascending t means ascending projection.
            const double a = radius * -std::cos(t);
            const double b = side * radius * std::sin(t);
            pts.push_back(centre + a * u + b * v);
        }
        if (find_duplicate(pts)) continue;
        PointSet ps(std::move(pts));
        try {
            require_generic(ps, d);
            require_generic(ps, Direction(d.angle_deg() + 90.0));
            if (is_one_sided(ps, d)) {
                return ps;
            }
        } catch (const Error&) {
        }
    }
    exhausted("gen_onesided", n);
}

PointSet gen_uniform(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Point> pts;
    pts.reserve(n);
    while (pts.size() < n) {
        const Point p{rng.uniform(), rng.uniform()};
        pts.push_back(p);
        if (find_duplicate(pts)) pts.pop_back();
    }
    return PointSet(std::move(pts));
}

PointSet perturb(const PointSet& ps, std::uint64_t seed, double rel) {
    Rng rng(seed);
    const double r = rel * ps.extent();
    std::vector<Point> pts;
    pts.reserve(ps.size());
    for (const Point& p : ps) {
        const double a = rng.uniform(0.0, 2.0 * kPi);
        pts.push_back({p.x + r * std::cos(a), p.y + r * std::sin(a)});
    }
    return PointSet(std::move(pts));
}

} // namespace icg
