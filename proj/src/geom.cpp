#include "icg/geom.hpp"

#include <algorithm>
#include <numbers>
#include <sstream>

namespace icg {

const char* to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::NonFinite: return "non-finite";
    case ErrorKind::Duplicate: return "duplicate";
    case ErrorKind::Degenerate: return "degenerate";
    case ErrorKind::NotConvex: return "not-convex";
    case ErrorKind::NotOneSided: return "not-one-sided";
    case ErrorKind::CrossingEdges: return "crossing-edges";
    case ErrorKind::Disconnected: return "disconnected";
    case ErrorKind::NonTriangularFace: return "non-triangular-face";
    case ErrorKind::VertexMismatch: return "vertex-mismatch";
    case ErrorKind::SizeLimit: return "size-limit";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Internal: return "internal";
    }
    return "unknown";
}

namespace {

constexpr double kRadPerDeg = std::numbers::pi / 180.0;

} // namespace

double normalize_deg(double deg) {
    double r = std::fmod(deg, 360.0);
    if (r < 0.0) {
        r += 360.0;
    }
    // fmod of a tiny negative value can round back up to exactly 360.
    if (r >= 360.0 || r == 0.0) {
        r = 0.0;
    }
    return r;
}

double angle_diff_deg(double a, double b) {
    double d = normalize_deg(a - b);
    if (d > 180.0) {
        d -= 360.0;
    }
    return d;
}

double angular_distance_deg(double a, double b) { return std::abs(angle_diff_deg(a, b)); }

Point Direction::unit() const {
    const double r = deg_ * kRadPerDeg;
    return {std::cos(r), std::sin(r)};
}

Point Direction::normal() const {
    const Point u = unit();
    return {-u.y, u.x};
}

double bbox_extent(std::span<const Point> pts) {
    if (pts.empty()) {
        return 0.0;
    }
    double xmin = pts[0].x, xmax = pts[0].x, ymin = pts[0].y, ymax = pts[0].y;
    for (const Point& p : pts) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    return std::hypot(xmax - xmin, ymax - ymin);
}

std::optional<std::pair<Index, Index>> find_duplicate(std::span<const Point> pts, double rel_tol) {
    const double tol = rel_tol * std::max(bbox_extent(pts), 1.0);
    std::vector<Index> order(pts.size());
    for (Index i = 0; i < order.size(); ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](Index a, Index b) {
        return pts[a].x < pts[b].x || (pts[a].x == pts[b].x && a < b);
    });
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (std::size_t j = i + 1; j < order.size(); ++j) {
            const Point& p = pts[order[i]];
            const Point& q = pts[order[j]];
            if (q.x - p.x > tol) {
                break;
            }
            if (dist(p, q) <= tol) {
                return std::pair{std::min(order[i], order[j]), std::max(order[i], order[j])};
            }
        }
    }
    return std::nullopt;
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
    for (Index i = 0; i < points_.size(); ++i) {
        if (!std::isfinite(points_[i].x) || !std::isfinite(points_[i].y)) {
            throw Error(ErrorKind::NonFinite, "point " + std::to_string(i) + " has a non-finite coordinate");
        }
    }
    if (auto dup = find_duplicate(points_)) {
        throw Error(ErrorKind::Duplicate, "points " + std::to_string(dup->first) + " and " +
                                              std::to_string(dup->second) + " coincide");
    }
    extent_ = bbox_extent(points_);
}

PointSet PointSet::subset(std::span<const Index> ids) const {
    std::vector<Point> out;
    out.reserve(ids.size());
    for (Index i : ids) {
        out.push_back(points_.at(i));
    }
    return PointSet(std::move(out));
}

GeomGraph::GeomGraph(PointSet points, std::vector<Edge> edges)
    : points_(std::move(points)), edges_(std::move(edges)) {
    for (Edge& e : edges_) {
        if (e.u == e.v) {
            throw Error(ErrorKind::InvalidArgument, "self-loop at vertex " + std::to_string(e.u));
        }
        if (e.u >= points_.size() || e.v >= points_.size()) {
            throw Error(ErrorKind::InvalidArgument, "edge index out of range");
        }
        e = make_edge(e.u, e.v);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

bool GeomGraph::has_edge(Index a, Index b) const {
    if (a == b) {
        return false;
    }
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(a, b));
}

std::vector<std::vector<Index>> GeomGraph::adjacency() const {
    std::vector<std::vector<Index>> adj(points_.size());
    for (const Edge& e : edges_) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    for (auto& row : adj) {
        std::sort(row.begin(), row.end());
    }
    return adj;
}

Orientation orientation(Point p, Point q, Point r) {
    const double area2 = cross(q - p, r - p);
    const double scale2 = std::max({norm2(q - p), norm2(r - p), norm2(r - q)});
    if (std::abs(area2) <= kOrientationTol * scale2) {
        return Orientation::Collinear;
    }
    return area2 > 0.0 ? Orientation::CounterClockwise : Orientation::Clockwise;
}

double slope_deg(Point p, Point q) {
    if (p == q) {
        throw Error(ErrorKind::Degenerate, "slope of a zero-length segment");
    }
    return normalize_deg(std::atan2(q.y - p.y, q.x - p.x) / kRadPerDeg);
}

std::vector<Index> convex_hull(std::span<const Point> pts) {
    const std::size_t n = pts.size();
    std::vector<Index> order(n);
    for (Index i = 0; i < n; ++i) {
        order[i] = i;
    }
    std::sort(order.begin(), order.end(), [&](Index a, Index b) {
        return pts[a].x < pts[b].x || (pts[a].x == pts[b].x && pts[a].y < pts[b].y);
    });
    if (n <= 2) {
        return order;
    }
    // Andrew's monotone chain; collinear points are popped.
    std::vector<Index> hull(2 * n);
    std::size_t k = 0;
    auto keep_left = [&](Index next, std::size_t floor) {
        while (k >= floor &&
               orientation(pts[hull[k - 2]], pts[hull[k - 1]], pts[next]) != Orientation::CounterClockwise) {
            --k;
        }
        hull[k++] = next;
    };
    for (Index i : order) {
        keep_left(i, 2);
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        keep_left(order[i], lower);
    }
    hull.resize(k - 1);
    if (hull.size() == 2 && hull[0] == hull[1]) {
        hull.pop_back();
    }
    return hull;
}

bool is_convex_position(const PointSet& ps) { return convex_hull(ps).size() == ps.size(); }

void require_generic(std::span<const Point> pts, std::span<const Index> ids, const Direction& d) {
    const Point u = d.unit();
    std::vector<std::pair<double, Index>> proj;
    proj.reserve(ids.size());
    for (Index i : ids) {
        proj.emplace_back(dot(pts[i], u), i);
    }
    std::sort(proj.begin(), proj.end());
    const double tol = kGenericTol * std::max(bbox_extent(pts), 1e-300);
    for (std::size_t k = 1; k < proj.size(); ++k) {
        if (proj[k].first - proj[k - 1].first <= tol) {
            std::ostringstream msg;
            msg << "direction " << d.angle_deg() << " deg is orthogonal to the line through points "
                << std::min(proj[k - 1].second, proj[k].second) << " and "
                << std::max(proj[k - 1].second, proj[k].second);
            throw Error(ErrorKind::Degenerate, msg.str());
        }
    }
}

void require_generic(const PointSet& ps, const Direction& d) {
    std::vector<Index> ids(ps.size());
    for (Index i = 0; i < ids.size(); ++i) {
        ids[i] = i;
    }
    require_generic(ps.points(), ids, d);
}

bool is_one_sided(const PointSet& ps, const Direction& d) {
    if (!is_convex_position(ps)) {
        throw Error(ErrorKind::NotConvex, "is_one_sided requires points in convex position");
    }
    require_generic(ps, d);
    const std::size_t n = ps.size();
    if (n <= 3) {
        return true;
    }
    const std::vector<Index> hull = convex_hull(ps);
    std::size_t lo = 0, hi = 0;
    for (std::size_t k = 1; k < n; ++k) {
        if (d.project(ps[hull[k]]) < d.project(ps[hull[lo]])) lo = k;
        if (d.project(ps[hull[k]]) > d.project(ps[hull[hi]])) hi = k;
    }
    const std::size_t gap = (hi + n - lo) % n;
    return gap == 1 || gap == n - 1;
}

Point rotate(Point p, double phi_deg) {
    const double r = phi_deg * kRadPerDeg;
    const double c = std::cos(r), s = std::sin(r);
    return {c * p.x - s * p.y, s * p.x + c * p.y};
}

PointSet rotate(const PointSet& ps, double phi_deg) {
    std::vector<Point> out;
    out.reserve(ps.size());
    for (const Point& p : ps) {
        out.push_back(rotate(p, phi_deg));
    }
    return PointSet(std::move(out));
}

namespace {

bool on_segment(Point a, Point b, Point p) {
    return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) && std::min(a.y, b.y) <= p.y &&
           p.y <= std::max(a.y, b.y);
}

} // namespace

bool segments_intersect(Point a, Point b, Point c, Point d) {
    const Orientation o1 = orientation(a, b, c);
    const Orientation o2 = orientation(a, b, d);
    const Orientation o3 = orientation(c, d, a);
    const Orientation o4 = orientation(c, d, b);
    if (o1 != o2 && o3 != o4 && o1 != Orientation::Collinear && o2 != Orientation::Collinear &&
        o3 != Orientation::Collinear && o4 != Orientation::Collinear) {
        return true;
    }
    return (o1 == Orientation::Collinear && on_segment(a, b, c)) ||
           (o2 == Orientation::Collinear && on_segment(a, b, d)) ||
           (o3 == Orientation::Collinear && on_segment(c, d, a)) ||
           (o4 == Orientation::Collinear && on_segment(c, d, b));
}

std::optional<std::pair<Edge, Edge>> find_crossing(const GeomGraph& g) {
    const auto& pts = g.points();
    const auto& es = g.edges();
    for (std::size_t i = 0; i < es.size(); ++i) {
        const Edge e = es[i];
        for (std::size_t j = i + 1; j < es.size(); ++j) {
            const Edge f = es[j];
            const bool shares = e.u == f.u || e.u == f.v || e.v == f.u || e.v == f.v;
            if (!shares) {
                if (segments_intersect(pts[e.u], pts[e.v], pts[f.u], pts[f.v])) {
                    return std::pair{e, f};
                }
                continue;
            }
            // Edges sharing one endpoint only meet elsewhere if they overlap.
            const Index common = (e.u == f.u || e.u == f.v) ? e.u : e.v;
            const Index a = e.u == common ? e.v : e.u;
            const Index b = f.u == common ? f.v : f.u;
            const Point pc = pts[common], pa = pts[a], pb = pts[b];
            if (orientation(pc, pa, pb) == Orientation::Collinear && dot(pa - pc, pb - pc) > 0.0) {
                return std::pair{e, f};
            }
        }
    }
    return std::nullopt;
}

bool crossing_free(const GeomGraph& g) { return !find_crossing(g).has_value(); }

GeomGraph complete_graph(const PointSet& ps) {
    std::vector<Edge> edges;
    for (Index i = 0; i < ps.size(); ++i) {
        for (Index j = i + 1; j < ps.size(); ++j) {
            edges.push_back({i, j});
        }
    }
    return GeomGraph(ps, std::move(edges));
}

} // namespace icg
