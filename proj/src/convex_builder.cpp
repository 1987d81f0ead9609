#include "icg/convex_builder.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

namespace icg {

std::size_t cross_edge_budget(std::size_t n) {
    if (n <= 4) {
        return 6;
    }
    return 2 * n + 2 * cross_edge_budget(n / 2 + 1);
}

std::size_t convex_edge_budget(std::size_t n) { return 2 * n + cross_edge_budget(n); }

namespace {

// Shared state for one construction: the full point list and its tolerance.
struct Builder {
    std::span<const Point> pts;
    double tol;
    BuildStats* stats;
    std::vector<Edge> edges;

    explicit Builder(std::span<const Point> p, BuildStats* s = nullptr)
        : pts(p), tol(kGenericTol * bbox_extent(p)), stats(s) {}

    bool generic(std::span<const Index> ids, Point axis) const {
        std::vector<double> proj;
        proj.reserve(ids.size());
        for (Index i : ids) {
            proj.push_back(dot(pts[i], axis));
        }
        std::sort(proj.begin(), proj.end());
        for (std::size_t k = 1; k < proj.size(); ++k) {
            if (proj[k] - proj[k - 1] <= tol) {
                return false;
            }
        }
        return true;
    }

    bool fully_generic(std::span<const Index> ids, const Direction& d) const {
        return generic(ids, d.unit()) && generic(ids, d.normal());
    }

    // ids in counterclockwise hull order; chains returned in counterclockwise order.
    ChainSplit split_ccw(const std::vector<Index>& ids, const Direction& d) const {
        const std::size_t n = ids.size();
        std::size_t lo = 0, hi = 0;
        for (std::size_t k = 1; k < n; ++k) {
            if (d.project(pts[ids[k]]) < d.project(pts[ids[lo]])) lo = k;
            if (d.project(pts[ids[k]]) > d.project(pts[ids[hi]])) hi = k;
        }
        ChainSplit out;
        // Clockwise from lo to hi is counterclockwise from hi (exclusive) to lo.
        for (std::size_t k = (hi + 1) % n;; k = (k + 1) % n) {
            out.first.push_back(ids[k]);
            if (k == lo) break;
        }
        if (n > 1) {
            for (std::size_t k = (lo + 1) % n;; k = (k + 1) % n) {
                out.second.push_back(ids[k]);
                if (k == hi) break;
            }
        }
        return out;
    }

    void add(Index a, Index b) { edges.push_back(make_edge(a, b)); }

    void one_sided(const std::vector<Index>& ids, const Direction& d) {
        const std::size_t n = ids.size();
        if (n < 2) {
            return;
        }
        const Point u = d.unit();
        const Point nrm = d.normal();
        std::vector<Index> by_x(ids);
        std::sort(by_x.begin(), by_x.end(),
                  [&](Index a, Index b) { return dot(pts[a], u) < dot(pts[b], u); });
        // Put the chain on the +normal side of the segment joining the extremes.
        double side = 1.0;
        if (n >= 3) {
            const Point first = pts[by_x.front()];
            const Point last = pts[by_x.back()];
            side = icg::cross(last - first, pts[by_x[n / 2]] - first) >= 0.0 ? 1.0 : -1.0;
        }
        std::vector<std::size_t> prev(n), next(n);
        for (std::size_t k = 0; k < n; ++k) {
            prev[k] = (k + n - 1) % n;
            next[k] = (k + 1) % n;
        }
        std::vector<std::size_t> by_height(n);
        for (std::size_t k = 0; k < n; ++k) {
            by_height[k] = k;
        }
        std::sort(by_height.begin(), by_height.end(), [&](std::size_t a, std::size_t b) {
            return side * dot(pts[by_x[a]], nrm) > side * dot(pts[by_x[b]], nrm);
        });
        // Peel the highest point, joining it to its cyclic x-order neighbours.
        for (std::size_t r = 0; r + 2 < n; ++r) {
            const std::size_t k = by_height[r];
            add(by_x[k], by_x[prev[k]]);
            add(by_x[k], by_x[next[k]]);
            next[prev[k]] = next[k];
            prev[next[k]] = prev[k];
        }
        const std::size_t k = by_height[n - 2];
        add(by_x[k], by_x[next[k]]);
    }

    std::optional<PartitionQuad> try_candidate(const std::vector<Index>& ids, const ChainSplit& s1,
                                               const Direction& d2) const {
        const ChainSplit s2 = split_ccw(ids, d2);
        std::vector<char> in1(pts.size(), 0), in2(pts.size(), 0);
        for (Index i : s1.first) in1[i] = 1;
        for (Index i : s2.first) in2[i] = 1;
        PartitionQuad q{d2, {}, {}, {}, {}};
        for (Index i : ids) {
            (in1[i] ? (in2[i] ? q.a : q.b) : (in2[i] ? q.c : q.d)).push_back(i);
        }
        const std::size_t n = ids.size();
        if (q.a.size() + q.d.size() <= n / 2 + 1 && q.b.size() + q.c.size() <= (n + 1) / 2 + 1) {
            return q;
        }
        return std::nullopt;
    }

    PartitionQuad partition(const std::vector<Index>& ids, const Direction& d1) {
        if (stats) {
            ++stats->partitions;
        }
        const std::size_t n = ids.size();
        // Clockwise offsets from d1 at which d2 becomes perpendicular to a hull edge.
        std::vector<double> events;
        for (std::size_t k = 0; k < n; ++k) {
            const Point a = pts[ids[k]], b = pts[ids[(k + 1) % n]];
            if (a == b) continue;
            const double s = slope_deg(a, b);
            for (double perp : {s + 90.0, s - 90.0}) {
                const double delta = normalize_deg(d1.angle_deg() - perp);
                if (delta > kAngleTolDeg && delta < 180.0 - kAngleTolDeg) {
                    events.push_back(delta);
                }
            }
        }
        std::sort(events.begin(), events.end());
        events.erase(std::unique(events.begin(), events.end(),
                                 [](double x, double y) { return y - x <= kAngleTolDeg; }),
                     events.end());
        events.insert(events.begin(), 0.0);
        events.push_back(180.0);

        const ChainSplit s1 = split_ccw(ids, d1);
        static constexpr double kNudges[] = {0.5, 0.25, 0.75, 0.125, 0.375, 0.625, 0.875, 0.0625, 0.9375};
        for (std::size_t k = 0; k + 1 < events.size(); ++k) {
            const double lo = events[k], hi = events[k + 1];
            for (double f : kNudges) {
                const Direction d2 = d1.rotated_cw(lo + f * (hi - lo));
                if (!fully_generic(ids, d2)) {
                    continue;
                }
                if (auto q = try_candidate(ids, s1, d2)) {
                    return *q;
                }
                break; // chains are constant inside the interval
            }
        }
        throw Error(ErrorKind::Internal, "no balanced partition found");
    }

    void complete(const std::vector<Index>& ids) {
        for (std::size_t i = 0; i < ids.size(); ++i) {
            for (std::size_t j = i + 1; j < ids.size(); ++j) {
                add(ids[i], ids[j]);
            }
        }
    }

    static std::vector<Index> merge_ccw(const std::vector<Index>& ids, const std::vector<Index>& x,
                                        const std::vector<Index>& y, std::size_t universe) {
        std::vector<char> keep(universe, 0);
        for (Index i : x) keep[i] = 1;
        for (Index i : y) keep[i] = 1;
        std::vector<Index> out;
        for (Index i : ids) {
            if (keep[i]) out.push_back(i);
        }
        return out;
    }

    void cross(const std::vector<Index>& ids, const Direction& d1, std::size_t depth) {
        if (stats) {
            stats->max_depth = std::max(stats->max_depth, depth);
        }
        if (ids.size() <= 4) {
            complete(ids);
            return;
        }
        const PartitionQuad q = partition(ids, d1);
        // P1(d2) = a u c and P2(d2) = b u d are one-sided with respect to d2.
        one_sided(merge_ccw(ids, q.a, q.c, pts.size()), q.d2);
        one_sided(merge_ccw(ids, q.b, q.d, pts.size()), q.d2);
        // Within a u d the d2-extremes are the extremes of the whole set, so
        // splitting it along d2 separates a from d. Along d1 it need not: the
        // d1-minimum of the whole set usually lies in b.
        const auto ad = merge_ccw(ids, q.a, q.d, pts.size());
        const auto bc = merge_ccw(ids, q.b, q.c, pts.size());
        if (!q.a.empty() && !q.d.empty()) {
            cross(ad, q.d2, depth + 1);
        }
        if (!q.b.empty() && !q.c.empty()) {
            cross(bc, d1, depth + 1);
        }
    }

    GeomGraph finish(const PointSet& ps) { return GeomGraph(ps, std::move(edges)); }
};

std::vector<Index> convex_order(const PointSet& ps) {
    std::vector<Index> hull = convex_hull(ps);
    if (hull.size() != ps.size()) {
        throw Error(ErrorKind::NotConvex, "points are not in convex position");
    }
    return hull;
}

std::vector<Index> reversed(std::vector<Index> v) {
    std::reverse(v.begin(), v.end());
    return v;
}

} // namespace

ChainSplit chain_split(const PointSet& ps, const Direction& d) {
    const auto ids = convex_order(ps);
    require_generic(ps, d);
    const ChainSplit ccw = Builder(ps.points()).split_ccw(ids, d);
    return {reversed(ccw.first), reversed(ccw.second)};
}

GeomGraph build_one_sided(const PointSet& ps, const Direction& d) {
    if (ps.size() < 2) {
        throw Error(ErrorKind::InvalidArgument, "build_one_sided needs at least two points");
    }
    const auto ids = convex_order(ps);
    require_generic(ps, d);
    require_generic(ps, Direction(d.angle_deg() + 90.0));
    if (!is_one_sided(ps, d)) {
        std::ostringstream msg;
        msg << "points are not one-sided with respect to direction " << d.angle_deg();
        throw Error(ErrorKind::NotOneSided, msg.str());
    }
    Builder b(ps.points());
    b.one_sided(ids, d);
    return b.finish(ps);
}

PartitionQuad balanced_partition(const PointSet& ps, const Direction& d1) {
    if (ps.size() < 2) {
        throw Error(ErrorKind::InvalidArgument, "balanced_partition needs at least two points");
    }
    const auto ids = convex_order(ps);
    require_generic(ps, d1);
    PartitionQuad q = Builder(ps.points()).partition(ids, d1);
    for (auto* part : {&q.a, &q.b, &q.c, &q.d}) {
        std::sort(part->begin(), part->end());
    }
    return q;
}

GeomGraph build_cross(const PointSet& ps, const Direction& d1, BuildStats* stats) {
    const auto ids = convex_order(ps);
    require_generic(ps, d1);
    Builder b(ps.points(), stats);
    b.cross(ids, d1, 1);
    return b.finish(ps);
}

GeomGraph build_convex(const PointSet& ps, BuildStats* stats) {
    if (ps.size() < 2) {
        throw Error(ErrorKind::InvalidArgument, "build_convex needs at least two points");
    }
    const auto ids = convex_order(ps);
    const Direction up(90.0);
    require_generic(ps, up);
    require_generic(ps, Direction(0.0));
    Builder b(ps.points(), stats);
    const ChainSplit s = b.split_ccw(ids, up);
    b.one_sided(s.first, up);
    b.one_sided(s.second, up);
    b.cross(ids, up, 1);
    return b.finish(ps);
}

} // namespace icg
