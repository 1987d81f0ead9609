#include "icg/path_oracle.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <string>

#include "icg/kernels.hpp"

namespace icg {

bool AngularInterval::contains(double deg, double tol) const {
    const double off = angle_diff_deg(deg, lo_deg);
    return off >= -tol && off <= width_deg + tol;
}

namespace {

void require_valid_path(std::span<const Point> path) {
    if (path.size() < 2) {
        throw Error(ErrorKind::InvalidArgument, "a path needs at least two vertices");
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (path[i] == path[i + 1]) {
            throw Error(ErrorKind::Degenerate, "repeated consecutive point at position " + std::to_string(i));
        }
    }
}

double diameter(std::span<const Point> pts) {
    double best = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            best = std::max(best, norm2(pts[j] - pts[i]));
        }
    }
    return std::sqrt(best);
}

bool self_approaching_unchecked(std::span<const Point> path, ApproachMode mode) {
    const double eps = 1e-9 * diameter(path);
    std::vector<double> xs(path.size()), ys(path.size());
    for (std::size_t i = 0; i < path.size(); ++i) {
        xs[i] = path[i].x;
        ys[i] = path[i].y;
    }
    const kernels::PointsSoA soa{xs.data(), ys.data(), path.size()};
    const kernels::KernelTable& k = kernels::active();
    for (std::size_t i = 0; i + 2 < path.size(); ++i) {
        const Point d = path[i + 1] - path[i];
        const double len = norm(d);
        const Point u{d.x / len, d.y / len};
        const double m = k.min_projection(soa, i + 2, path.size(), path[i + 1].x, path[i + 1].y, u.x, u.y);
        if (mode == ApproachMode::Tolerant ? m < -eps : m <= eps) {
            return false;
        }
    }
    return true;
}

std::vector<Point> reversed(std::span<const Point> path) { return {path.rbegin(), path.rend()}; }

} // namespace

bool is_self_approaching(std::span<const Point> path, ApproachMode mode) {
    require_valid_path(path);
    return self_approaching_unchecked(path, mode);
}

bool is_increasing_chord(std::span<const Point> path, ApproachMode mode) {
    require_valid_path(path);
    return self_approaching_unchecked(path, mode) && self_approaching_unchecked(reversed(path), mode);
}

bool is_theta_path(std::span<const Point> path, double theta_deg) {
    require_valid_path(path);
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        if (angular_distance_deg(slope_deg(path[i], path[i + 1]), theta_deg) > 45.0 + kAngleTolDeg) {
            return false;
        }
    }
    return true;
}

std::optional<AngularInterval> infer_theta(std::span<const Point> path) {
    require_valid_path(path);
    // Intersect the arcs [s_i - 45, s_i + 45]. Each is a quarter turn, so a
    // nonempty intersection is always a single arc; track it relative to lo.
    double lo = slope_deg(path[0], path[1]) - 45.0;
    double width = 90.0;
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
        const double start = angle_diff_deg(slope_deg(path[i], path[i + 1]) - 45.0, lo);
        const double a = std::max(0.0, start);
        double b = std::min(width, start + 90.0);
        if (b < a - kAngleTolDeg) {
            return std::nullopt;
        }
        b = std::max(a, b);
        lo += a;
        width = b - a;
    }
    return AngularInterval{normalize_deg(lo), width};
}

double detour(std::span<const Point> path) {
    require_valid_path(path);
    const double direct = dist(path.front(), path.back());
    if (direct == 0.0) {
        throw Error(ErrorKind::Degenerate, "detour of a path with coincident endpoints");
    }
    double len = 0.0;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        len += dist(path[i], path[i + 1]);
    }
    return len / direct;
}

std::vector<Point> path_points(const GeomGraph& g, std::span<const Index> vertices) {
    std::vector<Point> out;
    out.reserve(vertices.size());
    for (Index v : vertices) {
        if (v >= g.num_vertices()) {
            throw Error(ErrorKind::InvalidArgument, "vertex " + std::to_string(v) + " out of range");
        }
        out.push_back(g.points()[v]);
    }
    return out;
}

void validate_witness(const GeomGraph& g, std::span<const Index> vertices) {
    if (vertices.size() < 2) {
        throw Error(ErrorKind::InvalidArgument, "a path needs at least two vertices");
    }
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i] >= g.num_vertices()) {
            throw Error(ErrorKind::InvalidArgument, "vertex " + std::to_string(vertices[i]) + " out of range");
        }
        if (i + 1 < vertices.size()) {
            if (vertices[i] == vertices[i + 1]) {
                throw Error(ErrorKind::Degenerate, "repeated vertex " + std::to_string(vertices[i]));
            }
            if (!g.has_edge(vertices[i], vertices[i + 1])) {
                throw Error(ErrorKind::InvalidArgument, "no edge between " + std::to_string(vertices[i]) +
                                                            " and " + std::to_string(vertices[i + 1]));
            }
        }
    }
}

VerifyReport verify_path(const GeomGraph& g, std::span<const Index> vertices) {
    validate_witness(g, vertices);
    const std::vector<Point> pts = path_points(g, vertices);
    VerifyReport r;
    r.self_approaching_forward = is_self_approaching(pts);
    r.self_approaching_backward = is_self_approaching(reversed(pts));
    r.increasing_chord = r.self_approaching_forward && r.self_approaching_backward;
    r.theta_interval = infer_theta(pts);
    if (pts.front() != pts.back()) {
        r.detour = detour(pts);
    }
    return r;
}

std::optional<PathWitness> exhaustive_increasing_chord_search(const GeomGraph& g, Index s, Index t) {
    const std::size_t n = g.num_vertices();
    if (n > kExhaustiveSearchLimit) {
        throw Error(ErrorKind::SizeLimit, "exhaustive search is limited to " +
                                              std::to_string(kExhaustiveSearchLimit) + " vertices");
    }
    if (s >= n || t >= n || s == t) {
        throw Error(ErrorKind::InvalidArgument, "invalid endpoints for exhaustive search");
    }
    const auto adj = g.adjacency();
    const auto& pts = g.points();
    // Prefix pruning uses the whole graph's extent, which bounds every path's
    // diameter, so it never rejects a path the final check would accept.
    const double eps = 1e-9 * pts.extent();

    std::vector<Index> stack{s};
    std::vector<char> on_path(n, 0);
    on_path[s] = 1;

    // Constraints introduced by appending vertex m to the current prefix.
    auto extends_ok = [&](Index m) {
        const std::size_t k = stack.size();
        const Point pm = pts[m];
        for (std::size_t i = 0; i + 1 < k; ++i) {
            const Point d = pts[stack[i + 1]] - pts[stack[i]];
            if (dot(pm - pts[stack[i + 1]], d) < -eps * norm(d)) {
                return false;
            }
        }
        const Point last = pts[stack[k - 1]];
        const Point back = last - pm;
        for (std::size_t l = 0; l + 1 < k; ++l) {
            if (dot(pts[stack[l]] - last, back) < -eps * norm(back)) {
                return false;
            }
        }
        return true;
    };

    std::optional<PathWitness> found;
    std::function<bool()> dfs = [&]() -> bool {
        const Index cur = stack.back();
        for (Index next : adj[cur]) {
            if (on_path[next] || !extends_ok(next)) {
                continue;
            }
            stack.push_back(next);
            on_path[next] = 1;
            if (next == t) {
                if (is_increasing_chord(path_points(g, stack))) {
                    found = PathWitness{stack, std::nullopt};
                    return true;
                }
            } else if (dfs()) {
                return true;
            }
            on_path[next] = 0;
            stack.pop_back();
        }
        return false;
    };
    dfs();
    if (found) {
        if (auto iv = infer_theta(path_points(g, found->vertices))) {
            found->theta_deg = iv->mid_deg();
        }
    }
    return found;
}

} // namespace icg
