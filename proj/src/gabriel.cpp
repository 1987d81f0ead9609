#include "icg/gabriel.hpp"

#include <algorithm>
#include <numbers>
#include <queue>

#include "icg/kernels.hpp"

namespace icg {

GeomGraph gabriel_graph(const PointSet& ps) {
    const std::size_t n = ps.size();
    std::vector<double> xs(n), ys(n);
    for (Index i = 0; i < n; ++i) {
        xs[i] = ps[i].x;
        ys[i] = ps[i].y;
    }
    const kernels::PointsSoA soa{xs.data(), ys.data(), n};
    const kernels::KernelTable& k = kernels::active();
    const double tol = kOrientationTol * ps.extent() * ps.extent();

    std::vector<Edge> edges;
    for (Index i = 0; i < n; ++i) {
        for (Index j = i + 1; j < n; ++j) {
            if (k.first_in_closed_disk(soa, xs[i], ys[i], xs[j], ys[j], tol, i, j) == n) {
                edges.push_back({i, j});
            }
        }
    }
    return GeomGraph(ps, std::move(edges));
}

namespace {

bool connected(const GeomGraph& g) {
    const std::size_t n = g.num_vertices();
    if (n == 0) {
        return true;
    }
    const auto adj = g.adjacency();
    std::vector<char> seen(n, 0);
    std::queue<Index> q;
    q.push(0);
    seen[0] = 1;
    std::size_t count = 1;
    while (!q.empty()) {
        const Index u = q.front();
        q.pop();
        for (Index v : adj[u]) {
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                q.push(v);
            }
        }
    }
    return count == n;
}

double signed_area2(const PointSet& ps, const std::vector<Index>& cycle) {
    double a = 0.0;
    for (std::size_t i = 0; i < cycle.size(); ++i) {
        const Point p = ps[cycle[i]];
        const Point q = ps[cycle[(i + 1) % cycle.size()]];
        a += cross(p, q);
    }
    return a;
}

} // namespace

Triangulation faces_of(const GeomGraph& g) {
    if (auto c = find_crossing(g)) {
        throw Error(ErrorKind::CrossingEdges,
                    "edges (" + std::to_string(c->first.u) + "," + std::to_string(c->first.v) + ") and (" +
                        std::to_string(c->second.u) + "," + std::to_string(c->second.v) + ") cross");
    }
    if (!connected(g)) {
        throw Error(ErrorKind::Disconnected, "graph is not connected");
    }
    const PointSet& ps = g.points();
    const std::size_t n = ps.size();
    Triangulation tri{g, {}, {}};
    if (n <= 1) {
        if (n == 1) {
            tri.outer_face = {0};
        }
        return tri;
    }

    // Counterclockwise rotation system.
    auto rot = g.adjacency();
    for (Index v = 0; v < n; ++v) {
        std::sort(rot[v].begin(), rot[v].end(), [&](Index a, Index b) {
            return slope_deg(ps[v], ps[a]) < slope_deg(ps[v], ps[b]);
        });
    }
    auto position = [&](Index v, Index u) {
        return static_cast<std::size_t>(std::find(rot[v].begin(), rot[v].end(), u) - rot[v].begin());
    };

    // Half-edge (u -> v) has id 2*e or 2*e+1.
    const auto& es = g.edges();
    std::vector<char> used(2 * es.size(), 0);
    auto half_id = [&](Index u, Index v) {
        const auto it = std::lower_bound(es.begin(), es.end(), make_edge(u, v));
        const std::size_t e = static_cast<std::size_t>(it - es.begin());
        return 2 * e + (u < v ? 0 : 1);
    };

    std::vector<std::vector<Index>> faces;
    for (std::size_t e = 0; e < es.size(); ++e) {
        for (int dir = 0; dir < 2; ++dir) {
            if (used[2 * e + dir]) {
                continue;
            }
            Index u = dir == 0 ? es[e].u : es[e].v;
            Index v = dir == 0 ? es[e].v : es[e].u;
            std::vector<Index> face;
            while (!used[half_id(u, v)]) {
                used[half_id(u, v)] = 1;
                face.push_back(u);
                // Face on the left: leave v along the edge clockwise-next to (v -> u).
                const auto& ring = rot[v];
                const std::size_t pos = position(v, u);
                const Index w = ring[(pos + ring.size() - 1) % ring.size()];
                u = v;
                v = w;
            }
            faces.push_back(std::move(face));
        }
    }

    std::size_t outer = 0;
    if (faces.size() > 1) {
        const double tol = kOrientationTol * ps.extent() * ps.extent();
        std::size_t negatives = 0;
        for (std::size_t f = 0; f < faces.size(); ++f) {
            if (signed_area2(ps, faces[f]) < -tol) {
                outer = f;
                ++negatives;
            }
        }
        if (negatives != 1) {
            throw Error(ErrorKind::Internal, "face walk found " + std::to_string(negatives) + " clockwise faces");
        }
    }
    for (std::size_t f = 0; f < faces.size(); ++f) {
        if (f == outer) {
            continue;
        }
        if (faces[f].size() != 3) {
            throw Error(ErrorKind::NonTriangularFace,
                        "internal face with " + std::to_string(faces[f].size()) + " sides");
        }
        tri.internal_faces.push_back({faces[f][0], faces[f][1], faces[f][2]});
    }
    tri.outer_face.assign(faces[outer].rbegin(), faces[outer].rend());
    return tri;
}

TriangulationCheck check_gabriel_triangulation(const GeomGraph& g) {
    Triangulation tri;
    try {
        tri = faces_of(g);
    } catch (const Error& e) {
        return {false, std::string(to_string(e.kind())) + ": " + e.what()};
    }
    const PointSet& ps = g.points();
    const std::size_t n = ps.size();
    if (n <= 2) {
        if (n == 2 && g.num_edges() != 1) {
            return {false, "two points without their edge"};
        }
        return {true, {}};
    }

    // The outer face must be a convex polygon through every hull vertex.
    // Vertices on the interior of a hull side are allowed on it.
    const auto& outer = tri.outer_face;
    std::vector<char> on_outer(n, 0);
    for (Index v : outer) {
        if (on_outer[v]) {
            return {false, "outer face is not a simple cycle (vertex " + std::to_string(v) + " repeats)"};
        }
        on_outer[v] = 1;
    }
    const std::size_t m = outer.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Point a = ps[outer[i]], b = ps[outer[(i + 1) % m]], c = ps[outer[(i + 2) % m]];
        const Orientation o = orientation(a, b, c);
        if (o == Orientation::Clockwise || (o == Orientation::Collinear && dot(b - a, c - b) <= 0.0)) {
            return {false, "outer face is not convex at vertex " + std::to_string(outer[(i + 1) % m])};
        }
    }
    for (Index h : convex_hull(ps)) {
        if (!on_outer[h]) {
            return {false, "hull vertex " + std::to_string(h) + " is not on the outer face"};
        }
    }

    const double min_cos = std::sin(kAngleTolDeg * std::numbers::pi / 180.0);
    for (const auto& f : tri.internal_faces) {
        for (int k = 0; k < 3; ++k) {
            const Point a = ps[f[k]];
            const Point b = ps[f[(k + 1) % 3]];
            const Point c = ps[f[(k + 2) % 3]];
            const Point ab = b - a, ac = c - a;
            if (dot(ab, ac) <= min_cos * norm(ab) * norm(ac)) {
                return {false, "face (" + std::to_string(f[0]) + "," + std::to_string(f[1]) + "," +
                                   std::to_string(f[2]) + ") is not acute at vertex " + std::to_string(f[k])};
            }
        }
    }
    return {true, {}};
}

bool is_gabriel_triangulation(const GeomGraph& g) { return check_gabriel_triangulation(g).ok; }

std::vector<Edge> necessity_check(const PointSet& ps, const GeomGraph& g) {
    if (!(g.points() == ps)) {
        throw Error(ErrorKind::VertexMismatch, "graph does not span exactly the given point set");
    }
    std::vector<Edge> missing;
    const GeomGraph gab = gabriel_graph(ps);
    for (const Edge& e : gab.edges()) {
        if (!g.has_edge(e.u, e.v)) {
            missing.push_back(e);
        }
    }
    return missing;
}

} // namespace icg
