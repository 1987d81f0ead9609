#include "mesh.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>

namespace icg::detail {

namespace {

// > 0 when d lies strictly inside the circumcircle of counterclockwise (a, b, c).
double incircle(Point a, Point b, Point c, Point d) {
    const double adx = a.x - d.x, ady = a.y - d.y;
    const double bdx = b.x - d.x, bdy = b.y - d.y;
    const double cdx = c.x - d.x, cdy = c.y - d.y;
    const double al = adx * adx + ady * ady;
    const double bl = bdx * bdx + bdy * bdy;
    const double cl = cdx * cdx + cdy * cdy;
    return al * (bdx * cdy - bdy * cdx) + bl * (cdx * ady - cdy * adx) + cl * (adx * bdy - ady * bdx);
}

int next3(int k) { return (k + 1) % 3; }
int prev3(int k) { return (k + 2) % 3; }

} // namespace

Mesh::Mesh(std::vector<Point> pts) : pts_(std::move(pts)), extent_(bbox_extent(pts_)) {
    const int n = static_cast<int>(pts_.size());
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return pts_[a].x < pts_[b].x || (pts_[a].x == pts_[b].x && pts_[a].y < pts_[b].y);
    });
    const double tol = kOrientationTol * extent_ * extent_;

    // Collinear prefix, then a fan from the first point off that line.
    int k = 2;
    while (k < n && std::abs(cross(pts_[order[1]] - pts_[order[0]], pts_[order[k]] - pts_[order[0]])) <= tol) {
        ++k;
    }
    if (k >= n) {
        throw Error(ErrorKind::Degenerate, "cannot triangulate collinear points");
    }
    const int apex = order[k];
    const bool left = cross(pts_[order[1]] - pts_[order[0]], pts_[apex] - pts_[order[0]]) > 0.0;
    int prev_tri = -1;
    for (int i = 0; i + 1 < k; ++i) {
        const int a = order[i], b = order[i + 1];
        const int t = left ? add_tri(a, b, apex) : add_tri(b, a, apex);
        if (prev_tri >= 0) {
            // Shared edge is (a, apex).
            const int ts = left ? 1 : 0;             // slot opposite b in t
            const int ps = left ? 0 : 1;             // slot opposite the previous tri's far vertex
            link(t, ts, prev_tri);
            link(prev_tri, ps, t);
        }
        prev_tri = t;
    }

    // Hull edges, directed counterclockwise, keyed by their tail vertex pair.
    std::map<std::pair<int, int>, std::pair<int, int>> hull;
    auto rebuild_hull = [&]() {
        hull.clear();
        for (int t = 0; t < static_cast<int>(tris_.size()); ++t) {
            for (int s = 0; s < 3; ++s) {
                if (tris_[t].nb[s] < 0) {
                    hull[{tris_[t].v[next3(s)], tris_[t].v[prev3(s)]}] = {t, s};
                }
            }
        }
    };
    rebuild_hull();

    for (int idx = k + 1; idx < n; ++idx) {
        const int p = order[idx];
        std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> visible;
        for (const auto& [e, owner] : hull) {
            if (cross(pts_[e.second] - pts_[e.first], pts_[p] - pts_[e.first]) < -tol) {
                visible.push_back({e, owner});
            }
        }
        // Each visible edge (a, b) gets the triangle (a, p, b).
        std::map<int, std::pair<int, int>> open;  // hull vertex -> (tri, slot) of the edge to p
        for (const auto& [e, owner] : visible) {
            const int a = e.first, b = e.second;
            const int t = add_tri(a, p, b);
            link(t, 1, owner.first);
            link(owner.first, owner.second, t);
            hull.erase(e);
            // Edge (p, b) is slot 0, edge (a, p) is slot 2.
            for (auto [vtx, slot] : {std::pair{b, 0}, std::pair{a, 2}}) {
                if (auto it = open.find(vtx); it != open.end()) {
                    link(t, slot, it->second.first);
                    link(it->second.first, it->second.second, t);
                    open.erase(it);
                } else {
                    open[vtx] = {t, slot};
                }
            }
        }
        for (const auto& [vtx, owner] : open) {
            const auto& tv = tris_[owner.first].v;
            hull[{tv[next3(owner.second)], tv[prev3(owner.second)]}] = owner;
        }
    }
    make_delaunay();
}

int Mesh::add_tri(int a, int b, int c) {
    tris_.push_back({{a, b, c}, {-1, -1, -1}});
    return static_cast<int>(tris_.size()) - 1;
}

int Mesh::slot_of(int t, int neighbour) const {
    for (int s = 0; s < 3; ++s) {
        if (tris_[t].nb[s] == neighbour) return s;
    }
    return -1;
}

void Mesh::link(int t, int slot, int u) { tris_[t].nb[slot] = u; }

bool Mesh::illegal(int t, int slot) const {
    const int u = tris_[t].nb[slot];
    if (u < 0) {
        return false;
    }
    const int back = slot_of(u, t);
    const Point a = pts_[tris_[t].v[0]], b = pts_[tris_[t].v[1]], c = pts_[tris_[t].v[2]];
    const Point d = pts_[tris_[u].v[back]];
    const double m = std::max({norm2(a - d), norm2(b - d), norm2(c - d)});
    return incircle(a, b, c, d) > 1e-12 * m * m;
}

void Mesh::flip(int t, int slot) {
    const int u = tris_[t].nb[slot];
    const int j = slot_of(u, t);
    const int a = tris_[t].v[slot], b = tris_[t].v[next3(slot)], c = tris_[t].v[prev3(slot)];
    const int d = tris_[u].v[j];
    const int t_ca = tris_[t].nb[next3(slot)];  // across (c, a)
    const int t_ab = tris_[t].nb[prev3(slot)];  // across (a, b)
    const int u_bd = tris_[u].nb[next3(j)];     // across (b, d)
    const int u_dc = tris_[u].nb[prev3(j)];     // across (d, c)

    tris_[t] = {{a, b, d}, {u_bd, u, t_ab}};
    tris_[u] = {{a, d, c}, {u_dc, t_ca, t}};
    if (u_bd >= 0) link(u_bd, slot_of(u_bd, u), t);
    if (t_ca >= 0) link(t_ca, slot_of(t_ca, t), u);
}

void Mesh::make_delaunay() {
    std::deque<std::pair<int, int>> queue;
    for (int t = 0; t < static_cast<int>(tris_.size()); ++t) {
        for (int s = 0; s < 3; ++s) queue.emplace_back(t, s);
    }
    std::size_t guard = 0;
    const std::size_t limit = 1000 * tris_.size() + 1000;
    while (!queue.empty() && guard++ < limit) {
        const auto [t, s] = queue.front();
        queue.pop_front();
        if (!illegal(t, s)) continue;
        const int u = tris_[t].nb[s];
        flip(t, s);
        for (int k = 0; k < 3; ++k) {
            queue.emplace_back(t, k);
            queue.emplace_back(u, k);
        }
    }
}

void Mesh::legalize_around(int vertex, std::vector<int> stack) {
    std::size_t guard = 0;
    const std::size_t limit = 1000 * tris_.size() + 1000;
    while (!stack.empty() && guard++ < limit) {
        const int t = stack.back();
        stack.pop_back();
        const auto& tv = tris_[t].v;
        const int s = static_cast<int>(std::find(tv.begin(), tv.end(), vertex) - tv.begin());
        if (s == 3 || !illegal(t, s)) continue;
        const int u = tris_[t].nb[s];
        flip(t, s);
        stack.push_back(t);
        stack.push_back(u);
    }
}

Mesh::Location Mesh::locate(Point p) const {
    const double tol = 1e-11 * extent_;
    for (int t = 0; t < static_cast<int>(tris_.size()); ++t) {
        const auto& v = tris_[t].v;
        double dist[3];
        bool inside = true;
        for (int s = 0; s < 3; ++s) {
            const Point x = pts_[v[next3(s)]], y = pts_[v[prev3(s)]];
            dist[s] = cross(y - x, p - x) / norm(y - x);
            if (dist[s] < -tol) {
                inside = false;
                break;
            }
        }
        if (!inside) continue;
        int zeros = 0, zslot = -1, nzslot = -1;
        for (int s = 0; s < 3; ++s) {
            if (std::abs(dist[s]) <= tol) {
                ++zeros;
                zslot = s;
            } else {
                nzslot = s;
            }
        }
        if (zeros == 0) return {Where::Inside, t, -1};
        if (zeros == 1) return {Where::OnEdge, t, zslot};
        return {Where::OnVertex, t, nzslot};
    }
    return {};
}

std::optional<int> Mesh::insert(Point p) {
    const Location loc = locate(p);
    if (loc.where == Where::Outside || loc.where == Where::OnVertex) {
        return std::nullopt;
    }
    const int pid = static_cast<int>(pts_.size());
    pts_.push_back(p);
    const int t = loc.tri;

    if (loc.where == Where::Inside) {
        const auto [a, b, c] = tris_[t].v;
        const auto [n0, n1, n2] = tris_[t].nb;
        const int tb = add_tri(pid, c, a);
        const int tc = add_tri(pid, a, b);
        tris_[t] = {{pid, b, c}, {n0, tb, tc}};
        tris_[tb].nb = {n1, tc, t};
        tris_[tc].nb = {n2, t, tb};
        if (n1 >= 0) link(n1, slot_of(n1, t), tb);
        if (n2 >= 0) link(n2, slot_of(n2, t), tc);
        legalize_around(pid, {t, tb, tc});
        return pid;
    }

    // On the edge opposite v[k].
    const int k = loc.slot;
    const int a = tris_[t].v[k], x = tris_[t].v[next3(k)], y = tris_[t].v[prev3(k)];
    const int t_ya = tris_[t].nb[next3(k)];
    const int t_ax = tris_[t].nb[prev3(k)];
    const int u = tris_[t].nb[k];

    const int t2 = add_tri(pid, a, x);
    std::vector<int> touched{t, t2};
    if (u < 0) {
        tris_[t] = {{pid, y, a}, {t_ya, t2, -1}};
        tris_[t2].nb = {t_ax, -1, t};
    } else {
        const int j = slot_of(u, t);
        const int b = tris_[u].v[j];
        const int u_xb = tris_[u].nb[next3(j)];
        const int u_by = tris_[u].nb[prev3(j)];
        const int u2 = add_tri(pid, b, y);
        tris_[t] = {{pid, y, a}, {t_ya, t2, u2}};
        tris_[t2].nb = {t_ax, u, t};
        tris_[u] = {{pid, x, b}, {u_xb, u2, t2}};
        tris_[u2].nb = {u_by, t, u};
        if (u_by >= 0) link(u_by, slot_of(u_by, u), u2);
        touched.push_back(u);
        touched.push_back(u2);
    }
    if (t_ax >= 0) link(t_ax, slot_of(t_ax, t), t2);
    legalize_around(pid, touched);
    return pid;
}

std::vector<Edge> Mesh::edges() const {
    std::vector<Edge> out;
    for (int t = 0; t < static_cast<int>(tris_.size()); ++t) {
        for (int s = 0; s < 3; ++s) {
            const int u = tris_[t].nb[s];
            if (u < 0 || u > t) {
                out.push_back(make_edge(static_cast<Index>(tris_[t].v[next3(s)]),
                                        static_cast<Index>(tris_[t].v[prev3(s)])));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<int, int>> Mesh::hull_edges() const {
    std::vector<std::pair<int, int>> out;
    for (int t = 0; t < static_cast<int>(tris_.size()); ++t) {
        for (int s = 0; s < 3; ++s) {
            if (tris_[t].nb[s] < 0) out.emplace_back(t, s);
        }
    }
    return out;
}

} // namespace icg::detail
