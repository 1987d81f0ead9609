#include "icg/steiner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>

#include "icg/random.hpp"
#include "mesh.hpp"

namespace icg {

namespace {

using detail::Mesh;

const double kMinCos = std::sin(kAngleTolDeg * std::numbers::pi / 180.0);

// Slot of a non-acute corner (the largest angle), or -1 when the face is acute.
int non_acute_corner(const std::vector<Point>& pts, const Mesh::Tri& t, double* cos_out) {
    int worst = -1;
    double worst_cos = std::numeric_limits<double>::infinity();
    for (int k = 0; k < 3; ++k) {
        const Point a = pts[t.v[k]], b = pts[t.v[(k + 1) % 3]], c = pts[t.v[(k + 2) % 3]];
        const Point ab = b - a, ac = c - a;
        const double cs = dot(ab, ac) / (norm(ab) * norm(ac));
        if (cs < worst_cos) {
            worst_cos = cs;
            worst = k;
        }
    }
    *cos_out = worst_cos;
    return worst_cos <= kMinCos ? worst : -1;
}

Point circumcenter(Point a, Point b, Point c) {
    const Point ab = b - a, ac = c - a;
    const double d = 2.0 * cross(ab, ac);
    const double lb = norm2(ab), lc = norm2(ac);
    return {a.x + (ac.y * lb - ab.y * lc) / d, a.y + (ab.x * lc - ac.x * lb) / d};
}

Point midpoint(Point a, Point b) { return {0.5 * (a.x + b.x), 0.5 * (a.y + b.y)}; }

struct HullSide {
    int a, b;
};

std::vector<HullSide> hull_sides(const Mesh& m) {
    std::vector<HullSide> out;
    for (auto [t, s] : m.hull_edges()) {
        const auto& v = m.tris()[t].v;
        out.push_back({v[(s + 1) % 3], v[(s + 2) % 3]});
    }
    return out;
}

// Where to put the next Steiner point for the non-acute face t.
Point choose_insertion(const Mesh& m, int t, int corner) {
    const auto& pts = m.points();
    const auto& v = m.tris()[t].v;
    const Point a = pts[v[0]], b = pts[v[1]], c = pts[v[2]];
    const Point cc = circumcenter(a, b, c);
    const auto sides = hull_sides(m);

    // Hull edges whose closed diametral disk holds cc get split first.
    const HullSide* enc = nullptr;
    double enc_d = std::numeric_limits<double>::infinity();
    for (const HullSide& h : sides) {
        const Point x = pts[h.a], y = pts[h.b];
        if (dot(cc - x, cc - y) <= 0.0) {
            const double d = norm2(cc - midpoint(x, y));
            if (d < enc_d) {
                enc_d = d;
                enc = &h;
            }
        }
    }
    if (enc) {
        return midpoint(pts[enc->a], pts[enc->b]);
    }
    if (m.locate(cc).where != Mesh::Where::Outside) {
        return cc;
    }

    // Outside the hull: the longest hull edge of the face, else the hull
    // edge crossed on the way from the face to its circumcenter.
    const auto& nb = m.tris()[t].nb;
    double best = -1.0;
    Point out{};
    for (int s = 0; s < 3; ++s) {
        if (nb[s] < 0) {
            const Point x = pts[v[(s + 1) % 3]], y = pts[v[(s + 2) % 3]];
            if (norm2(y - x) > best) {
                best = norm2(y - x);
                out = midpoint(x, y);
            }
        }
    }
    if (best > 0.0) {
        return out;
    }
    const Point g{(a.x + b.x + c.x) / 3.0, (a.y + b.y + c.y) / 3.0};
    double best_t = std::numeric_limits<double>::infinity();
    for (const HullSide& h : sides) {
        const Point x = pts[h.a], y = pts[h.b];
        const Point r = cc - g, s = y - x;
        const double den = cross(r, s);
        if (den == 0.0) continue;
        const double tt = cross(x - g, s) / den;
        const double uu = cross(x - g, r) / den;
        if (tt >= 0.0 && uu >= 0.0 && uu <= 1.0 && tt < best_t) {
            best_t = tt;
            out = midpoint(x, y);
        }
    }
    if (std::isfinite(best_t)) {
        return out;
    }
    // Fallback: split the edge opposite the non-acute corner.
    return midpoint(pts[v[(corner + 1) % 3]], pts[v[(corner + 2) % 3]]);
}

Triangulation mesh_triangulation(const Mesh& m, const GeomGraph& g) {
    Triangulation tri{g, {}, {}};
    for (const auto& t : m.tris()) {
        tri.internal_faces.push_back(
            {static_cast<Index>(t.v[0]), static_cast<Index>(t.v[1]), static_cast<Index>(t.v[2])});
    }
    std::map<int, int> succ;
    for (const HullSide& h : hull_sides(m)) {
        succ[h.a] = h.b;
    }
    if (!succ.empty()) {
        const int start = succ.begin()->first;
        int cur = start;
        do {
            tri.outer_face.push_back(static_cast<Index>(cur));
            cur = succ.at(cur);
        } while (cur != start && tri.outer_face.size() <= succ.size());
    }
    return tri;
}

double acute_margin(Point a, Point b, Point c) {
    auto cs = [](Point p, Point q, Point r) { return dot(q - p, r - p) / (norm(q - p) * norm(r - p)); };
    return std::min({cs(a, b, c), cs(b, c, a), cs(c, a, b)});
}

int count_non_acute(const Mesh& m) {
    int bad = 0;
    for (const auto& t : m.tris()) {
        if (acute_margin(m.points()[t.v[0]], m.points()[t.v[1]], m.points()[t.v[2]]) <= kMinCos) ++bad;
    }
    return bad;
}

// Circumcenter refinement of the input triangulation until every face is
// acute, the budget runs out or an insertion fails. Nothing for collinear input.
std::optional<Mesh> refine(const PointSet& ps, std::size_t budget, std::uint64_t seed, std::size_t& rounds) {
    std::optional<Mesh> mesh;
    try {
        mesh.emplace(std::vector<Point>(ps.begin(), ps.end()));
    } catch (const Error&) {
        return std::nullopt;
    }
    Rng rng(seed);
    const double min_sep = 1e-7 * mesh->extent();
    for (;; ++rounds) {
        const auto& tris = mesh->tris();
        const auto& pts = mesh->points();
        // Worst face first; the seed breaks exact ties.
        std::vector<std::pair<int, int>> worst;
        double worst_cos = std::numeric_limits<double>::infinity();
        for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
            double cs = 0.0;
            const int corner = non_acute_corner(pts, tris[t], &cs);
            if (corner < 0) continue;
            if (cs < worst_cos) {
                worst_cos = cs;
                worst.assign(1, {t, corner});
            } else if (cs == worst_cos) {
                worst.emplace_back(t, corner);
            }
        }
        if (worst.empty() || rounds >= budget) return mesh;
        const auto [t, corner] = worst[rng.below(worst.size())];
        const Point p = choose_insertion(*mesh, t, corner);
        double nearest = std::numeric_limits<double>::infinity();
        for (const Point& q : pts) {
            nearest = std::min(nearest, dist(p, q));
        }
        if (nearest < min_sep || !mesh->insert(p)) return mesh;
    }
}

// Graded mesh generation around the input. The input sits inside a regular
// polygon frame; free points are sampled to a sizing field that shrinks
// toward close input pairs, relaxed toward an optimal Delaunay triangulation,
// then repaired by local vertex moves and by removing or adding points at
// vertices of degree four, which can never be surrounded by acute angles.
// Every retriangulation of the point set costs one round.
class Mesher {
public:
    Mesher(const PointSet& ps, std::uint64_t seed) : n0_(ps.size()), rng_(seed) {
        double x0 = ps[0].x, x1 = x0, y0 = ps[0].y, y1 = y0;
        for (const Point& p : ps) {
            x0 = std::min(x0, p.x), x1 = std::max(x1, p.x);
            y0 = std::min(y0, p.y), y1 = std::max(y1, p.y);
        }
        centre_ = {0.5 * (x0 + x1), 0.5 * (y0 + y1)};
        radius_ = 0.65 * std::hypot(x1 - x0, y1 - y0);
        const double pi = std::numbers::pi;
        // Frame sides of about 0.15 of the bounding-box diagonal.
        const int m = std::max(12, static_cast<int>(std::ceil(2.0 * pi * 0.65 / 0.15)));
        inner_ = radius_ * std::cos(pi / m) * (1.0 - 1e-3);
        smax_ = 2.0 * pi * radius_ / m;
        for (const Point& p : ps) {
            double d = radius_ - dist(p, centre_);
            for (const Point& q : ps) {
                if (&q != &p) d = std::min(d, dist(p, q));
            }
            origins_.push_back(p);
            spacing_.push_back(d);
        }
        pts_ = origins_;
        for (int k = 0; k < m; ++k) {
            const double a = 2.0 * pi * k / m;
            pts_.push_back(centre_ + radius_ * Point{std::cos(a), std::sin(a)});
        }
        fixed_ = pts_.size();
    }

    // Stops once rounds reaches budget; nothing when no round is left.
    std::optional<Mesh> run(std::size_t budget, std::size_t& rounds) {
        if (rounds >= budget) return std::nullopt;
        sample();
        Mesh mesh(pts_);
        ++rounds;
        auto done = [&]() { return count_non_acute(mesh) == 0; };
        for (int it = 0; it < kRelaxIters && rounds < budget; ++it, ++rounds) {
            mesh = relax(mesh);
        }
        while (rounds < budget && !done()) {
            int best = count_non_acute(mesh), stale = 0;
            for (int pass = 0; pass < kRepairPasses && stale < 3 && rounds < budget && best > 0; ++pass, ++rounds) {
                mesh = repair(mesh);
                const int bad = count_non_acute(mesh);
                stale = bad < best ? 0 : stale + 1;
                best = std::min(best, bad);
            }
            if (done() || rounds >= budget) break;
            mesh = retopologize(mesh);
            ++rounds;
            for (int it = 0; it < kSettleIters && rounds < budget; ++it, ++rounds) {
                mesh = relax(mesh);
            }
        }
        return mesh;
    }

private:
    static constexpr int kRelaxIters = 30;
    static constexpr int kSettleIters = 3;
    static constexpr int kRepairPasses = 20;

    double size_at(Point x) const {
        double s = smax_;
        for (std::size_t i = 0; i < n0_; ++i) {
            s = std::min(s, 0.35 * spacing_[i] + 0.4 * dist(x, origins_[i]));
        }
        return s;
    }

    // Dart throwing inside the frame, spaced to the sizing field.
    void sample() {
        std::vector<double> own;
        for (std::size_t i = 0; i < pts_.size(); ++i) {
            own.push_back(i < n0_ ? 0.35 * spacing_[i] : size_at(pts_[i]));
        }
        for (int fails = 0; fails < 3000;) {
            const double r = radius_ * std::sqrt(rng_.uniform());
            const double a = 2.0 * std::numbers::pi * rng_.uniform();
            const Point x = centre_ + r * Point{std::cos(a), std::sin(a)};
            const double s = size_at(x);
            bool ok = r < radius_ - 0.5 * s;
            for (std::size_t i = 0; ok && i < pts_.size(); ++i) {
                ok = dist(x, pts_[i]) >= 0.8 * std::min(s, own[i]);
            }
            if (ok) {
                pts_.push_back(x);
                own.push_back(s);
                fails = 0;
            } else {
                ++fails;
            }
        }
    }

    // One step toward an optimal Delaunay triangulation: each free point moves
    // to the density-weighted mean of its faces' circumcenters.
    Mesh relax(const Mesh& mesh) const {
        const auto& p = mesh.points();
        std::vector<Point> acc(p.size());
        std::vector<double> w(p.size(), 0.0);
        for (const auto& t : mesh.tris()) {
            const Point a = p[t.v[0]], b = p[t.v[1]], c = p[t.v[2]];
            const Point g = (1.0 / 3.0) * (a + b + c);
            const double s = size_at(g);
            const double wt = 0.5 * cross(b - a, c - a) / (s * s);
            const Point o = circumcenter(a, b, c);
            for (int v : t.v) {
                acc[v] = acc[v] + wt * o;
                w[v] += wt;
            }
        }
        std::vector<Point> next(p.begin(), p.end());
        for (std::size_t i = fixed_; i < p.size(); ++i) {
            const Point q = (1.0 / w[i]) * acc[i];
            if (dist(q, centre_) < inner_) next[i] = q;
        }
        return Mesh(std::move(next));
    }

    // Compass search on Steiner points near non-acute faces, maximizing the
    // worst acuteness margin of each star. Frame points slide on the circle.
    Mesh repair(const Mesh& mesh) const {
        std::vector<Point> p = mesh.points();
        const auto& tris = mesh.tris();
        const std::size_t n = p.size();
        std::vector<std::vector<int>> star(n);
        for (int t = 0; t < static_cast<int>(tris.size()); ++t) {
            for (int v : tris[t].v) star[v].push_back(t);
        }
        auto quality = [&](const Mesh::Tri& t) {
            const Point a = p[t.v[0]], b = p[t.v[1]], c = p[t.v[2]];
            if (cross(b - a, c - a) <= 0.0) return -2.0;
            const double lo = acute_margin(a, b, c);
            double big = -1.0;
            for (int k = 0; k < 3; ++k) {
                const Point u = p[t.v[(k + 1) % 3]] - p[t.v[k]], w = p[t.v[(k + 2) % 3]] - p[t.v[k]];
                big = std::max(big, dot(u, w) / (norm(u) * norm(w)));
            }
            // The second term keeps the smallest angle from collapsing.
            return std::min(lo, 0.5 * std::sqrt(std::max(0.0, 1.0 - big * big)));
        };
        auto star_quality = [&](std::size_t v) {
            double q = 2.0;
            for (int t : star[v]) q = std::min(q, quality(tris[t]));
            return q;
        };
        std::vector<char> want(n, 0);
        for (const auto& t : tris) {
            if (acute_margin(p[t.v[0]], p[t.v[1]], p[t.v[2]]) > 1e-3) continue;
            for (int v : t.v) {
                for (int u : star[v]) {
                    for (int x : tris[u].v) want[x] = 1;
                }
            }
        }
        const double pi = std::numbers::pi;
        for (std::size_t v = n0_; v < n; ++v) {
            if (!want[v]) continue;
            const bool on_frame = v < fixed_;
            double len = std::numeric_limits<double>::infinity();
            for (int t : star[v]) {
                for (int x : tris[t].v) {
                    if (x != static_cast<int>(v)) len = std::min(len, dist(p[v], p[x]));
                }
            }
            double step = 0.2 * len, q = star_quality(v);
            for (int it = 0; it < 60 && step > 1e-4 * len; ++it) {
                const Point cur = p[v];
                Point best = cur;
                double best_q = q;
                for (int k = 0; k < (on_frame ? 2 : 8); ++k) {
                    Point cand;
                    if (on_frame) {
                        const double a = std::atan2(cur.y - centre_.y, cur.x - centre_.x) + (k ? 1 : -1) * step / radius_;
                        cand = centre_ + radius_ * Point{std::cos(a), std::sin(a)};
                    } else {
                        cand = cur + step * Point{std::cos(k * pi / 4), std::sin(k * pi / 4)};
                        if (dist(cand, centre_) > inner_) continue;
                    }
                    // Refuse moves that bring the point close to a neighbour.
                    const double guard = std::max(0.4 * len, 0.25 * size_at(cand));
                    bool close = false;
                    for (int t : star[v]) {
                        for (int x : tris[t].v) {
                            if (x != static_cast<int>(v) && dist(cand, p[x]) < guard) close = true;
                        }
                    }
                    if (close) continue;
                    p[v] = cand;
                    const double cq = star_quality(v);
                    p[v] = cur;
                    if (cq > best_q) {
                        best_q = cq;
                        best = cand;
                    }
                }
                p[v] = best;
                if (best_q > q) {
                    q = best_q;
                } else {
                    step *= 0.5;
                }
            }
        }
        return Mesh(std::move(p));
    }

    // At each non-acute corner (at most one per neighbourhood): a free point is
    // removed; an input point of degree four gets a new neighbour along the
    // bisector of the offending angle; otherwise the face's circumcenter is added.
    Mesh retopologize(const Mesh& mesh) const {
        const auto& p = mesh.points();
        const auto& tris = mesh.tris();
        const std::size_t n = p.size();
        std::vector<int> degree(n, 0);
        std::vector<std::vector<int>> adj(n);
        for (const auto& t : tris) {
            for (int k = 0; k < 3; ++k) {
                ++degree[t.v[k]];
                adj[t.v[k]].push_back(t.v[(k + 1) % 3]);
            }
        }
        std::vector<char> touched(n, 0), drop(n, 0);
        std::vector<Point> added;
        for (const auto& t : tris) {
            for (int k = 0; k < 3; ++k) {
                const int v = t.v[k];
                const Point a = p[v], b = p[t.v[(k + 1) % 3]], c = p[t.v[(k + 2) % 3]];
                if (dot(b - a, c - a) > kMinCos * norm(b - a) * norm(c - a) || touched[v]) continue;
                touched[v] = 1;
                for (int u : adj[v]) touched[u] = 1;
                if (v >= static_cast<int>(fixed_)) {
                    drop[v] = 1;
                } else if (v < static_cast<int>(n0_) && degree[v] <= 4) {
                    Point dir = (1.0 / norm(b - a)) * (b - a) + (1.0 / norm(c - a)) * (c - a);
                    dir = (1.0 / norm(dir)) * dir;
                    added.push_back(a + 0.6 * std::min(norm(b - a), norm(c - a)) * dir);
                } else {
                    added.push_back(circumcenter(a, b, c));
                }
            }
        }
        std::vector<Point> next;
        for (std::size_t i = 0; i < n; ++i) {
            if (!drop[i]) next.push_back(p[i]);
        }
        for (const Point& q : added) {
            if (dist(q, centre_) < inner_) next.push_back(q);
        }
        return Mesh(std::move(next));
    }

    std::size_t n0_;
    Rng rng_;
    Point centre_{};
    double radius_ = 0.0, inner_ = 0.0, smax_ = 0.0;
    std::vector<Point> origins_;
    std::vector<double> spacing_;  // distance to the nearest other input point or the frame
    std::vector<Point> pts_;       // input, then frame, then free points
    std::size_t fixed_ = 0;        // input and frame points
};

} // namespace

AugmentResult augment_heuristic(const PointSet& ps, std::size_t max_rounds, std::uint64_t seed) {
    AugmentResult res;
    res.original = ps;
    res.augmented = ps;
    if (ps.size() <= 2) {
        const GeomGraph g = ps.size() == 2 ? GeomGraph(ps, {{0, 1}}) : GeomGraph(ps);
        res.triangulation = faces_of(g);
        res.succeeded = true;
        return res;
    }

    // Cheap refinement first; it settles inputs that need few Steiner points.
    std::optional<Mesh> mesh = refine(ps, max_rounds / 5, seed, res.rounds);
    if (!mesh || count_non_acute(*mesh) > 0) {
        if (auto meshed = Mesher(ps, seed).run(max_rounds, res.rounds)) {
            mesh = std::move(meshed);
        }
    }
    if (!mesh) {
        res.triangulation.graph = GeomGraph(ps);
        res.reason = "round limit reached on collinear input";
        return res;
    }

    res.augmented = PointSet(mesh->points());
    res.steiner_count = res.augmented.size() - ps.size();
    GeomGraph g(res.augmented, mesh->edges());
    const TriangulationCheck check = check_gabriel_triangulation(g);
    res.succeeded = check.ok;
    if (!check.ok) {
        res.reason = (res.rounds >= max_rounds ? "round limit reached: " : "refinement stalled: ") + check.reason;
    }
    res.triangulation = mesh_triangulation(*mesh, g);
    return res;
}

PointSet lattice_generator(std::size_t rows, std::size_t cols, double jitter, std::uint64_t seed) {
    if (!(jitter >= 0.0 && jitter < 0.2)) {
        throw Error(ErrorKind::InvalidArgument, "lattice jitter must lie in [0, 0.2)");
    }
    if (rows < 1 || cols < 1 || rows * cols < 1) {
        throw Error(ErrorKind::InvalidArgument, "lattice needs at least one row and one column");
    }
    constexpr double kBow = 0.1;
    const double h = std::sqrt(3.0) / 2.0;
    // Outward normals of the bottom, top, left and right sides.
    const Point n_bottom{0.0, -1.0}, n_top{0.0, 1.0}, n_left{-h, 0.5}, n_right{h, -0.5};
    auto bow = [&](std::size_t i, std::size_t len) {
        if (len < 2) return 0.0;
        const double t = static_cast<double>(i) / static_cast<double>(len - 1);
        return 4.0 * kBow * t * (1.0 - t);
    };

    Rng rng(seed);
    std::vector<Point> out;
    out.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols; ++c) {
            Point p{static_cast<double>(c) + 0.5 * static_cast<double>(r), static_cast<double>(r) * h};
            const bool boundary = r == 0 || r + 1 == rows || c == 0 || c + 1 == cols;
            // Draw for every point so the interior pattern does not depend on the shape.
            const double jx = rng.uniform(-jitter, jitter);
            const double jy = rng.uniform(-jitter, jitter);
            if (!boundary) {
                p = p + Point{jx, jy};
            } else {
                if (r == 0 && rows > 1) p = p + bow(c, cols) * n_bottom;
                if (r + 1 == rows && rows > 1) p = p + bow(c, cols) * n_top;
                if (c == 0 && cols > 1) p = p + bow(r, rows) * n_left;
                if (c + 1 == cols && cols > 1) p = p + bow(r, rows) * n_right;
            }
            out.push_back(p);
        }
    }
    return PointSet(std::move(out));
}

} // namespace icg
