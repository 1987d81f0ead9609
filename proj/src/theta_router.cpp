#include "icg/theta_router.hpp"

#include <algorithm>
#include <queue>
#include <string>

namespace icg {

bool in_theta_wedge(double slope, double theta_deg) {
    return angular_distance_deg(slope, theta_deg) <= 45.0 + kAngleTolDeg;
}

ThetaSubgraph theta_subgraph(const GeomGraph& g, double theta_deg) {
    ThetaSubgraph sub{normalize_deg(theta_deg), {}};
    const auto& ps = g.points();
    for (const Edge& e : g.edges()) {
        const double fwd = slope_deg(ps[e.u], ps[e.v]);
        if (in_theta_wedge(fwd, theta_deg)) {
            sub.arcs.push_back({e.u, e.v});
        } else if (in_theta_wedge(fwd + 180.0, theta_deg)) {
            sub.arcs.push_back({e.v, e.u});
        }
    }
    std::sort(sub.arcs.begin(), sub.arcs.end());
    return sub;
}

namespace {

void sort_dedup(std::vector<double>& v) {
    for (double& x : v) {
        x = normalize_deg(x);
    }
    std::sort(v.begin(), v.end());
    std::vector<double> out;
    for (double x : v) {
        if (out.empty() || x - out.back() > kAngleTolDeg) {
            out.push_back(x);
        }
    }
    if (out.size() > 1 && out.front() + 360.0 - out.back() <= kAngleTolDeg) {
        out.pop_back();
    }
    v = std::move(out);
}

// Critical wedge positions plus midpoints of circularly consecutive ones.
std::vector<double> critical_set(const GeomGraph& g) {
    const auto& ps = g.points();
    std::vector<double> crit;
    crit.reserve(4 * g.num_edges());
    for (const Edge& e : g.edges()) {
        const double s = slope_deg(ps[e.u], ps[e.v]);
        for (double base : {s, s + 180.0}) {
            crit.push_back(base - 45.0);
            crit.push_back(base + 45.0);
        }
    }
    sort_dedup(crit);
    std::vector<double> all = crit;
    for (std::size_t i = 0; i < crit.size(); ++i) {
        const double a = crit[i];
        const double b = i + 1 < crit.size() ? crit[i + 1] : crit.front() + 360.0;
        all.push_back(0.5 * (a + b));
    }
    sort_dedup(all);
    return all;
}

void require_pair(const GeomGraph& g, Index s, Index t) {
    if (s >= g.num_vertices() || t >= g.num_vertices()) {
        throw Error(ErrorKind::InvalidArgument, "vertex index out of range");
    }
    if (s == t) {
        throw Error(ErrorKind::InvalidArgument, "source and target coincide");
    }
}

} // namespace

std::vector<double> candidate_thetas(const GeomGraph& g, Index s, Index t) {
    require_pair(g, s, t);
    std::vector<double> out = critical_set(g);
    out.push_back(slope_deg(g.points()[s], g.points()[t]));
    sort_dedup(out);
    return out;
}

ThetaRouter::ThetaRouter(const GeomGraph& g) : g_(g), out_(g.num_vertices()), critical_(critical_set(g)) {
    const auto& ps = g.points();
    const auto adj = g.adjacency();
    for (Index u = 0; u < adj.size(); ++u) {
        out_[u].reserve(adj[u].size());
        for (Index v : adj[u]) {
            out_[u].push_back({v, slope_deg(ps[u], ps[v])});
        }
    }
}

std::optional<std::vector<Index>> ThetaRouter::bfs(Index s, Index t, double theta) const {
    constexpr Index kNone = static_cast<Index>(-1);
    std::vector<Index> parent(out_.size(), kNone);
    parent[s] = s;
    std::queue<Index> q;
    q.push(s);
    while (!q.empty()) {
        const Index u = q.front();
        q.pop();
        for (const HalfEdge& h : out_[u]) {
            if (parent[h.to] != kNone || !in_theta_wedge(h.slope, theta)) {
                continue;
            }
            parent[h.to] = u;
            if (h.to == t) {
                std::vector<Index> path{t};
                for (Index v = t; v != s; v = parent[v]) {
                    path.push_back(parent[v]);
                }
                std::reverse(path.begin(), path.end());
                return path;
            }
            q.push(h.to);
        }
    }
    return std::nullopt;
}

std::optional<PathWitness> ThetaRouter::route(Index s, Index t) const {
    require_pair(g_, s, t);
    const auto& ps = g_.points();
    const double direct = slope_deg(ps[s], ps[t]);
    const double window = 45.0 + kAngleTolDeg;

    auto attempt = [&](double theta) -> std::optional<PathWitness> {
        if (auto path = bfs(s, t, theta)) {
            return PathWitness{std::move(*path), theta};
        }
        return std::nullopt;
    };
    if (auto w = attempt(direct)) {
        return w;
    }

    // Walk outward from slope(s -> t) in both circular directions, always
    // taking the closer candidate next.
    const std::size_t m = critical_.size();
    if (m == 0) {
        return std::nullopt;
    }
    const std::size_t start = static_cast<std::size_t>(
        std::lower_bound(critical_.begin(), critical_.end(), direct) - critical_.begin());
    std::size_t up = start % m;
    std::size_t down = (start + m - 1) % m;
    std::size_t taken = 0;
    while (taken < m) {
        const double du = angular_distance_deg(critical_[up], direct);
        const double dd = angular_distance_deg(critical_[down], direct);
        bool take_up = du < dd || (du == dd && critical_[up] <= critical_[down]);
        if (up == down) {
            take_up = true;
        }
        const double dist = take_up ? du : dd;
        if (dist > window) {
            break;
        }
        const double theta = take_up ? critical_[up] : critical_[down];
        if (take_up) {
            up = (up + 1) % m;
        } else {
            down = (down + m - 1) % m;
        }
        ++taken;
        if (dist <= kAngleTolDeg) {
            continue; // already tried as slope(s -> t)
        }
        if (auto w = attempt(theta)) {
            return w;
        }
    }
    return std::nullopt;
}

std::optional<PathWitness> route(const GeomGraph& g, Index s, Index t) { return ThetaRouter(g).route(s, t); }

} // namespace icg
