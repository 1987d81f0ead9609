#pragma once

#include <optional>
#include <vector>

#include "icg/geom.hpp"
#include "icg/path_oracle.hpp"

namespace icg {

struct Arc {
    Index from = 0;
    Index to = 0;

    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Directed theta-edges of a graph: u -> v whenever slope(u -> v) lies in the
/// closed wedge [theta - 45, theta + 45].
struct ThetaSubgraph {
    double theta_deg = 0.0;
    std::vector<Arc> arcs; // sorted
};

bool in_theta_wedge(double slope, double theta_deg);

ThetaSubgraph theta_subgraph(const GeomGraph& g, double theta_deg);

// Critical wedge positions (every directed edge slope +-45), the midpoints of
// circularly consecutive critical values, and slope(s -> t); sorted ascending
// and deduplicated within 1e-9 degrees.
std::vector<double> candidate_thetas(const GeomGraph& g, Index s, Index t);

/// Precomputes per-graph state so that many pairs can be routed cheaply.
class ThetaRouter {
public:
    explicit ThetaRouter(const GeomGraph& g);

    // Tries candidate thetas in ascending angular distance from slope(s -> t)
    // (ties: smaller angle first) and returns the first BFS path found in the
    // theta-subgraph. Candidates further than 45 degrees from slope(s -> t)
    // are skipped: a theta-path's displacement lies inside its wedge.
    std::optional<PathWitness> route(Index s, Index t) const;

    const GeomGraph& graph() const { return g_; }

private:
    struct HalfEdge {
        Index to;
        double slope;
    };

    std::optional<std::vector<Index>> bfs(Index s, Index t, double theta) const;

    const GeomGraph& g_;
    std::vector<std::vector<HalfEdge>> out_;  // ascending neighbour index
    std::vector<double> critical_;            // sorted critical values and midpoints
};

std::optional<PathWitness> route(const GeomGraph& g, Index s, Index t);

} // namespace icg
