#pragma once

#include <cstddef>
#include <vector>

#include "icg/geom.hpp"

namespace icg {

/// The two boundary chains of a convex set cut by its extremes along d.
struct ChainSplit {
    // Clockwise walk from the d-minimum (included) to the d-maximum (excluded).
    std::vector<Index> first;
    // Clockwise walk from the d-maximum (included) to the d-minimum (excluded).
    std::vector<Index> second;
};

/// (d1, d2)-partition: a = P1(d1) n P1(d2), b = P1(d1) n P2(d2),
/// c = P2(d1) n P1(d2), d = P2(d1) n P2(d2).
struct PartitionQuad {
    Direction d2;
    std::vector<Index> a, b, c, d;
};

// Edge budget of the cross construction: F(n) = 6 for n <= 4, otherwise
// 2n + 2 F(floor(n/2) + 1).
std::size_t cross_edge_budget(std::size_t n);
// Budget of the full convex construction, 2n + F(n).
std::size_t convex_edge_budget(std::size_t n);

struct BuildStats {
    std::size_t max_depth = 0;   // deepest cross-recursion level (top call is 1)
    std::size_t partitions = 0;  // balanced partitions computed
};

ChainSplit chain_split(const PointSet& ps, const Direction& d);

// Maximal outerplanar graph with 2n - 3 edges containing every hull edge; each
// pair is joined by a hull path monotone in d and in its normal.
GeomGraph build_one_sided(const PointSet& ps, const Direction& d);

PartitionQuad balanced_partition(const PointSet& ps, const Direction& d1);

// Graph with an increasing-chord path between every point of P1(d1) and
// every point of P2(d1); at most F(n) edges.
GeomGraph build_cross(const PointSet& ps, const Direction& d1, BuildStats* stats = nullptr);

// Increasing-chord graph on a convex point set with at most 2n + F(n) edges.
// Requires distinct x and distinct y coordinates.
GeomGraph build_convex(const PointSet& ps, BuildStats* stats = nullptr);

} // namespace icg
