#pragma once

#include <array>
#include <string>
#include <vector>

#include "icg/geom.hpp"

namespace icg {

struct Triangulation {
    GeomGraph graph;
    std::vector<std::array<Index, 3>> internal_faces; // each counterclockwise
    std::vector<Index> outer_face;                    // counterclockwise boundary walk
};

// Brute-force O(n^3) Gabriel graph: pq is an edge iff no third point lies in
// the closed disk with diameter pq (boundary kills, tolerance 1e-12 * extent^2).
GeomGraph gabriel_graph(const PointSet& ps);

// Face walk over the counterclockwise rotation system. Throws CrossingEdges,
// Disconnected or NonTriangularFace.
Triangulation faces_of(const GeomGraph& g);

struct TriangulationCheck {
    bool ok = false;
    std::string reason;
};

TriangulationCheck check_gabriel_triangulation(const GeomGraph& g);
bool is_gabriel_triangulation(const GeomGraph& g);

// Gabriel edges of ps missing from g. Throws VertexMismatch when g does not
// span exactly ps.
std::vector<Edge> necessity_check(const PointSet& ps, const GeomGraph& g);

} // namespace icg
