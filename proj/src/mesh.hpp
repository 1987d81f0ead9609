#pragma once

// Incremental Delaunay triangulation used by the Steiner refinement loop.
// Internal header; not installed.

#include <array>
#include <optional>
#include <vector>

#include "icg/geom.hpp"

namespace icg::detail {

class Mesh {
public:
    struct Tri {
        std::array<int, 3> v;   // counterclockwise
        std::array<int, 3> nb;  // nb[k] lies across the edge opposite v[k]; -1 on the hull
        bool alive = true;
    };

    // Throws Degenerate when all points are collinear (no triangle exists).
    explicit Mesh(std::vector<Point> pts);

    const std::vector<Point>& points() const { return pts_; }
    const std::vector<Tri>& tris() const { return tris_; }

    enum class Where { Inside, OnEdge, OnVertex, Outside };
    struct Location {
        Where where = Where::Outside;
        int tri = -1;
        int slot = -1;  // edge opposite v[slot] when OnEdge, vertex slot when OnVertex
    };
    Location locate(Point p) const;

    // Inserts p inside the triangulated region (or on its boundary) and
    // restores the Delaunay property. Returns the new vertex id, or nullopt
    // when p is outside or coincides with a vertex.
    std::optional<int> insert(Point p);

    std::vector<Edge> edges() const;
    std::vector<std::pair<int, int>> hull_edges() const;  // (tri, slot)
    double extent() const { return extent_; }

private:
    int add_tri(int a, int b, int c);
    int slot_of(int t, int neighbour) const;
    void link(int t, int slot, int u);
    void flip(int t, int slot);
    bool illegal(int t, int slot) const;
    void legalize_around(int vertex, std::vector<int> stack);
    void make_delaunay();

    std::vector<Point> pts_;
    std::vector<Tri> tris_;
    double extent_ = 0.0;
};

} // namespace icg::detail
