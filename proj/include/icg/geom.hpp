#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "icg/error.hpp"

namespace icg {

using Index = std::size_t;

// Tolerances. Relative ones are multiplied by the natural scale of the input
// (squared for areas, plain for lengths).
inline constexpr double kOrientationTol = 1e-12;
inline constexpr double kDuplicateTol = 1e-9;
inline constexpr double kGenericTol = 1e-12;
inline constexpr double kAngleTolDeg = 1e-9;

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm2(Point a) { return dot(a, a); }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double dist(Point a, Point b) { return norm(b - a); }

// Angles in degrees, normalized to [0, 360).
double normalize_deg(double deg);
// Signed difference a - b wrapped to (-180, 180].
double angle_diff_deg(double a, double b);
// Unsigned circular distance in [0, 180].
double angular_distance_deg(double a, double b);

/// A directed straight line through the origin, stored as its angle measured
/// counterclockwise from the positive x-axis.
class Direction {
public:
    Direction() = default;
    explicit Direction(double angle_deg) : deg_(normalize_deg(angle_deg)) {}

    double angle_deg() const { return deg_; }
    Point unit() const;
    // Unit vector rotated +90 degrees from unit().
    Point normal() const;
    double project(Point p) const { return dot(p, unit()); }
    Direction opposite() const { return Direction(deg_ + 180.0); }
    Direction rotated_cw(double delta_deg) const { return Direction(deg_ - delta_deg); }

private:
    double deg_ = 0.0;
};

/// Finite points with pairwise distinct positions. Ids are list indices.
class PointSet {
public:
    PointSet() = default;
    explicit PointSet(std::vector<Point> points);

    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }
    const Point& operator[](Index i) const { return points_[i]; }
    std::span<const Point> points() const { return points_; }
    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    // Bounding-box diagonal; the length scale for relative tolerances.
    double extent() const { return extent_; }

    PointSet subset(std::span<const Index> ids) const;

    friend bool operator==(const PointSet& a, const PointSet& b) { return a.points_ == b.points_; }

private:
    std::vector<Point> points_;
    double extent_ = 0.0;
};

// Returns the first pair of coincident points (within tol * extent), if any.
std::optional<std::pair<Index, Index>> find_duplicate(std::span<const Point> pts, double rel_tol = kDuplicateTol);
double bbox_extent(std::span<const Point> pts);

struct Edge {
    Index u = 0;
    Index v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Index a, Index b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Point set plus an undirected simple edge set. Edges are kept sorted with u < v.
class GeomGraph {
public:
    GeomGraph() = default;
    explicit GeomGraph(PointSet points, std::vector<Edge> edges = {});

    const PointSet& points() const { return points_; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::size_t num_vertices() const { return points_.size(); }
    std::size_t num_edges() const { return edges_.size(); }
    bool has_edge(Index a, Index b) const;

    // Neighbour lists sorted by ascending index.
    std::vector<std::vector<Index>> adjacency() const;

private:
    PointSet points_;
    std::vector<Edge> edges_;
};

enum class Orientation { Clockwise = -1, Collinear = 0, CounterClockwise = 1 };

Orientation orientation(Point p, Point q, Point r);

// Directional slope of p->q in [0, 360): the clockwise rotation about p that
// brings the segment onto the positive x-axis, i.e. the usual polar angle.
double slope_deg(Point p, Point q);

// Hull vertices in counterclockwise order; points on an open hull edge are excluded.
std::vector<Index> convex_hull(std::span<const Point> pts);
inline std::vector<Index> convex_hull(const PointSet& ps) { return convex_hull(ps.points()); }

bool is_convex_position(const PointSet& ps);

// Throws Degenerate if two points tie on their projection onto d, naming the pair.
void require_generic(std::span<const Point> pts, std::span<const Index> ids, const Direction& d);
void require_generic(const PointSet& ps, const Direction& d);

bool is_one_sided(const PointSet& ps, const Direction& d);

// Counterclockwise rigid rotation about the origin.
PointSet rotate(const PointSet& ps, double phi_deg);
Point rotate(Point p, double phi_deg);

bool segments_intersect(Point a, Point b, Point c, Point d);
bool crossing_free(const GeomGraph& g);
// First crossing pair of edges, if any.
std::optional<std::pair<Edge, Edge>> find_crossing(const GeomGraph& g);

GeomGraph complete_graph(const PointSet& ps);

} // namespace icg
