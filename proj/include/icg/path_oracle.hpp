#pragma once

#include <optional>
#include <span>
#include <vector>

#include "icg/geom.hpp"

namespace icg {

/// Closed arc of directions [lo, lo + width] on the circle, in degrees.
struct AngularInterval {
    double lo_deg = 0.0;
    double width_deg = 0.0;

    double hi_deg() const { return normalize_deg(lo_deg + width_deg); }
    double mid_deg() const { return normalize_deg(lo_deg + 0.5 * width_deg); }
    bool contains(double deg, double tol = kAngleTolDeg) const;
};

struct PathWitness {
    std::vector<Index> vertices;
    std::optional<double> theta_deg;
};

struct VerifyReport {
    bool self_approaching_forward = false;
    bool self_approaching_backward = false;
    bool increasing_chord = false;
    std::optional<AngularInterval> theta_interval;
    double detour = 1.0;
};

enum class ApproachMode { Tolerant, Strict };

// Quadratic per-edge projection test of the self-approaching property. For
// every edge i (direction u_i) and later vertex j > i+1 it requires
// (p_j - p_{i+1}) . u_i >= -eps (tolerant) or > eps (strict), with
// eps = 1e-9 * path extent.
bool is_self_approaching(std::span<const Point> path, ApproachMode mode = ApproachMode::Tolerant);
bool is_increasing_chord(std::span<const Point> path, ApproachMode mode = ApproachMode::Tolerant);

bool is_theta_path(std::span<const Point> path, double theta_deg);
// All theta for which the path is a theta-path, or nullopt.
std::optional<AngularInterval> infer_theta(std::span<const Point> path);

double detour(std::span<const Point> path);

std::vector<Point> path_points(const GeomGraph& g, std::span<const Index> vertices);

// Rejects witnesses with fewer than two vertices, repeated consecutive vertices,
// out-of-range ids or consecutive pairs that are not edges of g.
void validate_witness(const GeomGraph& g, std::span<const Index> vertices);

VerifyReport verify_path(const GeomGraph& g, std::span<const Index> vertices);

inline constexpr std::size_t kExhaustiveSearchLimit = 12;

// Depth-first enumeration of simple s-t paths (neighbours in ascending order);
// returns the first one that is increasing-chord in tolerant mode.
std::optional<PathWitness> exhaustive_increasing_chord_search(const GeomGraph& g, Index s, Index t);

} // namespace icg
