#pragma once

#include <cstdint>

#include "icg/geom.hpp"

namespace icg {

// Convex-position points on a randomly shaped and rotated ellipse, with
// stratified angles and a small radial jitter. The result is checked for
// convex position and for distinct x and y coordinates; resampled otherwise.
PointSet gen_convex(std::size_t n, std::uint64_t seed);

// Points on a circular arc (span 40..160 degrees) placed so that the arc
// endpoints are the extremes along d; one-sided with respect to d and
// generic for d and its normal.
PointSet gen_onesided(std::size_t n, const Direction& d, std::uint64_t seed);

// Uniform points in the unit square.
PointSet gen_uniform(std::size_t n, std::uint64_t seed);

// Moves every point by a random offset of length rel * extent.
PointSet perturb(const PointSet& ps, std::uint64_t seed, double rel = 1e-7);

} // namespace icg
