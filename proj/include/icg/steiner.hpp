#pragma once

#include <cstdint>
#include <string>

#include "icg/gabriel.hpp"
#include "icg/geom.hpp"

namespace icg {

struct AugmentResult {
    PointSet original;
    PointSet augmented;           // original points first, Steiner points appended
    Triangulation triangulation;  // spans augmented
    std::size_t steiner_count = 0;
    std::size_t rounds = 0;
    bool succeeded = false;
    std::string reason;           // why the final check failed, empty on success
};

inline std::size_t default_max_rounds(std::size_t n) { return 50 * n; }

// Steiner augmentation toward an all-acute triangulation, in two stages.
// First, Delaunay refinement: each round takes the worst non-acute face and
// inserts its circumcenter, or splits a hull edge when the circumcenter falls
// outside the hull or encroaches on a hull edge; this stage gets a fifth of
// the round budget. If faces are still non-acute, the input is meshed again
// from scratch: a regular polygon frame around it (so Steiner points may lie
// outside the input hull), sizing-graded sampling, relaxation and local
// repair, one round per retriangulation. Original points are never moved.
// No bound on the number of Steiner points is promised; failure is reported,
// not thrown. The seed drives sampling and tie-breaking.
AugmentResult augment_heuristic(const PointSet& ps, std::size_t max_rounds, std::uint64_t seed);

// Triangular lattice with spacing 1: interior points get independent uniform
// jitter in [-jitter, jitter]^2; boundary points are bowed outward (0.1 at the
// middle of each side) so the hull is strictly convex.
PointSet lattice_generator(std::size_t rows, std::size_t cols, double jitter, std::uint64_t seed);

} // namespace icg
