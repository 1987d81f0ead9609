#pragma once

// Data-parallel inner loops with a scalar reference and an AVX2 variant.
// The active table is picked once at startup from CPU features; both tables
// produce identical results on identical input (no FMA contraction, no
// reassociation of the per-lane arithmetic).

#include <cstddef>
#include <span>
#include <string_view>

namespace icg::kernels {

/// Structure-of-arrays view of a point list.
struct PointsSoA {
    const double* x = nullptr;
    const double* y = nullptr;
    std::size_t size = 0;
};

struct KernelTable {
    std::string_view name;

    // Smallest index k in [0, n) with k != skip_a, k != skip_b and
    // (p_k - a) . (p_k - b) <= tol, i.e. p_k in the closed disk with diameter ab.
    // Returns n when there is none.
    std::size_t (*first_in_closed_disk)(PointsSoA pts, double ax, double ay, double bx, double by,
                                        double tol, std::size_t skip_a, std::size_t skip_b);

    // min over k in [begin, end) of (p_k - o) . u; +inf for an empty range.
    double (*min_projection)(PointsSoA pts, std::size_t begin, std::size_t end, double ox, double oy,
                             double ux, double uy);
};

enum class Backend { Scalar, Avx2 };

const KernelTable& scalar_table();
// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_table();

const KernelTable& active();
Backend active_backend();
// For tests and benchmarks. Selecting Avx2 on an unsupported CPU is a no-op.
void select_backend(Backend b);

} // namespace icg::kernels
