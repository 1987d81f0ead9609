// Compiled with -mavx2 only; callers reach it through the dispatch table after
// a runtime CPU check.
#include "kernels_impl.hpp"

#include <immintrin.h>

#include <limits>

namespace icg::kernels::detail {

std::size_t first_in_closed_disk_avx2(PointsSoA pts, double ax, double ay, double bx, double by,
                                      double tol, std::size_t skip_a, std::size_t skip_b) {
    const __m256d vax = _mm256_set1_pd(ax);
    const __m256d vay = _mm256_set1_pd(ay);
    const __m256d vbx = _mm256_set1_pd(bx);
    const __m256d vby = _mm256_set1_pd(by);
    const __m256d vtol = _mm256_set1_pd(tol);

    std::size_t k = 0;
    for (; k + 4 <= pts.size; k += 4) {
        const __m256d x = _mm256_loadu_pd(pts.x + k);
        const __m256d y = _mm256_loadu_pd(pts.y + k);
        const __m256d px = _mm256_mul_pd(_mm256_sub_pd(x, vax), _mm256_sub_pd(x, vbx));
        const __m256d py = _mm256_mul_pd(_mm256_sub_pd(y, vay), _mm256_sub_pd(y, vby));
        const __m256d v = _mm256_add_pd(px, py);
        int mask = _mm256_movemask_pd(_mm256_cmp_pd(v, vtol, _CMP_LE_OQ));
        while (mask != 0) {
            const int lane = __builtin_ctz(static_cast<unsigned>(mask));
            const std::size_t idx = k + static_cast<std::size_t>(lane);
            if (idx != skip_a && idx != skip_b) {
                return idx;
            }
            mask &= mask - 1;
        }
    }
    for (; k < pts.size; ++k) {
        const double v = (pts.x[k] - ax) * (pts.x[k] - bx) + (pts.y[k] - ay) * (pts.y[k] - by);
        if (v <= tol && k != skip_a && k != skip_b) {
            return k;
        }
    }
    return pts.size;
}

double min_projection_avx2(PointsSoA pts, std::size_t begin, std::size_t end, double ox, double oy,
                           double ux, double uy) {
    const double inf = std::numeric_limits<double>::infinity();
    const __m256d vox = _mm256_set1_pd(ox);
    const __m256d voy = _mm256_set1_pd(oy);
    const __m256d vux = _mm256_set1_pd(ux);
    const __m256d vuy = _mm256_set1_pd(uy);
    __m256d best = _mm256_set1_pd(inf);

    std::size_t k = begin;
    for (; k + 4 <= end; k += 4) {
        const __m256d x = _mm256_sub_pd(_mm256_loadu_pd(pts.x + k), vox);
        const __m256d y = _mm256_sub_pd(_mm256_loadu_pd(pts.y + k), voy);
        const __m256d v = _mm256_add_pd(_mm256_mul_pd(x, vux), _mm256_mul_pd(y, vuy));
        best = _mm256_min_pd(best, v);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, best);
    double out = inf;
    for (double l : lanes) {
        if (l < out) {
            out = l;
        }
    }
    for (; k < end; ++k) {
        const double v = (pts.x[k] - ox) * ux + (pts.y[k] - oy) * uy;
        if (v < out) {
            out = v;
        }
    }
    return out;
}

} // namespace icg::kernels::detail
