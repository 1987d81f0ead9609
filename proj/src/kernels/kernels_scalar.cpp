#include "kernels_impl.hpp"

#include <limits>

namespace icg::kernels::detail {

std::size_t first_in_closed_disk_scalar(PointsSoA pts, double ax, double ay, double bx, double by,
                                        double tol, std::size_t skip_a, std::size_t skip_b) {
    for (std::size_t k = 0; k < pts.size; ++k) {
        const double v = (pts.x[k] - ax) * (pts.x[k] - bx) + (pts.y[k] - ay) * (pts.y[k] - by);
        if (v <= tol && k != skip_a && k != skip_b) {
            return k;
        }
    }
    return pts.size;
}

double min_projection_scalar(PointsSoA pts, std::size_t begin, std::size_t end, double ox, double oy,
                             double ux, double uy) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = begin; k < end; ++k) {
        const double v = (pts.x[k] - ox) * ux + (pts.y[k] - oy) * uy;
        if (v < best) {
            best = v;
        }
    }
    return best;
}

} // namespace icg::kernels::detail
