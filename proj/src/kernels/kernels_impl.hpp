#pragma once

#include "icg/kernels.hpp"

namespace icg::kernels::detail {

std::size_t first_in_closed_disk_scalar(PointsSoA pts, double ax, double ay, double bx, double by,
                                        double tol, std::size_t skip_a, std::size_t skip_b);
double min_projection_scalar(PointsSoA pts, std::size_t begin, std::size_t end, double ox, double oy,
                             double ux, double uy);

#if defined(ICG_HAVE_AVX2)
std::size_t first_in_closed_disk_avx2(PointsSoA pts, double ax, double ay, double bx, double by,
                                      double tol, std::size_t skip_a, std::size_t skip_b);
double min_projection_avx2(PointsSoA pts, std::size_t begin, std::size_t end, double ox, double oy,
                           double ux, double uy);
#endif

} // namespace icg::kernels::detail
