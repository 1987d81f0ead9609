#include "kernels_impl.hpp"

#include <atomic>

namespace icg::kernels {

namespace {

const KernelTable kScalar{
    "scalar",
    &detail::first_in_closed_disk_scalar,
    &detail::min_projection_scalar,
};

#if defined(ICG_HAVE_AVX2)
const KernelTable kAvx2{
    "avx2",
    &detail::first_in_closed_disk_avx2,
    &detail::min_projection_avx2,
};
#endif

bool cpu_has_avx2() {
#if defined(ICG_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

const KernelTable* detect() {
    if (const KernelTable* t = avx2_table()) {
        return t;
    }
    return &kScalar;
}

std::atomic<const KernelTable*>& current() {
    static std::atomic<const KernelTable*> table{detect()};
    return table;
}

} // namespace

const KernelTable& scalar_table() { return kScalar; }

const KernelTable* avx2_table() {
#if defined(ICG_HAVE_AVX2)
    static const bool ok = cpu_has_avx2();
    return ok ? &kAvx2 : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable& active() { return *current().load(std::memory_order_relaxed); }

Backend active_backend() { return &active() == &kScalar ? Backend::Scalar : Backend::Avx2; }

void select_backend(Backend b) {
    if (b == Backend::Scalar) {
        current().store(&kScalar);
    } else if (const KernelTable* t = avx2_table()) {
        current().store(t);
    }
}

} // namespace icg::kernels
