#include "snyder/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace snyder::kernels {

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

double blocked_sum_serial(std::span<const double> v) {
    return blocked_reduce_serial(v.size(), [&](std::size_t j) { return v[j]; });
}

double blocked_sum(std::span<const double> v) {
    return blocked_reduce(v.size(), [&](std::size_t j) { return v[j]; });
}

double blocked_dot_serial(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size() < b.size() ? a.size() : b.size();
    return blocked_reduce_serial(n, [&](std::size_t j) { return a[j] * b[j]; });
}

double blocked_dot(std::span<const double> a, std::span<const double> b) {
    const std::size_t n = a.size() < b.size() ? a.size() : b.size();
    return blocked_reduce(n, [&](std::size_t j) { return a[j] * b[j]; });
}

}  // namespace snyder::kernels
