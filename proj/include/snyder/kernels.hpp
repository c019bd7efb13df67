#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

// Deterministic data-parallel building blocks. Every parallel kernel has a
// serial twin that performs bit-for-bit the same arithmetic; reductions sum
// fixed-size blocks and combine the block partials in index order, so results
// are identical for any thread count (including one). The *_serial variants
// are the reference implementations used by tests and the benchmark tool.
namespace snyder::kernels {

inline constexpr std::size_t block_size = 4096;

int max_threads();

// Sum of term(j) for j in [0, n), blocked. term must be a pure function of j.
template <class F>
double blocked_reduce_serial(std::size_t n, F&& term) {
    if (n == 0) return 0.0;
    const std::size_t nblocks = (n + block_size - 1) / block_size;
    std::vector<double> partials(nblocks, 0.0);
    for (std::size_t b = 0; b < nblocks; ++b) {
        const std::size_t lo = b * block_size;
        const std::size_t hi = lo + block_size < n ? lo + block_size : n;
        double acc = 0.0;
        for (std::size_t j = lo; j < hi; ++j) acc += term(j);
        partials[b] = acc;
    }
    double total = 0.0;
    for (std::size_t b = 0; b < nblocks; ++b) total += partials[b];
    return total;
}

template <class F>
double blocked_reduce(std::size_t n, F&& term) {
    if (n == 0) return 0.0;
    const std::size_t nblocks = (n + block_size - 1) / block_size;
    std::vector<double> partials(nblocks, 0.0);
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (long long bi = 0; bi < static_cast<long long>(nblocks); ++bi) {
        const std::size_t b = static_cast<std::size_t>(bi);
        const std::size_t lo = b * block_size;
        const std::size_t hi = lo + block_size < n ? lo + block_size : n;
        double acc = 0.0;
        for (std::size_t j = lo; j < hi; ++j) acc += term(j);
        partials[b] = acc;
    }
    double total = 0.0;
    for (std::size_t b = 0; b < nblocks; ++b) total += partials[b];
    return total;
}

// Apply body(j) for j in [0, n). body must only write to slot j of any
// shared output, which makes the schedule irrelevant for the result.
template <class F>
void for_each_index_serial(std::size_t n, F&& body) {
    for (std::size_t j = 0; j < n; ++j) body(j);
}

template <class F>
void for_each_index(std::size_t n, F&& body) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (long long j = 0; j < static_cast<long long>(n); ++j) {
        body(static_cast<std::size_t>(j));
    }
#else
    for (std::size_t j = 0; j < n; ++j) body(j);
#endif
}

double blocked_sum_serial(std::span<const double> v);
double blocked_sum(std::span<const double> v);
double blocked_dot_serial(std::span<const double> a, std::span<const double> b);
double blocked_dot(std::span<const double> a, std::span<const double> b);

}  // namespace snyder::kernels
