// Micro-benchmark comparing the OpenMP kernels with their serial reference
// twins. Each row reports wall time for both paths plus the largest absolute
// difference between their results, which must be exactly zero: the parallel
// kernels are written to reproduce the serial arithmetic bit for bit.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "snyder/classical.hpp"
#include "snyder/kernels.hpp"
#include "snyder/params.hpp"
#include "snyder/tridiag.hpp"

namespace {

double time_ms(const std::function<void()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    body();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void report(const std::string& kernel, std::size_t n, double serial_ms,
            double parallel_ms, double max_diff) {
    std::printf("%-18s %10zu %12.3f %12.3f %9.2fx %10.3g\n", kernel.c_str(), n,
                serial_ms, parallel_ms,
                parallel_ms > 0.0 ? serial_ms / parallel_ms : 0.0, max_diff);
}

void bench_sum(std::size_t n) {
    std::vector<double> values(n);
    for (std::size_t i = 0; i < n; ++i) {
        values[i] = std::sin(1e-3 * static_cast<double>(i));
    }
    double serial = 0.0;
    double parallel = 0.0;
    const double ts = time_ms([&] { serial = snyder::kernels::blocked_sum_serial(values); });
    const double tp = time_ms([&] { parallel = snyder::kernels::blocked_sum(values); });
    report("blocked_sum", n, ts, tp, std::abs(serial - parallel));
}

void bench_reduce(std::size_t n) {
    // Closed-form evaluation folded into a reduction, the shape used by the
    // harmonic-analysis code.
    const snyder::SnyderParams params = snyder::validate(0.3, 1.0);
    const double d = snyder::classical::solve_phase_constant(params);
    auto body = [&](std::size_t i) {
        const double t = 1e-4 * static_cast<double>(i);
        return snyder::classical::closed_form_state(params, t, d).q;
    };
    double serial = 0.0;
    double parallel = 0.0;
    const double ts =
        time_ms([&] { serial = snyder::kernels::blocked_reduce_serial(n, body); });
    const double tp = time_ms([&] { parallel = snyder::kernels::blocked_reduce(n, body); });
    report("blocked_reduce", n, ts, tp, std::abs(serial - parallel));
}

void bench_for_each(std::size_t n) {
    const snyder::SnyderParams params = snyder::validate(0.5, 1.0);
    const double d = snyder::classical::solve_phase_constant(params);
    std::vector<double> a(n), b(n);
    const double ts = time_ms([&] {
        snyder::kernels::for_each_index_serial(n, [&](std::size_t i) {
            a[i] = snyder::classical::closed_form_state(
                       params, 2e-4 * static_cast<double>(i), d).p;
        });
    });
    const double tp = time_ms([&] {
        snyder::kernels::for_each_index(n, [&](std::size_t i) {
            b[i] = snyder::classical::closed_form_state(
                       params, 2e-4 * static_cast<double>(i), d).p;
        });
    });
    double max_diff = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        max_diff = std::max(max_diff, std::abs(a[i] - b[i]));
    }
    report("for_each_index", n, ts, tp, max_diff);
}

void bench_sturm(std::size_t n) {
    // Discrete Laplacian scaled to O(1) eigenvalues: a standard tridiagonal
    // test matrix with known spectrum.
    const double h = 1.0 / static_cast<double>(n + 1);
    snyder::linalg::SymTridiag t;
    t.diag.assign(n, 2.0 / (h * h));
    t.off.assign(n - 1, -1.0 / (h * h));
    std::vector<double> serial, parallel;
    const double ts =
        time_ms([&] { serial = snyder::linalg::sturm_lowest_serial(t, 8); });
    const double tp = time_ms([&] { parallel = snyder::linalg::sturm_lowest(t, 8); });
    double max_diff = 0.0;
    for (std::size_t i = 0; i < serial.size(); ++i) {
        max_diff = std::max(max_diff, std::abs(serial[i] - parallel[i]));
    }
    report("sturm_lowest", n, ts, tp, max_diff);
}

}  // namespace

int main() {
    std::printf("threads: %d\n", snyder::kernels::max_threads());
    std::printf("%-18s %10s %12s %12s %10s %10s\n", "kernel", "n", "serial_ms",
                "parallel_ms", "speedup", "max|diff|");
    for (std::size_t n : {1u << 20, 1u << 23}) {
        bench_sum(n);
    }
    for (std::size_t n : {1u << 18, 1u << 20}) {
        bench_reduce(n);
    }
    for (std::size_t n : {1u << 18, 1u << 20}) {
        bench_for_each(n);
    }
    for (std::size_t n : {2000u, 8000u}) {
        bench_sturm(n);
    }
    return 0;
}
