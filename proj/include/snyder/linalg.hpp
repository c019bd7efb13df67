#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

// Small dense-matrix helpers for assembling Fock-space operators. Everything
// here runs on matrices of a few hundred rows at most; no attempt is made at
// cache blocking or vectorization beyond what the compiler does on its own.
namespace snyder::linalg {

struct Dense {
    int n = 0;
    std::vector<double> a;  // row-major, n*n

    static Dense zeros(int n) {
        Dense m;
        m.n = n;
        m.a.assign(static_cast<std::size_t>(n) * n, 0.0);
        return m;
    }

    double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
    double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

inline Dense identity(int n) {
    Dense m = Dense::zeros(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

inline Dense operator*(const Dense& x, const Dense& y) {
    Dense r = Dense::zeros(x.n);
    for (int i = 0; i < x.n; ++i) {
        for (int k = 0; k < x.n; ++k) {
            const double xik = x(i, k);
            if (xik == 0.0) continue;
            for (int j = 0; j < x.n; ++j) r(i, j) += xik * y(k, j);
        }
    }
    return r;
}

inline Dense operator+(const Dense& x, const Dense& y) {
    Dense r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] += y.a[i];
    return r;
}

inline Dense operator-(const Dense& x, const Dense& y) {
    Dense r = x;
    for (std::size_t i = 0; i < r.a.size(); ++i) r.a[i] -= y.a[i];
    return r;
}

inline Dense operator*(double s, const Dense& x) {
    Dense r = x;
    for (double& v : r.a) v *= s;
    return r;
}

inline double max_asymmetry(const Dense& x) {
    double worst = 0.0;
    for (int i = 0; i < x.n; ++i)
        for (int j = i + 1; j < x.n; ++j)
            worst = std::max(worst, std::abs(x(i, j) - x(j, i)));
    return worst;
}

inline void symmetrize(Dense& x) {
    for (int i = 0; i < x.n; ++i)
        for (int j = i + 1; j < x.n; ++j) {
            const double v = 0.5 * (x(i, j) + x(j, i));
            x(i, j) = v;
            x(j, i) = v;
        }
}

// Leading n-by-n block.
inline Dense crop(const Dense& x, int n) {
    Dense r = Dense::zeros(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = x(i, j);
    return r;
}

inline double max_abs(const Dense& x) {
    double worst = 0.0;
    for (double v : x.a) worst = std::max(worst, std::abs(v));
    return worst;
}

}  // namespace snyder::linalg
