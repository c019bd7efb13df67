#include "snyder/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "snyder/error.hpp"
#include "snyder/kernels.hpp"

namespace snyder::linalg {

namespace {

constexpr double pivmin = 1e-290;  // smallest pivot magnitude in Sturm counts

std::pair<double, double> gershgorin_bounds(const SymTridiag& t) {
    const int n = t.size();
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (int i = 0; i < n; ++i) {
        const double left = i > 0 ? std::abs(t.off[i - 1]) : 0.0;
        const double right = i < n - 1 ? std::abs(t.off[i]) : 0.0;
        lo = std::min(lo, t.diag[i] - left - right);
        hi = std::max(hi, t.diag[i] + left + right);
    }
    const double pad = 1e-12 * (std::abs(lo) + std::abs(hi) + 1.0);
    return {lo - pad, hi + pad};
}

// j-th smallest eigenvalue (0-based) by bisection on the Sturm count.
double bisect_eigenvalue(const SymTridiag& t, int j, double lo, double hi) {
    double a = lo;
    double b = hi;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (a + b);
        if (mid == a || mid == b) break;
        if (sturm_count_below(t, mid) >= j + 1) {
            b = mid;
        } else {
            a = mid;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace

std::vector<double> ql_eigenvalues(SymTridiag t) {
    const int n = t.size();
    if (n == 0) return {};
    std::vector<double>& d = t.diag;
    std::vector<double> e = t.off;
    e.push_back(0.0);

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= std::numeric_limits<double>::epsilon() * dd) break;
            }
            if (m != l) {
                if (iter++ == 50) {
                    throw Error(ErrorCode::ConvergenceFailure,
                                "QL iteration exceeded 50 sweeps");
                }
                // Wilkinson shift from the leading 2x2, applied implicitly.
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
                double s = 1.0;
                double c = 1.0;
                double p = 0.0;
                int i;
                for (i = m - 1; i >= l; --i) {
                    double f = s * e[i];
                    const double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
    std::sort(d.begin(), d.end());
    return d;
}

int sturm_count_below(const SymTridiag& t, double x) {
    const int n = t.size();
    int count = 0;
    double q = 0.0;
    for (int i = 0; i < n; ++i) {
        if (i == 0) {
            q = t.diag[0] - x;
        } else {
            q = t.diag[i] - x - t.off[i - 1] * t.off[i - 1] / q;
        }
        if (std::abs(q) <= pivmin) q = -pivmin;
        if (q < 0.0) ++count;
    }
    return count;
}

std::vector<double> sturm_lowest(const SymTridiag& t, int k) {
    const int n = t.size();
    k = std::clamp(k, 0, n);
    if (k == 0) return {};
    const auto [lo, hi] = gershgorin_bounds(t);
    std::vector<double> out(static_cast<std::size_t>(k), 0.0);
    kernels::for_each_index(static_cast<std::size_t>(k), [&](std::size_t j) {
        out[j] = bisect_eigenvalue(t, static_cast<int>(j), lo, hi);
    });
    return out;
}

std::vector<double> sturm_lowest_serial(const SymTridiag& t, int k) {
    const int n = t.size();
    k = std::clamp(k, 0, n);
    if (k == 0) return {};
    const auto [lo, hi] = gershgorin_bounds(t);
    std::vector<double> out(static_cast<std::size_t>(k), 0.0);
    kernels::for_each_index_serial(static_cast<std::size_t>(k), [&](std::size_t j) {
        out[j] = bisect_eigenvalue(t, static_cast<int>(j), lo, hi);
    });
    return out;
}

SymTridiag householder_tridiagonalize(const Dense& a0) {
    const int n = a0.n;
    if (max_asymmetry(a0) > 1e-12 * std::max(1.0, max_abs(a0))) {
        throw Error(ErrorCode::NotSymmetric, "dense matrix is not symmetric");
    }
    Dense a = a0;
    std::vector<double> d(static_cast<std::size_t>(n), 0.0);
    std::vector<double> e(static_cast<std::size_t>(n), 0.0);

    for (int i = n - 1; i >= 1; --i) {
        const int l = i - 1;
        double h = 0.0;
        double scale = 0.0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k) scale += std::abs(a(i, k));
            if (scale == 0.0) {
                e[i] = a(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    a(i, k) /= scale;
                    h += a(i, k) * a(i, k);
                }
                double f = a(i, l);
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                a(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += a(j, k) * a(i, k);
                    for (int k = j + 1; k <= l; ++k) g += a(k, j) * a(i, k);
                    e[j] = g / h;
                    f += e[j] * a(i, j);
                }
                const double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = a(i, j);
                    g = e[j] - hh * f;
                    e[j] = g;
                    for (int k = 0; k <= j; ++k) {
                        a(j, k) -= f * e[k] + g * a(i, k);
                    }
                }
            }
        } else {
            e[i] = a(i, l);
        }
    }
    for (int i = 0; i < n; ++i) d[i] = a(i, i);

    SymTridiag t;
    t.diag = std::move(d);
    t.off.assign(e.begin() + 1, e.end());
    return t;
}

std::vector<double> dense_sym_eigenvalues(const Dense& a) {
    return ql_eigenvalues(householder_tridiagonalize(a));
}

}  // namespace snyder::linalg
