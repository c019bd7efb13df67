#include "snyder/fock.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "snyder/tridiag.hpp"

namespace snyder::fock {

namespace {

void require_dim(int dim, int minimum) {
    if (dim < minimum) {
        throw Error(ErrorCode::DimTooSmall,
                    "dimension " + std::to_string(dim) + " below minimum " +
                        std::to_string(minimum));
    }
}

// Eigenvalues of the pentadiagonal matrix via its two parity chains; the
// +-1 band is identically zero, so even and odd n decouple into symmetric
// tridiagonal blocks.
std::vector<double> parity_eigenvalues(const FockMatrix& m) {
    std::vector<double> all;
    all.reserve(static_cast<std::size_t>(m.dim));
    for (int parity = 0; parity < 2; ++parity) {
        linalg::SymTridiag chain;
        for (int n = parity; n < m.dim; n += 2) {
            chain.diag.push_back(m.diag[static_cast<std::size_t>(n)]);
            if (n + 2 < m.dim) {
                chain.off.push_back(m.off2[static_cast<std::size_t>(n)]);
            }
        }
        const std::vector<double> evals = linalg::ql_eigenvalues(std::move(chain));
        all.insert(all.end(), evals.begin(), evals.end());
    }
    std::sort(all.begin(), all.end());
    return all;
}

}  // namespace

const char* backend_name(Backend backend) {
    switch (backend) {
        case Backend::PaperLiteral:     return "PaperLiteral";
        case Backend::NormalOrdered:    return "NormalOrdered";
        case Backend::TildeCounterTerm: return "TildeCounterTerm";
        case Backend::TildeRegrouped:   return "TildeRegrouped";
        case Backend::TildeRebased:     return "TildeRebased";
    }
    return "Unknown";
}

double FockMatrix::entry(int i, int j) const {
    if (i == j) return diag[static_cast<std::size_t>(i)];
    const int lo = std::min(i, j);
    const int hi = std::max(i, j);
    if (hi - lo == 2) return off2[static_cast<std::size_t>(lo)];
    return 0.0;
}

FockMatrix FockMatrix::from_dense(const linalg::Dense& h, Backend backend,
                                  const SnyderParams& params) {
    const int n = h.n;
    require_dim(n, 4);
    const double tol = 1e-12 * std::max(1.0, linalg::max_abs(h));
    if (linalg::max_asymmetry(h) > tol) {
        throw Error(ErrorCode::NotSymmetric, "dense assembly is not symmetric");
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const int d = std::abs(i - j);
            if (d != 0 && d != 2 && std::abs(h(i, j)) > tol) {
                throw Error(ErrorCode::NotSymmetric,
                            "nonzero entry off the parity band at (" +
                                std::to_string(i) + "," + std::to_string(j) + ")");
            }
        }
    }
    FockMatrix m;
    m.dim = n;
    m.backend = backend;
    m.params = params;
    m.diag.resize(static_cast<std::size_t>(n));
    m.off2.resize(static_cast<std::size_t>(n) - 2);
    for (int i = 0; i < n; ++i) m.diag[static_cast<std::size_t>(i)] = h(i, i);
    for (int i = 0; i + 2 < n; ++i) {
        m.off2[static_cast<std::size_t>(i)] = 0.5 * (h(i, i + 2) + h(i + 2, i));
    }
    return m;
}

std::pair<linalg::Dense, linalg::Dense> ladder_matrices(int dim) {
    require_dim(dim, 2);
    linalg::Dense a = linalg::Dense::zeros(dim);
    linalg::Dense adag = linalg::Dense::zeros(dim);
    for (int n = 0; n + 1 < dim; ++n) {
        const double r = std::sqrt(static_cast<double>(n + 1));
        a(n, n + 1) = r;
        adag(n + 1, n) = r;
    }
    return {std::move(a), std::move(adag)};
}

FockMatrix build_hamiltonian_paper(const SnyderParams& params, int dim) {
    require_dim(dim, 4);
    const double w = params.omega;
    const double l2 = params.l * params.l;
    const double ratio = l2 / (1.0 + l2);

    FockMatrix m;
    m.dim = dim;
    m.backend = Backend::PaperLiteral;
    m.params = params;
    m.diag.resize(static_cast<std::size_t>(dim));
    m.off2.resize(static_cast<std::size_t>(dim) - 2);
    for (int n = 0; n < dim; ++n) {
        m.diag[static_cast<std::size_t>(n)] =
            w * (n * (1.0 - ratio) + 0.5 * (1.0 + ratio));
    }
    for (int n = 0; n + 2 < dim; ++n) {
        m.off2[static_cast<std::size_t>(n)] =
            w * l2 / (2.0 * (1.0 + l2)) * std::sqrt(static_cast<double>(n + 1)) *
            std::sqrt(static_cast<double>(n + 2));
    }
    return m;
}

FockMatrix build_hamiltonian_normal_ordered(const SnyderParams& params, int dim) {
    require_dim(dim, 4);
    const int big = dim + 4;  // assemble larger, crop: keeps the band exact
    auto [a, adag] = ladder_matrices(big);
    const double w = params.omega;
    const double c = w * params.l * params.l * params.mass * w / 2.0;

    const linalg::Dense number = adag * a;
    linalg::Dense h = w * (number + 0.5 * linalg::identity(big)) +
                      c * (adag * adag - number - a * adag + a * a);
    h = linalg::crop(h, dim);
    linalg::symmetrize(h);
    return FockMatrix::from_dense(h, Backend::NormalOrdered, params);
}

RenormalizedParams renormalized_params(const SnyderParams& params) {
    const double ml2 = params.mass * params.l * params.l;
    return RenormalizedParams{
        params.mass / (1.0 + ml2),
        params.omega * std::sqrt(1.0 + ml2),
    };
}

namespace {

// Quadratic-form assembly H = kin * P^2 + pot * X^2 with ladder factors
// based on (m_base, w_base): P^2 = -(m_base w_base / 2)(adag - a)^2,
// X^2 = (adag + a)^2 / (2 m_base w_base).
linalg::Dense quadratic_hamiltonian(int big, double m_base, double w_base, double kin,
                                    double pot) {
    auto [a, adag] = ladder_matrices(big);
    const linalg::Dense diff = adag - a;
    const linalg::Dense sum = adag + a;
    const linalg::Dense p2 = (-m_base * w_base / 2.0) * (diff * diff);
    const linalg::Dense x2 = (1.0 / (2.0 * m_base * w_base)) * (sum * sum);
    return kin * p2 + pot * x2;
}

}  // namespace

FockMatrix build_hamiltonian_tilde(const SnyderParams& params, int dim,
                                   TildeRoute route) {
    require_dim(dim, 4);
    const int big = dim + 4;
    const double m = params.mass;
    const double w = params.omega;
    const double l2 = params.l * params.l;

    linalg::Dense h;
    Backend backend;
    if (route == TildeRoute::CounterTerm) {
        h = quadratic_hamiltonian(big, m, w, 1.0 / (2.0 * m) + l2 / 2.0,
                                  m * w * w / 2.0);
        backend = Backend::TildeCounterTerm;
    } else {
        const RenormalizedParams eff = renormalized_params(params);
        h = quadratic_hamiltonian(big, m, w, 1.0 / (2.0 * eff.m_tilde),
                                  eff.m_tilde * eff.omega_tilde * eff.omega_tilde / 2.0);
        backend = Backend::TildeRegrouped;
    }
    h = linalg::crop(h, dim);
    linalg::symmetrize(h);
    return FockMatrix::from_dense(h, backend, params);
}

FockMatrix build_hamiltonian_tilde_rebased(const SnyderParams& params, int dim) {
    require_dim(dim, 4);
    const int big = dim + 4;
    const RenormalizedParams eff = renormalized_params(params);
    linalg::Dense h = quadratic_hamiltonian(
        big, eff.m_tilde, eff.omega_tilde, 1.0 / (2.0 * eff.m_tilde),
        eff.m_tilde * eff.omega_tilde * eff.omega_tilde / 2.0);
    h = linalg::crop(h, dim);
    linalg::symmetrize(h);
    return FockMatrix::from_dense(h, Backend::TildeRebased, params);
}

FockMatrix build(const SnyderParams& params, int dim, Backend backend) {
    switch (backend) {
        case Backend::PaperLiteral:
            return build_hamiltonian_paper(params, dim);
        case Backend::NormalOrdered:
            return build_hamiltonian_normal_ordered(params, dim);
        case Backend::TildeCounterTerm:
            return build_hamiltonian_tilde(params, dim, TildeRoute::CounterTerm);
        case Backend::TildeRegrouped:
            return build_hamiltonian_tilde(params, dim, TildeRoute::Regrouped);
        case Backend::TildeRebased:
            return build_hamiltonian_tilde_rebased(params, dim);
    }
    throw Error(ErrorCode::DimTooSmall, "unknown backend");
}

EigenSpectrum paper_spectrum(const SnyderParams& params, int n_max) {
    const RenormalizedParams eff = renormalized_params(params);
    EigenSpectrum spec;
    spec.truncation_dim = n_max + 1;
    spec.metadata = "paper-formula";
    for (int n = 0; n <= n_max; ++n) {
        spec.eigenvalues.push_back(eff.omega_tilde * (n + 0.5));
        spec.converged.push_back(1);
    }
    return spec;
}

EigenSpectrum diagonalize(const FockMatrix& matrix, int k) {
    if (k < 1 || k > matrix.dim) {
        throw Error(ErrorCode::DimTooSmall,
                    "requested " + std::to_string(k) + " eigenvalues from dimension " +
                        std::to_string(matrix.dim));
    }
    const std::vector<double> evals = parity_eigenvalues(matrix);
    const FockMatrix doubled = build(matrix.params, 2 * matrix.dim, matrix.backend);
    const std::vector<double> evals2 = parity_eigenvalues(doubled);

    EigenSpectrum spec;
    spec.truncation_dim = matrix.dim;
    spec.metadata = std::string(backend_name(matrix.backend)) + " N=" +
                    std::to_string(matrix.dim);
    for (int i = 0; i < k; ++i) {
        const double e1 = evals[static_cast<std::size_t>(i)];
        const double e2 = evals2[static_cast<std::size_t>(i)];
        const double denom = std::max(std::abs(e2), 1e-300);
        spec.eigenvalues.push_back(e1);
        spec.converged.push_back(std::abs(e1 - e2) / denom < 1e-8 ? 1 : 0);
    }
    return spec;
}

double backend_max_difference(const SnyderParams& params, int dim) {
    const FockMatrix a = build_hamiltonian_paper(params, dim);
    const FockMatrix b = build_hamiltonian_normal_ordered(params, dim);
    double worst = 0.0;
    for (int i = 0; i < dim; ++i) {
        worst = std::max(worst, std::abs(a.diag[static_cast<std::size_t>(i)] -
                                         b.diag[static_cast<std::size_t>(i)]));
    }
    for (int i = 0; i + 2 < dim; ++i) {
        worst = std::max(worst, std::abs(a.off2[static_cast<std::size_t>(i)] -
                                         b.off2[static_cast<std::size_t>(i)]));
    }
    return worst;
}

}  // namespace snyder::fock
