#include "cliquespec/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "cliquespec/error.hpp"

namespace cliquespec {

const Tolerances& Tolerances::defaults() {
    static const Tolerances t;
    return t;
}

namespace {

double off_diagonal_mass(const Matrix& A) {
    double s = 0.0;
    for (int i = 0; i < A.rows(); ++i)
        for (int j = 0; j < A.cols(); ++j)
            if (i != j) s += A(i, j) * A(i, j);
    return std::sqrt(s);
}

} // namespace

SymSpectrum sym_eigen(const Matrix& S, const Tolerances& tol) {
    const int n = S.rows();
    if (S.cols() != n) throw numeric_error("sym_eigen: matrix is not square");
    if (!S.is_symmetric(tol.symmetry_rel))
        throw numeric_error("sym_eigen: matrix is not symmetric within tolerance");

    Matrix A = S;
    // Symmetrize exactly so the sweeps only ever touch one triangle's worth of data.
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const double v = 0.5 * (A(i, j) + A(j, i));
            A(i, j) = A(j, i) = v;
        }
    Matrix V = Matrix::identity(n);

    const double norm = S.frobenius();
    // The requested relative mass, but never below the double-precision
    // floor a cyclic sweep can actually reach at this dimension.
    const double floor_rel = 4.0 * n * std::numeric_limits<double>::epsilon();
    const double target = std::max(tol.jacobi_off_rel, floor_rel) * norm;

    bool converged = norm == 0.0 || n < 2;
    for (int sweep = 0; !converged && sweep < tol.jacobi_max_sweeps; ++sweep) {
        if (off_diagonal_mass(A) <= target) {
            converged = true;
            break;
        }
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                const double apq = A(p, q);
                if (apq == 0.0) continue;
                // Rotations on entries already at round-off level would only churn.
                if (std::fabs(apq) < 1e-300) {
                    A(p, q) = A(q, p) = 0.0;
                    continue;
                }
                const double theta = (A(q, q) - A(p, p)) / (2.0 * apq);
                double t;
                if (std::fabs(theta) > 1e150) {
                    t = 0.5 / theta;
                } else {
                    t = 1.0 / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                    if (theta < 0.0) t = -t;
                }
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                const double app = A(p, p), aqq = A(q, q);
                A(p, p) = app - t * apq;
                A(q, q) = aqq + t * apq;
                A(p, q) = A(q, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    const double akp = A(k, p), akq = A(k, q);
                    A(k, p) = A(p, k) = akp - s * (akq + tau * akp);
                    A(k, q) = A(q, k) = akq + s * (akp - tau * akq);
                }
                for (int k = 0; k < n; ++k) {
                    const double vkp = V(k, p), vkq = V(k, q);
                    V(k, p) = vkp - s * (vkq + tau * vkp);
                    V(k, q) = vkq + s * (vkp - tau * vkq);
                }
            }
        }
        if (off_diagonal_mass(A) <= target) converged = true;
    }
    if (!converged)
        throw numeric_error("sym_eigen: Jacobi failed to converge in " +
                            std::to_string(tol.jacobi_max_sweeps) + " sweeps");

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return A(a, a) > A(b, b); });

    SymSpectrum out;
    out.cluster_tolerance = tol.cluster_rel;
    out.eigenvalues.resize(n);
    out.eigenvectors = Matrix(n, n);
    for (int j = 0; j < n; ++j) {
        out.eigenvalues[j] = A(order[j], order[j]);
        for (int i = 0; i < n; ++i) out.eigenvectors(i, j) = V(i, order[j]);
    }
    return out;
}

std::vector<std::pair<double, int>> eigenvalue_clusters(const SymSpectrum& spec) {
    std::vector<std::pair<double, int>> clusters;
    if (spec.eigenvalues.empty()) return clusters;
    double max_abs = 0.0;
    for (double v : spec.eigenvalues) max_abs = std::max(max_abs, std::fabs(v));
    const double gap = spec.cluster_tolerance * (1.0 + max_abs);

    double sum = spec.eigenvalues[0];
    int count = 1;
    for (size_t i = 1; i < spec.eigenvalues.size(); ++i) {
        if (spec.eigenvalues[i - 1] - spec.eigenvalues[i] > gap) {
            clusters.emplace_back(sum / count, count);
            sum = 0.0;
            count = 0;
        }
        sum += spec.eigenvalues[i];
        ++count;
    }
    clusters.emplace_back(sum / count, count);
    return clusters;
}

int distinct_count(const SymSpectrum& spec) {
    return static_cast<int>(eigenvalue_clusters(spec).size());
}

RankNull rank_and_nullspace(const Matrix& M, double tol_override, const Tolerances& tol) {
    RankNull out;
    const int r = M.rows(), c = M.cols();
    if (r == 0 || c == 0) {
        out.null_basis = Matrix::identity(c);
        return out;
    }
    // Right singular structure via the k x k Gram matrix.
    const Matrix G = M.transpose() * M;
    SymSpectrum spec = sym_eigen(G, tol);

    out.sigma_max = std::sqrt(std::max(0.0, spec.eigenvalues[0]));
    const double eps = std::numeric_limits<double>::epsilon();
    out.tol = tol_override >= 0.0 ? tol_override
                                  : std::max(r, c) * eps * out.sigma_max;

    // Eigenvalues of the Gram matrix carry round-off at eps * lambda_max;
    // taking square roots would inflate that to sqrt(eps) * sigma_max, so
    // flush to zero at the eigenvalue scale before converting.
    const double gram_floor = std::max(r, c) * eps * std::max(0.0, spec.eigenvalues[0]);
    std::vector<int> null_cols;
    for (int j = 0; j < c; ++j) {
        const double ev = spec.eigenvalues[j] > gram_floor ? spec.eigenvalues[j] : 0.0;
        const double sigma = std::sqrt(std::max(0.0, ev));
        if (sigma > out.tol)
            ++out.rank;
        else
            null_cols.push_back(j);
    }
    out.null_basis = Matrix(c, static_cast<int>(null_cols.size()));
    for (size_t j = 0; j < null_cols.size(); ++j)
        for (int i = 0; i < c; ++i) out.null_basis(i, static_cast<int>(j)) = spec.eigenvectors(i, null_cols[j]);
    return out;
}

Matrix gram_schmidt_columns(const Matrix& M, const Tolerances& tol) {
    const int n = M.rows(), k = M.cols();
    RankNull rn = rank_and_nullspace(M, -1.0, tol);
    if (rn.rank < k)
        throw numeric_error("gram_schmidt_columns: input is rank-deficient (rank " +
                            std::to_string(rn.rank) + " of " + std::to_string(k) + ")");
    Matrix Q = M;
    for (int j = 0; j < k; ++j) {
        // Two projection passes keep the result orthogonal well below 1e-10.
        for (int pass = 0; pass < 2; ++pass) {
            for (int p = 0; p < j; ++p) {
                double dot = 0.0;
                for (int i = 0; i < n; ++i) dot += Q(i, p) * Q(i, j);
                for (int i = 0; i < n; ++i) Q(i, j) -= dot * Q(i, p);
            }
        }
        double norm = 0.0;
        for (int i = 0; i < n; ++i) norm += Q(i, j) * Q(i, j);
        norm = std::sqrt(norm);
        if (norm <= tol.gram_schmidt_ortho)
            throw numeric_error("gram_schmidt_columns: column collapsed during orthogonalization");
        for (int i = 0; i < n; ++i) Q(i, j) /= norm;
    }
    return Q;
}

Matrix psd_sqrt_factor(const Matrix& S, const Tolerances& tol) {
    if (!S.is_symmetric(tol.symmetry_rel))
        throw numeric_error("psd_sqrt_factor: matrix is not symmetric");
    SymSpectrum spec = sym_eigen(S, tol);
    const double scale = S.max_abs();
    const double floor = -tol.psd_clamp_rel * (scale > 0 ? scale : 1.0);
    const int k = S.rows();
    for (double ev : spec.eigenvalues)
        if (ev < floor)
            throw numeric_error("psd_sqrt_factor: matrix is indefinite, most negative eigenvalue " +
                                std::to_string(spec.eigenvalues.back()));
    // Symmetric square root B = V sqrt(L) V^T, so B^T B = S.
    Matrix B(k, k);
    for (int j = 0; j < k; ++j) {
        const double root = std::sqrt(std::max(0.0, spec.eigenvalues[j]));
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                B(a, b) += root * spec.eigenvectors(a, j) * spec.eigenvectors(b, j);
    }
    return B;
}

Matrix pattern_of(const Matrix& M, double zero_tol, const Tolerances& tol) {
    if (M.rows() != M.cols() || !M.is_symmetric(tol.symmetry_rel))
        throw numeric_error("pattern_of: matrix is not square symmetric");
    const int n = M.rows();
    const double cut = zero_tol >= 0.0 ? zero_tol : tol.pattern_zero_rel * (1.0 + M.max_abs());
    Matrix P(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && std::fabs(M(i, j)) > cut) P(i, j) = 1.0;
    return P;
}

std::vector<double> singular_values(const Matrix& M, const Tolerances& tol) {
    const Matrix& G = M.rows() >= M.cols() ? M.transpose() * M : M * M.transpose();
    SymSpectrum spec = sym_eigen(G, tol);
    std::vector<double> out;
    out.reserve(spec.eigenvalues.size());
    for (double ev : spec.eigenvalues) out.push_back(std::sqrt(std::max(0.0, ev)));
    return out;
}

} // namespace cliquespec
