#pragma once

#include <optional>
#include <vector>

#include "cliquespec/matrix.hpp"

namespace cliquespec {

// Central knobs of the numeric kernel. Every report echoes the values that
// were in effect, so stored certificates can be audited later.
struct Tolerances {
    double symmetry_rel = 1e-12;       // accepted asymmetry of eigensolver input
    double jacobi_off_rel = 1e-14;     // stop when off-diagonal Frobenius mass drops below this times ||S||_F
    int jacobi_max_sweeps = 100;
    double cluster_rel = 1e-7;         // eigenvalue clustering gap for q(A)
    double rank_residual_factor = 10.0;
    double gram_schmidt_ortho = 1e-10;
    double psd_clamp_rel = 1e-10;      // most-negative eigenvalue accepted as round-off
    double pattern_zero_rel = 1e-6;    // |entry| below this times (1+max_abs) counts as zero
    double inequality_slack = 1e-9;
    double equality_abs = 1e-7;        // scaled by matrix norm where stated
    double tau_tie = 1e-9;
    double certificate_gram = 1e-8;    // ||M^T M - cI|| <= this * (1+c)
    double search_stop = 1e-10;
    double search_entry_floor = 1e-4;

    static const Tolerances& defaults();
};

struct SymSpectrum {
    std::vector<double> eigenvalues;   // sorted descending
    Matrix eigenvectors;               // orthonormal columns, column i pairs with eigenvalues[i]
    double cluster_tolerance = 1e-7;
};

// Cyclic Jacobi with a fixed sweep order; identical input yields identical
// output, which keeps stored certificates reproducible.
SymSpectrum sym_eigen(const Matrix& S, const Tolerances& tol = Tolerances::defaults());

// Number of distinct eigenvalues after greedy gap clustering, q(A).
int distinct_count(const SymSpectrum& spec);

// (value, multiplicity) per cluster, descending by value.
std::vector<std::pair<double, int>> eigenvalue_clusters(const SymSpectrum& spec);

struct RankNull {
    int rank = 0;
    Matrix null_basis;      // orthonormal columns spanning the right kernel of M
    double sigma_max = 0.0;
    double tol = 0.0;       // singular-value threshold actually used
};

// tol_override < 0 selects max(rows,cols) * eps * sigma_max.
RankNull rank_and_nullspace(const Matrix& M, double tol_override = -1.0,
                            const Tolerances& tol = Tolerances::defaults());

Matrix gram_schmidt_columns(const Matrix& M, const Tolerances& tol = Tolerances::defaults());

// Symmetric B with B^T B = S for positive semidefinite S.
Matrix psd_sqrt_factor(const Matrix& S, const Tolerances& tol = Tolerances::defaults());

// Off-diagonal 0/1 support of a symmetric matrix; the diagonal is ignored.
// zero_tol < 0 selects pattern_zero_rel * (1 + max_abs).
Matrix pattern_of(const Matrix& M, double zero_tol = -1.0,
                  const Tolerances& tol = Tolerances::defaults());

std::vector<double> singular_values(const Matrix& M, const Tolerances& tol = Tolerances::defaults());

} // namespace cliquespec
