#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliquespec/graph.hpp"
#include "cliquespec/linalg.hpp"
#include "cliquespec/ssp.hpp"

namespace cliquespec {

// A machine-checkable witness that q(target) = 2: a factor M with
// M^T M = cI whose Gram matrix MM^T realizes the target's pattern.
struct Q2Certificate {
    Graph target;
    Matrix m;   // n x k
    double c = 0.0;
    int k = 0;
    std::vector<std::pair<double, int>> spectrum_clusters;  // {(c,k),(0,n-k)}
    SspResult ssp;
    std::string provenance;
    std::vector<std::string> exact_entries;  // row-major expression strings when known
    bool verified = false;
    std::string failure_reason;
};

// Re-runs every certificate invariant from scratch: Gram identity, pattern
// match against the target, and the two-cluster spectrum. exact, when given,
// must reproduce MM^T and routes SSP through the rational cross-check.
Q2Certificate make_certificate(Graph target, Matrix m, double c, std::string provenance,
                               const RationalMatrix* exact = nullptr,
                               std::vector<std::string> exact_entries = {},
                               const Tolerances& tol = Tolerances::defaults());

// K_s x K_2 prism realization, c = s^2 - 2s + 2, integer entries; s >= 3.
Q2Certificate construct_prism(int s, const Tolerances& tol = Tolerances::defaults());

// (K_s x K_2) v sK_1 minus a matching into one K_s copy, c = s^2 - 2s + 3.
Q2Certificate construct_prism_join(int s, const Tolerances& tol = Tolerances::defaults());

// The explicit one-off realizations: T1, K13_K3, H2_n7, bull_join, C5_join,
// K3_star(n), fig414. K3_star takes the vertex count (>= 7); others fix n.
Q2Certificate construct_fixed(const std::string& name, int n = -1,
                              const Tolerances& tol = Tolerances::defaults());

// Completes a stacked Gram factor: finds M2 (n2 x k) with
// M2^T M2 = cI - M1^T M1, pattern(M2 M2^T) matching pattern2, and the cross
// block M1 M2^T matching cross_pattern (1 = nonzero required, 0 = zero).
// c <= 0 picks the smallest workable scale automatically.
Matrix gram_complete(const Matrix& m1, double c, const Graph& pattern2,
                     const Matrix& cross_pattern, uint64_t seed = 0,
                     const Tolerances& tol = Tolerances::defaults());

struct SearchTrace {
    int iterations = 0;
    double pattern_residual = 0.0;
    double idempotency_residual = 0.0;
};

// Alternating projection between rank-k orthogonal projections and the
// pattern-constrained symmetric matrices of S(G). A returned certificate has
// been re-verified from scratch; failure reports the residual trace instead.
std::optional<Q2Certificate> numeric_q2_search(const Graph& g, int k, uint64_t seed,
                                               const Matrix* warm_start = nullptr,
                                               SearchTrace* trace = nullptr,
                                               int max_iterations = 5000,
                                               const Tolerances& tol = Tolerances::defaults());

struct ConjectureCase {
    std::string h_graph6;
    int edges = 0;
    std::string provenance;
    bool certified = false;
    double c = 0.0;
    int k = 0;
    std::string detail;  // failure residuals or transfer source
};

struct ConjectureReport {
    int n = 0;
    int max_removed = 0;  // n - 3
    std::vector<ConjectureCase> cases;  // sorted by (edge count, canonical form)
    bool all_certified = false;
    std::vector<std::string> uncertified;  // graph6 of every failed class
};

// Certifies K_n \ H for every H with at most n-3 edges, n in {7, 8}.
ConjectureReport verify_conjecture(int n, uint64_t seed = 0,
                                   const Tolerances& tol = Tolerances::defaults());

} // namespace cliquespec
