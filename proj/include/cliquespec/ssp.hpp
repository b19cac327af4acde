#pragma once

#include <optional>
#include <string>

#include "cliquespec/exact.hpp"
#include "cliquespec/graph.hpp"
#include "cliquespec/linalg.hpp"

namespace cliquespec {

struct SspResult {
    int kernel_dimension = 0;
    bool has_ssp = false;
    std::optional<Matrix> witness;          // a nonzero X when the kernel is nontrivial
    double witness_residual = 0.0;          // max of ||A o X||, ||I o X||, ||AX - XA||
    std::optional<int> exact_nullity;       // rational cross-check when A was exact
};

// Strong Spectral Property: the kernel of X -> [A, X] over symmetric X with
// support confined to non-edges of A's pattern, excluding the diagonal.
// exact, when given, must equal A entry for entry and routes the nullity
// through rational Bareiss elimination as a cross-check.
SspResult check_ssp(const Matrix& a, double pattern_tol = -1.0,
                    const RationalMatrix* exact = nullptr,
                    const Tolerances& tol = Tolerances::defaults());

// Nullity of the commutator system including the redundant lower-triangle
// and diagonal rows; used to validate the half-system reduction.
int ssp_nullity_full_system(const Matrix& a, double pattern_tol = -1.0,
                            const Tolerances& tol = Tolerances::defaults());

struct TransferClaim {
    Graph source;       // graph of the certified matrix
    Graph target;       // supergraph on the same vertex set
    int q_upper = 0;    // distinct eigenvalue count carried over
    std::string basis;  // which oracle justifies the claim
};

// Carries a spectrum claim from an SSP-certified matrix for h to a
// supergraph g on the same vertex set. Emits a claim, not a matrix.
TransferClaim supergraph_transfer(const SspResult& cert, const Matrix& a, const Graph& h,
                                  const Graph& g, const Tolerances& tol = Tolerances::defaults());

} // namespace cliquespec
