#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cliquespec/graph.hpp"
#include "cliquespec/matrix.hpp"

namespace cliquespec {

enum class CoverKind { partition, cover };

// An ordered family of cliques covering the edge set, together with the
// per-vertex clique degrees t_i and clique sizes s_j.
struct CliqueCover {
    std::vector<std::vector<int>> cliques;  // each sorted ascending
    CoverKind kind = CoverKind::partition;
    int n = 0;
    std::vector<int> clique_degree;  // t_i per vertex, index = vertex
    std::vector<int> clique_size;    // s_j per clique, input order
    std::string provenance;          // which mode produced the family

    int k() const { return static_cast<int>(cliques.size()); }
    std::vector<int> sorted_degrees() const;  // t_1 >= t_2 >= ...
    std::vector<int> sorted_sizes() const;    // s_1 >= s_2 >= ...
};

struct CoverViolation {
    std::string what;
    int clique_index = -1;              // offending clique, or -1
    std::pair<int, int> edge{-1, -1};   // offending edge, or (-1,-1)
};

// Soft check: returns every violation instead of stopping at the first.
std::vector<CoverViolation> check_cover(const Graph& g,
                                        const std::vector<std::vector<int>>& cliques,
                                        CoverKind kind);

// Typed construction; throws with the full violation list on failure.
CliqueCover validate_cover(const Graph& g, std::vector<std::vector<int>> cliques,
                           CoverKind kind);

// The trivial partition F = E.
CliqueCover edge_cover(const Graph& g);

// Repeatedly removes a maximal clique of the uncovered subgraph; the seed
// permutes vertex preference. Not optimal, and says so in its provenance.
CliqueCover greedy_partition(const Graph& g, uint64_t seed = 0);

// Exact minimum clique partition by branch and bound; n <= 12.
CliqueCover min_clique_partition(const Graph& g);

enum class IncidenceMode { binary, weighted };

struct IncidenceMatrix {
    Matrix m;  // n x k
    IncidenceMode mode = IncidenceMode::binary;
    CliqueCover source;
};

// weights, when given, assigns one value per (vertex in clique) incidence
// pair, flattened clique by clique; every weight must be nonzero.
IncidenceMatrix incidence(const Graph& g, const CliqueCover& cover,
                          IncidenceMode mode = IncidenceMode::binary,
                          const std::optional<std::vector<double>>& weights = std::nullopt);

// Q_F = M M^T and R_F = M^T M.
std::pair<Matrix, Matrix> clique_signless_laplacian(const IncidenceMatrix& inc);

// P_G: one vertex per clique, adjacent when the cliques share a vertex.
Graph clique_partition_graph(const CliqueCover& cover);

struct Regularity {
    bool t_regular = false;
    int t = -1;
    bool s_uniform = false;
    int s = -1;
    bool st_regular = false;
};

Regularity classify_regularity(const CliqueCover& cover);

// Verifies M M^T - A = diag(t_i) and M^T M - A(P_G) = diag(s_j) in integer
// arithmetic for a binary partition incidence; never uses floating point.
bool incidence_identities_exact(const Graph& g, const CliqueCover& cover);

// Visits every clique partition of g; returns false when the limit was hit.
// The callback may return false to stop early.
bool enumerate_partitions(const Graph& g, long long limit,
                          const std::function<bool(const CliqueCover&)>& visit);

} // namespace cliquespec
