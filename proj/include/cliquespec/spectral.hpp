#pragma once

#include <string>
#include <vector>

#include "cliquespec/cliques.hpp"
#include "cliquespec/graph.hpp"
#include "cliquespec/linalg.hpp"

namespace cliquespec {

struct Inertia {
    int positive = 0;
    int negative = 0;
    int nullity = 0;
};

Inertia inertia_of(const std::vector<double>& eigenvalues,
                   const Tolerances& tol = Tolerances::defaults());

struct BoundRecord {
    std::string theorem_id;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;   // rhs - lhs for inequalities, |lhs - rhs| for equalities
    bool holds = false;
    bool applicable = true;
    std::string note;     // why a record is not applicable, equality remarks, ...
    double tolerance = 0.0;  // the slack floor / equality tolerance actually applied
    bool is_equality = false;
};

enum class EnergyKind { singular_sum, mean_deviation };

// E(G) = sum |lambda_i|; also evaluates the three partial-sum forms and
// flags disagreement beyond 1e-8 * n as an eigensolver failure.
double graph_energy(const Graph& g, const Tolerances& tol = Tolerances::defaults());

double matrix_energy(const Matrix& b, EnergyKind kind,
                     const Tolerances& tol = Tolerances::defaults());

struct IncidenceEnergies {
    double ie = 0.0;    // sum of sqrt(q_i)
    double ie_f = 0.0;  // sum of sqrt(lambda_i(Q_F))
};

// Requires a partition; asserts IE_F <= IE and IE_F <= sum sqrt(t_i).
IncidenceEnergies incidence_energies(const Graph& g, const CliqueCover& cover,
                                     const Tolerances& tol = Tolerances::defaults());

// Largest positive tau with lambda_tau > tbar (strict, with a tie tolerance);
// cross-checks the partial-sum energy identity before returning.
int tau_index(const std::vector<double>& qf_eigenvalues, double tbar,
              const Tolerances& tol = Tolerances::defaults());

// One record per inequality/equality of the bound suite, (a) through (n).
std::vector<BoundRecord> bound_suite(const Graph& g, const CliqueCover& cover,
                                     const Tolerances& tol = Tolerances::defaults());

struct SpectralReport {
    std::vector<double> adjacency_spectrum;
    std::vector<double> signless_laplacian_spectrum;
    Inertia inertia;
    double energy = 0.0;
    double laplacian_energy_plus = 0.0;  // LE+
    double ie = 0.0;
    double ie_f = 0.0;
    double qf_energy = 0.0;      // E(Q_F)
    double rf_energy = 0.0;      // E(R_F)
    double pg_energy = 0.0;      // E(P_G)
    double line_graph_energy = 0.0;
    double tbar = 0.0;
    int tau = 0;
    std::vector<BoundRecord> bounds;
};

SpectralReport analyze(const Graph& g, const CliqueCover& cover,
                       const Tolerances& tol = Tolerances::defaults());

struct PartitionScan {
    int min_t1 = -1;
    CliqueCover t1_witness;
    int min_rank = -1;
    CliqueCover rank_witness;
    bool complete = false;   // false when the enumeration limit was hit
    long long partitions_seen = 0;
};

// Exhausts all clique partitions (n <= 9) up to the given limit and records
// min_F t_1^F and min_F rank(M_F) with witnesses.
PartitionScan scan_partitions(const Graph& g, long long limit = 2000000,
                              const Tolerances& tol = Tolerances::defaults());

} // namespace cliquespec
