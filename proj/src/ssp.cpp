#include "cliquespec/ssp.hpp"

#include <cmath>
#include <vector>

#include "cliquespec/error.hpp"

namespace cliquespec {

namespace {

// Coefficient of the free variable x_{ab} (the symmetric unit E_ab + E_ba)
// in the commutator entry (AX - XA)_{rs}.
double commutator_coefficient(const Matrix& a, int r, int s, int i, int j) {
    double c = 0.0;
    if (s == j) c += a(r, i);
    if (s == i) c += a(r, j);
    if (r == i) c -= a(j, s);
    if (r == j) c -= a(i, s);
    return c;
}

Rational commutator_coefficient(const RationalMatrix& a, int r, int s, int i, int j) {
    Rational c(0);
    if (s == j) c = c + a[r][i];
    if (s == i) c = c + a[r][j];
    if (r == i) c = c - a[j][s];
    if (r == j) c = c - a[i][s];
    return c;
}

std::vector<std::pair<int, int>> free_pairs(const Matrix& a, double cut,
                                            const RationalMatrix* exact) {
    const int n = a.rows();
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const bool zero = exact ? (*exact)[i][j].is_zero() : std::fabs(a(i, j)) <= cut;
            if (zero) out.emplace_back(i, j);
        }
    return out;
}

} // namespace

SspResult check_ssp(const Matrix& a, double pattern_tol, const RationalMatrix* exact,
                    const Tolerances& tol) {
    const int n = a.rows();
    if (a.cols() != n || !a.is_symmetric(tol.symmetry_rel))
        throw numeric_error("check_ssp: matrix must be square symmetric");

    // Integer-entried input gets the exact rational cross-check automatically.
    RationalMatrix promoted;
    if (!exact) {
        bool integral = true;
        for (int i = 0; i < n && integral; ++i)
            for (int j = 0; j < n && integral; ++j)
                if (a(i, j) != std::floor(a(i, j)) || std::fabs(a(i, j)) > 1e12) integral = false;
        if (integral && n > 0) {
            promoted.assign(n, std::vector<Rational>(n, Rational(0)));
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    promoted[i][j] = Rational(static_cast<long long>(std::llround(a(i, j))));
            exact = &promoted;
        }
    }

    const double cut = pattern_tol >= 0.0 ? pattern_tol
                                          : tol.pattern_zero_rel * (1.0 + a.max_abs());
    const auto frees = free_pairs(a, cut, exact);
    const int nf = static_cast<int>(frees.size());

    SspResult out;
    if (nf == 0) {
        // Complete pattern: no admissible X besides zero.
        out.has_ssp = true;
        if (exact) out.exact_nullity = 0;
        return out;
    }

    // Rows: strictly-upper entries of AX - XA. The commutator of symmetric
    // matrices is antisymmetric, so these determine the whole constraint.
    const int rows = n * (n - 1) / 2;
    Matrix system(rows, nf);
    int r = 0;
    for (int p = 0; p < n; ++p)
        for (int s = p + 1; s < n; ++s, ++r)
            for (int c = 0; c < nf; ++c)
                system(r, c) = commutator_coefficient(a, p, s, frees[c].first, frees[c].second);

    RankNull rn = rank_and_nullspace(system, -1.0, tol);
    out.kernel_dimension = nf - rn.rank;
    out.has_ssp = out.kernel_dimension == 0;

    if (exact) {
        RationalMatrix sys(rows, std::vector<Rational>(nf, Rational(0)));
        r = 0;
        for (int p = 0; p < n; ++p)
            for (int s = p + 1; s < n; ++s, ++r)
                for (int c = 0; c < nf; ++c)
                    sys[r][c] =
                        commutator_coefficient(*exact, p, s, frees[c].first, frees[c].second);
        out.exact_nullity = nf - exact_rank(sys);
        if (*out.exact_nullity != out.kernel_dimension)
            throw numeric_error("check_ssp: floating kernel dimension " +
                                std::to_string(out.kernel_dimension) +
                                " disagrees with exact nullity " +
                                std::to_string(*out.exact_nullity));
    }

    if (out.kernel_dimension > 0) {
        Matrix witness(n, n);
        for (int c = 0; c < nf; ++c) {
            const double v = rn.null_basis(c, 0);
            witness(frees[c].first, frees[c].second) = v;
            witness(frees[c].second, frees[c].first) = v;
        }
        double res = 0.0;
        // A o X and I o X vanish by construction of the free set; report the
        // commutator residual on the witness.
        Matrix comm = a * witness - witness * a;
        res = std::max(res, comm.max_abs());
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i == j || std::fabs(a(i, j)) > cut)
                    res = std::max(res, i == j ? std::fabs(witness(i, j)) : 0.0);
        out.witness = witness;
        out.witness_residual = res;
    }
    return out;
}

int ssp_nullity_full_system(const Matrix& a, double pattern_tol, const Tolerances& tol) {
    const int n = a.rows();
    const double cut = pattern_tol >= 0.0 ? pattern_tol
                                          : tol.pattern_zero_rel * (1.0 + a.max_abs());
    const auto frees = free_pairs(a, cut, nullptr);
    const int nf = static_cast<int>(frees.size());
    if (nf == 0) return 0;
    Matrix system(n * n, nf);
    int r = 0;
    for (int p = 0; p < n; ++p)
        for (int s = 0; s < n; ++s, ++r)
            for (int c = 0; c < nf; ++c)
                system(r, c) = commutator_coefficient(a, p, s, frees[c].first, frees[c].second);
    return nf - rank_and_nullspace(system, -1.0, tol).rank;
}

TransferClaim supergraph_transfer(const SspResult& cert, const Matrix& a, const Graph& h,
                                  const Graph& g, const Tolerances& tol) {
    if (!cert.has_ssp)
        throw invalid_parameter("supergraph_transfer: certificate does not have the SSP");
    if (h.n != g.n)
        throw invalid_parameter("supergraph_transfer: vertex sets differ");
    for (auto [u, v] : h.edges)
        if (!g.has_edge(u, v))
            throw invalid_parameter("supergraph_transfer: h is not a subgraph of g");

    TransferClaim claim;
    claim.source = h;
    claim.target = g;
    claim.q_upper = distinct_count(sym_eigen(a, tol));
    claim.basis = "SSP supergraph spectrum transfer";
    return claim;
}

} // namespace cliquespec
