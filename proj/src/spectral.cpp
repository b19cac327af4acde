#include "cliquespec/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "cliquespec/error.hpp"
#include "cliquespec/exact.hpp"

namespace cliquespec {

Inertia inertia_of(const std::vector<double>& eigenvalues, const Tolerances& tol) {
    double max_abs = 0.0;
    for (double v : eigenvalues) max_abs = std::max(max_abs, std::fabs(v));
    const double zero = tol.cluster_rel * (1.0 + max_abs);
    Inertia out;
    for (double v : eigenvalues) {
        if (v > zero)
            ++out.positive;
        else if (v < -zero)
            ++out.negative;
        else
            ++out.nullity;
    }
    return out;
}

namespace {

Matrix adjacency_matrix(const Graph& g) {
    Matrix a(g.n, g.n);
    for (auto [u, v] : g.edges) a(u, v) = a(v, u) = 1.0;
    return a;
}

Matrix signless_laplacian(const Graph& g) {
    Matrix q = adjacency_matrix(g);
    auto deg = g.degrees();
    for (int i = 0; i < g.n; ++i) q(i, i) = deg[i];
    return q;
}

// Square roots of Gram eigenvalues: flush eps-scale round-off to zero so
// exact zero eigenvalues do not contribute sqrt(eps)-sized noise.
double sqrt_flushed(double v, double scale) {
    return v > 1e-12 * (1.0 + scale) ? std::sqrt(v) : 0.0;
}

// Exact 0/1 rank of the binary incidence matrix, cross-checked against the
// floating rank; a disagreement means the numeric kernel failed.
int incidence_rank(const IncidenceMatrix& inc, const Tolerances& tol) {
    BigIntMatrix m(inc.m.rows(), std::vector<BigInt>(inc.m.cols()));
    for (int i = 0; i < inc.m.rows(); ++i)
        for (int j = 0; j < inc.m.cols(); ++j)
            m[i][j] = BigInt(static_cast<long long>(std::lround(inc.m(i, j))));
    const int exact = exact_rank(std::move(m));
    const int floating = rank_and_nullspace(inc.m, -1.0, tol).rank;
    if (exact != floating)
        throw numeric_error("incidence rank mismatch: exact " + std::to_string(exact) +
                            " vs floating " + std::to_string(floating));
    return exact;
}

} // namespace

double graph_energy(const Graph& g, const Tolerances& tol) {
    if (g.n == 0) return 0.0;
    SymSpectrum spec = sym_eigen(adjacency_matrix(g), tol);
    const auto& ev = spec.eigenvalues;
    const int n = g.n;

    double abs_sum = 0.0;
    for (double v : ev) abs_sum += std::fabs(v);

    const Inertia in = inertia_of(ev, tol);
    double pos_sum = 0.0;
    for (int i = 0; i < in.positive; ++i) pos_sum += ev[i];
    double neg_sum = 0.0;
    for (int i = 0; i < in.negative; ++i) neg_sum += -ev[n - 1 - i];

    double best_prefix = 0.0, run = 0.0;
    for (double v : ev) {
        run += v;
        best_prefix = std::max(best_prefix, run);
    }
    double best_suffix = 0.0;
    run = 0.0;
    for (int i = n - 1; i >= 0; --i) {
        run += -ev[i];
        best_suffix = std::max(best_suffix, run);
    }

    const double allowed = 1e-8 * std::max(1, n);
    const double forms[4] = {2 * pos_sum, 2 * neg_sum, 2 * best_prefix, 2 * best_suffix};
    for (double f : forms)
        if (std::fabs(f - abs_sum) > allowed)
            throw numeric_error("graph_energy: the four energy expressions disagree by " +
                                std::to_string(std::fabs(f - abs_sum)));
    return abs_sum;
}

double matrix_energy(const Matrix& b, EnergyKind kind, const Tolerances& tol) {
    if (kind == EnergyKind::singular_sum) {
        double sum = 0.0;
        for (double s : singular_values(b, tol)) sum += s;
        return sum;
    }
    if (b.rows() != b.cols() || !b.is_symmetric(tol.symmetry_rel))
        throw invalid_parameter("matrix_energy: mean_deviation needs a square symmetric matrix");
    if (b.rows() == 0) return 0.0;
    SymSpectrum spec = sym_eigen(b, tol);
    double mean = 0.0;
    for (double v : spec.eigenvalues) mean += v;
    mean /= spec.eigenvalues.size();
    double sum = 0.0;
    for (double v : spec.eigenvalues) sum += std::fabs(v - mean);
    return sum;
}

IncidenceEnergies incidence_energies(const Graph& g, const CliqueCover& cover,
                                     const Tolerances& tol) {
    if (cover.kind != CoverKind::partition)
        throw invalid_parameter("incidence_energies: cover must be a partition");
    IncidenceEnergies out;
    if (g.n == 0) return out;

    SymSpectrum q = sym_eigen(signless_laplacian(g), tol);
    const double q_scale = q.eigenvalues.empty() ? 0.0 : std::fabs(q.eigenvalues[0]);
    for (double v : q.eigenvalues) out.ie += sqrt_flushed(v, q_scale);

    auto inc = incidence(g, cover);
    auto [qf, rf] = clique_signless_laplacian(inc);
    SymSpectrum qf_spec = sym_eigen(qf, tol);
    const double f_scale = qf_spec.eigenvalues.empty() ? 0.0 : std::fabs(qf_spec.eigenvalues[0]);
    for (double v : qf_spec.eigenvalues) out.ie_f += sqrt_flushed(v, f_scale);

    double degree_root_sum = 0.0;
    for (int t : cover.clique_degree) degree_root_sum += std::sqrt(static_cast<double>(t));
    if (out.ie_f > out.ie + tol.inequality_slack * (1.0 + out.ie))
        throw numeric_error("incidence_energies: IE_F exceeded IE");
    if (out.ie_f > degree_root_sum + tol.inequality_slack * (1.0 + degree_root_sum))
        throw numeric_error("incidence_energies: IE_F exceeded the clique-degree majorization bound");
    return out;
}

int tau_index(const std::vector<double>& qf_eigenvalues, double tbar, const Tolerances& tol) {
    std::vector<double> ev = qf_eigenvalues;
    std::sort(ev.rbegin(), ev.rend());
    int tau = 0;
    for (size_t i = 0; i < ev.size(); ++i)
        if (ev[i] > tbar + tol.tau_tie) tau = static_cast<int>(i) + 1;

    // When tbar is the eigenvalue mean (the Q_F case), the partial-sum form
    // must reproduce the mean-deviation energy.
    double sum = 0.0;
    for (double v : ev) sum += v;
    const double n = static_cast<double>(ev.size());
    if (!ev.empty() && std::fabs(sum - n * tbar) <= 1e-8 * (1.0 + std::fabs(sum))) {
        double deviation = 0.0;
        for (double v : ev) deviation += std::fabs(v - tbar);
        double partial = 0.0;
        for (int i = 0; i < tau; ++i) partial += ev[i];
        const double via_tau = 2.0 * partial - 2.0 * tau * tbar;
        if (std::fabs(deviation - via_tau) > 1e-8 * (1.0 + deviation))
            throw numeric_error("tau_index: partial-sum energy identity failed");
    }
    return tau;
}

namespace {

// Everything the record builders share, computed once.
struct SuiteData {
    const Graph& g;
    const CliqueCover& cover;
    const Tolerances& tol;

    int n, k, m;
    std::vector<double> lam;       // adjacency eigenvalues, descending
    std::vector<double> q;         // signless Laplacian eigenvalues, descending
    std::vector<double> lam_pg;    // P_G eigenvalues, descending
    std::vector<double> lam_lg;    // line graph eigenvalues, descending
    Inertia in_g, in_pg, in_lg;
    std::vector<int> t_sorted, s_sorted;
    std::vector<int> deg_sorted;
    int rank_mf = 0;
    int alpha = 0;
    Regularity reg;
    double tbar = 0.0;
    double energy_g = 0.0, energy_pg = 0.0, energy_lg = 0.0;
    double energy_qf = 0.0, energy_rf = 0.0;
};

SuiteData build_suite_data(const Graph& g, const CliqueCover& cover, const Tolerances& tol) {
    SuiteData d{g, cover, tol,
                g.n, cover.k(), g.m(),
                {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, 0, 0, {}, 0, 0, 0, 0, 0, 0};
    if (g.n > 0) d.lam = sym_eigen(adjacency_matrix(g), tol).eigenvalues;
    if (g.n > 0) d.q = sym_eigen(signless_laplacian(g), tol).eigenvalues;

    const Graph pg = clique_partition_graph(cover);
    if (pg.n > 0) d.lam_pg = sym_eigen(adjacency_matrix(pg), tol).eigenvalues;
    const Graph lg = line_graph(g);
    if (lg.n > 0) d.lam_lg = sym_eigen(adjacency_matrix(lg), tol).eigenvalues;

    d.in_g = inertia_of(d.lam, tol);
    d.in_pg = inertia_of(d.lam_pg, tol);
    d.in_lg = inertia_of(d.lam_lg, tol);

    d.t_sorted = cover.sorted_degrees();
    d.s_sorted = cover.sorted_sizes();
    d.deg_sorted = g.degrees();
    std::sort(d.deg_sorted.rbegin(), d.deg_sorted.rend());

    if (d.k > 0) {
        auto inc = incidence(g, cover);
        d.rank_mf = incidence_rank(inc, tol);
        auto [qf, rf] = clique_signless_laplacian(inc);
        d.energy_qf = matrix_energy(qf, EnergyKind::mean_deviation, tol);
        d.energy_rf = matrix_energy(rf, EnergyKind::mean_deviation, tol);
    }
    d.alpha = independence_number(g);
    d.reg = classify_regularity(cover);

    long long tsum = 0;
    for (int t : cover.clique_degree) tsum += t;
    d.tbar = g.n > 0 ? static_cast<double>(tsum) / g.n : 0.0;

    d.energy_g = graph_energy(g, tol);
    d.energy_pg = graph_energy(pg, tol);
    d.energy_lg = graph_energy(lg, tol);
    return d;
}

BoundRecord inequality(const std::string& id, double lhs, double rhs, const Tolerances& tol,
                       const std::string& note = "") {
    BoundRecord r;
    r.theorem_id = id;
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = rhs - lhs;
    r.holds = r.slack >= -tol.inequality_slack;
    r.note = note;
    r.tolerance = tol.inequality_slack;
    return r;
}

BoundRecord equality(const std::string& id, double lhs, double rhs, double eq_tol,
                     const std::string& note = "") {
    BoundRecord r;
    r.theorem_id = id;
    r.lhs = lhs;
    r.rhs = rhs;
    r.slack = std::fabs(lhs - rhs);
    r.holds = r.slack <= eq_tol;
    r.note = note;
    r.tolerance = eq_tol;
    r.is_equality = true;
    return r;
}

BoundRecord not_applicable(const std::string& id, const std::string& why) {
    BoundRecord r;
    r.theorem_id = id;
    r.applicable = false;
    r.holds = true;
    r.note = why;
    return r;
}

// Aggregates a family of inequalities lhs_i <= rhs_i into the worst record.
BoundRecord worst_of(const std::string& id, const std::vector<std::pair<double, double>>& pairs,
                     const Tolerances& tol, const std::string& note = "") {
    if (pairs.empty()) return not_applicable(id, note.empty() ? "empty index range" : note);
    BoundRecord worst = inequality(id, pairs[0].first, pairs[0].second, tol);
    for (size_t i = 1; i < pairs.size(); ++i) {
        BoundRecord r = inequality(id, pairs[i].first, pairs[i].second, tol);
        if (r.slack < worst.slack) worst = r;
    }
    worst.note = note.empty() ? "worst of " + std::to_string(pairs.size()) + " indices" : note;
    return worst;
}

} // namespace

std::vector<BoundRecord> bound_suite(const Graph& g, const CliqueCover& cover,
                                     const Tolerances& tol) {
    if (cover.kind != CoverKind::partition)
        throw invalid_parameter("bound_suite: cover must be a partition");
    if (!check_cover(g, cover.cliques, cover.kind).empty())
        throw cover_error("bound_suite: cover is not valid for this graph");

    SuiteData d = build_suite_data(g, cover, tol);
    const double eq_scale = tol.equality_abs * (1.0 + (d.lam.empty() ? 0.0 : std::fabs(d.lam[0])));
    std::vector<BoundRecord> out;

    const double t1 = d.t_sorted.empty() ? 0.0 : d.t_sorted.front();
    const double tn = d.t_sorted.empty() ? 0.0 : d.t_sorted.back();
    const double s1 = d.s_sorted.empty() ? 0.0 : d.s_sorted.front();
    const double sk = d.s_sorted.empty() ? 0.0 : d.s_sorted.back();

    // (a) lambda_n(G) >= -t_1^F, with the equality side conditions.
    if (d.n > 0) {
        out.push_back(inequality("a.lambda_min_vs_clique_degree", -t1, d.lam.back(), tol));
        const bool tight = std::fabs(d.lam.back() + t1) <= eq_scale;
        if (tight)
            out.push_back(
                inequality("a.equality_implies_rank_deficient", d.rank_mf + 1, d.n, tol,
                           "lambda_n = -t_1 so rank(M_F) < n must follow"));
        if (d.reg.t_regular && d.rank_mf < d.n)
            out.push_back(equality("a.regular_rank_implies_equality", d.lam.back(), -t1,
                                   eq_scale, "clique-regular with rank(M_F) < n"));
    }

    // (b) lambda_{n-i+1} >= -t_i for i <= nu^-.
    {
        std::vector<std::pair<double, double>> pairs;
        for (int i = 1; i <= d.in_g.negative; ++i)
            pairs.emplace_back(-static_cast<double>(d.t_sorted[i - 1]), d.lam[d.n - i]);
        out.push_back(pairs.empty() ? not_applicable("b.bottom_eigenvalues_vs_clique_degrees", "nu^- = 0")
                                    : worst_of("b.bottom_eigenvalues_vs_clique_degrees", pairs, tol));
    }

    // (c), (d): the inertia bound and windows force lambda_i <= -t_n < 0 past
    // the rank, which needs every vertex inside some clique (t_n >= 1);
    // K_2 u K_1 with F = E is a counterexample otherwise.
    const bool covered_vertices = d.n > 0 && tn >= 1;
    if (covered_vertices) {
        out.push_back(inequality("c.negative_inertia_vs_rank", d.n - d.rank_mf, d.in_g.negative, tol));
        if (d.rank_mf < d.n) {
            std::vector<std::pair<double, double>> pairs;
            for (int i = d.rank_mf + 1; i <= d.n; ++i) {
                pairs.emplace_back(-t1, d.lam[i - 1]);
                pairs.emplace_back(d.lam[i - 1], -tn);
            }
            out.push_back(worst_of("c.window_past_rank", pairs, tol,
                                   "-t_1 <= lambda_i <= -t_n for i > rank(M_F)"));
        } else {
            out.push_back(not_applicable("c.window_past_rank", "rank(M_F) = n"));
        }
    } else {
        out.push_back(not_applicable("c.negative_inertia_vs_rank", "isolated vertex: t_n = 0"));
        out.push_back(not_applicable("c.window_past_rank", "isolated vertex: t_n = 0"));
    }

    if (covered_vertices && d.n > d.k) {
        out.push_back(inequality("d.negative_inertia_vs_cover_size", d.n - d.k, d.in_g.negative, tol));
        std::vector<std::pair<double, double>> pairs;
        for (int i = d.k + 1; i <= d.n; ++i) {
            pairs.emplace_back(-t1, d.lam[i - 1]);
            pairs.emplace_back(d.lam[i - 1], -tn);
        }
        out.push_back(worst_of("d.window_past_cover_size", pairs, tol));
    } else {
        const std::string why = covered_vertices ? "n <= |F|" : "isolated vertex: t_n = 0";
        out.push_back(not_applicable("d.negative_inertia_vs_cover_size", why));
        out.push_back(not_applicable("d.window_past_cover_size", why));
    }

    // (e) independence number bounds and the rank equality condition.
    out.push_back(inequality("e.alpha_vs_inertia", d.alpha,
                             std::min(d.n - d.in_g.negative, d.n - d.in_g.positive), tol));
    out.push_back(inequality("e.negative_inertia_vs_alpha", d.in_g.negative, d.n - d.alpha, tol));
    if (d.rank_mf == d.alpha && covered_vertices)
        out.push_back(equality("e.rank_alpha_equality", d.in_g.negative, d.n - d.alpha, 0.5,
                               "rank(M_F) = alpha forces nu^- = n - alpha"));
    else
        out.push_back(not_applicable("e.rank_alpha_equality",
                                     covered_vertices ? "rank(M_F) != alpha"
                                                      : "isolated vertex: t_n = 0"));

    // (f) bounds on the clique partition graph spectrum.
    if (d.k > 0) {
        out.push_back(inequality("f.pg_lambda_min_vs_clique_size", -s1, d.lam_pg.back(), tol));
        std::vector<std::pair<double, double>> pairs;
        for (int i = 1; i <= d.in_pg.negative; ++i)
            pairs.emplace_back(-static_cast<double>(d.s_sorted[i - 1]), d.lam_pg[d.k - i]);
        out.push_back(pairs.empty() ? not_applicable("f.pg_bottom_eigenvalues_vs_clique_sizes", "nu^-(P_G) = 0")
                                    : worst_of("f.pg_bottom_eigenvalues_vs_clique_sizes", pairs, tol));
        if (d.k > d.n) {
            out.push_back(inequality("f.pg_negative_inertia_vs_excess", d.k - d.n, d.in_pg.negative, tol));
            std::vector<std::pair<double, double>> window;
            for (int i = d.n + 1; i <= d.k; ++i) {
                window.emplace_back(-s1, d.lam_pg[i - 1]);
                window.emplace_back(d.lam_pg[i - 1], -sk);
            }
            out.push_back(worst_of("f.pg_window_past_n", window, tol));
        } else {
            out.push_back(not_applicable("f.pg_negative_inertia_vs_excess", "k <= n"));
            out.push_back(not_applicable("f.pg_window_past_n", "k <= n"));
        }
    } else {
        out.push_back(not_applicable("f.pg_lambda_min_vs_clique_size", "empty cover"));
        out.push_back(not_applicable("f.pg_bottom_eigenvalues_vs_clique_sizes", "empty cover"));
        out.push_back(not_applicable("f.pg_negative_inertia_vs_excess", "empty cover"));
        out.push_back(not_applicable("f.pg_window_past_n", "empty cover"));
    }

    // (g) signless Laplacian shifts under regularity.
    {
        const int top = std::min(d.n, d.k);
        if (d.reg.t_regular && top > 0) {
            std::vector<std::pair<double, double>> pairs;
            for (int i = 0; i < top; ++i) pairs.emplace_back(d.reg.t, d.q[i] - d.lam[i]);
            out.push_back(worst_of("g.qshift.clique_regular", pairs, tol));
        } else {
            out.push_back(not_applicable("g.qshift.clique_regular", "not clique-regular"));
        }
        if (d.reg.s_uniform && top > 0) {
            std::vector<std::pair<double, double>> pairs;
            for (int i = 0; i < top; ++i) pairs.emplace_back(d.reg.s, d.q[i] - d.lam_pg[i]);
            out.push_back(worst_of("g.qshift.clique_uniform", pairs, tol));
        } else {
            out.push_back(not_applicable("g.qshift.clique_uniform", "not clique-uniform"));
        }
    }

    // (h) q_i = 2 + lambda_i(L_G) with the stated tails.
    {
        double dev = 0.0;
        for (int i = 0; i < std::min(d.n, d.m); ++i)
            dev = std::max(dev, std::fabs(d.q[i] - 2.0 - d.lam_lg[i]));
        if (d.m > d.n)
            for (int i = d.n; i < d.m; ++i) dev = std::max(dev, std::fabs(d.lam_lg[i] + 2.0));
        if (d.n > d.m)
            for (int i = d.m; i < d.n; ++i) dev = std::max(dev, std::fabs(d.q[i]));
        out.push_back(equality("h.line_graph_relation", dev, 0.0, 1e-8,
                               "max deviation over i of q_i - 2 - lambda_i(L_G) and tails"));
    }

    // (i) lambda_i(G) - lambda_i(P_G) = s - t for (s,t) regular covers.
    if (d.reg.st_regular && std::min(d.n, d.k) > 0) {
        double dev = 0.0;
        for (int i = 0; i < std::min(d.n, d.k); ++i)
            dev = std::max(dev, std::fabs(d.lam[i] - d.lam_pg[i] - (d.reg.s - d.reg.t)));
        if (d.k > d.n)
            for (int i = d.n; i < d.k; ++i) dev = std::max(dev, std::fabs(d.lam_pg[i] + d.reg.s));
        if (d.n > d.k)
            for (int i = d.k; i < d.n; ++i) dev = std::max(dev, std::fabs(d.lam[i] + d.reg.t));
        out.push_back(equality("i.st_regular_shift", dev, 0.0, eq_scale));
    } else {
        out.push_back(not_applicable("i.st_regular_shift", "not (s,t) regular"));
    }

    // (j) energy bounds through clique degrees and vertex degrees.
    {
        double tsum = 0.0;
        for (int i = 0; i < d.in_g.negative; ++i) tsum += d.t_sorted[i];
        out.push_back(inequality("j.energy_vs_clique_degrees", d.energy_g, 2.0 * tsum, tol));

        const int h = std::min(d.in_g.positive, d.in_g.negative);
        double dsum = 0.0;
        for (int i = 0; i < h; ++i) dsum += d.deg_sorted[i];
        out.push_back(inequality("j.energy_vs_vertex_degrees", d.energy_g, 2.0 * dsum, tol));

        double ta = 0.0, da = 0.0;
        for (int i = 0; i < d.n - d.alpha; ++i) {
            ta += d.t_sorted[i];
            da += d.deg_sorted[i];
        }
        out.push_back(inequality("j.energy_vs_alpha_clique_degrees", d.energy_g, 2.0 * ta, tol));
        out.push_back(inequality("j.clique_vs_vertex_degree_sums", 2.0 * ta, 2.0 * da, tol));
    }

    // (k) energy of the clique partition graph.
    {
        double ssum = 0.0;
        for (int i = 0; i < d.in_pg.negative; ++i) ssum += d.s_sorted[i];
        out.push_back(inequality("k.pg_energy_vs_clique_sizes", d.energy_pg, 2.0 * ssum, tol));
    }

    // (l) E(Q_F) - E(G) gap and the two regularity equalities.
    {
        double gap = 0.0;
        for (int t : d.cover.clique_degree) gap += std::fabs(t - d.tbar);
        out.push_back(inequality("l.qf_energy_gap", d.energy_qf - d.energy_g, gap, tol));
        if (d.reg.t_regular)
            out.push_back(equality("l.qf_energy_equality_regular", d.energy_qf, d.energy_g, eq_scale));
        else
            out.push_back(not_applicable("l.qf_energy_equality_regular", "not clique-regular"));
        if (d.reg.s_uniform)
            out.push_back(equality("l.rf_energy_equality_uniform", d.energy_rf, d.energy_pg, eq_scale));
        else
            out.push_back(not_applicable("l.rf_energy_equality_uniform", "not clique-uniform"));
    }

    // (m) three-way comparison of E(P_G) and E(Q_F) for clique-uniform covers.
    if (d.reg.s_uniform && d.k > 0 && d.n > 0) {
        const double shift = 2.0 * d.k * d.reg.s / d.n - 2.0 * d.reg.s;
        if (d.k < d.n)
            out.push_back(inequality("m.pg_vs_qf_energy.k_lt_n", d.energy_pg, d.energy_qf + shift, tol));
        else if (d.k > d.n)
            out.push_back(inequality("m.pg_vs_qf_energy.k_gt_n", d.energy_qf + shift, d.energy_pg, tol));
        else
            out.push_back(equality("m.pg_vs_qf_energy.k_eq_n", d.energy_pg, d.energy_qf, eq_scale));
    } else {
        out.push_back(not_applicable("m.pg_vs_qf_energy", "not clique-uniform"));
    }

    // (n) E(L_G) <= 4 nu^-(L_G).
    out.push_back(inequality("n.line_graph_energy_vs_inertia", d.energy_lg, 4.0 * d.in_lg.negative, tol));

    return out;
}

SpectralReport analyze(const Graph& g, const CliqueCover& cover, const Tolerances& tol) {
    SpectralReport rep;
    if (g.n > 0) {
        rep.adjacency_spectrum = sym_eigen(adjacency_matrix(g), tol).eigenvalues;
        rep.signless_laplacian_spectrum = sym_eigen(signless_laplacian(g), tol).eigenvalues;
    }
    rep.inertia = inertia_of(rep.adjacency_spectrum, tol);
    rep.energy = graph_energy(g, tol);
    rep.laplacian_energy_plus =
        g.n > 0 ? matrix_energy(signless_laplacian(g), EnergyKind::mean_deviation, tol) : 0.0;

    auto ies = incidence_energies(g, cover, tol);
    rep.ie = ies.ie;
    rep.ie_f = ies.ie_f;

    if (cover.k() > 0) {
        auto inc = incidence(g, cover);
        auto [qf, rf] = clique_signless_laplacian(inc);
        rep.qf_energy = matrix_energy(qf, EnergyKind::mean_deviation, tol);
        rep.rf_energy = matrix_energy(rf, EnergyKind::mean_deviation, tol);
        long long tsum = 0;
        for (int t : cover.clique_degree) tsum += t;
        rep.tbar = static_cast<double>(tsum) / g.n;
        rep.tau = tau_index(sym_eigen(qf, tol).eigenvalues, rep.tbar, tol);
    }
    rep.pg_energy = graph_energy(clique_partition_graph(cover), tol);
    rep.line_graph_energy = graph_energy(line_graph(g), tol);
    rep.bounds = bound_suite(g, cover, tol);
    return rep;
}

PartitionScan scan_partitions(const Graph& g, long long limit, const Tolerances& tol) {
    if (g.n > 9) throw size_guard("scan_partitions: n exceeds 9");
    PartitionScan out;
    out.complete = enumerate_partitions(g, limit, [&](const CliqueCover& cover) {
        ++out.partitions_seen;
        const auto t = cover.sorted_degrees();
        const int t1 = t.empty() ? 0 : t.front();
        int rank = 0;
        if (cover.k() > 0) rank = incidence_rank(incidence(g, cover), tol);
        if (out.min_t1 < 0 || t1 < out.min_t1) {
            out.min_t1 = t1;
            out.t1_witness = cover;
        }
        if (out.min_rank < 0 || rank < out.min_rank) {
            out.min_rank = rank;
            out.rank_witness = cover;
        }
        return true;
    });
    return out;
}

} // namespace cliquespec
