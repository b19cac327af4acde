#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "cliquespec/cliques.hpp"
#include "cliquespec/error.hpp"
#include "cliquespec/linalg.hpp"
#include "helpers.hpp"

using namespace cliquespec;

namespace {

// K_{2,2,2} labeled so the four-triangle partition below is valid
// (parts {0,4},{1,3},{2,5}).
Graph k222_labeled() {
    return make_graph(6, {{5, 3}, {5, 4}, {5, 1}, {5, 0}, {0, 1}, {0, 2},
                          {1, 2}, {4, 0}, {4, 2}, {4, 3}, {3, 2}, {3, 1}});
}

CliqueCover k222_triangles() {
    return validate_cover(k222_labeled(), {{0, 1, 5}, {1, 2, 3}, {0, 2, 4}, {3, 4, 5}},
                          CoverKind::partition);
}

// The 7-vertex line graph of K_1 v (2K_2 u K_1) with the 5-clique partition.
Graph t1eq_graph() {
    return make_graph(7, {{2, 6}, {1, 2}, {0, 1}, {0, 6}, {0, 5}, {5, 6}, {3, 6},
                          {0, 2}, {2, 5}, {4, 5}, {0, 3}, {3, 5}, {2, 3}, {3, 4}});
}

CliqueCover t1eq_cover() {
    return validate_cover(t1eq_graph(), {{0, 1}, {1, 2}, {0, 2, 3, 5, 6}, {3, 4}, {4, 5}},
                          CoverKind::partition);
}

} // namespace

TEST_CASE("validate_cover on the reference examples") {
    CliqueCover f = k222_triangles();
    CHECK(f.k() == 4);
    for (int t : f.clique_degree) CHECK(t == 2);
    for (int s : f.clique_size) CHECK(s == 3);

    CliqueCover t1 = t1eq_cover();
    auto t = t1.clique_degree;
    for (int i = 0; i < 6; ++i) CHECK(t[i] == 2);
    CHECK(t[6] == 1);
    auto reg = classify_regularity(t1);
    CHECK(!reg.t_regular);

    // violations are reported, not silently dropped
    auto violations = check_cover(k222_labeled(), {{0, 1, 2}}, CoverKind::partition);
    CHECK(!violations.empty());
    CHECK_THROWS_AS(validate_cover(k222_labeled(), {{0, 3}}, CoverKind::partition), Error);
    // doubly covered edge under partition kind
    auto dbl = check_cover(complete_graph(3), {{0, 1, 2}, {0, 1}}, CoverKind::partition);
    CHECK(!dbl.empty());
    // but fine for an edge clique cover
    CHECK(check_cover(complete_graph(3), {{0, 1, 2}, {0, 1}}, CoverKind::cover).empty());
}

TEST_CASE("edge cover is always a valid partition") {
    for (uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = testutil::random_graph(4 + static_cast<int>(seed % 5), 0.5, seed);
        CliqueCover f = edge_cover(g);
        CHECK(f.k() == g.m());
        CHECK(check_cover(g, f.cliques, CoverKind::partition).empty());
        // t_i = d_i for F = E
        CHECK(f.clique_degree == g.degrees());
    }
}

TEST_CASE("minimum clique partition") {
    CHECK(min_clique_partition(complete_graph(6)).k() == 1);
    // triangle-free: only 2-cliques exist, cp = m
    CHECK(min_clique_partition(cycle_graph(5)).k() == 5);
    CHECK(min_clique_partition(complete_bipartite(2, 3)).k() == 6);

    // cp(K_{2,2,2}) = 4 via the independent exhaustive enumeration oracle
    Graph k222 = k222_labeled();
    int oracle_best = 1 << 20;
    testutil::all_partitions(k222, [&](const std::vector<std::vector<int>>& parts) {
        oracle_best = std::min<int>(oracle_best, static_cast<int>(parts.size()));
    });
    CHECK(oracle_best == 4);
    CHECK(min_clique_partition(k222).k() == 4);

    CHECK_THROWS_AS(min_clique_partition(complete_graph(13)), Error);

    // exact result never exceeds greedy, over random graphs
    for (uint64_t seed = 0; seed < 25; ++seed) {
        Graph g = testutil::random_graph(7, 0.5, 40 + seed);
        CHECK(min_clique_partition(g).k() <= greedy_partition(g, seed).k());
        CHECK(check_cover(g, greedy_partition(g, seed).cliques, CoverKind::partition).empty());
    }
}

TEST_CASE("incidence matrices") {
    // K_n with one clique: the all-ones column
    Graph k5 = complete_graph(5);
    CliqueCover single = validate_cover(k5, {{0, 1, 2, 3, 4}}, CoverKind::partition);
    auto inc = incidence(k5, single);
    CHECK(inc.m.rows() == 5);
    CHECK(inc.m.cols() == 1);
    for (int i = 0; i < 5; ++i) CHECK(inc.m(i, 0) == 1.0);

    // the 6x4 incidence of the four-triangle partition
    auto inc222 = incidence(k222_labeled(), k222_triangles());
    const double expect[6][4] = {{1, 0, 1, 0}, {1, 1, 0, 0}, {0, 1, 1, 0},
                                 {0, 1, 0, 1}, {0, 0, 1, 1}, {1, 0, 0, 1}};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 4; ++j) CHECK(inc222.m(i, j) == expect[i][j]);

    // weighted mode with unit weights equals binary mode
    std::vector<double> ones(12, 1.0);
    auto weighted = incidence(k222_labeled(), k222_triangles(), IncidenceMode::weighted, ones);
    CHECK((weighted.m - inc222.m).max_abs() == 0.0);

    std::vector<double> bad(12, 1.0);
    bad[3] = 0.0;
    CHECK_THROWS_AS(incidence(k222_labeled(), k222_triangles(), IncidenceMode::weighted, bad),
                    Error);

    // weighted rows must keep M M^T inside S(G): cancelling weights rejected
    Graph k3 = complete_graph(3);
    CliqueCover cov = validate_cover(k3, {{0, 1}, {0, 1, 2}}, CoverKind::cover);
    std::vector<double> cancel = {1, 1, -1, 1, 1};  // row0.row1 = 1*1 + (-1)*1 = 0
    CHECK_THROWS_AS(incidence(k3, cov, IncidenceMode::weighted, cancel), Error);
    std::vector<double> fine = {1, 1, 1, 1, 1};
    CHECK((incidence(k3, cov, IncidenceMode::weighted, fine).m.rows() == 3));
}

TEST_CASE("clique signless Laplacian identities") {
    auto inc = incidence(k222_labeled(), k222_triangles());
    auto [qf, rf] = clique_signless_laplacian(inc);
    const double qf_expect[6][6] = {{2, 1, 1, 0, 1, 1}, {1, 2, 1, 1, 0, 1}, {1, 1, 2, 1, 1, 0},
                                    {0, 1, 1, 2, 1, 1}, {1, 0, 1, 1, 2, 1}, {1, 1, 0, 1, 1, 2}};
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 6; ++j) CHECK(qf(i, j) == qf_expect[i][j]);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) CHECK(rf(a, b) == (a == b ? 3.0 : 1.0));

    // P_G of the example is K_4; single clique gives K_1; F = E gives L_G
    CHECK(canonical_code(clique_partition_graph(k222_triangles())) ==
          canonical_code(complete_graph(4)));
    Graph k3 = complete_graph(3);
    CHECK(clique_partition_graph(validate_cover(k3, {{0, 1, 2}}, CoverKind::partition)).n == 1);
    for (uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = testutil::random_graph(6, 0.5, 600 + seed);
        CHECK(clique_partition_graph(edge_cover(g)).edges == line_graph(g).edges);
    }

    // F = E: Q_F = Q(G) = D + A and R_F = 2I + A(L_G)
    for (uint64_t seed = 0; seed < 20; ++seed) {
        Graph g = testutil::random_graph(6, 0.5, 800 + seed);
        auto [q, r] = clique_signless_laplacian(incidence(g, edge_cover(g)));
        auto deg = g.degrees();
        for (int i = 0; i < g.n; ++i)
            for (int j = 0; j < g.n; ++j)
                CHECK(q(i, j) == (i == j ? deg[i] : g.adjacency[i][j]));
        Graph lg = line_graph(g);
        for (int a = 0; a < g.m(); ++a)
            for (int b = 0; b < g.m(); ++b)
                CHECK(r(a, b) == (a == b ? 2.0 : lg.adjacency[a][b]));
    }
}

TEST_CASE("classify_regularity") {
    auto reg = classify_regularity(k222_triangles());
    CHECK(reg.st_regular);
    CHECK(reg.s == 3);
    CHECK(reg.t == 2);

    // F = E on a d-regular graph: d clique-regular, 2 clique-uniform
    Graph c6 = cycle_graph(6);
    auto rc = classify_regularity(edge_cover(c6));
    CHECK(rc.t_regular);
    CHECK(rc.t == 2);
    CHECK(rc.s_uniform);
    CHECK(rc.s == 2);
}

TEST_CASE("integer incidence identities on random partitions") {
    for (uint64_t seed = 0; seed < 60; ++seed) {
        Graph g = testutil::random_graph(4 + static_cast<int>(seed % 6), 0.55, 7000 + seed);
        CHECK(incidence_identities_exact(g, edge_cover(g)));
        CHECK(incidence_identities_exact(g, greedy_partition(g, seed)));

        CliqueCover f = greedy_partition(g, seed);
        long long tsum = 0, ssum = 0;
        for (int t : f.clique_degree) tsum += t;
        for (int s : f.clique_size) ssum += s;
        CHECK(tsum == ssum);

        // t_i <= d_i after sorting both non-increasingly
        auto t = f.sorted_degrees();
        auto d = g.degrees();
        std::sort(d.rbegin(), d.rend());
        for (size_t i = 0; i < t.size(); ++i) CHECK(t[i] <= d[i]);

        // nonzero eigenvalues of Q_F and R_F coincide
        auto [qf, rf] = clique_signless_laplacian(incidence(g, f));
        if (qf.rows() == 0 || rf.rows() == 0) continue;
        auto qe = sym_eigen(qf).eigenvalues;
        auto re = sym_eigen(rf).eigenvalues;
        const size_t top = std::min(qe.size(), re.size());
        for (size_t i = 0; i < top; ++i) CHECK(std::fabs(qe[i] - re[i]) < 1e-8);
        for (size_t i = top; i < qe.size(); ++i) CHECK(std::fabs(qe[i]) < 1e-8);
        for (size_t i = top; i < re.size(); ++i) CHECK(std::fabs(re[i]) < 1e-8);
    }
}

TEST_CASE("partition enumeration visits exactly the oracle's partitions") {
    for (const Graph& g : {complete_graph(3), complete_graph(4), k222_labeled()}) {
        long long oracle_count = 0;
        testutil::all_partitions(g, [&](const auto&) { ++oracle_count; });
        long long count = 0;
        CHECK(enumerate_partitions(g, 1000000, [&](const CliqueCover&) {
            ++count;
            return true;
        }));
        CHECK(count == oracle_count);
    }
    // K_3 has exactly two partitions: E and the triangle
    long long k3_count = 0;
    enumerate_partitions(complete_graph(3), 100, [&](const CliqueCover&) {
        ++k3_count;
        return true;
    });
    CHECK(k3_count == 2);
    // limit reporting
    CHECK(!enumerate_partitions(complete_graph(4), 2, [&](const CliqueCover&) { return true; }));
}
