#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cliquespec/error.hpp"
#include "cliquespec/linalg.hpp"
#include "helpers.hpp"

using namespace cliquespec;

namespace {

Matrix random_symmetric(int n, uint64_t seed) {
    testutil::Rng rng(seed);
    Matrix s(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) s(i, j) = s(j, i) = 2.0 * rng.uniform() - 1.0;
    return s;
}

Matrix random_rect(int r, int c, uint64_t seed) {
    testutil::Rng rng(seed);
    Matrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m(i, j) = 2.0 * rng.uniform() - 1.0;
    return m;
}

Matrix k222_adjacency() {
    // parts {0,3}, {1,4}, {2,5}
    Matrix a(6, 6);
    auto edge = [&](int u, int v) { a(u - 1, v - 1) = a(v - 1, u - 1) = 1.0; };
    edge(6, 4); edge(6, 5); edge(6, 2); edge(6, 1);
    edge(1, 2); edge(1, 3); edge(2, 3);
    edge(5, 1); edge(5, 3); edge(5, 4);
    edge(4, 3); edge(4, 2);
    return a;
}

} // namespace

TEST_CASE("all-ones matrix spectrum") {
    for (int n : {2, 5, 9}) {
        Matrix j(n, n, 1.0);
        auto spec = sym_eigen(j);
        CHECK(spec.eigenvalues[0] == doctest::Approx(n).epsilon(1e-12));
        for (int i = 1; i < n; ++i) CHECK(std::fabs(spec.eigenvalues[i]) < 1e-10);
    }
}

TEST_CASE("K_{2,2,2} adjacency spectrum matches {4,0,0,0,-2,-2}") {
    auto spec = sym_eigen(k222_adjacency());
    const std::vector<double> expect = {4, 0, 0, 0, -2, -2};
    for (int i = 0; i < 6; ++i)
        CHECK(std::fabs(spec.eigenvalues[i] - expect[i]) < 1e-8);
    CHECK(distinct_count(spec) == 3);
}

TEST_CASE("C_4 spectrum and P_3 cluster count") {
    Matrix c4(4, 4);
    for (int i = 0; i < 4; ++i) {
        c4(i, (i + 1) % 4) = 1.0;
        c4((i + 1) % 4, i) = 1.0;
    }
    auto spec = sym_eigen(c4);
    const std::vector<double> expect = {2, 0, 0, -2};
    for (int i = 0; i < 4; ++i) CHECK(std::fabs(spec.eigenvalues[i] - expect[i]) < 1e-10);

    Matrix p3(3, 3);
    p3(0, 1) = p3(1, 0) = p3(1, 2) = p3(2, 1) = 1.0;
    auto pspec = sym_eigen(p3);
    CHECK(pspec.eigenvalues[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(std::fabs(pspec.eigenvalues[1]) < 1e-10);
    CHECK(pspec.eigenvalues[2] == doctest::Approx(-std::sqrt(2.0)).epsilon(1e-12));
    CHECK(distinct_count(pspec) == 3);
}

TEST_CASE("distinct_count clusters the prism spectra to two") {
    SymSpectrum spec;
    spec.cluster_tolerance = 1e-7;
    spec.eigenvalues = {5, 5, 5, 0, 0, 0};  // prism realization at s=3
    CHECK(distinct_count(spec) == 2);
    spec.eigenvalues = {1, 1, 1, 1};  // identity
    CHECK(distinct_count(spec) == 1);
}

TEST_CASE("reconstruction and orthogonality invariants") {
    for (uint64_t seed = 0; seed < 20; ++seed) {
        const int n = 2 + static_cast<int>(seed % 9);
        Matrix s = random_symmetric(n, 1000 + seed);
        auto spec = sym_eigen(s);

        Matrix v = spec.eigenvectors;
        Matrix vt = v.transpose();
        Matrix vtv = vt * v;
        CHECK((vtv - Matrix::identity(n)).max_abs() < 1e-10);

        Matrix lam(n, n);
        for (int i = 0; i < n; ++i) lam(i, i) = spec.eigenvalues[i];
        Matrix rec = v * lam * vt;
        CHECK((rec - s).max_abs() < 1e-9 * (1.0 + s.max_abs()));

        // trace and Frobenius identities
        double tr = 0.0, fro2 = 0.0, esum = 0.0, e2sum = 0.0;
        for (int i = 0; i < n; ++i) tr += s(i, i);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) fro2 += s(i, j) * s(i, j);
        for (double ev : spec.eigenvalues) {
            esum += ev;
            e2sum += ev * ev;
        }
        CHECK(std::fabs(esum - tr) < 1e-9 * (1.0 + std::fabs(tr)));
        CHECK(std::fabs(e2sum - fro2) < 1e-9 * (1.0 + fro2));
    }
}

TEST_CASE("sym_eigen rejects non-symmetric input and zero matrix works") {
    Matrix bad(2, 2);
    bad(0, 1) = 1.0;
    CHECK_THROWS_AS(sym_eigen(bad), Error);
    Matrix zero(3, 3);
    auto spec = sym_eigen(zero);
    for (double v : spec.eigenvalues) CHECK(v == 0.0);
}

TEST_CASE("sym_eigen agrees with closed forms on small integer matrices") {
    // all 2x2 and 3x3 symmetric integer matrices with entries in [-3,3]
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b)
            for (int d = -3; d <= 3; ++d) {
                Matrix s{{double(a), double(b)}, {double(b), double(d)}};
                auto spec = sym_eigen(s);
                auto expect = testutil::closed_form_eigenvalues_2x2(a, b, d);
                CHECK(std::fabs(spec.eigenvalues[0] - expect[0]) < 1e-10);
                CHECK(std::fabs(spec.eigenvalues[1] - expect[1]) < 1e-10);
            }
    int checked = 0;
    for (int a11 = -3; a11 <= 3; ++a11)
        for (int a12 = -3; a12 <= 3; ++a12)
            for (int a13 = -3; a13 <= 3; ++a13)
                for (int a22 = -3; a22 <= 3; ++a22)
                    for (int a23 = -3; a23 <= 3; ++a23)
                        for (int a33 = -3; a33 <= 3; ++a33) {
                            Matrix s{{double(a11), double(a12), double(a13)},
                                     {double(a12), double(a22), double(a23)},
                                     {double(a13), double(a23), double(a33)}};
                            auto spec = sym_eigen(s);
                            auto expect = testutil::closed_form_eigenvalues_3x3(
                                a11, a12, a13, a22, a23, a33);
                            for (int i = 0; i < 3; ++i)
                                CHECK(std::fabs(spec.eigenvalues[i] - expect[i]) < 1e-10);
                            ++checked;
                        }
    CHECK(checked == 7 * 7 * 7 * 7 * 7 * 7);
}

TEST_CASE("rank_and_nullspace basics") {
    Matrix ones(5, 1, 1.0);
    CHECK(rank_and_nullspace(ones).rank == 1);
    Matrix zero(4, 3);
    auto rz = rank_and_nullspace(zero);
    CHECK(rz.rank == 0);
    CHECK(rz.null_basis.cols() == 3);

    // Example (ii) incidence matrix, rank 4 by an independent fraction oracle
    std::vector<std::vector<long long>> mf = {{1, 0, 1, 0}, {1, 1, 0, 0}, {0, 1, 1, 0},
                                              {0, 1, 0, 1}, {0, 0, 1, 1}, {1, 0, 0, 1}};
    CHECK(testutil::fraction_rank(mf) == 4);
    Matrix m(6, 4);
    for (int i = 0; i < 6; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = static_cast<double>(mf[i][j]);
    CHECK(rank_and_nullspace(m).rank == 4);
}

TEST_CASE("rank invariants and null residuals on random matrices") {
    for (uint64_t seed = 0; seed < 1000; ++seed) {
        const int r = 1 + static_cast<int>(seed % 6);
        const int c = 1 + static_cast<int>((seed / 7) % 6);
        Matrix m = random_rect(r, c, 2000 + seed);
        const int rank = rank_and_nullspace(m).rank;
        CHECK(rank_and_nullspace(m.transpose()).rank == rank);
        CHECK(rank_and_nullspace(m.transpose() * m).rank == rank);
    }
    Matrix m = random_rect(6, 4, 77);
    // force rank 2: last two columns are combinations of the first two
    for (int i = 0; i < 6; ++i) {
        m(i, 2) = m(i, 0) + m(i, 1);
        m(i, 3) = m(i, 0) - 2.0 * m(i, 1);
    }
    auto rn = rank_and_nullspace(m);
    CHECK(rn.rank == 2);
    CHECK(rn.null_basis.cols() == 2);
    for (int j = 0; j < rn.null_basis.cols(); ++j) {
        double residual = 0.0;
        for (int i = 0; i < 6; ++i) {
            double dot = 0.0;
            for (int c2 = 0; c2 < 4; ++c2) dot += m(i, c2) * rn.null_basis(c2, j);
            residual = std::max(residual, std::fabs(dot));
        }
        CHECK(residual <= 10.0 * rn.tol + 1e-12);
    }
}

TEST_CASE("gram_schmidt_columns orthonormalizes and preserves span") {
    Matrix q0 = Matrix::identity(4).columns(0, 3);
    Matrix q1 = gram_schmidt_columns(q0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 3; ++j) CHECK(std::fabs(std::fabs(q1(i, j)) - std::fabs(q0(i, j))) < 1e-12);

    // lemT1 matrix: 7x4
    Matrix m{{1, -2, 2, 1}, {2, -1, -2, 2}, {2, 2, 1, 2}, {1, 2, 2, 0},
             {-2, -1, 2, 0}, {2, -2, 1, 0}, {1, 0, 0, 0}};
    Matrix q = gram_schmidt_columns(m);
    CHECK((q.transpose() * q - Matrix::identity(4)).max_abs() < 1e-10);
    // span preserved: Q Q^T M = M
    Matrix proj = q * q.transpose() * m;
    CHECK((proj - m).max_abs() < 1e-8 * (1.0 + m.max_abs()));

    Matrix h2{{1, -2, 1}, {2, -1, 2}, {2, 2, 2}, {1, 2, 0}, {-2, -1, 0}, {2, -2, 0}, {1, 0, 0}};
    Matrix qh = gram_schmidt_columns(h2);
    CHECK((qh.transpose() * qh - Matrix::identity(3)).max_abs() < 1e-10);

    Matrix defect(3, 2);
    defect(0, 0) = 1.0;
    defect(0, 1) = 2.0;  // second column is a multiple of the first
    CHECK_THROWS_AS(gram_schmidt_columns(defect), Error);
}

TEST_CASE("psd_sqrt_factor") {
    Matrix eye = Matrix::identity(3);
    CHECK((psd_sqrt_factor(eye) - eye).max_abs() < 1e-12);

    Matrix d{{4, 0}, {0, 1}};
    Matrix b = psd_sqrt_factor(d);
    CHECK((b - Matrix{{2, 0}, {0, 1}}).max_abs() < 1e-12);

    // M20 target with a = 9 - 3 = 6; the residual check is the oracle
    Matrix m20{{6, -1, -1}, {-1, 6, 0}, {-1, 0, 6}};
    Matrix f = psd_sqrt_factor(m20);
    CHECK((f.transpose() * f - m20).max_abs() < 1e-9 * (1.0 + m20.max_abs()));

    Matrix indef{{1, 2}, {2, 1}};  // eigenvalues 3, -1
    CHECK_THROWS_AS(psd_sqrt_factor(indef), Error);

    for (uint64_t seed = 0; seed < 50; ++seed) {
        Matrix r = random_rect(4, 4, 3000 + seed);
        Matrix s = r.transpose() * r;  // PSD
        Matrix g = psd_sqrt_factor(s);
        CHECK((g.transpose() * g - s).max_abs() < 1e-9 * (1.0 + s.max_abs()));
    }
}

TEST_CASE("rank tolerance is overridable") {
    Matrix m = Matrix::identity(4);
    CHECK(rank_and_nullspace(m).rank == 4);
    CHECK(rank_and_nullspace(m, 2.0).rank == 0);  // everything below 2 counts as zero
}

TEST_CASE("pattern_of ignores the diagonal") {
    Matrix a = k222_adjacency();
    Matrix withdiag = a;
    for (int i = 0; i < 6; ++i) withdiag(i, i) = 5.0 - i;
    CHECK((pattern_of(withdiag) - a).max_abs() == 0.0);
}
