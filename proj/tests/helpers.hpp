#pragma once

// Shared test utilities. Everything here is deliberately independent of the
// library's implementation paths so it can serve as an oracle.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "cliquespec/graph.hpp"

namespace testutil {

// splitmix64, fixed across platforms.
struct Rng {
    uint64_t state;
    explicit Rng(uint64_t seed) : state(seed + 0x9e3779b97f4a7c15ULL) {}
    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() { return (next() >> 11) * 0x1.0p-53; }
    int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
};

inline cliquespec::Graph random_graph(int n, double p, uint64_t seed) {
    Rng rng(seed);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.uniform() < p) edges.emplace_back(i, j);
    return cliquespec::make_graph(n, std::move(edges));
}

// Plain recursive enumeration of all clique partitions; no pruning, no
// shared code with the library's branch and bound.
inline void all_partitions(const cliquespec::Graph& g,
                           const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
    std::set<std::pair<int, int>> uncovered(g.edges.begin(), g.edges.end());
    std::vector<std::vector<int>> current;

    std::function<void()> rec = [&]() {
        if (uncovered.empty()) {
            visit(current);
            return;
        }
        auto [u, v] = *uncovered.begin();
        // every subset of common neighbours of {u,v} (vertices above v) whose
        // pairs are all uncovered yields a candidate clique
        std::vector<int> ext;
        for (int w = v + 1; w < g.n; ++w)
            if (g.has_edge(u, w) && g.has_edge(v, w)) ext.push_back(w);
        const int e = static_cast<int>(ext.size());
        for (int mask = 0; mask < (1 << e); ++mask) {
            std::vector<int> clique = {u, v};
            for (int b = 0; b < e; ++b)
                if (mask & (1 << b)) clique.push_back(ext[b]);
            bool ok = true;
            for (size_t a = 0; a < clique.size() && ok; ++a)
                for (size_t b2 = a + 1; b2 < clique.size() && ok; ++b2) {
                    int x = std::min(clique[a], clique[b2]), y = std::max(clique[a], clique[b2]);
                    if (!g.has_edge(x, y) || !uncovered.count({x, y})) ok = false;
                }
            if (!ok) continue;
            std::vector<std::pair<int, int>> removed;
            for (size_t a = 0; a < clique.size(); ++a)
                for (size_t b2 = a + 1; b2 < clique.size(); ++b2)
                    removed.emplace_back(std::min(clique[a], clique[b2]),
                                         std::max(clique[a], clique[b2]));
            for (auto& ed : removed) uncovered.erase(ed);
            current.push_back(clique);
            rec();
            current.pop_back();
            for (auto& ed : removed) uncovered.insert(ed);
        }
    };
    rec();
}

// Rank over Q with long double fractions is not exact; this oracle does
// textbook fraction elimination over long long rationals instead.
inline int fraction_rank(std::vector<std::vector<long long>> num) {
    const int rows = static_cast<int>(num.size());
    if (rows == 0) return 0;
    const int cols = static_cast<int>(num[0].size());
    std::vector<std::vector<long long>> den(rows, std::vector<long long>(cols, 1));

    auto reduce = [](long long& n, long long& d) {
        if (n == 0) {
            d = 1;
            return;
        }
        long long g = std::__gcd(std::llabs(n), std::llabs(d));
        n /= g;
        d /= g;
        if (d < 0) {
            n = -n;
            d = -d;
        }
    };

    int rank = 0;
    for (int c = 0, r = 0; c < cols && r < rows; ++c) {
        int pivot = -1;
        for (int i = r; i < rows; ++i)
            if (num[i][c] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(num[pivot], num[r]);
        std::swap(den[pivot], den[r]);
        for (int i = r + 1; i < rows; ++i) {
            if (num[i][c] == 0) continue;
            // factor = num[i][c]/den[i][c] / (num[r][c]/den[r][c])
            long long fn = num[i][c] * den[r][c];
            long long fd = den[i][c] * num[r][c];
            reduce(fn, fd);
            for (int j = c; j < cols; ++j) {
                // a_ij -= factor * a_rj
                long long n1 = num[i][j] * den[r][j] * fd - fn * num[r][j] * den[i][j];
                long long d1 = den[i][j] * den[r][j] * fd;
                reduce(n1, d1);
                num[i][j] = n1;
                den[i][j] = d1;
            }
        }
        ++r;
        ++rank;
    }
    return rank;
}

// Independent graph6 reader: decodes into an adjacency matrix directly.
inline std::vector<std::vector<int>> decode_graph6_reference(const std::string& s) {
    size_t pos = 0;
    int n = s[pos] - 63;
    ++pos;
    std::vector<std::vector<int>> adj(n, std::vector<int>(n, 0));
    std::vector<int> bits;
    for (; pos < s.size(); ++pos) {
        int v = s[pos] - 63;
        for (int b = 5; b >= 0; --b) bits.push_back((v >> b) & 1);
    }
    int idx = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (bits[idx]) adj[i][j] = adj[j][i] = 1;
            ++idx;
        }
    return adj;
}

// Closed-form symmetric eigenvalues, descending; quadratic and cubic cases.
inline std::vector<double> closed_form_eigenvalues_2x2(double a, double b, double d) {
    const double tr = a + d, det = a * d - b * b;
    const double disc = std::sqrt(std::max(0.0, tr * tr / 4.0 - det));
    return {tr / 2.0 + disc, tr / 2.0 - disc};
}

// Characteristic polynomial roots of an integer symmetric 3x3: trigonometric
// closed form for first estimates, then long-double Newton. Estimates closer
// than 1e-4 are true multiple roots (the family's smallest nonzero gap is
// 0.14), and those are read off the exact derivative instead, since Newton
// degrades at multiple roots.
inline std::vector<double> closed_form_eigenvalues_3x3(long long a11, long long a12,
                                                       long long a13, long long a22,
                                                       long long a23, long long a33) {
    const long long tr = a11 + a22 + a33;
    const long long s2 = a11 * a22 - a12 * a12 + a11 * a33 - a13 * a13 + a22 * a33 - a23 * a23;
    const long long det = a11 * (a22 * a33 - a23 * a23) - a12 * (a12 * a33 - a23 * a13) +
                          a13 * (a12 * a23 - a22 * a13);
    auto p = [&](long double x) { return ((x - tr) * x + s2) * x - det; };
    auto dp = [&](long double x) { return (3.0L * x - 2.0L * tr) * x + s2; };

    std::vector<double> est;
    const double p1 = static_cast<double>(a12 * a12 + a13 * a13 + a23 * a23);
    if (p1 == 0.0) {
        est = {double(a11), double(a22), double(a33)};
    } else {
        const double q = tr / 3.0;
        const double p2 = (a11 - q) * (a11 - q) + (a22 - q) * (a22 - q) +
                          (a33 - q) * (a33 - q) + 2.0 * p1;
        const double pp = std::sqrt(p2 / 6.0);
        const double b11 = (a11 - q) / pp, b12 = a12 / pp, b13 = a13 / pp;
        const double b22 = (a22 - q) / pp, b23 = a23 / pp, b33 = (a33 - q) / pp;
        const double detb = b11 * (b22 * b33 - b23 * b23) - b12 * (b12 * b33 - b23 * b13) +
                            b13 * (b12 * b23 - b22 * b13);
        const double r = std::clamp(detb / 2.0, -1.0, 1.0);
        const double phi = std::acos(r) / 3.0;
        est = {q + 2.0 * pp * std::cos(phi), 0.0,
               q + 2.0 * pp * std::cos(phi + 2.0 * M_PI / 3.0)};
        est[1] = 3.0 * q - est[0] - est[2];
    }
    std::sort(est.rbegin(), est.rend());

    const bool near01 = est[0] - est[1] < 1e-4;
    const bool near12 = est[1] - est[2] < 1e-4;
    auto newton = [&](long double x) {
        for (int it = 0; it < 80; ++it) {
            const long double d = dp(x);
            if (d == 0.0L) break;
            const long double step = p(x) / d;
            x -= step;
            if (std::fabs(static_cast<double>(step)) <= 1e-17 * (1.0 + std::fabs(double(x))))
                break;
        }
        return static_cast<double>(x);
    };
    std::vector<double> out;
    if (near01 && near12) {
        out = {tr / 3.0, tr / 3.0, tr / 3.0};
    } else if (near01 || near12) {
        const long double disc = static_cast<long double>(tr) * tr - 3.0L * s2;
        const long double sq = std::sqrt(std::max(0.0L, disc));
        const long double r1 = (tr + sq) / 3.0L, r2 = (tr - sq) / 3.0L;
        const long double pair = near01 ? est[0] : est[2];
        const double dbl = static_cast<double>(
            std::fabs(double(r1 - pair)) < std::fabs(double(r2 - pair)) ? r1 : r2);
        const double simple = newton(near01 ? est[2] : est[0]);
        out = near01 ? std::vector<double>{dbl, dbl, simple}
                     : std::vector<double>{simple, dbl, dbl};
    } else {
        for (double e : est) out.push_back(newton(e));
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

} // namespace testutil
