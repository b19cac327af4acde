#include "cliquespec/cliques.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include "cliquespec/error.hpp"

namespace cliquespec {

std::vector<int> CliqueCover::sorted_degrees() const {
    std::vector<int> t = clique_degree;
    std::sort(t.rbegin(), t.rend());
    return t;
}

std::vector<int> CliqueCover::sorted_sizes() const {
    std::vector<int> s = clique_size;
    std::sort(s.rbegin(), s.rend());
    return s;
}

std::vector<CoverViolation> check_cover(const Graph& g,
                                        const std::vector<std::vector<int>>& cliques,
                                        CoverKind kind) {
    std::vector<CoverViolation> out;
    std::vector<std::vector<int>> times(g.n, std::vector<int>(g.n, 0));
    for (size_t c = 0; c < cliques.size(); ++c) {
        const auto& cl = cliques[c];
        for (int v : cl)
            if (v < 0 || v >= g.n) {
                out.push_back({"vertex out of range", static_cast<int>(c), {v, v}});
                return out;
            }
        std::set<int> uniq(cl.begin(), cl.end());
        if (uniq.size() != cl.size())
            out.push_back({"repeated vertex in clique", static_cast<int>(c), {}});
        for (auto it = uniq.begin(); it != uniq.end(); ++it)
            for (auto jt = std::next(it); jt != uniq.end(); ++jt) {
                if (!g.has_edge(*it, *jt)) {
                    out.push_back({"subset is not a clique", static_cast<int>(c), {*it, *jt}});
                } else {
                    ++times[*it][*jt];
                }
            }
    }
    for (auto [u, v] : g.edges) {
        if (times[u][v] == 0)
            out.push_back({"uncovered edge", -1, {u, v}});
        else if (kind == CoverKind::partition && times[u][v] > 1)
            out.push_back({"edge covered more than once under partition kind", -1, {u, v}});
    }
    return out;
}

CliqueCover validate_cover(const Graph& g, std::vector<std::vector<int>> cliques,
                           CoverKind kind) {
    auto violations = check_cover(g, cliques, kind);
    if (!violations.empty()) {
        std::ostringstream msg;
        msg << violations.size() << " violation(s):";
        for (const auto& v : violations) {
            msg << " [" << v.what;
            if (v.clique_index >= 0) msg << " clique=" << v.clique_index;
            if (v.edge.first >= 0) msg << " edge=(" << v.edge.first << "," << v.edge.second << ")";
            msg << "]";
        }
        throw cover_error(msg.str());
    }
    CliqueCover out;
    out.kind = kind;
    out.n = g.n;
    out.clique_degree.assign(g.n, 0);
    for (auto& cl : cliques) {
        std::sort(cl.begin(), cl.end());
        out.clique_size.push_back(static_cast<int>(cl.size()));
        for (int v : cl) ++out.clique_degree[v];
    }
    out.cliques = std::move(cliques);
    return out;
}

CliqueCover edge_cover(const Graph& g) {
    std::vector<std::vector<int>> cliques;
    cliques.reserve(g.edges.size());
    for (auto [u, v] : g.edges) cliques.push_back({u, v});
    CliqueCover out = validate_cover(g, std::move(cliques), CoverKind::partition);
    out.provenance = "edges";
    return out;
}

namespace {

using EdgeSet = std::set<std::pair<int, int>>;

std::pair<int, int> lowest_edge(const EdgeSet& uncovered) { return *uncovered.begin(); }

bool covered_adjacent(const EdgeSet& uncovered, int u, int v) {
    return uncovered.count({std::min(u, v), std::max(u, v)}) > 0;
}

// All cliques through the lex-lowest uncovered edge, using uncovered edges
// only. Extra vertices are necessarily above v: any lower vertex would put a
// lex-lower uncovered edge inside the clique.
void cliques_through_edge(const Graph& g, const EdgeSet& uncovered, int u, int v,
                          std::vector<int>& current, std::vector<std::vector<int>>& out) {
    out.push_back(current);
    const int last = current.back();
    for (int w = std::max(last, v) + 1; w < g.n; ++w) {
        bool ok = true;
        for (int x : current)
            if (!covered_adjacent(uncovered, x, w)) {
                ok = false;
                break;
            }
        if (!ok) continue;
        current.push_back(w);
        cliques_through_edge(g, uncovered, u, v, current, out);
        current.pop_back();
    }
}

std::vector<std::vector<int>> candidate_cliques(const Graph& g, const EdgeSet& uncovered) {
    auto [u, v] = lowest_edge(uncovered);
    std::vector<int> cur = {u, v};
    std::vector<std::vector<int>> out;
    cliques_through_edge(g, uncovered, u, v, cur, out);
    // Deterministic branch order: larger cliques first, then lexicographic.
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    return out;
}

void remove_clique_edges(EdgeSet& uncovered, const std::vector<int>& clique) {
    for (size_t i = 0; i < clique.size(); ++i)
        for (size_t j = i + 1; j < clique.size(); ++j)
            uncovered.erase({clique[i], clique[j]});
}

void add_clique_edges(EdgeSet& uncovered, const std::vector<int>& clique) {
    for (size_t i = 0; i < clique.size(); ++i)
        for (size_t j = i + 1; j < clique.size(); ++j)
            uncovered.insert({clique[i], clique[j]});
}

// Edges of the uncovered graph lying in no uncovered triangle force their
// own 2-clique; the rest need at least |edges| / C(omega,2) cliques.
int partition_lower_bound(const Graph& g, const EdgeSet& uncovered, int omega) {
    if (uncovered.empty()) return 0;
    int lonely = 0;
    for (auto [u, v] : uncovered) {
        bool in_triangle = false;
        for (int w = 0; w < g.n && !in_triangle; ++w)
            if (w != u && w != v && covered_adjacent(uncovered, u, w) &&
                covered_adjacent(uncovered, v, w))
                in_triangle = true;
        if (!in_triangle) ++lonely;
    }
    const int per_clique = std::max(1, omega * (omega - 1) / 2);
    const int rest = static_cast<int>(uncovered.size()) - lonely;
    return lonely + (rest + per_clique - 1) / per_clique;
}

struct PartitionSearch {
    const Graph& g;
    int omega;
    int best = 0;
    std::vector<std::vector<int>> best_cliques;
    std::vector<std::vector<int>> current;

    void run(EdgeSet& uncovered) {
        if (uncovered.empty()) {
            if (best == 0 || static_cast<int>(current.size()) < best) {
                best = static_cast<int>(current.size());
                best_cliques = current;
            }
            return;
        }
        if (best > 0) {
            const int lb = partition_lower_bound(g, uncovered, omega);
            if (static_cast<int>(current.size()) + lb >= best) return;
        }
        for (const auto& clique : candidate_cliques(g, uncovered)) {
            remove_clique_edges(uncovered, clique);
            current.push_back(clique);
            run(uncovered);
            current.pop_back();
            add_clique_edges(uncovered, clique);
        }
    }
};

} // namespace

CliqueCover min_clique_partition(const Graph& g) {
    if (g.n > 12) throw size_guard("min_clique_partition: exact mode is limited to n <= 12");
    if (g.edges.empty()) {
        CliqueCover out = validate_cover(g, {}, CoverKind::partition);
        out.provenance = "exact";
        return out;
    }
    EdgeSet uncovered(g.edges.begin(), g.edges.end());
    PartitionSearch search{g, clique_number(g), 0, {}, {}};
    search.run(uncovered);
    CliqueCover out = validate_cover(g, search.best_cliques, CoverKind::partition);
    out.provenance = "exact";
    return out;
}

CliqueCover greedy_partition(const Graph& g, uint64_t seed) {
    EdgeSet uncovered(g.edges.begin(), g.edges.end());
    std::mt19937_64 rng(seed);
    std::vector<int> pref(g.n);
    for (int i = 0; i < g.n; ++i) pref[i] = i;
    std::shuffle(pref.begin(), pref.end(), rng);

    std::vector<std::vector<int>> cliques;
    while (!uncovered.empty()) {
        auto [u, v] = lowest_edge(uncovered);
        std::vector<int> clique = {u, v};
        // Grow maximally, visiting vertices in the seeded preference order.
        for (int w : pref) {
            if (w == u || w == v) continue;
            bool ok = true;
            for (int x : clique)
                if (!covered_adjacent(uncovered, x, w)) {
                    ok = false;
                    break;
                }
            if (ok) clique.push_back(w);
        }
        std::sort(clique.begin(), clique.end());
        remove_clique_edges(uncovered, clique);
        cliques.push_back(std::move(clique));
    }
    CliqueCover out = validate_cover(g, std::move(cliques), CoverKind::partition);
    out.provenance = "greedy(seed=" + std::to_string(seed) + ")";
    return out;
}

IncidenceMatrix incidence(const Graph& g, const CliqueCover& cover, IncidenceMode mode,
                          const std::optional<std::vector<double>>& weights) {
    const int k = cover.k();
    IncidenceMatrix out;
    out.mode = mode;
    out.source = cover;
    out.m = Matrix(g.n, k);
    size_t next_weight = 0;
    for (int j = 0; j < k; ++j) {
        for (int v : cover.cliques[j]) {
            double w = 1.0;
            if (mode == IncidenceMode::weighted && weights) {
                if (next_weight >= weights->size())
                    throw invalid_parameter("incidence: not enough weights for incidence pairs");
                w = (*weights)[next_weight++];
                if (w == 0.0)
                    throw invalid_parameter("incidence: zero weight on an incidence pair");
            }
            out.m(v, j) = w;
        }
    }
    if (mode == IncidenceMode::weighted && weights && next_weight != weights->size())
        throw invalid_parameter("incidence: unused weights supplied");
    if (mode == IncidenceMode::weighted) {
        // Weighted rows may cancel on covers; M M^T must still land in S(G),
        // so the pattern is validated here instead of trusting the caller.
        const Matrix gram = out.m * out.m.transpose();
        const double cut = 1e-9 * (1.0 + gram.max_abs());
        for (int i = 0; i < g.n; ++i)
            for (int j = i + 1; j < g.n; ++j)
                if ((std::fabs(gram(i, j)) > cut) != (g.adjacency[i][j] != 0))
                    throw cover_error("weighted incidence: M M^T leaves S(G) at entry (" +
                                      std::to_string(i) + "," + std::to_string(j) + ")");
    }
    return out;
}

std::pair<Matrix, Matrix> clique_signless_laplacian(const IncidenceMatrix& inc) {
    const Matrix mt = inc.m.transpose();
    return {inc.m * mt, mt * inc.m};
}

Graph clique_partition_graph(const CliqueCover& cover) {
    const int k = cover.k();
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            const auto& a = cover.cliques[i];
            const auto& b = cover.cliques[j];
            bool share = false;
            for (size_t p = 0, q = 0; p < a.size() && q < b.size();) {
                if (a[p] == b[q]) {
                    share = true;
                    break;
                }
                a[p] < b[q] ? ++p : ++q;
            }
            if (share) edges.emplace_back(i, j);
        }
    return make_graph(k, std::move(edges));
}

Regularity classify_regularity(const CliqueCover& cover) {
    Regularity out;
    if (!cover.clique_degree.empty()) {
        out.t = cover.clique_degree[0];
        out.t_regular = std::all_of(cover.clique_degree.begin(), cover.clique_degree.end(),
                                    [&](int t) { return t == out.t; });
        if (!out.t_regular) out.t = -1;
    }
    if (!cover.clique_size.empty()) {
        out.s = cover.clique_size[0];
        out.s_uniform = std::all_of(cover.clique_size.begin(), cover.clique_size.end(),
                                    [&](int s) { return s == out.s; });
        if (!out.s_uniform) out.s = -1;
    }
    out.st_regular = out.t_regular && out.s_uniform;
    return out;
}

bool incidence_identities_exact(const Graph& g, const CliqueCover& cover) {
    if (cover.kind != CoverKind::partition) return false;
    const int n = g.n, k = cover.k();
    std::vector<std::vector<long long>> M(n, std::vector<long long>(k, 0));
    for (int j = 0; j < k; ++j)
        for (int v : cover.cliques[j]) M[v][j] = 1;

    // M M^T must equal diag(t_i) + A(G), entry for entry.
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long long dot = 0;
            for (int c = 0; c < k; ++c) dot += M[i][c] * M[j][c];
            const long long expect =
                i == j ? cover.clique_degree[i] : static_cast<long long>(g.adjacency[i][j]);
            if (dot != expect) return false;
        }

    // M^T M must equal diag(s_j) + A(P_G).
    const Graph pg = clique_partition_graph(cover);
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            long long dot = 0;
            for (int v = 0; v < n; ++v) dot += M[v][a] * M[v][b];
            const long long expect =
                a == b ? cover.clique_size[a] : static_cast<long long>(pg.adjacency[a][b]);
            if (dot != expect) return false;
        }
    return true;
}

namespace {

struct PartitionEnumerator {
    const Graph& g;
    long long limit;
    long long visited = 0;
    bool hit_limit = false;
    bool stopped = false;
    const std::function<bool(const CliqueCover&)>& visit;
    std::vector<std::vector<int>> current;

    void run(EdgeSet& uncovered) {
        if (stopped || hit_limit) return;
        if (uncovered.empty()) {
            if (++visited > limit) {
                hit_limit = true;
                return;
            }
            CliqueCover cover = validate_cover(g, current, CoverKind::partition);
            cover.provenance = "enumeration";
            if (!visit(cover)) stopped = true;
            return;
        }
        for (const auto& clique : candidate_cliques(g, uncovered)) {
            remove_clique_edges(uncovered, clique);
            current.push_back(clique);
            run(uncovered);
            current.pop_back();
            add_clique_edges(uncovered, clique);
            if (stopped || hit_limit) return;
        }
    }
};

} // namespace

bool enumerate_partitions(const Graph& g, long long limit,
                          const std::function<bool(const CliqueCover&)>& visit) {
    if (g.n > 9) throw size_guard("enumerate_partitions: n exceeds 9");
    EdgeSet uncovered(g.edges.begin(), g.edges.end());
    PartitionEnumerator en{g, limit, 0, false, false, visit, {}};
    if (uncovered.empty()) {
        CliqueCover cover = validate_cover(g, {}, CoverKind::partition);
        cover.provenance = "enumeration";
        visit(cover);
        return true;
    }
    en.run(uncovered);
    return !en.hit_limit;
}

} // namespace cliquespec
