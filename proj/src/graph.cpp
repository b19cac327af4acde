#include "cliquespec/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "cliquespec/error.hpp"

namespace cliquespec {

std::vector<int> Graph::degrees() const {
    std::vector<int> d(n, 0);
    for (auto [u, v] : edges) {
        ++d[u];
        ++d[v];
    }
    return d;
}

Graph make_graph(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 0) throw invalid_parameter("vertex count must be nonnegative");
    Graph g;
    g.n = n;
    g.adjacency.assign(n, std::vector<int>(n, 0));
    for (auto& [u, v] : edges) {
        if (u == v) throw invalid_parameter("self-loop " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n)
            throw invalid_parameter("vertex index out of range: (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") with n=" + std::to_string(n));
        if (g.adjacency[u][v])
            throw invalid_parameter("duplicate edge (" + std::to_string(u) + "," +
                                    std::to_string(v) + ")");
        g.adjacency[u][v] = g.adjacency[v][u] = 1;
    }
    std::sort(edges.begin(), edges.end());
    g.edges = std::move(edges);
    return g;
}

// ----------------------------------------------------------------- families

Graph empty_graph(int n) { return make_graph(n, {}); }

Graph complete_graph(int n) {
    if (n < 1) throw invalid_parameter("K_n needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return make_graph(n, std::move(e));
}

Graph path_graph(int n) {
    if (n < 1) throw invalid_parameter("P_n needs n >= 1");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return make_graph(n, std::move(e));
}

Graph cycle_graph(int n) {
    if (n < 3) throw invalid_parameter("C_n needs n >= 3");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return make_graph(n, std::move(e));
}

Graph complete_bipartite(int a, int b) { return complete_multipartite({a, b}); }

Graph complete_multipartite(const std::vector<int>& parts) {
    int n = 0;
    for (int p : parts) {
        if (p < 1) throw invalid_parameter("multipartite part sizes must be positive");
        n += p;
    }
    std::vector<int> part_of;
    for (size_t p = 0; p < parts.size(); ++p)
        part_of.insert(part_of.end(), parts[p], static_cast<int>(p));
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (part_of[i] != part_of[j]) e.emplace_back(i, j);
    return make_graph(n, std::move(e));
}

Graph star_graph(int leaves) {
    if (leaves < 1) throw invalid_parameter("star needs at least one leaf");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return make_graph(leaves + 1, std::move(e));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    std::vector<std::pair<int, int>> e = g.edges;
    for (auto [u, v] : h.edges) e.emplace_back(u + g.n, v + g.n);
    return make_graph(g.n + h.n, std::move(e));
}

Graph join(const Graph& g, const Graph& h) {
    std::vector<std::pair<int, int>> e = g.edges;
    for (auto [u, v] : h.edges) e.emplace_back(u + g.n, v + g.n);
    for (int u = 0; u < g.n; ++u)
        for (int v = 0; v < h.n; ++v) e.emplace_back(u, g.n + v);
    return make_graph(g.n + h.n, std::move(e));
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const int n = g.n * h.n;
    auto idx = [&](int a, int b) { return a * h.n + b; };
    std::vector<std::pair<int, int>> e;
    for (int a = 0; a < g.n; ++a)
        for (auto [u, v] : h.edges) e.emplace_back(idx(a, u), idx(a, v));
    for (auto [a, b] : g.edges)
        for (int u = 0; u < h.n; ++u) e.emplace_back(idx(a, u), idx(b, u));
    return make_graph(n, std::move(e));
}

Graph complement(const Graph& g) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < g.n; ++i)
        for (int j = i + 1; j < g.n; ++j)
            if (!g.adjacency[i][j]) e.emplace_back(i, j);
    return make_graph(g.n, std::move(e));
}

Graph line_graph(const Graph& g) {
    const int m = g.m();
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = g.edges[i];
            auto [c, d] = g.edges[j];
            if (a == c || a == d || b == c || b == d) e.emplace_back(i, j);
        }
    return make_graph(m, std::move(e));
}

Graph remove_edges(const Graph& g, const Graph& h) {
    if (h.n > g.n) throw invalid_parameter("remove_edges: subtrahend has more vertices");
    std::vector<std::pair<int, int>> e;
    for (auto [u, v] : g.edges)
        if (v >= h.n || !h.adjacency[u][v]) e.emplace_back(u, v);
    return make_graph(g.n, std::move(e));
}

Graph remove_matching(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size())
        throw invalid_parameter("remove_matching: sets of unequal size");
    std::set<std::pair<int, int>> drop;
    for (size_t i = 0; i < a.size(); ++i) {
        int u = a[i], v = b[i];
        if (u > v) std::swap(u, v);
        if (!g.has_edge(u, v))
            throw invalid_parameter("remove_matching: pair (" + std::to_string(u) + "," +
                                    std::to_string(v) + ") is not an edge");
        drop.insert({u, v});
    }
    std::vector<std::pair<int, int>> e;
    for (auto ed : g.edges)
        if (!drop.count(ed)) e.push_back(ed);
    return make_graph(g.n, std::move(e));
}

Graph permuted(const Graph& g, const std::vector<int>& perm) {
    std::vector<std::pair<int, int>> e;
    e.reserve(g.edges.size());
    for (auto [u, v] : g.edges) e.emplace_back(perm[u], perm[v]);
    return make_graph(g.n, std::move(e));
}

Graph build_named(const std::string& spec) {
    std::string name = spec;
    std::string params;
    if (auto pos = spec.find(':'); pos != std::string::npos) {
        name = spec.substr(0, pos);
        params = spec.substr(pos + 1);
    }
    std::vector<int> args;
    if (!params.empty()) {
        std::stringstream ss(params);
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                args.push_back(std::stoi(item));
            } catch (...) {
                throw invalid_parameter("bad family parameter '" + item + "'");
            }
        }
    }
    auto want = [&](size_t k) {
        if (args.size() != k)
            throw invalid_parameter("family '" + name + "' expects " + std::to_string(k) +
                                    " parameter(s)");
    };
    if (name == "complete" || name == "K") {
        want(1);
        return complete_graph(args[0]);
    }
    if (name == "empty") {
        want(1);
        return empty_graph(args[0]);
    }
    if (name == "path" || name == "P") {
        want(1);
        return path_graph(args[0]);
    }
    if (name == "cycle" || name == "C") {
        want(1);
        return cycle_graph(args[0]);
    }
    if (name == "star") {
        want(1);
        return star_graph(args[0]);
    }
    if (name == "complete_bipartite" || name == "KB") {
        want(2);
        return complete_bipartite(args[0], args[1]);
    }
    if (name == "complete_multipartite" || name == "KM") {
        if (args.empty()) throw invalid_parameter("multipartite needs part sizes");
        return complete_multipartite(args);
    }
    if (name == "prism") {
        want(1);
        return cartesian_product(complete_graph(args[0]), complete_graph(2));
    }
    throw invalid_parameter("unknown graph family '" + name + "'");
}

// ------------------------------------------------------------------- graph6

Graph parse_graph6(const std::string& text) {
    std::string s = text;
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    if (s.empty()) throw parse_error("graph6: empty input");
    size_t pos = 0;
    auto next = [&]() -> int {
        if (pos >= s.size()) throw parse_error("graph6: truncated input");
        const unsigned char c = static_cast<unsigned char>(s[pos++]);
        if (c < 63 || c > 126) throw parse_error("graph6: byte out of range at position " +
                                                 std::to_string(pos - 1));
        return c - 63;
    };
    long long n;
    int c0 = next();
    if (c0 < 63) {
        n = c0;
    } else {
        if (pos < s.size() && s[pos] == '~')
            throw parse_error("graph6: graphs beyond 258047 vertices are not supported");
        long long a = next(), b = next(), c = next();
        n = (a << 12) | (b << 6) | c;
    }
    if (n > 40) throw size_guard("graph6: n=" + std::to_string(n) + " exceeds the n<=40 guard");
    const long long nbits = n * (n - 1) / 2;
    const long long nchars = (nbits + 5) / 6;
    if (static_cast<long long>(s.size() - pos) != nchars)
        throw parse_error("graph6: expected " + std::to_string(nchars) + " data bytes, got " +
                          std::to_string(s.size() - pos));
    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    int cur = 0, avail = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            if (avail == 0) {
                cur = next();
                avail = 6;
            }
            if (cur & (1 << (avail - 1))) edges.emplace_back(i, j);
            --avail;
            ++bit;
        }
    if (avail > 0 && (cur & ((1 << avail) - 1)) != 0)
        throw parse_error("graph6: nonzero padding bits");
    return make_graph(static_cast<int>(n), std::move(edges));
}

std::string to_graph6(const Graph& g) {
    std::string out;
    if (g.n <= 62) {
        out.push_back(static_cast<char>(g.n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((g.n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((g.n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((g.n & 63) + 63));
    }
    int cur = 0, used = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) {
            cur = (cur << 1) | g.adjacency[i][j];
            if (++used == 6) {
                out.push_back(static_cast<char>(cur + 63));
                cur = used = 0;
            }
        }
    if (used) out.push_back(static_cast<char>((cur << (6 - used)) + 63));
    return out;
}

Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<bool>> seen;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string first;
        if (!(ls >> first)) continue;  // blank line
        if (n < 0) {
            int count;
            if (first != "n" || !(ls >> count) || count < 0)
                throw parse_error("line " + std::to_string(lineno) + ": expected header 'n <count>'");
            n = count;
            seen.assign(n, std::vector<bool>(n, false));
            continue;
        }
        int u, v;
        try {
            u = std::stoi(first);
        } catch (...) {
            throw parse_error("line " + std::to_string(lineno) + ": bad vertex '" + first + "'");
        }
        if (!(ls >> v)) throw parse_error("line " + std::to_string(lineno) + ": expected 'u v'");
        if (u == v) throw parse_error("line " + std::to_string(lineno) + ": self-loop " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw parse_error("line " + std::to_string(lineno) + ": vertex index out of range");
        int a = std::min(u, v), b = std::max(u, v);
        if (seen[a][b]) throw parse_error("line " + std::to_string(lineno) + ": duplicate edge");
        seen[a][b] = true;
        edges.emplace_back(a, b);
    }
    if (n < 0) throw parse_error("edge list: missing 'n <count>' header");
    return make_graph(n, std::move(edges));
}

std::string to_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "n " << g.n << "\n";
    for (auto [u, v] : g.edges) out << u << " " << v << "\n";
    return out.str();
}

Graph parse_graph(const std::string& text, GraphFormat format) {
    return format == GraphFormat::graph6 ? parse_graph6(text) : parse_edge_list(text);
}

// --------------------------------------------------------- clique machinery

namespace {

std::vector<uint64_t> adjacency_masks(const Graph& g) {
    std::vector<uint64_t> adj(g.n, 0);
    for (auto [u, v] : g.edges) {
        adj[u] |= 1ULL << v;
        adj[v] |= 1ULL << u;
    }
    return adj;
}

// Tomita-style maximum clique with a greedy coloring bound.
struct MaxCliqueSolver {
    const std::vector<uint64_t>& adj;
    int best = 0;

    explicit MaxCliqueSolver(const std::vector<uint64_t>& a) : adj(a) {}

    void expand(uint64_t cand, int size) {
        if (!cand) {
            best = std::max(best, size);
            return;
        }
        std::vector<int> order, color;
        uint64_t uncolored = cand;
        int c = 0;
        while (uncolored) {
            ++c;
            uint64_t avail = uncolored;
            while (avail) {
                int v = __builtin_ctzll(avail);
                order.push_back(v);
                color.push_back(c);
                uncolored &= ~(1ULL << v);
                avail &= ~(1ULL << v);
                avail &= ~adj[v];
            }
        }
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (size + color[i] <= best) return;
            const int v = order[i];
            expand(cand & adj[v], size + 1);
            cand &= ~(1ULL << v);
        }
    }
};

} // namespace

int clique_number(const Graph& g) {
    if (g.n > 40) throw size_guard("clique_number: n exceeds 40");
    if (g.n == 0) return 0;
    auto adj = adjacency_masks(g);
    MaxCliqueSolver solver(adj);
    uint64_t all = g.n == 64 ? ~0ULL : (1ULL << g.n) - 1;
    solver.expand(all, 0);
    return solver.best;
}

int independence_number(const Graph& g) {
    if (g.n > 40) throw size_guard("independence_number: n exceeds 40");
    return clique_number(complement(g));
}

bool is_connected(const Graph& g) {
    if (g.n == 0) return true;
    std::vector<int> stack = {0};
    std::vector<bool> seen(g.n, false);
    seen[0] = true;
    int count = 1;
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        for (int v = 0; v < g.n; ++v)
            if (g.adjacency[u][v] && !seen[v]) {
                seen[v] = true;
                ++count;
                stack.push_back(v);
            }
    }
    return count == g.n;
}

// ----------------------------------------------------- canonical form, iso

namespace {

struct CanonSearch {
    int n;
    int total_bits;
    const std::vector<uint64_t>& adj;
    uint64_t best = ~0ULL;
    bool best_set = false;
    std::vector<int> perm;
    uint64_t used = 0;

    CanonSearch(int n_, const std::vector<uint64_t>& a)
        : n(n_), total_bits(n_ * (n_ - 1) / 2), adj(a), perm(n_, -1) {}

    void dfs(int pos, uint64_t code, int bits) {
        if (best_set) {
            const uint64_t best_prefix = best >> (total_bits - bits);
            if (code > best_prefix) return;
        }
        if (pos == n) {
            best = code;
            best_set = true;
            return;
        }
        // Try candidates in increasing order of the bits they would append,
        // so the first completed branch is already a strong bound.
        std::vector<std::pair<uint64_t, int>> cands;
        for (int v = 0; v < n; ++v) {
            if (used & (1ULL << v)) continue;
            uint64_t nb = 0;
            for (int i = 0; i < pos; ++i)
                nb = (nb << 1) | ((adj[perm[i]] >> v) & 1ULL);
            cands.emplace_back(nb, v);
        }
        std::sort(cands.begin(), cands.end());
        for (auto [nb, v] : cands) {
            perm[pos] = v;
            used |= 1ULL << v;
            dfs(pos + 1, (code << pos) | nb, bits + pos);
            used &= ~(1ULL << v);
        }
    }
};

} // namespace

uint64_t canonical_code(const Graph& g) {
    if (g.n > 11) throw size_guard("canonical_code: n exceeds 11 (code would overflow 64 bits)");
    if (g.n < 2) return 0;
    auto adj = adjacency_masks(g);
    CanonSearch search(g.n, adj);
    search.dfs(0, 0, 0);
    return search.best;
}

std::vector<Graph> enumerate_graphs(int n, int m) {
    if (n > 8 || m > 8) throw size_guard("enumerate_graphs: desk-scale guard is n <= 8, m <= 8");
    if (n < 0 || m < 0) throw invalid_parameter("enumerate_graphs: negative parameter");
    std::vector<std::pair<int, int>> slots;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
    const int total = static_cast<int>(slots.size());
    if (m > total) return {};

    std::map<uint64_t, std::vector<std::pair<int, int>>> classes;
    std::vector<int> pick(m);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
        std::vector<std::pair<int, int>> edges;
        edges.reserve(m);
        for (int i : pick) edges.push_back(slots[i]);
        Graph g = make_graph(n, edges);
        const uint64_t code = canonical_code(g);
        classes.emplace(code, std::move(edges));

        // next combination
        int i = m - 1;
        while (i >= 0 && pick[i] == total - m + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < m; ++j) pick[j] = pick[j - 1] + 1;
    }
    std::vector<Graph> out;
    out.reserve(classes.size());
    for (auto& [code, edges] : classes) out.push_back(make_graph(n, edges));
    return out;
}

std::optional<std::vector<int>> subgraph_embedding(const Graph& h, const Graph& g) {
    if (g.n > 10) throw size_guard("subgraph_embedding: host graph exceeds 10 vertices");
    if (h.n > g.n) return std::nullopt;

    // Most-constrained-first: map high-degree pattern vertices early.
    std::vector<int> order(h.n);
    std::iota(order.begin(), order.end(), 0);
    auto hdeg = h.degrees();
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return hdeg[a] > hdeg[b]; });

    std::vector<int> map(h.n, -1);
    std::vector<bool> used(g.n, false);
    auto gdeg = g.degrees();

    auto dfs = [&](auto&& self, int pos) -> bool {
        if (pos == h.n) return true;
        const int hv = order[pos];
        for (int gv = 0; gv < g.n; ++gv) {
            if (used[gv] || gdeg[gv] < hdeg[hv]) continue;
            bool ok = true;
            for (int prev = 0; prev < pos && ok; ++prev) {
                const int hu = order[prev];
                if (h.adjacency[hv][hu] && !g.adjacency[gv][map[hu]]) ok = false;
            }
            if (!ok) continue;
            map[hv] = gv;
            used[gv] = true;
            if (self(self, pos + 1)) return true;
            used[gv] = false;
            map[hv] = -1;
        }
        return false;
    };
    if (!dfs(dfs, 0)) return std::nullopt;
    return map;
}

uint64_t automorphism_count(const Graph& g) {
    if (g.n > 8) throw size_guard("automorphism_count: n exceeds 8");
    auto deg = g.degrees();
    std::vector<int> perm(g.n, -1);
    std::vector<bool> used(g.n, false);
    uint64_t count = 0;
    auto dfs = [&](auto&& self, int pos) -> void {
        if (pos == g.n) {
            ++count;
            return;
        }
        for (int v = 0; v < g.n; ++v) {
            if (used[v] || deg[v] != deg[pos]) continue;
            bool ok = true;
            for (int prev = 0; prev < pos && ok; ++prev)
                if (g.adjacency[pos][prev] != g.adjacency[v][perm[prev]]) ok = false;
            if (!ok) continue;
            perm[pos] = v;
            used[v] = true;
            self(self, pos + 1);
            used[v] = false;
        }
    };
    dfs(dfs, 0);
    return count;
}

} // namespace cliquespec
