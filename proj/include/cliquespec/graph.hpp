#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cliquespec {

// Simple undirected graph on vertices 0..n-1. Immutable by convention:
// all operations build new graphs. Edges are kept sorted with u < v, and
// the dense adjacency matrix is maintained alongside.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> adjacency;

    int m() const { return static_cast<int>(edges.size()); }
    bool has_edge(int u, int v) const { return u != v && adjacency[u][v] != 0; }
    std::vector<int> degrees() const;
};

// Checked constructor: rejects self-loops, duplicates, out-of-range indices.
Graph make_graph(int n, std::vector<std::pair<int, int>> edges);

// -- named families ---------------------------------------------------------

Graph empty_graph(int n);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);          // n >= 3
Graph complete_bipartite(int a, int b);
Graph complete_multipartite(const std::vector<int>& parts);
Graph star_graph(int leaves);      // K_{1,t}, center is vertex 0

Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);
Graph cartesian_product(const Graph& g, const Graph& h);  // (a,b) -> a*|V(h)|+b
Graph complement(const Graph& g);
Graph line_graph(const Graph& g);  // vertex i of L_G is edge i of g

// K_n \ H for H on the same vertex set; more generally deletes E(h) from g.
Graph remove_edges(const Graph& g, const Graph& h);

// Removes the perfect matching a[i]-b[i]; the sets must have equal size.
Graph remove_matching(const Graph& g, const std::vector<int>& a, const std::vector<int>& b);

// Named-family construction from a "name:params" string (CLI front end).
Graph build_named(const std::string& spec);

// -- serialization -----------------------------------------------------------

Graph parse_graph6(const std::string& text);
std::string to_graph6(const Graph& g);

// Header line "n <count>", then one "u v" pair per line.
Graph parse_edge_list(const std::string& text);
std::string to_edge_list(const Graph& g);

enum class GraphFormat { graph6, edge_list };
Graph parse_graph(const std::string& text, GraphFormat format);

// -- invariants and search ----------------------------------------------------

// Exact alpha(G) by branch and bound over cliques of the complement; n <= 40.
int independence_number(const Graph& g);

// Size of the largest clique; same machinery as independence_number.
int clique_number(const Graph& g);

bool is_connected(const Graph& g);

// Minimum adjacency bit-string over all vertex orders (column-major upper
// triangle, the graph6 bit order). Usable as an isomorphism key; n <= 11.
uint64_t canonical_code(const Graph& g);

// All graphs with n vertices and m edges up to isomorphism; n <= 8, m <= 8.
std::vector<Graph> enumerate_graphs(int n, int m);

// Injection of V(h) into V(g) mapping edges to edges (not induced); both
// graphs at most 10 vertices. Returns one witness embedding if it exists.
std::optional<std::vector<int>> subgraph_embedding(const Graph& h, const Graph& g);

// Number of adjacency-preserving vertex permutations; brute force, n <= 8.
uint64_t automorphism_count(const Graph& g);

Graph permuted(const Graph& g, const std::vector<int>& perm);  // u -> perm[u]

} // namespace cliquespec
