#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "matchtoric/util.hpp"

namespace matchtoric {

// Finite simple graph. Vertices are 1..d. The edge list order is part of the
// value: subsets, lattice points and colorings all index into it. Each edge is
// stored with first < second; at most 62 vertices so vertex and edge subsets
// fit in a 64-bit mask (bit v-1 for vertex v, bit e-1 for edge e).
struct SimpleGraph {
    int d = 0;
    std::vector<std::pair<int, int>> edges;

    SimpleGraph() = default;
    SimpleGraph(int vertex_count, std::vector<std::pair<int, int>> edge_list);

    int n() const { return static_cast<int>(edges.size()); }
    bool has_edge(int u, int v) const;
    // 1-based index of {u,v} in the edge list, or 0 if absent.
    int edge_index(int u, int v) const;
    int degree(int v) const;
    // adjacency mask of v over vertices (bit w-1 set iff {v,w} is an edge)
    std::uint64_t adj_mask(int v) const;
    std::vector<std::uint64_t> adjacency() const;

    bool operator==(const SimpleGraph&) const = default;
};

// Same vertex count and same edge set, ignoring edge list order.
bool same_edge_set(const SimpleGraph& a, const SimpleGraph& b);

// Multigraph with a fixed simple base: copy i of edge e is expansion
// vertex/eindex (prefix(e) + i). Multiplicities may be 0 (edge dropped).
struct Multigraph {
    SimpleGraph base;
    std::vector<int> multiplicity;  // size base.n(), entries >= 0

    Multigraph() = default;
    Multigraph(SimpleGraph b, std::vector<int> mult);

    int copy_count() const;
    // copy order: all copies of edge 1, then edge 2, ... ; returns the base
    // edge index (1-based) of expansion copy c (1-based).
    int base_edge_of_copy(int c) const;
    // Line graph of the multigraph: one vertex per edge copy in copy order;
    // two copies adjacent iff they share a base endpoint or are parallel.
    // Edge order: pairs (i,j), i<j, lexicographically ascending.
    SimpleGraph line_graph() const;
};

enum class SubsetKind { matchings, perfect_matchings, stable_sets };

// All subsets of the given kind as bit masks (edge masks for matchings,
// vertex masks for stable sets), in lexicographic order of the indicator
// vector (coordinate 1 most significant), so the empty set comes first.
// perfect_matchings never includes the empty set (empty result if d odd or
// no perfect matching exists).
std::vector<std::uint64_t> enumerate_subsets(const SimpleGraph& g, SubsetKind kind);

// Line graph of a simple graph: vertex i = edge i of g; edges are the pairs
// (i,j), i<j, lex ascending, with g.edges[i], g.edges[j] sharing an endpoint.
SimpleGraph line_graph(const SimpleGraph& g);

// Replace vertex v by a clique on a[v-1] >= 0 vertices, complete joins across
// base edges. Vertex order: group of 1, group of 2, ...; edge order: clique
// edges per group (groups ascending, pairs lex), then cross edges per base
// edge in base edge order (pairs lex).
SimpleGraph vertex_replication(const SimpleGraph& g, const std::vector<int>& a);

// Multigraph with multiplicity a[e-1] on edge e.
Multigraph edge_replication(const SimpleGraph& g, std::vector<int> a);

struct BlockDecomposition {
    // Edge index sets of the biconnected blocks, each sorted ascending;
    // blocks sorted by smallest edge index. Every edge is in exactly one
    // block; isolated vertices contribute nothing.
    std::vector<std::vector<int>> block_edges;
    std::vector<int> cut_vertices;  // sorted ascending
};
BlockDecomposition blocks(const SimpleGraph& g);

// Graph on the vertices touched by the given edges, relabelled 1..k in
// ascending order of the original labels; edge order follows edge_indices.
// vertex_map (optional out) sends new label -> original label.
SimpleGraph edge_subgraph(const SimpleGraph& g, const std::vector<int>& edge_indices,
                          std::vector<int>* vertex_map = nullptr);

// Subdivide edge e into a path of odd length lengths[e-1] >= 1. New vertices
// are appended after d in base edge order; within an edge, in path order from
// the smaller endpoint to the larger. Result edge order: per base edge in
// order, its path edges in path order.
SimpleGraph odd_subdivision(const SimpleGraph& g, const std::vector<int>& lengths);

// Two disjoint copies of g (second copy shifted by d) plus the perfect
// matching {v, v+d}. Edge order: copy-one edges, copy-two edges, then
// matching edges for v = 1..d.
SimpleGraph double_with_perfect_matching(const SimpleGraph& g);

// Catalog of named graphs with pinned vertex/edge ordering:
//   G1..G8   the eight minimal obstructions (G1 = wheel on 5 vertices with
//            its own fixed edge order; G7, G8 odd subdivisions of G1)
//   Wd       wheel: rim cycle 1..d-1, hub d (W4, W5, ...)
//   Kd       complete graph, lex edge order (single digit)
//   Kmn      complete bipartite, parts {1..m}, {m+1..m+n} (two digits, K23)
//   K11n     K_{1,1,n}: apexes 1,2, middles 3..n+2 ("K11" + digits)
//   Cd, Pd   cycle / path on d vertices
SimpleGraph named_graph(std::string_view name);

// True iff pattern embeds injectively into host preserving edges (subgraph,
// not necessarily induced). embedding (optional out): pattern vertex v maps
// to host vertex embedding[v-1].
bool subgraph_contains(const SimpleGraph& host, const SimpleGraph& pattern,
                       std::vector<int>* embedding = nullptr);

bool is_connected(const SimpleGraph& g);
// 2-coloring sides[v-1] in {0,1} if bipartite
bool is_bipartite(const SimpleGraph& g, std::vector<int>* sides = nullptr);

// Canonical invariant for isomorphism on d <= 8: minimum over all vertex
// permutations of the upper-triangle adjacency bits, packed with (1,2) as the
// lowest bit, prefixed by d.
std::uint64_t canonical_code(const SimpleGraph& g);

// All isomorphism classes on exactly d vertices (d <= 7), one representative
// each, built by extending the (d-1)-vertex classes; deterministic order.
std::vector<SimpleGraph> all_graphs(int d);

// graph6 (small format, d <= 62); vertices are shifted to 1-based. Edge order
// after decoding: column-major upper triangle, the format's bit order.
SimpleGraph from_graph6(std::string_view s);
std::string to_graph6(const SimpleGraph& g);

std::string to_dot(const SimpleGraph& g, std::string_view name = "G");

}  // namespace matchtoric
