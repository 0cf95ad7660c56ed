#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "matchtoric/graph.hpp"
#include "matchtoric/toric.hpp"

namespace matchtoric {

// Proper k-coloring of a replication of a base graph. Everything downstream
// (edge colorings of multigraphs included) is phrased this way: a proper
// k-edge-coloring of a multigraph is a vertex coloring of its line graph,
// whose vertex set is the edge copies.
//
// Expansion vertex order: copies of base vertex 1, then 2, ... (the order of
// vertex_replication). colors[i] in 1..k colors expansion vertex i+1; the
// palette need not be used in full.
struct Coloring {
    SimpleGraph base;
    std::vector<int> a;  // copies per base vertex, >= 0
    int k = 0;
    std::vector<int> colors;

    Coloring() = default;
    Coloring(SimpleGraph base_graph, std::vector<int> copies, int palette,
             std::vector<int> assignment);

    SimpleGraph expansion() const { return vertex_replication(base, a); }
    int copy_count() const;
    // expansion vertex index of copy c (1-based) of base vertex v
    int expansion_vertex(int v, int c) const;
    // base vertex owning expansion vertex x
    int base_vertex(int x) const;
    // expansion vertices of color ell, ascending
    std::vector<int> class_vertices(int ell) const;
    // base vertices hit by color ell as a mask (a stable set of base)
    std::uint64_t class_mask(int ell) const;

    bool operator==(const Coloring&) const = default;
};

// Edge coloring of a multigraph, encoded on the line graph: base is
// line_graph(m.base), copies are m.multiplicity, per_copy_colors follows the
// (edge index, copy) order.
Coloring edge_coloring(const Multigraph& m, int k, std::vector<int> per_copy_colors);

// The monomial of a coloring: the multiset of its k color classes, each the
// stable set of base vertices it covers (empty classes allowed). Canonical
// order: ascending in lexicographic indicator order over base vertices.
struct ColorClassMultiset {
    int base_d = 0;
    std::vector<std::uint64_t> classes;  // sorted canonically

    int k() const { return static_cast<int>(classes.size()); }
    std::vector<int> multiplicity() const;  // copies of each base vertex

    bool operator==(const ColorClassMultiset&) const = default;
    bool operator<(const ColorClassMultiset& o) const;
};

ColorClassMultiset monomial_of_coloring(const Coloring& f);

// Canonical coloring with the given classes: class i gets color i; within a
// group, copies are handed to the classes containing that vertex in class
// order. Inverse of monomial_of_coloring up to those conventions.
Coloring coloring_of_monomial(const ColorClassMultiset& m, const SimpleGraph& base);

// Colors whose classes differ as expansion vertex sets (same base, copies
// and palette required). Ascending.
std::vector<int> differing_classes(const Coloring& f, const Coloring& g);

// Every proper coloring obtained from f by re-partitioning the union of a
// set S of classes, 2 <= |S| <= r, into |S| labelled classes; f itself is
// excluded and duplicates are suppressed. Deterministic order. r <= 1 gives
// an empty stream (re-partitioning one class returns it unchanged).
std::vector<Coloring> neighbors_r(const Coloring& f, int r);

// Swap colors i, j on the connected component of the i/j-colored subgraph of
// the expansion containing seed (an expansion vertex colored i or j).
// i == j returns f unchanged.
Coloring kempe_switch(const Coloring& f, int i, int j, int seed);

int chromatic_number(const SimpleGraph& g);

// Proper coloring found by seeded randomized backtracking; throws if the
// graph has no proper k-coloring. Deterministic for a fixed seed.
Coloring random_coloring(const SimpleGraph& base, const std::vector<int>& a, int k,
                         std::uint64_t seed);

enum class EquivOutcome { equivalent, not_equivalent, different_fibers, budget_exceeded };

struct EquivStep {
    std::vector<int> colors;    // full assignment after the step
    std::vector<int> changed;   // labels differing from the previous step
};

// Replayable witness: steps[0] is f; each later step is proper and differs
// from its predecessor exactly on `changed` (at most r labels); relabelling
// the last step with color c -> relabel[c-1] gives g exactly.
struct EquivCertificate {
    std::vector<EquivStep> steps;
    std::vector<int> relabel;
};

struct EquivResult {
    EquivOutcome outcome = EquivOutcome::not_equivalent;
    long long states_explored = 0;
    std::optional<EquivCertificate> certificate;
};

// BFS over class multisets reachable from f by re-partitioning up to r
// classes at a time; sound and complete for r >= 2 (label and parallel-copy
// symmetries are themselves 2-moves). r == 1 degenerates to equality of
// colorings. Every k-coloring of the same replication with the same k lies
// in one fiber; different_fibers is returned when the palettes or class
// unions disagree.
EquivResult decide_equiv_r(const Coloring& f, const Coloring& g, int r,
                           long long state_budget = 10'000'000);

// Certificate replay: consistency of every step (propriety, changed-set
// bounds, step size <= r) plus the final relabelling; used by tests and the
// CLI after deserialization.
bool check_certificate(const EquivCertificate& c, const Coloring& f, const Coloring& g, int r,
                       std::string* why = nullptr);

// The bundled witness pair on G1: two proper 4-edge-colorings that are
// equivalent under 4-class exchanges but not under 3-class exchanges.
std::pair<Coloring, Coloring> g1_witness_pair();
// Witness pair on G2 with the same property.
std::pair<Coloring, Coloring> g2_witness_pair();
// Witness pair on G3 with its middle rung doubled.
std::pair<Coloring, Coloring> g3_doubled_witness_pair();

}  // namespace matchtoric
