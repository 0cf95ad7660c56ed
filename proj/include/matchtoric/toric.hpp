#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "matchtoric/graph.hpp"
#include "matchtoric/util.hpp"

namespace matchtoric {

// Finite set of distinct nonnegative integer points, lexicographically sorted
// ascending. The toric machinery works with the homogenized columns (p, 1),
// so every monomial is graded by the number of points counted with
// multiplicity.
struct PointConfiguration {
    int ambient_dim = 0;
    std::vector<std::vector<int>> points;

    PointConfiguration() = default;
    PointConfiguration(int dim, std::vector<std::vector<int>> pts);

    int n() const { return static_cast<int>(points.size()); }
    // coordinate sum of point i (1-based)
    long long point_degree(int i) const;
};

// Indicator vectors of the chosen subsets as a point configuration; the
// ambient is edge space for matchings / perfect matchings and vertex space
// for stable sets. Order matches enumerate_subsets (lex ascending).
PointConfiguration lattice_points(const SimpleGraph& g, SubsetKind kind);

PointConfiguration config_from_masks(const std::vector<std::uint64_t>& masks, int ambient_dim);

// Exchange move on multisets of points: replace the plus sub-multiset by the
// minus one (both stored sparse, 1-based point indices, ascending, disjoint
// supports). Both sides have the same size (degree) and the same point sum.
struct MarkovMove {
    std::vector<std::pair<int, int>> plus, minus;
    int degree = 0;

    bool operator==(const MarkovMove&) const = default;
};

struct MarkovBasis {
    std::vector<MarkovMove> moves;
    bool minimal = false;
};

// Basis of the integer kernel of the homogenized point matrix (rows span
// { u : sum_i u_i * (p_i, 1) = 0 }), computed by integer row reduction.
std::vector<std::vector<long long>> lattice_kernel_basis(const PointConfiguration& a);

struct ToricBudget {
    long long max_pairs = 20'000'000;   // s-pairs processed across all rounds
    long long max_basis = 1'000'000;    // generators alive in one round
};

// Generating set of the toric ideal of the configuration: the lattice-basis
// ideal saturated by every variable in index order (reduced Groebner basis
// per round, degree-compatible reverse lex with the saturating variable
// cheapest). Deterministic: identical input gives an identical basis.
MarkovBasis markov_basis(const PointConfiguration& a, const ToricBudget& budget = {});

struct MinimalBasis {
    MarkovBasis basis;                // one spanning move set, minimal
    std::map<int, int> degree_counts; // degree -> number of minimal generators
    int omega = 2;                    // top generator degree; 2 when the ideal is zero
    bool zero_ideal = false;
};

// Filter a generating set down to a minimal one, degree by degree: at degree
// k a fiber needs (components - 1) moves, where components are taken under
// all moves of degree < k. The per-degree counts do not depend on the chosen
// generating set.
MinimalBasis minimalize(const MarkovBasis& b, const PointConfiguration& a);

struct OmegaResult {
    int omega = 2;
    std::map<int, int> degree_counts;
    bool zero_ideal = false;
    bool empty_polytope = false;  // no lattice points at all (convention: omega 2)
    int point_count = 0;
    MinimalBasis minimal;  // empty when empty_polytope
};

// End-to-end: compute a Markov basis of the configuration and minimalize.
OmegaResult exact_omega(const PointConfiguration& a, const ToricBudget& budget = {});
// Same, starting from the lattice points of a graph.
OmegaResult exact_omega(const SimpleGraph& g, SubsetKind kind, const ToricBudget& budget = {});

struct BlockOmega {
    int omega = 2;
    // (block edge indices, omega of that block's matching configuration)
    std::vector<std::pair<std::vector<int>, int>> block_results;
};

// Max of exact_omega over the biconnected blocks: the matching polytope's
// generator degrees localize to blocks, so the top degree is the max over
// blocks (2 for a graph with no block, e.g. no edges).
BlockOmega omega_via_blocks(const SimpleGraph& g, const ToricBudget& budget = {});

// All multisets of points of the given size whose homogenized sum equals
// (target, degree). Elements are ascending index lists, lex sorted.
struct Fiber {
    std::vector<int> target;
    int degree = 0;
    std::vector<std::vector<int>> elements;
};

Fiber fiber(const PointConfiguration& a, const std::vector<int>& target, int degree);
std::vector<int> move_target(const PointConfiguration& a, const MarkovMove& w);

// Component id per fiber element (ids assigned in first-appearance order).
// Move mode: u ~ v when some move (or its reverse) maps u to v.
std::vector<int> fiber_components(const PointConfiguration& a, const Fiber& f,
                                  const std::vector<MarkovMove>& moves);
// Exchange mode: u ~ v when they differ in at most r points.
std::vector<int> fiber_components_exchange(const Fiber& f, int r);

struct DisconnectedFiber {
    std::vector<int> target;
    int degree = 0;
    std::vector<int> u, v;  // elements in different components
};

struct VerifyReport {
    int r = 0;
    int max_degree = 0;
    bool complete = true;  // false when the multiset budget truncated the scan
    long long multisets_seen = 0;
    std::map<int, long long> fibers_checked;
    std::vector<DisconnectedFiber> failures;

    bool ok() const { return failures.empty(); }
};

// Evidence that omega <= r on degrees r < k <= max_degree: every fiber of
// those degrees must be connected under exchange of at most r points.
// A complete pass is a proof for those degrees only (evidence, not a proof
// of the unbounded statement).
VerifyReport verify_omega_le(const PointConfiguration& a, int r, int max_degree,
                             long long multiset_budget = 50'000'000, int threads = 1);

}  // namespace matchtoric
