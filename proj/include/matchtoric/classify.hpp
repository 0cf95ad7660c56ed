#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "matchtoric/graph.hpp"
#include "matchtoric/toric.hpp"

namespace matchtoric {

// A graph is line perfect when it has no odd cycle of length >= 5 as a
// subgraph (equivalently, every block is bipartite, a K4 or a K_{1,1,n}).
// When it is not, odd_cycle holds a witness: the vertices of one odd cycle of
// length >= 5 in cycle order.
struct LinePerfect {
    bool line_perfect = false;
    std::vector<int> odd_cycle;
};
LinePerfect is_line_perfect(const SimpleGraph& g);

// An even theta: two vertices joined by three internally disjoint paths, each
// of even length >= 2.  Such a subgraph is exactly an odd subdivision of
// K_{2,3} (branch vertices a, b; on each path, any internal vertex at odd
// distance from a serves as a middle vertex).  paths[i] lists the vertices
// from a to b inclusive.
struct EvenTheta {
    int a = 0, b = 0;
    std::array<std::vector<int>, 3> paths;
};
std::optional<EvenTheta> find_even_theta(const SimpleGraph& g);

// Bipartite-only cross-check for find_even_theta: in a bipartite graph every
// path between two vertices of the same side is even, so an even theta exists
// iff some same-side pair is joined by three internally vertex-disjoint paths
// — a unit-capacity max-flow question.  Throws invalid_input on non-bipartite
// input.
bool has_even_theta_bipartite(const SimpleGraph& g);

// A subgraph of g isomorphic to an odd subdivision of one of the obstruction
// graphs G1..G6; its matching polytope forces omega >= 4.  (G7 and G8 are
// themselves odd subdivisions of G1, so they never need to be searched
// separately.)  lengths[i] is the (odd) length of the path replacing edge i
// of the pattern; embedding maps the vertices of
// odd_subdivision(named_graph(pattern), lengths) — pattern vertices first —
// to vertices of g, so the witness can be replayed with subgraph structure
// checks alone.
struct Degree4Obstruction {
    std::string pattern;       // "G1".."G6"
    std::vector<int> lengths;  // per pattern edge, odd, >= 1
    std::vector<int> embedding;
};
std::optional<Degree4Obstruction> find_degree4_obstruction(const SimpleGraph& g);

// Structural prediction for the maximal generator degree of the matching
// configuration:
//   - line perfect graphs have omega exactly 2, or exactly 3 when they
//     contain an odd subdivision of K_{2,3};
//   - a graph containing an odd subdivision of some G1..G8 has omega >= 4
//     (exhaustive for graphs with at most 7 vertices);
//   - otherwise no claim is made.
enum class PredictedOmega { two, three, at_least_four, unknown };
std::string to_string(PredictedOmega p);

struct Prediction {
    PredictedOmega kind = PredictedOmega::unknown;
    std::vector<int> odd_cycle;                     // set unless line perfect
    std::optional<EvenTheta> theta;                 // set when kind == three
    std::optional<Degree4Obstruction> obstruction;  // set when at_least_four
};
Prediction predicted_omega(const SimpleGraph& g);

// One row of the small-graph classification table.
struct ClassifyRow {
    std::string graph6;
    int vertices = 0;
    int edges = 0;
    bool connected = false;
    int matching_count = 0;
    bool line_perfect = false;
    bool even_theta = false;
    PredictedOmega predicted = PredictedOmega::unknown;
    std::optional<int> exact_omega;  // unset when skipped by the point budget
    bool consistent = true;          // exact agrees with prediction (or unset)
};

// Classify every graph on d vertices (in all_graphs order).  Exact omega is
// computed for graphs whose matching configuration has at most
// max_points_exact points (0 disables exact computation entirely).
std::vector<ClassifyRow> classify_small(int d, int max_points_exact,
                                        const ToricBudget& budget = {});

// The wheel family W4..W_{d_max}: odd wheels are line perfect predictions'
// complements (they contain obstructions), even wheels stay at omega 2.
struct WheelRow {
    int d = 0;
    int point_count = 0;
    PredictedOmega predicted = PredictedOmega::unknown;
    std::optional<int> exact_omega;
    bool consistent = true;
};
std::vector<WheelRow> wheel_experiment(int d_max, int max_points_exact,
                                       const ToricBudget& budget = {});

bool prediction_consistent(PredictedOmega predicted, int exact);

}  // namespace matchtoric
