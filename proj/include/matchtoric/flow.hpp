#pragma once

#include <utility>
#include <vector>

#include "matchtoric/graph.hpp"
#include "matchtoric/toric.hpp"

namespace matchtoric {

// A bounded integer flow network.  Nodes are 1..node_count; arrow a = (tail,
// head) carries an integer value x(a) with lower[a] <= x(a) <= upper[a].  A
// flow must satisfy, at every node v,
//
//     sum over arrows into v of x(a)  -  sum over arrows out of v of x(a)
//         = excess[v - 1].
//
// Lattice points of the flow polytope are exactly the integer flows.
struct FlowNetwork {
    int node_count = 0;
    std::vector<std::pair<int, int>> arrows;  // (tail, head), 1-based nodes
    std::vector<int> lower;                   // per arrow
    std::vector<int> upper;                   // per arrow
    std::vector<int> excess;                  // per node, inflow - outflow

    int arrow_count() const { return static_cast<int>(arrows.size()); }
};

// Flow network whose integer flows biject with the matchings of a bipartite
// graph g.  Let V1 = vertices coloured 0 by the bipartition (each component
// 2-coloured with its smallest vertex on side 0) and V2 the rest.  Nodes are
// the vertices of g plus an apex v0 = g.d + 1.  Arrows, in order:
//   - one arrow (i, j) with i in V1 per edge {i, j} of g, in edge order;
//   - slack arrows (i, v0) for i in V1 ascending;
//   - slack arrows (v0, j) for j in V2 ascending.
// All bounds are 0/1.  Excess is -1 on V1, +1 on V2 and |V1| - |V2| at v0
// (the unique value making the excesses sum to zero).  A matching M
// corresponds to the flow with x = 1 on the arrows of M's edges and slack
// value 1 - deg_M(v) at each vertex v.
struct BipartiteFlow {
    FlowNetwork network;
    std::vector<int> v1, v2;  // the two sides, ascending
};

// Throws invalid_input if g is not bipartite.
BipartiteFlow flow_network_of_bipartite(const SimpleGraph& g);

// All integer flows of n as a point configuration in Z^{arrow_count}.
// Coordinate a of a point is the value of arrow a (arrows in network order),
// so for a BipartiteFlow the first g.n() coordinates of a lattice point are
// the indicator of the corresponding matching.
PointConfiguration flow_lattice_points(const FlowNetwork& n);

}  // namespace matchtoric
