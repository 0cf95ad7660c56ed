#include "matchtoric/flow.hpp"

#include <algorithm>

#include "matchtoric/util.hpp"

namespace matchtoric {

BipartiteFlow flow_network_of_bipartite(const SimpleGraph& g) {
    std::vector<int> side;
    if (!is_bipartite(g, &side)) throw invalid_input("graph is not bipartite");
    BipartiteFlow out;
    for (int v = 1; v <= g.d; ++v)
        (side[v - 1] == 0 ? out.v1 : out.v2).push_back(v);

    FlowNetwork& net = out.network;
    const int v0 = g.d + 1;
    net.node_count = g.d + 1;
    for (auto [u, v] : g.edges) {
        if (side[u - 1] != 0) std::swap(u, v);
        net.arrows.emplace_back(u, v);
    }
    for (int i : out.v1) net.arrows.emplace_back(i, v0);
    for (int j : out.v2) net.arrows.emplace_back(v0, j);
    net.lower.assign(net.arrows.size(), 0);
    net.upper.assign(net.arrows.size(), 1);

    net.excess.assign(net.node_count, 0);
    for (int i : out.v1) net.excess[i - 1] = -1;
    for (int j : out.v2) net.excess[j - 1] = 1;
    net.excess[v0 - 1] =
        static_cast<int>(out.v1.size()) - static_cast<int>(out.v2.size());
    return out;
}

PointConfiguration flow_lattice_points(const FlowNetwork& net) {
    const int m = net.arrow_count();
    if (static_cast<int>(net.lower.size()) != m ||
        static_cast<int>(net.upper.size()) != m)
        throw invalid_input("flow bound vectors must match the arrow count");
    for (int a = 0; a < m; ++a) {
        auto [t, h] = net.arrows[a];
        if (t < 1 || t > net.node_count || h < 1 || h > net.node_count || t == h)
            throw invalid_input("flow arrow endpoints out of range");
        if (net.lower[a] > net.upper[a])
            throw invalid_input("flow arrow has empty bound interval");
    }
    if (static_cast<int>(net.excess.size()) != net.node_count)
        throw invalid_input("excess vector length differs from node count");

    // Assign arrows in order by DFS.  For each node track the current
    // inflow-minus-outflow and the interval it can still move by (sum of the
    // remaining arrows' bound intervals, signed by direction); prune when the
    // required excess falls outside.
    std::vector<int> cur(net.node_count, 0);
    std::vector<long long> fut_lo(net.node_count, 0), fut_hi(net.node_count, 0);
    auto contribute = [&](int a, int lo, int hi) {
        auto [t, h] = net.arrows[a];
        // Arrow value x adds +x at the head and -x at the tail.
        fut_lo[h - 1] += lo;
        fut_hi[h - 1] += hi;
        fut_lo[t - 1] -= hi;
        fut_hi[t - 1] -= lo;
    };
    for (int a = 0; a < m; ++a) contribute(a, net.lower[a], net.upper[a]);

    auto feasible = [&](int v) {
        long long need = net.excess[v] - cur[v];
        return fut_lo[v] <= need && need <= fut_hi[v];
    };

    std::vector<std::vector<int>> points;
    std::vector<int> x(m, 0);
    auto rec = [&](auto&& self, int a) -> void {
        if (a == m) {
            for (int v = 0; v < net.node_count; ++v)
                if (cur[v] != net.excess[v]) return;
            points.push_back(x);
            return;
        }
        auto [t, h] = net.arrows[a];
        contribute(a, -net.lower[a], -net.upper[a]);  // remove from "future"
        for (int val = net.lower[a]; val <= net.upper[a]; ++val) {
            x[a] = val;
            cur[t - 1] -= val;
            cur[h - 1] += val;
            if (feasible(t - 1) && feasible(h - 1)) self(self, a + 1);
            cur[t - 1] += val;
            cur[h - 1] -= val;
        }
        x[a] = 0;
        contribute(a, net.lower[a], net.upper[a]);  // restore
    };
    rec(rec, 0);

    // Ascending per-arrow values in DFS order yield lex-sorted points, which
    // may contain negative entries; PointConfiguration requires nonnegative
    // coordinates, so shift by the lower bounds (a lattice translation that
    // does not change the toric ideal).
    for (auto& p : points)
        for (int a = 0; a < m; ++a) p[a] = checked_sub(p[a], net.lower[a]);
    return PointConfiguration(m, std::move(points));
}

}  // namespace matchtoric
