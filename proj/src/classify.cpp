#include "matchtoric/classify.hpp"

#include <algorithm>
#include <array>
#include <queue>
#include <stdexcept>

#include "matchtoric/util.hpp"

namespace matchtoric {

namespace {

bool is_k4(const SimpleGraph& h) { return h.d == 4 && h.n() == 6; }

// K_{1,1,n}, n >= 1: two adjacent hubs joined to every other vertex, the
// other vertices pairwise nonadjacent (degree 2). Includes K3 (n = 1).
bool is_k11n(const SimpleGraph& h) {
    if (h.d < 3 || h.n() != 2 * h.d - 3) return false;
    for (int a = 1; a <= h.d; ++a) {
        if (h.degree(a) != h.d - 1) continue;
        for (int b = a + 1; b <= h.d; ++b) {
            if (h.degree(b) != h.d - 1 || !h.has_edge(a, b)) continue;
            bool ok = true;
            for (int v = 1; v <= h.d && ok; ++v) {
                if (v == a || v == b) continue;
                ok = h.degree(v) == 2 && h.has_edge(a, v) && h.has_edge(b, v);
            }
            if (ok) return true;
        }
    }
    return false;
}

// Simple cycle of odd length >= 5 (vertex list in cycle order), or empty.
// Iterative deepening on the exact length keeps the search cheap when a
// short witness exists; each cycle is rooted at its smallest vertex.
std::vector<int> find_odd_cycle5(const SimpleGraph& g) {
    const auto adj = g.adjacency();
    std::vector<int> path;
    auto dfs = [&](auto&& self, int s, int len, std::uint64_t used) -> bool {
        const int cur = path.back();
        if (static_cast<int>(path.size()) == len)
            return (adj[cur - 1] >> (s - 1)) & 1;
        for (int w = s + 1; w <= g.d; ++w) {
            if (!((adj[cur - 1] >> (w - 1)) & 1)) continue;
            if ((used >> (w - 1)) & 1) continue;
            path.push_back(w);
            if (self(self, s, len, used | (1ULL << (w - 1)))) return true;
            path.pop_back();
        }
        return false;
    };
    for (int len = 5; len <= g.d; len += 2)
        for (int s = 1; s + len <= g.d + 1; ++s) {
            path.assign(1, s);
            if (dfs(dfs, s, len, 1ULL << (s - 1))) return path;
        }
    return {};
}

}  // namespace

LinePerfect is_line_perfect(const SimpleGraph& g) {
    LinePerfect out;
    out.line_perfect = true;
    for (const auto& blk : blocks(g).block_edges) {
        SimpleGraph h = edge_subgraph(g, blk);
        if (is_bipartite(h) || is_k4(h) || is_k11n(h)) continue;
        out.line_perfect = false;
        break;
    }
    if (!out.line_perfect) {
        out.odd_cycle = find_odd_cycle5(g);
        // The two characterizations are equivalent, so a block outside the
        // three families guarantees a witness cycle.
        if (out.odd_cycle.empty())
            throw std::logic_error("block shape and odd cycle search disagree");
    }
    return out;
}

namespace {

// Three internally disjoint even paths from a to b, avoiding `blocked`
// internally. paths[idx..2] are filled on success.
bool theta_from(const SimpleGraph& g, const std::vector<std::uint64_t>& adj,
                int a, int b, std::uint64_t blocked, int idx, EvenTheta& out) {
    if (idx == 3) return true;
    std::vector<int>& path = out.paths[idx];
    path.assign(1, a);
    auto dfs = [&](auto&& self, std::uint64_t used) -> bool {
        const int cur = path.back();
        for (int w = 1; w <= g.d; ++w) {
            if (!((adj[cur - 1] >> (w - 1)) & 1)) continue;
            if (w == b) {
                if (path.size() % 2 != 0) continue;  // closing edge makes length odd
                path.push_back(b);
                std::uint64_t internal = used & ~(1ULL << (a - 1));
                if (theta_from(g, adj, a, b, blocked | internal, idx + 1, out))
                    return true;
                path.pop_back();
                continue;
            }
            if (((used | blocked) >> (w - 1)) & 1) continue;
            if (w == a) continue;
            path.push_back(w);
            if (self(self, used | (1ULL << (w - 1)))) return true;
            path.pop_back();
        }
        return false;
    };
    return dfs(dfs, 1ULL << (a - 1));
}

}  // namespace

std::optional<EvenTheta> find_even_theta(const SimpleGraph& g) {
    const auto adj = g.adjacency();
    for (int a = 1; a <= g.d; ++a)
        for (int b = a + 1; b <= g.d; ++b) {
            if (g.degree(a) < 3 || g.degree(b) < 3) continue;
            EvenTheta t;
            t.a = a;
            t.b = b;
            if (theta_from(g, adj, a, b, 0, 0, t)) return t;
        }
    return std::nullopt;
}

namespace {

// Unit-capacity max flow (at most `want` augmentations) on a small directed
// graph given by an adjacency list with residual capacities.
struct UnitFlow {
    int n;
    std::vector<std::vector<int>> head;  // per node: indices into to/cap
    std::vector<int> to, cap;

    explicit UnitFlow(int nodes) : n(nodes), head(nodes) {}

    void arc(int u, int v) {
        head[u].push_back(static_cast<int>(to.size()));
        to.push_back(v);
        cap.push_back(1);
        head[v].push_back(static_cast<int>(to.size()));
        to.push_back(u);
        cap.push_back(0);
    }

    int max_flow(int s, int t, int want) {
        int flow = 0;
        while (flow < want) {
            std::vector<int> pred(n, -1);  // arc used to reach node
            std::queue<int> q;
            q.push(s);
            std::vector<char> seen(n, 0);
            seen[s] = 1;
            while (!q.empty() && !seen[t]) {
                int u = q.front();
                q.pop();
                for (int e : head[u]) {
                    if (cap[e] == 0 || seen[to[e]]) continue;
                    seen[to[e]] = 1;
                    pred[to[e]] = e;
                    q.push(to[e]);
                }
            }
            if (!seen[t]) break;
            for (int v = t; v != s; v = to[pred[v] ^ 1]) {
                cap[pred[v]] -= 1;
                cap[pred[v] ^ 1] += 1;
            }
            ++flow;
        }
        return flow;
    }
};

}  // namespace

bool has_even_theta_bipartite(const SimpleGraph& g) {
    std::vector<int> side;
    if (!is_bipartite(g, &side)) throw invalid_input("graph is not bipartite");
    // Menger: three internally vertex-disjoint a-b paths for some same-side
    // pair; in a bipartite graph such paths are automatically even.
    for (int a = 1; a <= g.d; ++a)
        for (int b = a + 1; b <= g.d; ++b) {
            if (side[a - 1] != side[b - 1]) continue;
            if (g.degree(a) < 3 || g.degree(b) < 3) continue;
            // Node 2v = "in", 2v+1 = "out" (0-based v); the in->out arc of
            // capacity 1 enforces vertex-disjointness for internal vertices.
            // Source a_out and sink b_in skip their own capacity arcs.
            UnitFlow f(2 * g.d);
            for (int v = 1; v <= g.d; ++v)
                if (v != a && v != b) f.arc(2 * (v - 1), 2 * (v - 1) + 1);
            for (auto [u, v] : g.edges) {
                f.arc(2 * (u - 1) + 1, 2 * (v - 1));
                f.arc(2 * (v - 1) + 1, 2 * (u - 1));
            }
            if (f.max_flow(2 * (a - 1) + 1, 2 * (b - 1), 3) >= 3) return true;
        }
    return false;
}

namespace {

constexpr std::array<const char*, 6> kObstructionPatterns = {"G1", "G2", "G3",
                                                             "G4", "G5", "G6"};

std::optional<Degree4Obstruction> try_pattern(const SimpleGraph& g,
                                              const char* name) {
    SimpleGraph p = named_graph(name);
    const int extra_vertices = g.d - p.d;
    if (extra_vertices < 0) return std::nullopt;
    std::vector<int> lens(p.n(), 1);
    std::optional<Degree4Obstruction> found;
    // Lengths in lex order, so the un-subdivided pattern is tried first.
    auto rec = [&](auto&& self, int e, int budget) -> bool {
        if (e == p.n()) {
            SimpleGraph s = odd_subdivision(p, lens);
            if (s.n() > g.n()) return false;
            std::vector<int> emb;
            if (!subgraph_contains(g, s, &emb)) return false;
            found = Degree4Obstruction{name, lens, emb};
            return true;
        }
        for (int len = 1; len - 1 <= budget; len += 2) {
            lens[e] = len;
            if (self(self, e + 1, budget - (len - 1))) return true;
        }
        lens[e] = 1;
        return false;
    };
    rec(rec, 0, extra_vertices);
    return found;
}

}  // namespace

std::optional<Degree4Obstruction> find_degree4_obstruction(const SimpleGraph& g) {
    for (const char* name : kObstructionPatterns)
        if (auto ob = try_pattern(g, name)) return ob;
    return std::nullopt;
}

std::string to_string(PredictedOmega p) {
    switch (p) {
        case PredictedOmega::two: return "2";
        case PredictedOmega::three: return "3";
        case PredictedOmega::at_least_four: return ">=4";
        case PredictedOmega::unknown: return "unknown";
    }
    return "unknown";
}

Prediction predicted_omega(const SimpleGraph& g) {
    Prediction p;
    LinePerfect lp = is_line_perfect(g);
    if (lp.line_perfect) {
        p.theta = find_even_theta(g);
        p.kind = p.theta ? PredictedOmega::three : PredictedOmega::two;
        return p;
    }
    p.odd_cycle = lp.odd_cycle;
    p.obstruction = find_degree4_obstruction(g);
    p.kind = p.obstruction ? PredictedOmega::at_least_four : PredictedOmega::unknown;
    return p;
}

bool prediction_consistent(PredictedOmega predicted, int exact) {
    switch (predicted) {
        case PredictedOmega::two: return exact == 2;
        case PredictedOmega::three: return exact == 3;
        case PredictedOmega::at_least_four: return exact >= 4;
        case PredictedOmega::unknown: return true;
    }
    return true;
}

std::vector<ClassifyRow> classify_small(int d, int max_points_exact,
                                        const ToricBudget& budget) {
    std::vector<ClassifyRow> rows;
    for (const SimpleGraph& g : all_graphs(d)) {
        ClassifyRow row;
        row.graph6 = to_graph6(g);
        row.vertices = g.d;
        row.edges = g.n();
        row.connected = is_connected(g);
        row.matching_count =
            static_cast<int>(enumerate_subsets(g, SubsetKind::matchings).size());
        Prediction p = predicted_omega(g);
        row.line_perfect = p.kind == PredictedOmega::two || p.kind == PredictedOmega::three;
        row.even_theta = row.line_perfect ? p.theta.has_value()
                                          : find_even_theta(g).has_value();
        row.predicted = p.kind;
        if (max_points_exact > 0 && row.matching_count <= max_points_exact) {
            row.exact_omega = exact_omega(g, SubsetKind::matchings, budget).omega;
            row.consistent = prediction_consistent(row.predicted, *row.exact_omega);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<WheelRow> wheel_experiment(int d_max, int max_points_exact,
                                       const ToricBudget& budget) {
    std::vector<WheelRow> rows;
    for (int d = 4; d <= d_max; ++d) {
        SimpleGraph w = named_graph("W" + std::to_string(d));
        WheelRow row;
        row.d = d;
        row.point_count =
            static_cast<int>(enumerate_subsets(w, SubsetKind::matchings).size());
        row.predicted = predicted_omega(w).kind;
        if (max_points_exact > 0 && row.point_count <= max_points_exact) {
            row.exact_omega = exact_omega(w, SubsetKind::matchings, budget).omega;
            row.consistent = prediction_consistent(row.predicted, *row.exact_omega);
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace matchtoric
