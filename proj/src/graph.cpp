#include "matchtoric/graph.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>

namespace matchtoric {

SimpleGraph::SimpleGraph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
    : d(vertex_count), edges(std::move(edge_list)) {
    if (d < 0 || d > 62) throw invalid_input("vertex count must be in 0..62");
    std::set<std::pair<int, int>> seen;
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u < 1 || v > d) throw invalid_input("edge endpoint out of range");
        if (u == v) throw invalid_input("loops are not allowed");
        if (!seen.insert({u, v}).second) throw invalid_input("duplicate edge");
    }
}

bool SimpleGraph::has_edge(int u, int v) const { return edge_index(u, v) != 0; }

int SimpleGraph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    for (int i = 0; i < n(); ++i)
        if (edges[i].first == u && edges[i].second == v) return i + 1;
    return 0;
}

int SimpleGraph::degree(int v) const {
    int k = 0;
    for (auto& [a, b] : edges) k += (a == v || b == v);
    return k;
}

std::uint64_t SimpleGraph::adj_mask(int v) const {
    std::uint64_t m = 0;
    for (auto& [a, b] : edges) {
        if (a == v) m |= 1ull << (b - 1);
        if (b == v) m |= 1ull << (a - 1);
    }
    return m;
}

std::vector<std::uint64_t> SimpleGraph::adjacency() const {
    std::vector<std::uint64_t> adj(d, 0);
    for (auto& [a, b] : edges) {
        adj[a - 1] |= 1ull << (b - 1);
        adj[b - 1] |= 1ull << (a - 1);
    }
    return adj;
}

bool same_edge_set(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.d != b.d || a.n() != b.n()) return false;
    auto ea = a.edges, eb = b.edges;
    std::sort(ea.begin(), ea.end());
    std::sort(eb.begin(), eb.end());
    return ea == eb;
}

Multigraph::Multigraph(SimpleGraph b, std::vector<int> mult)
    : base(std::move(b)), multiplicity(std::move(mult)) {
    if (static_cast<int>(multiplicity.size()) != base.n())
        throw invalid_input("multiplicity size must equal edge count");
    for (int m : multiplicity)
        if (m < 0) throw invalid_input("multiplicity must be >= 0");
}

int Multigraph::copy_count() const {
    return std::accumulate(multiplicity.begin(), multiplicity.end(), 0);
}

int Multigraph::base_edge_of_copy(int c) const {
    for (int e = 1, acc = 0; e <= base.n(); ++e) {
        acc += multiplicity[e - 1];
        if (c <= acc) return e;
    }
    throw invalid_input("copy index out of range");
}

SimpleGraph Multigraph::line_graph() const {
    int nc = copy_count();
    if (nc > 62) throw invalid_input("too many edge copies for line graph");
    std::vector<int> owner(nc + 1);
    for (int c = 1; c <= nc; ++c) owner[c] = base_edge_of_copy(c);
    auto touch = [&](int e1, int e2) {
        if (e1 == e2) return true;  // parallel copies
        auto [a, b] = base.edges[e1 - 1];
        auto [c, dd] = base.edges[e2 - 1];
        return a == c || a == dd || b == c || b == dd;
    };
    std::vector<std::pair<int, int>> le;
    for (int i = 1; i <= nc; ++i)
        for (int j = i + 1; j <= nc; ++j)
            if (touch(owner[i], owner[j])) le.emplace_back(i, j);
    return SimpleGraph(nc, std::move(le));
}

namespace {

// DFS over positions 1..n choosing indicator 0 before 1 yields subsets in
// lexicographic indicator order.
void enum_rec(int pos, int n, std::uint64_t chosen, std::uint64_t blocked,
              const std::vector<std::uint64_t>& conflict, bool perfect_only,
              const std::vector<std::uint64_t>& item_cover, std::uint64_t full_cover,
              std::uint64_t cover_so_far, const std::vector<std::uint64_t>& cover_suffix,
              std::vector<std::uint64_t>& out) {
    if (pos > n) {
        if (!perfect_only || cover_so_far == full_cover) out.push_back(chosen);
        return;
    }
    if (perfect_only && (cover_so_far | cover_suffix[pos]) != full_cover) return;
    std::uint64_t bit = 1ull << (pos - 1);
    enum_rec(pos + 1, n, chosen, blocked, conflict, perfect_only, item_cover, full_cover,
             cover_so_far, cover_suffix, out);
    if (!(blocked & bit))
        enum_rec(pos + 1, n, chosen | bit, blocked | conflict[pos - 1], conflict, perfect_only,
                 item_cover, full_cover, cover_so_far | item_cover[pos - 1], cover_suffix, out);
}

}  // namespace

std::vector<std::uint64_t> enumerate_subsets(const SimpleGraph& g, SubsetKind kind) {
    int n;
    std::vector<std::uint64_t> conflict, item_cover;
    std::uint64_t full_cover = 0;
    if (kind == SubsetKind::stable_sets) {
        n = g.d;
        conflict = g.adjacency();
        item_cover.assign(n, 0);
    } else {
        n = g.n();
        conflict.assign(n, 0);
        item_cover.assign(n, 0);
        for (int i = 0; i < n; ++i) {
            auto [u, v] = g.edges[i];
            item_cover[i] = (1ull << (u - 1)) | (1ull << (v - 1));
            for (int j = 0; j < n; ++j) {
                if (j == i) continue;
                auto [a, b] = g.edges[j];
                if (a == u || a == v || b == u || b == v) conflict[i] |= 1ull << j;
            }
        }
        if (kind == SubsetKind::perfect_matchings)
            full_cover = g.d ? (~0ull >> (64 - g.d)) : 0;
    }
    bool perfect = kind == SubsetKind::perfect_matchings;
    std::vector<std::uint64_t> cover_suffix(n + 2, 0);
    for (int p = n; p >= 1; --p) cover_suffix[p] = cover_suffix[p + 1] | item_cover[p - 1];
    std::vector<std::uint64_t> out;
    if (perfect && g.d == 0) return out;  // no vertices: no perfect matching by convention
    enum_rec(1, n, 0, 0, conflict, perfect, item_cover, full_cover, 0, cover_suffix, out);
    return out;
}

SimpleGraph line_graph(const SimpleGraph& g) {
    int n = g.n();
    if (n > 62) throw invalid_input("too many edges for line graph");
    std::vector<std::pair<int, int>> le;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            auto [a, b] = g.edges[i - 1];
            auto [c, d] = g.edges[j - 1];
            if (a == c || a == d || b == c || b == d) le.emplace_back(i, j);
        }
    return SimpleGraph(n, std::move(le));
}

SimpleGraph vertex_replication(const SimpleGraph& g, const std::vector<int>& a) {
    if (static_cast<int>(a.size()) != g.d) throw invalid_input("replication vector size mismatch");
    std::vector<int> offset(g.d + 1, 0);
    for (int v = 1; v <= g.d; ++v) {
        if (a[v - 1] < 0) throw invalid_input("replication entries must be >= 0");
        offset[v] = offset[v - 1] + a[v - 1];
    }
    int total = offset[g.d];
    std::vector<std::pair<int, int>> es;
    for (int v = 1; v <= g.d; ++v)
        for (int i = 1; i <= a[v - 1]; ++i)
            for (int j = i + 1; j <= a[v - 1]; ++j)
                es.emplace_back(offset[v - 1] + i, offset[v - 1] + j);
    for (auto [u, v] : g.edges)
        for (int i = 1; i <= a[u - 1]; ++i)
            for (int j = 1; j <= a[v - 1]; ++j)
                es.emplace_back(offset[u - 1] + i, offset[v - 1] + j);
    return SimpleGraph(total, std::move(es));
}

Multigraph edge_replication(const SimpleGraph& g, std::vector<int> a) {
    return Multigraph(g, std::move(a));
}

BlockDecomposition blocks(const SimpleGraph& g) {
    // Hopcroft-Tarjan lowpoint DFS with an edge stack.
    BlockDecomposition out;
    int d = g.d;
    std::vector<std::vector<std::pair<int, int>>> inc(d + 1);  // (neighbor, edge index)
    for (int e = 1; e <= g.n(); ++e) {
        auto [u, v] = g.edges[e - 1];
        inc[u].push_back({v, e});
        inc[v].push_back({u, e});
    }
    std::vector<int> num(d + 1, 0), low(d + 1, 0);
    std::vector<char> is_cut(d + 1, 0);
    std::vector<int> estack;
    int timer = 0;

    struct Frame {
        int v, parent_edge;
        std::size_t next;
    };
    for (int root = 1; root <= d; ++root) {
        if (num[root]) continue;
        std::vector<Frame> stack{{root, 0, 0}};
        num[root] = low[root] = ++timer;
        int root_children = 0;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < inc[f.v].size()) {
                auto [w, e] = inc[f.v][f.next++];
                if (e == f.parent_edge) continue;
                if (!num[w]) {
                    estack.push_back(e);
                    num[w] = low[w] = ++timer;
                    if (f.v == root) ++root_children;
                    stack.push_back({w, e, 0});
                } else if (num[w] < num[f.v]) {
                    estack.push_back(e);
                    low[f.v] = std::min(low[f.v], num[w]);
                }
            } else {
                int v = f.v, pe = f.parent_edge;
                stack.pop_back();
                if (stack.empty()) break;
                int u = stack.back().v;
                low[u] = std::min(low[u], low[v]);
                if (low[v] >= num[u]) {
                    if (u != root) is_cut[u] = 1;
                    std::vector<int> blk;
                    while (!estack.empty()) {
                        int e = estack.back();
                        estack.pop_back();
                        blk.push_back(e);
                        if (e == pe) break;
                    }
                    std::sort(blk.begin(), blk.end());
                    out.block_edges.push_back(std::move(blk));
                }
            }
        }
        if (root_children > 1) is_cut[root] = 1;
    }
    std::sort(out.block_edges.begin(), out.block_edges.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  return a.front() < b.front();
              });
    for (int v = 1; v <= d; ++v)
        if (is_cut[v]) out.cut_vertices.push_back(v);
    return out;
}

SimpleGraph edge_subgraph(const SimpleGraph& g, const std::vector<int>& edge_indices,
                          std::vector<int>* vertex_map) {
    std::set<int> verts;
    for (int e : edge_indices) {
        if (e < 1 || e > g.n()) throw invalid_input("edge index out of range");
        verts.insert(g.edges[e - 1].first);
        verts.insert(g.edges[e - 1].second);
    }
    std::map<int, int> relabel;
    std::vector<int> vmap;
    for (int v : verts) {
        vmap.push_back(v);
        relabel[v] = static_cast<int>(vmap.size());
    }
    std::vector<std::pair<int, int>> es;
    for (int e : edge_indices)
        es.emplace_back(relabel[g.edges[e - 1].first], relabel[g.edges[e - 1].second]);
    if (vertex_map) *vertex_map = vmap;
    return SimpleGraph(static_cast<int>(vmap.size()), std::move(es));
}

SimpleGraph odd_subdivision(const SimpleGraph& g, const std::vector<int>& lengths) {
    if (static_cast<int>(lengths.size()) != g.n())
        throw invalid_input("lengths size must equal edge count");
    for (int l : lengths)
        if (l < 1 || l % 2 == 0) throw invalid_input("subdivision lengths must be odd and >= 1");
    int next = g.d;
    std::vector<std::pair<int, int>> es;
    for (int e = 0; e < g.n(); ++e) {
        auto [u, v] = g.edges[e];
        int prev = u;
        for (int s = 1; s < lengths[e]; ++s) {
            ++next;
            es.emplace_back(prev, next);
            prev = next;
        }
        es.emplace_back(prev, v);
    }
    return SimpleGraph(next, std::move(es));
}

SimpleGraph double_with_perfect_matching(const SimpleGraph& g) {
    std::vector<std::pair<int, int>> es = g.edges;
    for (auto [u, v] : g.edges) es.emplace_back(u + g.d, v + g.d);
    for (int v = 1; v <= g.d; ++v) es.emplace_back(v, v + g.d);
    return SimpleGraph(2 * g.d, std::move(es));
}

namespace {

bool extend_embedding(const SimpleGraph& host, const SimpleGraph& pattern,
                      const std::vector<int>& order, std::size_t pos, std::vector<int>& map,
                      std::uint64_t used, const std::vector<std::uint64_t>& hadj) {
    if (pos == order.size()) return true;
    int pv = order[pos];
    for (int hv = 1; hv <= host.d; ++hv) {
        if (used & (1ull << (hv - 1))) continue;
        if (host.degree(hv) < pattern.degree(pv)) continue;
        bool ok = true;
        for (auto [a, b] : pattern.edges) {
            int other = (a == pv) ? b : (b == pv ? a : 0);
            if (other && map[other - 1] &&
                !(hadj[hv - 1] & (1ull << (map[other - 1] - 1)))) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[pv - 1] = hv;
        if (extend_embedding(host, pattern, order, pos + 1, map, used | (1ull << (hv - 1)), hadj))
            return true;
        map[pv - 1] = 0;
    }
    return false;
}

}  // namespace

bool subgraph_contains(const SimpleGraph& host, const SimpleGraph& pattern,
                       std::vector<int>* embedding) {
    if (pattern.d > host.d || pattern.n() > host.n()) return false;
    // order pattern vertices: highest degree first, then prefer vertices
    // adjacent to already-placed ones (cuts the search early)
    std::vector<int> order;
    std::vector<char> placed(pattern.d + 1, 0);
    auto padj = pattern.adjacency();
    for (int step = 0; step < pattern.d; ++step) {
        int best = 0, best_key = -1;
        for (int v = 1; v <= pattern.d; ++v) {
            if (placed[v]) continue;
            int attached = 0;
            for (int u : order) attached += (padj[v - 1] >> (u - 1)) & 1;
            int key = attached * 100 + pattern.degree(v);
            if (key > best_key) {
                best_key = key;
                best = v;
            }
        }
        placed[best] = 1;
        order.push_back(best);
    }
    std::vector<int> map(pattern.d, 0);
    auto hadj = host.adjacency();
    if (!extend_embedding(host, pattern, order, 0, map, 0, hadj)) return false;
    if (embedding) *embedding = map;
    return true;
}

bool is_connected(const SimpleGraph& g) {
    if (g.d <= 1) return true;
    auto adj = g.adjacency();
    std::uint64_t seen = 1, frontier = 1;
    while (frontier) {
        std::uint64_t next = 0;
        for (int v = 0; v < g.d; ++v)
            if (frontier & (1ull << v)) next |= adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (~0ull >> (64 - g.d));
}

bool is_bipartite(const SimpleGraph& g, std::vector<int>* sides) {
    std::vector<int> col(g.d + 1, -1);
    auto adj = g.adjacency();
    for (int s = 1; s <= g.d; ++s) {
        if (col[s] != -1) continue;
        col[s] = 0;
        std::vector<int> queue{s};
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            for (int w = 1; w <= g.d; ++w) {
                if (!((adj[v - 1] >> (w - 1)) & 1)) continue;
                if (col[w] == -1) {
                    col[w] = 1 - col[v];
                    queue.push_back(w);
                } else if (col[w] == col[v]) {
                    return false;
                }
            }
        }
    }
    if (sides) sides->assign(col.begin() + 1, col.end());
    return true;
}

std::uint64_t canonical_code(const SimpleGraph& g) {
    if (g.d > 8) throw invalid_input("canonical_code supports at most 8 vertices");
    std::vector<int> perm(g.d);
    std::iota(perm.begin(), perm.end(), 1);
    std::uint64_t best = ~0ull;
    auto adj = g.adjacency();
    do {
        std::uint64_t code = 0;
        int bit = 0;
        bool worse = false;
        for (int j = 1; j < g.d && !worse; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if ((adj[perm[i] - 1] >> (perm[j] - 1)) & 1) {
                    code |= 1ull << bit;
                    if (code > best) worse = true;
                }
        if (!worse) best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (g.d == 0) best = 0;
    return (static_cast<std::uint64_t>(g.d) << 56) | best;
}

std::vector<SimpleGraph> all_graphs(int d) {
    if (d < 1 || d > 7) throw invalid_input("all_graphs supports 1..7 vertices");
    std::vector<SimpleGraph> cur{SimpleGraph(1, {})};
    for (int k = 2; k <= d; ++k) {
        std::set<std::uint64_t> seen;
        std::vector<SimpleGraph> next;
        for (const auto& g : cur) {
            for (std::uint64_t nb = 0; nb < (1ull << (k - 1)); ++nb) {
                auto es = g.edges;
                for (int v = 1; v < k; ++v)
                    if (nb & (1ull << (v - 1))) es.emplace_back(v, k);
                SimpleGraph h(k, std::move(es));
                if (seen.insert(canonical_code(h)).second) next.push_back(std::move(h));
            }
        }
        cur = std::move(next);
    }
    return cur;
}

SimpleGraph from_graph6(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    if (s.empty()) throw invalid_input("empty graph6 string");
    if (s[0] == '>') throw invalid_input("graph6 header not supported; pass the bare string");
    int d = s[0] - 63;
    if (d < 0 || d > 62) throw invalid_input("graph6: only the small format (<= 62 vertices)");
    int bits_needed = d * (d - 1) / 2;
    int bytes_needed = (bits_needed + 5) / 6;
    if (static_cast<int>(s.size()) != 1 + bytes_needed)
        throw invalid_input("graph6: wrong length");
    std::vector<std::pair<int, int>> es;
    int bit = 0;
    for (int j = 1; j < d; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int c = s[1 + bit / 6] - 63;
            if (c < 0 || c > 63) throw invalid_input("graph6: bad character");
            if ((c >> (5 - bit % 6)) & 1) es.emplace_back(i + 1, j + 1);
        }
    return SimpleGraph(d, std::move(es));
}

std::string to_graph6(const SimpleGraph& g) {
    std::string s(1, static_cast<char>(g.d + 63));
    int bits_needed = g.d * (g.d - 1) / 2;
    std::vector<int> bits(bits_needed, 0);
    int bit = 0;
    for (int j = 1; j < g.d; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (g.has_edge(i + 1, j + 1)) bits[bit] = 1;
    for (int b = 0; b < bits_needed; b += 6) {
        int c = 0;
        for (int k = 0; k < 6; ++k)
            if (b + k < bits_needed && bits[b + k]) c |= 1 << (5 - k);
        s.push_back(static_cast<char>(c + 63));
    }
    return s;
}

std::string to_dot(const SimpleGraph& g, std::string_view name) {
    std::string s = "graph " + std::string(name) + " {\n";
    for (int v = 1; v <= g.d; ++v) s += "  " + std::to_string(v) + ";\n";
    for (auto [u, v] : g.edges)
        s += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    s += "}\n";
    return s;
}

}  // namespace matchtoric
