#include "matchtoric/coloring.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace matchtoric {

namespace {

// lexicographic order on indicator vectors (vertex 1 most significant)
bool mask_lex_less(std::uint64_t x, std::uint64_t y, int d) {
    for (int v = 0; v < d; ++v) {
        int xv = (x >> v) & 1, yv = (y >> v) & 1;
        if (xv != yv) return xv < yv;
    }
    return false;
}

}  // namespace

Coloring::Coloring(SimpleGraph base_graph, std::vector<int> copies, int palette,
                   std::vector<int> assignment)
    : base(std::move(base_graph)), a(std::move(copies)), k(palette),
      colors(std::move(assignment)) {
    if (static_cast<int>(a.size()) != base.d) throw invalid_input("copies size mismatch");
    for (int c : a)
        if (c < 0) throw invalid_input("copy counts must be >= 0");
    if (k < 0) throw invalid_input("palette size must be >= 0");
    if (static_cast<int>(colors.size()) != copy_count())
        throw invalid_input("color assignment size mismatch");
    for (int c : colors)
        if (c < 1 || c > k) throw invalid_input("color out of palette");
    SimpleGraph x = expansion();
    for (auto [u, v] : x.edges)
        if (colors[u - 1] == colors[v - 1])
            throw invalid_input(
                "coloring is not proper: adjacent copies " + std::to_string(u) + " and " +
                std::to_string(v) + " (of base vertices " + std::to_string(base_vertex(u)) +
                ", " + std::to_string(base_vertex(v)) + ") share color " +
                std::to_string(colors[u - 1]));
}

int Coloring::copy_count() const { return std::accumulate(a.begin(), a.end(), 0); }

int Coloring::expansion_vertex(int v, int c) const {
    if (v < 1 || v > base.d || c < 1 || c > a[v - 1])
        throw invalid_input("no such copy");
    int off = 0;
    for (int w = 1; w < v; ++w) off += a[w - 1];
    return off + c;
}

int Coloring::base_vertex(int x) const {
    int off = 0;
    for (int v = 1; v <= base.d; ++v) {
        off += a[v - 1];
        if (x <= off) return v;
    }
    throw invalid_input("expansion vertex out of range");
}

std::vector<int> Coloring::class_vertices(int ell) const {
    std::vector<int> out;
    for (int x = 1; x <= copy_count(); ++x)
        if (colors[x - 1] == ell) out.push_back(x);
    return out;
}

std::uint64_t Coloring::class_mask(int ell) const {
    std::uint64_t m = 0;
    for (int x = 1; x <= copy_count(); ++x)
        if (colors[x - 1] == ell) m |= 1ull << (base_vertex(x) - 1);
    return m;
}

Coloring edge_coloring(const Multigraph& m, int k, std::vector<int> per_copy_colors) {
    return Coloring(line_graph(m.base), m.multiplicity, k, std::move(per_copy_colors));
}

std::vector<int> ColorClassMultiset::multiplicity() const {
    std::vector<int> mult(base_d, 0);
    for (std::uint64_t cls : classes)
        for (int v = 0; v < base_d; ++v)
            if (cls & (1ull << v)) ++mult[v];
    return mult;
}

bool ColorClassMultiset::operator<(const ColorClassMultiset& o) const {
    if (base_d != o.base_d) return base_d < o.base_d;
    if (classes.size() != o.classes.size()) return classes.size() < o.classes.size();
    for (std::size_t i = 0; i < classes.size(); ++i)
        if (classes[i] != o.classes[i]) return mask_lex_less(classes[i], o.classes[i], base_d);
    return false;
}

ColorClassMultiset monomial_of_coloring(const Coloring& f) {
    ColorClassMultiset m;
    m.base_d = f.base.d;
    for (int ell = 1; ell <= f.k; ++ell) m.classes.push_back(f.class_mask(ell));
    std::sort(m.classes.begin(), m.classes.end(),
              [&](std::uint64_t x, std::uint64_t y) { return mask_lex_less(x, y, m.base_d); });
    return m;
}

Coloring coloring_of_monomial(const ColorClassMultiset& m, const SimpleGraph& base) {
    if (m.base_d != base.d) throw invalid_input("class multiset does not match the base");
    for (std::uint64_t cls : m.classes)
        for (auto [u, v] : base.edges)
            if ((cls >> (u - 1) & 1) && (cls >> (v - 1) & 1))
                throw invalid_input("class is not a stable set of the base");
    std::vector<int> a = m.multiplicity();
    std::vector<int> offset(base.d + 1, 0);
    for (int v = 1; v <= base.d; ++v) offset[v] = offset[v - 1] + a[v - 1];
    std::vector<int> colors(offset[base.d], 0);
    std::vector<int> next_copy(base.d, 0);
    for (int i = 0; i < m.k(); ++i)
        for (int v = 0; v < base.d; ++v)
            if (m.classes[i] & (1ull << v)) colors[offset[v] + next_copy[v]++] = i + 1;
    return Coloring(base, std::move(a), m.k(), std::move(colors));
}

std::vector<int> differing_classes(const Coloring& f, const Coloring& g) {
    if (f.base != g.base || f.a != g.a || f.k != g.k)
        throw invalid_input("colorings live on different replications or palettes");
    std::vector<int> out;
    for (int ell = 1; ell <= f.k; ++ell)
        if (f.class_vertices(ell) != g.class_vertices(ell)) out.push_back(ell);
    return out;
}

namespace {

// all multisets of `count` stable sets (masks) of `base` with the given
// per-vertex multiplicity, as ascending mask_lex sequences
void repartitions_rec(const std::vector<std::uint64_t>& stable, std::size_t min_idx,
                      std::vector<int>& residual, int count, std::vector<std::uint64_t>& cur,
                      std::vector<std::vector<std::uint64_t>>& out) {
    if (count == 0) {
        for (int r : residual)
            if (r) return;
        out.push_back(cur);
        return;
    }
    long long total = 0;
    for (int r : residual) total += r;
    if (total > static_cast<long long>(count) * 64) return;
    for (std::size_t i = min_idx; i < stable.size(); ++i) {
        std::uint64_t s = stable[i];
        bool fits = true;
        for (std::size_t v = 0; v < residual.size(); ++v)
            if ((s >> v & 1) && !residual[v]) {
                fits = false;
                break;
            }
        if (!fits) continue;
        for (std::size_t v = 0; v < residual.size(); ++v)
            if (s >> v & 1) --residual[v];
        cur.push_back(s);
        repartitions_rec(stable, i, residual, count - 1, cur, out);
        cur.pop_back();
        for (std::size_t v = 0; v < residual.size(); ++v)
            if (s >> v & 1) ++residual[v];
    }
}

std::vector<std::uint64_t> stable_sets_sorted(const SimpleGraph& base) {
    auto st = enumerate_subsets(base, SubsetKind::stable_sets);
    // already emitted in mask_lex order by enumerate_subsets
    return st;
}

}  // namespace

std::vector<Coloring> neighbors_r(const Coloring& f, int r) {
    std::vector<Coloring> out;
    if (r < 2 || f.k < 2) return out;
    int m = std::min(r, f.k);
    auto stable = stable_sets_sorted(f.base);

    std::vector<std::vector<int>> class_verts(f.k);
    for (int ell = 1; ell <= f.k; ++ell) class_verts[ell - 1] = f.class_vertices(ell);

    std::set<std::vector<int>> emitted;
    emitted.insert(f.colors);

    for (std::uint64_t sel = 1; sel < (1ull << f.k); ++sel) {
        int size = __builtin_popcountll(sel);
        if (size < 2 || size > m) continue;
        std::vector<int> labels;
        for (int ell = 1; ell <= f.k; ++ell)
            if (sel >> (ell - 1) & 1) labels.push_back(ell);
        std::vector<int> residual(f.base.d, 0);
        for (int ell : labels)
            for (int x : class_verts[ell - 1]) ++residual[f.base_vertex(x) - 1];

        std::vector<std::vector<std::uint64_t>> parts;
        std::vector<std::uint64_t> cur;
        repartitions_rec(stable, 0, residual, size, cur, parts);

        std::vector<std::vector<int>> freed(f.base.d);
        for (int ell : labels)
            for (int x : class_verts[ell - 1]) freed[f.base_vertex(x) - 1].push_back(x);
        for (auto& fv : freed) std::sort(fv.begin(), fv.end());

        for (const auto& part : parts) {
            std::vector<std::uint64_t> assign = part;
            std::sort(assign.begin(), assign.end());
            do {
                // labels[i] receives class assign[i]; enumerate every way to
                // hand the freed copies of each vertex to the labels that
                // need it (parallel-copy variants are distinct colorings)
                std::vector<std::vector<int>> need(f.base.d);
                for (std::size_t i = 0; i < labels.size(); ++i)
                    for (int v = 0; v < f.base.d; ++v)
                        if (assign[i] >> v & 1) need[v].push_back(labels[i]);
                bool feasible = true;
                for (int v = 0; v < f.base.d; ++v)
                    if (need[v].size() != freed[v].size()) feasible = false;
                if (!feasible) continue;

                std::vector<int> verts;  // groups with something to assign
                for (int v = 0; v < f.base.d; ++v)
                    if (!need[v].empty()) verts.push_back(v);
                std::vector<std::vector<int>> perms(verts.size());
                for (std::size_t t = 0; t < verts.size(); ++t) {
                    perms[t] = need[verts[t]];
                    std::sort(perms[t].begin(), perms[t].end());
                }
                // odometer over per-vertex permutations
                std::vector<std::vector<int>> state = perms;
                for (;;) {
                    std::vector<int> colors = f.colors;
                    for (std::size_t t = 0; t < verts.size(); ++t)
                        for (std::size_t j = 0; j < state[t].size(); ++j)
                            colors[freed[verts[t]][j] - 1] = state[t][j];
                    if (emitted.insert(colors).second)
                        out.emplace_back(f.base, f.a, f.k, std::move(colors));
                    std::size_t t = 0;
                    while (t < state.size() &&
                           !std::next_permutation(state[t].begin(), state[t].end()))
                        ++t;
                    if (t == state.size()) break;
                }
            } while (std::next_permutation(assign.begin(), assign.end()));
        }
    }
    return out;
}

Coloring kempe_switch(const Coloring& f, int i, int j, int seed) {
    if (i < 1 || i > f.k || j < 1 || j > f.k) throw invalid_input("color out of palette");
    if (seed < 1 || seed > f.copy_count()) throw invalid_input("seed vertex out of range");
    if (f.colors[seed - 1] != i && f.colors[seed - 1] != j)
        throw invalid_input("seed vertex does not carry either color");
    if (i == j) return f;
    SimpleGraph x = f.expansion();
    auto adj = x.adjacency();
    std::vector<char> in_comp(x.d + 1, 0);
    std::vector<int> queue{seed};
    in_comp[seed] = 1;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        for (int w = 1; w <= x.d; ++w) {
            if (!(adj[v - 1] >> (w - 1) & 1) || in_comp[w]) continue;
            if (f.colors[w - 1] == i || f.colors[w - 1] == j) {
                in_comp[w] = 1;
                queue.push_back(w);
            }
        }
    }
    std::vector<int> colors = f.colors;
    for (int v = 1; v <= x.d; ++v)
        if (in_comp[v]) colors[v - 1] = colors[v - 1] == i ? j : i;
    return Coloring(f.base, f.a, f.k, std::move(colors));
}

namespace {

bool colorable_rec(const SimpleGraph& g, const std::vector<std::uint64_t>& adj, int k, int v,
                   std::vector<int>& colors) {
    if (v > g.d) return true;
    int max_used = 0;
    for (int w = 1; w < v; ++w) max_used = std::max(max_used, colors[w - 1]);
    for (int c = 1; c <= std::min(k, max_used + 1); ++c) {  // symmetry: at most one new color
        bool ok = true;
        for (int w = 1; w < v; ++w)
            if ((adj[v - 1] >> (w - 1) & 1) && colors[w - 1] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        colors[v - 1] = c;
        if (colorable_rec(g, adj, k, v + 1, colors)) return true;
        colors[v - 1] = 0;
    }
    return false;
}

}  // namespace

int chromatic_number(const SimpleGraph& g) {
    if (g.d == 0) return 0;
    auto adj = g.adjacency();
    for (int k = 1; k <= g.d; ++k) {
        std::vector<int> colors(g.d, 0);
        if (colorable_rec(g, adj, k, 1, colors)) return k;
    }
    throw std::logic_error("chromatic number search failed");
}

namespace {

bool random_color_rec(const SimpleGraph& x, const std::vector<std::uint64_t>& adj, int k,
                      int v, std::vector<int>& colors, std::mt19937_64& rng) {
    if (v > x.d) return true;
    std::vector<int> order(k);
    std::iota(order.begin(), order.end(), 1);
    std::shuffle(order.begin(), order.end(), rng);
    for (int c : order) {
        bool ok = true;
        for (int w = 1; w < v; ++w)
            if ((adj[v - 1] >> (w - 1) & 1) && colors[w - 1] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        colors[v - 1] = c;
        if (random_color_rec(x, adj, k, v + 1, colors, rng)) return true;
        colors[v - 1] = 0;
    }
    return false;
}

}  // namespace

Coloring random_coloring(const SimpleGraph& base, const std::vector<int>& a, int k,
                         std::uint64_t seed) {
    SimpleGraph x = vertex_replication(base, a);
    auto adj = x.adjacency();
    std::mt19937_64 rng(seed);
    std::vector<int> colors(x.d, 0);
    if (!random_color_rec(x, adj, k, 1, colors, rng))
        throw invalid_input("graph admits no proper coloring with this palette");
    return Coloring(base, a, k, std::move(colors));
}

std::pair<Coloring, Coloring> g1_witness_pair() {
    Multigraph m = edge_replication(named_graph("G1"), std::vector<int>(8, 1));
    // palette 1=R 2=Y 3=B 4=G
    Coloring f = edge_coloring(m, 4, {1, 2, 3, 4, 3, 4, 2, 1});
    Coloring g = edge_coloring(m, 4, {1, 2, 3, 4, 2, 3, 1, 4});
    return {f, g};
}

std::pair<Coloring, Coloring> g2_witness_pair() {
    Multigraph m = edge_replication(named_graph("G2"), std::vector<int>(9, 1));
    Coloring f = edge_coloring(m, 4, {2, 3, 1, 4, 3, 2, 4, 2, 1});
    Coloring g = edge_coloring(m, 4, {4, 2, 1, 2, 3, 3, 4, 1, 2});
    return {f, g};
}

std::pair<Coloring, Coloring> g3_doubled_witness_pair() {
    std::vector<int> mult(10, 1);
    mult[9] = 2;  // edge {5,6}
    Multigraph m = edge_replication(named_graph("G3"), mult);
    Coloring f = edge_coloring(m, 4, {2, 4, 1, 4, 3, 2, 3, 1, 1, 2, 4});
    Coloring g = edge_coloring(m, 4, {1, 4, 2, 3, 4, 3, 1, 1, 4, 2, 3});
    return {f, g};
}

}  // namespace matchtoric
