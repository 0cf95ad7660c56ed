#include <algorithm>
#include <limits>
#include <set>

#include "groebner.hpp"
#include "matchtoric/toric.hpp"

namespace matchtoric {

namespace {

using detail::Exp;

MarkovMove move_from_pair(const Exp& a, const Exp& b, bool orient) {
    // canonical orientation: plus side lexicographically larger
    const Exp* plus = &a;
    const Exp* minus = &b;
    if (orient && b > a) std::swap(plus, minus);
    MarkovMove w;
    int deg = 0;
    for (std::size_t v = 0; v < plus->size(); ++v) {
        if ((*plus)[v]) w.plus.emplace_back(static_cast<int>(v) + 1, (*plus)[v]);
        if ((*minus)[v]) w.minus.emplace_back(static_cast<int>(v) + 1, (*minus)[v]);
        deg += (*plus)[v];
    }
    w.degree = deg;
    return w;
}

bool move_less(const MarkovMove& x, const MarkovMove& y) {
    return std::tie(x.degree, x.plus, x.minus) < std::tie(y.degree, y.plus, y.minus);
}

}  // namespace

MarkovBasis markov_basis(const PointConfiguration& a, const ToricBudget& budget) {
    int n = a.n();
    if (n > 192) throw invalid_input("too many points (limit 192)");
    auto kernel = lattice_kernel_basis(a);
    std::vector<std::pair<Exp, Exp>> gens;
    for (const auto& u : kernel) {
        Exp p(n, 0), m(n, 0);
        for (int i = 0; i < n; ++i) {
            if (u[i] > std::numeric_limits<int>::max() || u[i] < std::numeric_limits<int>::min())
                throw std::overflow_error("kernel entry exceeds exponent range");
            if (u[i] > 0) p[i] = static_cast<int>(u[i]);
            if (u[i] < 0) m[i] = static_cast<int>(-u[i]);
        }
        gens.emplace_back(std::move(p), std::move(m));
    }
    detail::GbCounters counters;
    for (int v = 0; v < n && !gens.empty(); ++v) {
        bool uses_v = false;
        for (const auto& [p, m] : gens)
            if (p[v] || m[v]) {
                uses_v = true;
                break;
            }
        // a variable absent from every generator is a nonzerodivisor modulo
        // the ideal, so that saturation step is the identity
        if (!uses_v) continue;
        gens = detail::saturation_round(std::move(gens), v, budget, counters);
    }
    MarkovBasis out;
    std::set<std::pair<Exp, Exp>> seen;
    for (auto& [p, m] : gens) {
        for (int v = 0; v < n; ++v) {  // the saturated ideal is prime: strip shared factors
            int c = std::min(p[v], m[v]);
            p[v] -= c;
            m[v] -= c;
        }
        if (p == m) continue;
        if (m > p) std::swap(p, m);
        if (seen.insert({p, m}).second) out.moves.push_back(move_from_pair(p, m, false));
    }
    std::sort(out.moves.begin(), out.moves.end(), move_less);
    return out;
}

std::vector<int> move_target(const PointConfiguration& a, const MarkovMove& w) {
    std::vector<int> t(a.ambient_dim, 0);
    for (auto [i, mult] : w.plus) {
        if (i < 1 || i > a.n()) throw invalid_input("move references a missing point");
        for (int c = 0; c < a.ambient_dim; ++c) {
            long long v = checked_add(t[c], checked_mul(mult, a.points[i - 1][c]));
            if (v > std::numeric_limits<int>::max())
                throw std::overflow_error("move target exceeds int range");
            t[c] = static_cast<int>(v);
        }
    }
    return t;
}

MinimalBasis minimalize(const MarkovBasis& b, const PointConfiguration& a) {
    MinimalBasis out;
    if (b.moves.empty()) {
        out.zero_ideal = true;
        out.basis.minimal = true;
        return out;
    }
    std::vector<MarkovMove> sorted = b.moves;
    std::sort(sorted.begin(), sorted.end(), move_less);
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    std::vector<MarkovMove> kept;
    std::size_t pos = 0;
    while (pos < sorted.size()) {
        int k = sorted[pos].degree;
        std::size_t end = pos;
        while (end < sorted.size() && sorted[end].degree == k) ++end;

        // fibers this degree can need generators at: exactly the targets of
        // the degree-k moves of any generating set
        std::map<std::vector<int>, std::vector<std::size_t>> by_target;
        for (std::size_t i = pos; i < end; ++i)
            by_target[move_target(a, sorted[i])].push_back(i);

        std::size_t kept_below = kept.size();  // moves of degree < k
        std::vector<MarkovMove> lower(kept.begin(), kept.begin() + kept_below);
        int added_this_degree = 0;
        for (const auto& [target, move_ids] : by_target) {
            Fiber f = fiber(a, target, k);
            std::vector<int> comp = fiber_components(a, f, lower);
            int components = comp.empty() ? 0 : 1 + *std::max_element(comp.begin(), comp.end());
            if (components <= 1) continue;

            // pick spanning moves among the candidates, in canonical order
            std::vector<int> root(components);
            for (int c = 0; c < components; ++c) root[c] = c;
            auto find = [&](int x) {
                while (root[x] != x) x = root[x] = root[root[x]];
                return x;
            };
            auto elem_index = [&](const std::vector<int>& e) {
                auto it = std::lower_bound(f.elements.begin(), f.elements.end(), e);
                if (it == f.elements.end() || *it != e)
                    throw std::logic_error("move endpoint missing from its fiber");
                return static_cast<int>(it - f.elements.begin());
            };
            int joined = 0;
            for (std::size_t i : move_ids) {
                std::vector<int> u, v;
                for (auto [p, m] : sorted[i].plus) u.insert(u.end(), m, p);
                for (auto [p, m] : sorted[i].minus) v.insert(v.end(), m, p);
                int cu = find(comp[elem_index(u)]);
                int cv = find(comp[elem_index(v)]);
                if (cu == cv) continue;
                root[cu] = cv;
                kept.push_back(sorted[i]);
                ++added_this_degree;
                if (++joined == components - 1) break;
            }
            if (joined != components - 1)
                throw invalid_input("input moves do not generate the toric ideal");
        }
        if (added_this_degree) out.degree_counts[k] += added_this_degree;
        pos = end;
    }
    std::sort(kept.begin(), kept.end(), move_less);
    out.basis.moves = std::move(kept);
    out.basis.minimal = true;
    if (out.degree_counts.empty()) {
        // given a generating input, no needed generator at any examined
        // degree forces the ideal to be zero
        out.zero_ideal = true;
        out.omega = 2;
    } else {
        out.omega = out.degree_counts.rbegin()->first;
    }
    return out;
}

OmegaResult exact_omega(const PointConfiguration& a, const ToricBudget& budget) {
    OmegaResult r;
    r.point_count = a.n();
    if (a.n() == 0) {
        r.empty_polytope = true;
        r.zero_ideal = true;
        r.omega = 2;
        return r;
    }
    MarkovBasis b = markov_basis(a, budget);
    r.minimal = minimalize(b, a);
    r.omega = r.minimal.omega;
    r.degree_counts = r.minimal.degree_counts;
    r.zero_ideal = r.minimal.zero_ideal;
    return r;
}

OmegaResult exact_omega(const SimpleGraph& g, SubsetKind kind, const ToricBudget& budget) {
    return exact_omega(lattice_points(g, kind), budget);
}

BlockOmega omega_via_blocks(const SimpleGraph& g, const ToricBudget& budget) {
    BlockOmega out;
    for (const auto& blk : blocks(g).block_edges) {
        SimpleGraph sub = edge_subgraph(g, blk);
        OmegaResult r = exact_omega(sub, SubsetKind::matchings, budget);
        out.block_results.emplace_back(blk, r.omega);
        out.omega = std::max(out.omega, r.omega);
    }
    return out;
}

}  // namespace matchtoric
