#include <algorithm>
#include <thread>
#include <unordered_map>

#include "matchtoric/toric.hpp"

namespace matchtoric {

namespace {

struct UnionFind {
    std::vector<int> root;
    explicit UnionFind(int n) : root(n) {
        for (int i = 0; i < n; ++i) root[i] = i;
    }
    int find(int x) {
        while (root[x] != x) x = root[x] = root[root[x]];
        return x;
    }
    void unite(int a, int b) { root[find(a)] = find(b); }
    // component ids in first-appearance order
    std::vector<int> labels() {
        std::vector<int> id(root.size(), -1), out(root.size());
        int next = 0;
        for (std::size_t i = 0; i < root.size(); ++i) {
            int r = find(static_cast<int>(i));
            if (id[r] == -1) id[r] = next++;
            out[i] = id[r];
        }
        return out;
    }
};

// multiset difference size |u \ v| for ascending index lists
int exchange_size(const std::vector<int>& u, const std::vector<int>& v) {
    std::size_t i = 0, j = 0;
    int extra = 0;
    while (i < u.size() && j < v.size()) {
        if (u[i] == v[j]) {
            ++i, ++j;
        } else if (u[i] < v[j]) {
            ++extra, ++i;
        } else {
            ++j;
        }
    }
    return extra + static_cast<int>(u.size() - i);
}

// remove the move's plus side from element u (ascending index list); returns
// false if plus is not a sub-multiset
bool apply_move(const std::vector<int>& u, const MarkovMove& w, std::vector<int>& out) {
    out.clear();
    std::size_t i = 0;
    for (auto [p, mult] : w.plus) {
        int need = mult;
        while (i < u.size() && u[i] < p) out.push_back(u[i++]);
        while (i < u.size() && u[i] == p && need) ++i, --need;
        if (need) return false;
    }
    while (i < u.size()) out.push_back(u[i++]);
    for (auto [p, mult] : w.minus) out.insert(out.end(), mult, p);
    std::sort(out.begin(), out.end());
    return true;
}

void fiber_dfs(const PointConfiguration& a, std::vector<int>& residual, int remaining,
               int min_index, std::vector<int>& chosen,
               const std::vector<std::vector<int>>& suffix_max,
               std::vector<std::vector<int>>& out) {
    if (remaining == 0) {
        bool zero = true;
        for (int c : residual)
            if (c) {
                zero = false;
                break;
            }
        if (zero) out.push_back(chosen);
        return;
    }
    // remaining points (indices >= min_index) can contribute at most
    // remaining * suffix_max per coordinate
    for (int c = 0; c < a.ambient_dim; ++c) {
        long long cap = static_cast<long long>(remaining) * suffix_max[min_index - 1][c];
        if (residual[c] > cap) return;
    }
    for (int i = min_index; i <= a.n(); ++i) {
        const auto& p = a.points[i - 1];
        bool fits = true;
        for (int c = 0; c < a.ambient_dim; ++c)
            if (p[c] > residual[c]) {
                fits = false;
                break;
            }
        if (!fits) continue;
        for (int c = 0; c < a.ambient_dim; ++c) residual[c] -= p[c];
        chosen.push_back(i);
        fiber_dfs(a, residual, remaining - 1, i, chosen, suffix_max, out);
        chosen.pop_back();
        for (int c = 0; c < a.ambient_dim; ++c) residual[c] += p[c];
    }
}

std::vector<std::vector<int>> coordinate_suffix_max(const PointConfiguration& a) {
    // suffix_max[i][c] = max coordinate c over points with index > i (1-based)
    std::vector<std::vector<int>> sm(a.n() + 1, std::vector<int>(a.ambient_dim, 0));
    for (int i = a.n() - 1; i >= 0; --i)
        for (int c = 0; c < a.ambient_dim; ++c)
            sm[i][c] = std::max(sm[i + 1][c], a.points[i][c]);
    return sm;
}

}  // namespace

Fiber fiber(const PointConfiguration& a, const std::vector<int>& target, int degree) {
    if (static_cast<int>(target.size()) != a.ambient_dim)
        throw invalid_input("fiber target dimension mismatch");
    if (degree < 0) throw invalid_input("fiber degree must be >= 0");
    for (int c : target)
        if (c < 0) throw invalid_input("fiber target must be nonnegative");
    Fiber f;
    f.target = target;
    f.degree = degree;
    auto suffix_max = coordinate_suffix_max(a);
    std::vector<int> residual = target, chosen;
    fiber_dfs(a, residual, degree, 1, chosen, suffix_max, f.elements);
    return f;  // DFS emits ascending index lists in lex order
}

std::vector<int> fiber_components(const PointConfiguration& a, const Fiber& f,
                                  const std::vector<MarkovMove>& moves) {
    (void)a;
    int n = static_cast<int>(f.elements.size());
    UnionFind uf(n);
    std::unordered_map<std::vector<int>, int, vec_hash> index;
    index.reserve(f.elements.size() * 2);
    for (int i = 0; i < n; ++i) index.emplace(f.elements[i], i);
    std::vector<int> image;
    for (int i = 0; i < n; ++i)
        for (const MarkovMove& w : moves) {
            if (w.degree > f.degree) continue;
            if (!apply_move(f.elements[i], w, image)) continue;
            auto it = index.find(image);
            if (it == index.end())
                throw std::logic_error("move left the fiber");  // sums must match
            uf.unite(i, it->second);
        }
    return uf.labels();
}

std::vector<int> fiber_components_exchange(const Fiber& f, int r) {
    if (r < 0) throw invalid_input("exchange size must be >= 0");
    int n = static_cast<int>(f.elements.size());
    UnionFind uf(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (exchange_size(f.elements[i], f.elements[j]) <= r) uf.unite(i, j);
    return uf.labels();
}

namespace {

void all_multisets_dfs(const PointConfiguration& a, int remaining, int min_index,
                       std::vector<int>& chosen, long long budget, long long& seen,
                       std::unordered_map<std::vector<int>, std::vector<std::vector<int>>,
                                          vec_hash>& groups) {
    if (remaining == 0) {
        if (++seen > budget) throw budget_exceeded("multiset budget exceeded");
        std::vector<int> sum(a.ambient_dim, 0);
        for (int i : chosen)
            for (int c = 0; c < a.ambient_dim; ++c)
                sum[c] = static_cast<int>(checked_add(sum[c], a.points[i - 1][c]));
        groups[sum].push_back(chosen);
        return;
    }
    for (int i = min_index; i <= a.n(); ++i) {
        chosen.push_back(i);
        all_multisets_dfs(a, remaining - 1, i, chosen, budget, seen, groups);
        chosen.pop_back();
    }
}

}  // namespace

VerifyReport verify_omega_le(const PointConfiguration& a, int r, int max_degree,
                             long long multiset_budget, int threads) {
    if (r < 2) throw invalid_input("verify_omega_le needs r >= 2");
    if (threads < 1) throw invalid_input("thread count must be >= 1");
    VerifyReport rep;
    rep.r = r;
    rep.max_degree = max_degree;
    long long seen = 0;
    for (int k = r + 1; k <= max_degree; ++k) {
        std::unordered_map<std::vector<int>, std::vector<std::vector<int>>, vec_hash> groups;
        std::vector<int> chosen;
        try {
            all_multisets_dfs(a, k, 1, chosen, multiset_budget, seen, groups);
        } catch (const budget_exceeded&) {
            rep.complete = false;
            rep.multisets_seen = seen - 1;
            return rep;
        }
        std::vector<const std::vector<int>*> keys;
        keys.reserve(groups.size());
        for (const auto& [key, elems] : groups) keys.push_back(&key);
        std::sort(keys.begin(), keys.end(),
                  [](const std::vector<int>* x, const std::vector<int>* y) { return *x < *y; });

        std::vector<std::optional<DisconnectedFiber>> results(keys.size());
        auto work = [&](std::size_t begin, std::size_t end) {
            for (std::size_t t = begin; t < end; ++t) {
                Fiber f;
                f.target = *keys[t];
                f.degree = k;
                f.elements = groups.at(*keys[t]);
                std::sort(f.elements.begin(), f.elements.end());
                auto comp = fiber_components_exchange(f, r);
                for (std::size_t e = 0; e < comp.size(); ++e)
                    if (comp[e] != comp[0]) {
                        results[t] = DisconnectedFiber{f.target, k, f.elements[0],
                                                       f.elements[e]};
                        break;
                    }
            }
        };
        if (threads == 1 || keys.size() < 2) {
            work(0, keys.size());
        } else {
            std::vector<std::thread> pool;
            std::size_t chunk = (keys.size() + threads - 1) / threads;
            for (int t = 0; t < threads; ++t) {
                std::size_t b = std::min(keys.size(), t * chunk);
                std::size_t e = std::min(keys.size(), (t + 1) * chunk);
                if (b < e) pool.emplace_back(work, b, e);
            }
            for (auto& th : pool) th.join();
        }
        rep.fibers_checked[k] = static_cast<long long>(keys.size());
        for (auto& res : results)
            if (res) rep.failures.push_back(std::move(*res));
    }
    rep.multisets_seen = seen;
    return rep;
}

}  // namespace matchtoric
