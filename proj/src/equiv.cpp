#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "matchtoric/coloring.hpp"

namespace matchtoric {

namespace {

// shared vocabulary for states: stable sets of the base in enumeration
// (lex) order; a state is the sorted list of 1-based indices of the k class
// stable sets
struct StableIndex {
    PointConfiguration config;
    std::unordered_map<std::uint64_t, int> index_of_mask;

    explicit StableIndex(const SimpleGraph& base)
        : config(lattice_points(base, SubsetKind::stable_sets)) {
        auto masks = enumerate_subsets(base, SubsetKind::stable_sets);
        for (std::size_t i = 0; i < masks.size(); ++i)
            index_of_mask[masks[i]] = static_cast<int>(i) + 1;
    }
};

std::vector<int> state_of(const Coloring& f, const StableIndex& si) {
    std::vector<int> s;
    for (int ell = 1; ell <= f.k; ++ell) s.push_back(si.index_of_mask.at(f.class_mask(ell)));
    std::sort(s.begin(), s.end());
    return s;
}

// multiset difference a \ b of sorted index lists
std::vector<int> multiset_diff(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::size_t i = 0, j = 0;
    while (i < a.size()) {
        if (j < b.size() && a[i] == b[j]) {
            ++i, ++j;
        } else if (j < b.size() && b[j] < a[i]) {
            ++j;
        } else {
            out.push_back(a[i++]);
        }
    }
    return out;
}

struct NeighborGen {
    const StableIndex& si;
    int r;
    std::map<std::vector<int>, Fiber> fiber_memo;  // key: target ++ [size]

    const Fiber& mini_fiber(const std::vector<int>& target, int m) {
        std::vector<int> key = target;
        key.push_back(m);
        auto it = fiber_memo.find(key);
        if (it == fiber_memo.end())
            it = fiber_memo.emplace(key, fiber(si.config, target, m)).first;
        return it->second;
    }

    // all distinct states reachable from s in one exchange of 2..r classes
    std::vector<std::vector<int>> neighbors(const std::vector<int>& s) {
        int k = static_cast<int>(s.size());
        int cap = std::min(r, k);
        std::set<std::vector<int>> out;
        // distinct values with counts
        std::vector<std::pair<int, int>> vals;
        for (int x : s) {
            if (!vals.empty() && vals.back().first == x)
                ++vals.back().second;
            else
                vals.emplace_back(x, 1);
        }
        std::vector<int> take(vals.size(), 0);
        // enumerate sub-multisets T with 2 <= |T| <= cap
        auto rec = [&](auto&& self, std::size_t pos, int size) -> void {
            if (pos == vals.size()) {
                if (size < 2) return;
                std::vector<int> t_list, rest = s;
                for (std::size_t q = 0; q < vals.size(); ++q)
                    for (int c = 0; c < take[q]; ++c) t_list.push_back(vals[q].first);
                rest = multiset_diff(s, t_list);
                std::vector<int> target(si.config.ambient_dim, 0);
                for (int idx : t_list)
                    for (int c = 0; c < si.config.ambient_dim; ++c)
                        target[c] += si.config.points[idx - 1][c];
                const Fiber& fb = mini_fiber(target, size);
                for (const auto& repl : fb.elements) {
                    std::vector<int> ns = rest;
                    ns.insert(ns.end(), repl.begin(), repl.end());
                    std::sort(ns.begin(), ns.end());
                    if (ns != s) out.insert(std::move(ns));
                }
                return;
            }
            for (int c = 0; c <= std::min(vals[pos].second, cap - size); ++c) {
                take[pos] = c;
                self(self, pos + 1, size + c);
            }
            take[pos] = 0;
        };
        rec(rec, 0, 0);
        return {out.begin(), out.end()};
    }
};

// canonical copy handout: labels in `which` (ascending) re-own the freed
// copies of each group in that order
std::vector<int> reassign_copies(const Coloring& cur, const std::vector<int>& which,
                                 const std::vector<std::uint64_t>& new_masks,
                                 const StableIndex& si) {
    (void)si;
    std::vector<int> colors = cur.colors;
    std::vector<std::vector<int>> freed(cur.base.d);
    for (std::size_t i = 0; i < which.size(); ++i)
        for (int x : cur.class_vertices(which[i])) freed[cur.base_vertex(x) - 1].push_back(x);
    for (auto& fv : freed) std::sort(fv.begin(), fv.end());
    std::vector<int> ptr(cur.base.d, 0);
    for (std::size_t i = 0; i < which.size(); ++i)
        for (int v = 0; v < cur.base.d; ++v)
            if (new_masks[i] >> v & 1) colors[freed[v][ptr[v]++] - 1] = which[i];
    return colors;
}

std::vector<int> changed_labels(const Coloring& a, const Coloring& b) {
    std::vector<int> out;
    for (int ell = 1; ell <= a.k; ++ell)
        if (a.class_vertices(ell) != b.class_vertices(ell)) out.push_back(ell);
    return out;
}

// realize the state path as labelled colorings starting at f, then fix
// copies and labels so the last step relabels exactly onto g
EquivCertificate build_certificate(const Coloring& f, const Coloring& g,
                                   const std::vector<std::vector<int>>& path,
                                   const StableIndex& si) {
    auto masks = enumerate_subsets(f.base, SubsetKind::stable_sets);
    EquivCertificate cert;
    cert.steps.push_back({f.colors, {}});
    Coloring cur = f;
    for (std::size_t step = 1; step < path.size(); ++step) {
        std::vector<int> d_minus = multiset_diff(path[step - 1], path[step]);
        std::vector<int> d_plus = multiset_diff(path[step], path[step - 1]);
        // labels currently holding the outgoing classes, smallest labels first
        std::vector<int> pool = d_minus, which;
        for (int ell = 1; ell <= cur.k && !pool.empty(); ++ell) {
            int p = si.index_of_mask.at(cur.class_mask(ell));
            auto it = std::find(pool.begin(), pool.end(), p);
            if (it != pool.end()) {
                pool.erase(it);
                which.push_back(ell);
            }
        }
        if (!pool.empty()) throw std::logic_error("certificate path is inconsistent");
        std::vector<std::uint64_t> new_masks;
        for (int idx : d_plus) new_masks.push_back(masks[idx - 1]);
        Coloring next(cur.base, cur.a, cur.k, reassign_copies(cur, which, new_masks, si));
        cert.steps.push_back({next.colors, changed_labels(cur, next)});
        cur = std::move(next);
    }
    // label matching: relabel[ell-1] = color of g whose class point equals
    // cur's class point of ell (greedy, smallest available)
    std::vector<int> cur_pt(cur.k + 1), g_pt(cur.k + 1);
    for (int ell = 1; ell <= cur.k; ++ell) {
        cur_pt[ell] = si.index_of_mask.at(cur.class_mask(ell));
        g_pt[ell] = si.index_of_mask.at(g.class_mask(ell));
    }
    std::vector<int> relabel(cur.k, 0);
    std::vector<char> used(cur.k + 1, 0);
    for (int ell = 1; ell <= cur.k; ++ell)
        for (int m = 1; m <= cur.k; ++m)
            if (!used[m] && g_pt[m] == cur_pt[ell]) {
                relabel[ell - 1] = m;
                used[m] = 1;
                break;
            }
    for (int ell = 1; ell <= cur.k; ++ell)
        if (!relabel[ell - 1]) throw std::logic_error("class points do not match the goal");
    // copy fixing: align cur with g pulled back through the relabelling
    std::vector<int> inverse(cur.k + 1, 0);
    for (int ell = 1; ell <= cur.k; ++ell) inverse[relabel[ell - 1]] = ell;
    std::vector<int> target(cur.colors.size());
    for (std::size_t x = 0; x < target.size(); ++x) target[x] = inverse[g.colors[x]];
    for (;;) {
        int x = -1;
        for (std::size_t i = 0; i < target.size(); ++i)
            if (cur.colors[i] != target[i]) {
                x = static_cast<int>(i);
                break;
            }
        if (x == -1) break;
        int ell = cur.colors[x], lt = target[x];
        int group = cur.base_vertex(x + 1);
        int y = -1;
        for (std::size_t i = 0; i < target.size(); ++i)
            if (cur.colors[i] == lt && cur.base_vertex(static_cast<int>(i) + 1) == group &&
                static_cast<int>(i) != x) {
                y = static_cast<int>(i);
                break;
            }
        if (y == -1) throw std::logic_error("copy alignment failed");
        std::vector<int> colors = cur.colors;
        std::swap(colors[x], colors[y]);
        Coloring next(cur.base, cur.a, cur.k, std::move(colors));
        cert.steps.push_back({next.colors, {std::min(ell, lt), std::max(ell, lt)}});
        cur = std::move(next);
    }
    cert.relabel = relabel;
    return cert;
}

}  // namespace

EquivResult decide_equiv_r(const Coloring& f, const Coloring& g, int r,
                           long long state_budget) {
    if (f.base != g.base || f.a != g.a)
        throw invalid_input("colorings live on different replications");
    if (r < 1) throw invalid_input("exchange bound must be >= 1");
    EquivResult res;
    if (f.k != g.k) {
        res.outcome = EquivOutcome::different_fibers;
        return res;
    }
    if (r == 1) {
        // single-class re-partitions are the identity, so only equality works
        res.outcome = f.colors == g.colors ? EquivOutcome::equivalent
                                           : EquivOutcome::not_equivalent;
        res.states_explored = 1;
        if (res.outcome == EquivOutcome::equivalent) {
            EquivCertificate c;
            c.steps.push_back({f.colors, {}});
            c.relabel.resize(f.k);
            std::iota(c.relabel.begin(), c.relabel.end(), 1);
            res.certificate = std::move(c);
        }
        return res;
    }

    StableIndex si(f.base);
    std::vector<int> start = state_of(f, si), goal = state_of(g, si);
    {
        // same replication and palette force the same fiber; keep the check
        // for safety
        std::vector<int> sum_f(si.config.ambient_dim, 0), sum_g(si.config.ambient_dim, 0);
        for (int i : start)
            for (int c = 0; c < si.config.ambient_dim; ++c)
                sum_f[c] += si.config.points[i - 1][c];
        for (int i : goal)
            for (int c = 0; c < si.config.ambient_dim; ++c)
                sum_g[c] += si.config.points[i - 1][c];
        if (sum_f != sum_g) {
            res.outcome = EquivOutcome::different_fibers;
            return res;
        }
    }

    NeighborGen gen{si, r, {}};
    std::unordered_map<std::vector<int>, int, vec_hash> id_of;
    std::vector<std::vector<int>> states;
    std::vector<int> parent;
    auto intern = [&](const std::vector<int>& s, int par) {
        id_of.emplace(s, static_cast<int>(states.size()));
        states.push_back(s);
        parent.push_back(par);
    };
    intern(start, -1);
    std::deque<int> queue{0};
    int goal_id = start == goal ? 0 : -1;
    while (goal_id == -1 && !queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        for (const auto& ns : gen.neighbors(states[cur])) {
            if (id_of.count(ns)) continue;
            if (static_cast<long long>(states.size()) >= state_budget) {
                res.outcome = EquivOutcome::budget_exceeded;
                res.states_explored = static_cast<long long>(states.size());
                return res;
            }
            intern(ns, cur);
            if (ns == goal) {
                goal_id = static_cast<int>(states.size()) - 1;
                break;
            }
            queue.push_back(static_cast<int>(states.size()) - 1);
        }
    }
    res.states_explored = static_cast<long long>(states.size());
    if (goal_id == -1) {
        res.outcome = EquivOutcome::not_equivalent;
        return res;
    }
    std::vector<std::vector<int>> path;
    for (int v = goal_id; v != -1; v = parent[v]) path.push_back(states[v]);
    std::reverse(path.begin(), path.end());
    res.outcome = EquivOutcome::equivalent;
    res.certificate = build_certificate(f, g, path, si);
    return res;
}

bool check_certificate(const EquivCertificate& c, const Coloring& f, const Coloring& g, int r,
                       std::string* why) {
    auto fail = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (c.steps.empty()) return fail("empty certificate");
    if (c.steps.front().colors != f.colors) return fail("certificate does not start at f");
    if (!c.steps.front().changed.empty()) return fail("first step must change nothing");
    Coloring cur = f;
    for (std::size_t i = 1; i < c.steps.size(); ++i) {
        Coloring next(f.base, f.a, f.k, c.steps[i].colors);  // throws if improper
        auto diff = changed_labels(cur, next);
        if (diff.empty()) return fail("step " + std::to_string(i) + " is a no-op");
        if (static_cast<int>(diff.size()) > r)
            return fail("step " + std::to_string(i) + " changes too many classes");
        if (diff != c.steps[i].changed)
            return fail("step " + std::to_string(i) + " has a wrong changed set");
        cur = std::move(next);
    }
    if (static_cast<int>(c.relabel.size()) != f.k) return fail("bad relabel size");
    std::vector<char> seen(f.k + 1, 0);
    for (int m : c.relabel) {
        if (m < 1 || m > f.k || seen[m]) return fail("relabel is not a permutation");
        seen[m] = 1;
    }
    for (std::size_t x = 0; x < cur.colors.size(); ++x)
        if (c.relabel[cur.colors[x] - 1] != g.colors[x])
            return fail("final step does not relabel onto g");
    return true;
}

}  // namespace matchtoric
