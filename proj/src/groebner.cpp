#include "groebner.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace matchtoric::detail {

namespace {

using Sparse = std::vector<std::pair<int, int>>;  // (0-based var, exponent > 0)

struct SupportMask {
    std::array<std::uint64_t, 3> w{0, 0, 0};

    void set(int v) { w[v >> 6] |= 1ull << (v & 63); }
    bool subset_of(const SupportMask& o) const {
        return !(w[0] & ~o.w[0]) && !(w[1] & ~o.w[1]) && !(w[2] & ~o.w[2]);
    }
    bool disjoint(const SupportMask& o) const {
        return !(w[0] & o.w[0]) && !(w[1] & o.w[1]) && !(w[2] & o.w[2]);
    }
    bool subset_of_union(const SupportMask& a, const SupportMask& b) const {
        return !(w[0] & ~(a.w[0] | b.w[0])) && !(w[1] & ~(a.w[1] | b.w[1])) &&
               !(w[2] & ~(a.w[2] | b.w[2]));
    }
    SupportMask operator|(const SupportMask& o) const {
        return {{w[0] | o.w[0], w[1] | o.w[1], w[2] | o.w[2]}};
    }
};

SupportMask mask_of(const Exp& e) {
    SupportMask m;
    for (std::size_t v = 0; v < e.size(); ++v)
        if (e[v]) m.set(static_cast<int>(v));
    return m;
}

Sparse sparse_of(const Exp& e) {
    Sparse s;
    for (std::size_t v = 0; v < e.size(); ++v)
        if (e[v]) s.emplace_back(static_cast<int>(v), e[v]);
    return s;
}

int total_degree(const Exp& e) { return std::accumulate(e.begin(), e.end(), 0); }

struct Binomial {
    Exp lead, trail;
    Sparse lead_s, trail_s;
    SupportMask lead_mask;
    int deg = 0;

    void finish() {
        lead_s = sparse_of(lead);
        trail_s = sparse_of(trail);
        lead_mask = mask_of(lead);
        deg = total_degree(lead);
    }
};

// degrevlex with variable `cheap` cheapest: larger total degree wins; on
// ties, scan cheap first and then variables n-1..0, the side with the
// smaller exponent at the first difference is the larger monomial.
// Returns +1 if a > b, -1 if a < b, 0 if equal.
int cmp_mono(const Exp& a, const Exp& b, int cheap, int dega, int degb) {
    if (dega != degb) return dega > degb ? 1 : -1;
    if (a[cheap] != b[cheap]) return a[cheap] < b[cheap] ? 1 : -1;
    for (int v = static_cast<int>(a.size()) - 1; v >= 0; --v) {
        if (v == cheap) continue;
        if (a[v] != b[v]) return a[v] < b[v] ? 1 : -1;
    }
    return 0;
}

bool divides(const Sparse& lead, const SupportMask& lead_mask, const Exp& m,
             const SupportMask& m_mask) {
    if (!lead_mask.subset_of(m_mask)) return false;
    for (auto [v, e] : lead)
        if (m[v] < e) return false;
    return true;
}

struct Engine {
    int cheap;
    const ToricBudget& budget;
    GbCounters& counters;
    std::vector<Binomial> basis;  // every element ever added; indices stable
    std::vector<char> alive;      // retired when a newer lead divides theirs
    std::vector<int> alive_idx;   // alive indices, may lag behind retirements
    long long alive_count = 0;

    void compact_alive() {
        if (static_cast<long long>(alive_idx.size()) <= 2 * alive_count) return;
        std::erase_if(alive_idx, [&](int i) { return !alive[i]; });
    }

    void reset_alive_idx() {
        alive_idx.resize(basis.size());
        std::iota(alive_idx.begin(), alive_idx.end(), 0);
    }

    // Unprocessed s-pairs, i < j, kept as a min-heap on (deg, i, j). Thanks
    // to the update rules below the set stays near-linear in the basis size.
    struct Pair {
        int deg, i, j;
    };
    static bool pair_after(const Pair& a, const Pair& b) {
        return std::tie(a.deg, a.i, a.j) > std::tie(b.deg, b.i, b.j);
    }
    std::vector<Pair> pairs;

    explicit Engine(int cheap_var, const ToricBudget& b, GbCounters& c)
        : cheap(cheap_var), budget(b), counters(c) {}

    std::vector<int> lcm_buf;  // candidate lcms, one n-stride per candidate

    // rewrite m to its normal form modulo the live part of the basis
    void normal_form(Exp& m) const {
        SupportMask mm = mask_of(m);
        for (;;) {
            bool hit = false;
            for (int i : alive_idx) {
                if (!alive[i]) continue;
                const Binomial& g = basis[i];
                if (!divides(g.lead_s, g.lead_mask, m, mm)) continue;
                for (auto [v, e] : g.lead_s) m[v] -= e;
                for (auto [v, e] : g.trail_s) m[v] += e;
                mm = mask_of(m);
                hit = true;
                break;
            }
            if (!hit) return;
        }
    }

    // Gebauer-Moeller update: reduce both sides, orient, append, and refresh
    // the pair set (M and F rules on the new pairs, product criterion, B rule
    // on the old pairs, retirement of dominated leads).
    void add(Exp a, Exp b) {
        normal_form(a);
        normal_form(b);
        int c = cmp_mono(a, b, cheap, total_degree(a), total_degree(b));
        if (c == 0) return;
        Binomial g;
        g.lead = c > 0 ? std::move(a) : std::move(b);
        g.trail = c > 0 ? std::move(b) : std::move(a);
        g.finish();
        const int s = static_cast<int>(basis.size());
        const std::size_t n = g.lead.size();

        struct Cand {
            int i;
            int deg;
            bool disjoint;
            SupportMask mask;  // support of the lcm
        };
        std::vector<Cand> cands;
        cands.reserve(alive_count);
        lcm_buf.clear();
        for (int i : alive_idx) {
            if (!alive[i]) continue;
            Cand cd;
            cd.i = i;
            cd.deg = 0;
            const Exp& lead = basis[i].lead;
            for (std::size_t v = 0; v < n; ++v) {
                int e = std::max(lead[v], g.lead[v]);
                lcm_buf.push_back(e);
                cd.deg += e;
            }
            cd.disjoint = basis[i].lead_mask.disjoint(g.lead_mask);
            cd.mask = basis[i].lead_mask | g.lead_mask;
            cands.push_back(cd);
        }

        auto lcm_at = [&](std::size_t x) { return lcm_buf.data() + x * n; };
        auto div_ptr = [n](const int* x, const int* y) {  // x | y
            for (std::size_t v = 0; v < n; ++v)
                if (x[v] > y[v]) return false;
            return true;
        };

        // M and F rules: keep candidate c unless another candidate (still
        // pending or already kept) has an lcm dividing c's; on equal lcms the
        // later one survives. Disjoint-support candidates always pass here so
        // they can knock others out, and fall to the product criterion below.
        std::vector<char> kept(cands.size(), 0);
        for (std::size_t x = 0; x < cands.size(); ++x) {
            bool drop = false;
            if (!cands[x].disjoint) {
                for (std::size_t y = 0; y < cands.size() && !drop; ++y) {
                    if (y == x) continue;
                    bool pending = y > x;
                    if ((pending || kept[y]) && cands[y].deg <= cands[x].deg &&
                        cands[y].mask.subset_of(cands[x].mask) &&
                        div_ptr(lcm_at(y), lcm_at(x)))
                        drop = true;
                }
            }
            kept[x] = !drop;
        }

        // B rule: an old pair (i, j) dies when the new lead divides its lcm
        // strictly on both sides.
        std::size_t before = pairs.size();
        std::erase_if(pairs, [&](const Pair& p) {
            const Binomial& fi = basis[p.i];
            const Binomial& fj = basis[p.j];
            if (!g.lead_mask.subset_of_union(fi.lead_mask, fj.lead_mask)) return false;
            bool strict_i = false, strict_j = false;
            for (std::size_t v = 0; v < n; ++v) {
                int l = std::max(fi.lead[v], fj.lead[v]);
                if (g.lead[v] > l) return false;
                if (std::max(fi.lead[v], g.lead[v]) != l) strict_i = true;
                if (std::max(fj.lead[v], g.lead[v]) != l) strict_j = true;
            }
            return strict_i && strict_j;
        });
        if (pairs.size() != before) std::make_heap(pairs.begin(), pairs.end(), pair_after);

        for (std::size_t x = 0; x < cands.size(); ++x)
            if (kept[x] && !cands[x].disjoint) {
                pairs.push_back({cands[x].deg, cands[x].i, s});
                std::push_heap(pairs.begin(), pairs.end(), pair_after);
            }

        // retire dominated leads: they are never needed as reducers again
        for (int i : alive_idx)
            if (alive[i] && divides(g.lead_s, g.lead_mask, basis[i].lead,
                                    basis[i].lead_mask)) {
                alive[i] = 0;
                --alive_count;
            }

        basis.push_back(std::move(g));
        alive.push_back(1);
        alive_idx.push_back(s);
        ++alive_count;
        compact_alive();
        counters.basis_peak = std::max(counters.basis_peak, alive_count);
        if (alive_count > budget.max_basis)
            throw budget_exceeded("groebner basis size budget exceeded");
    }

    void run() {
        while (!pairs.empty()) {
            // normal selection: smallest lcm degree, ties by index
            std::pop_heap(pairs.begin(), pairs.end(), pair_after);
            Pair p = pairs.back();
            pairs.pop_back();
            if (++counters.pairs_processed > budget.max_pairs)
                throw budget_exceeded("groebner pair budget exceeded");
            const Binomial& f = basis[p.i];
            const Binomial& g = basis[p.j];
            std::size_t n = f.lead.size();
            Exp a(n), b(n);
            for (std::size_t v = 0; v < n; ++v) {
                int lcm = std::max(f.lead[v], g.lead[v]);
                a[v] = lcm - f.lead[v] + f.trail[v];
                b[v] = lcm - g.lead[v] + g.trail[v];
            }
            add(std::move(a), std::move(b));
        }
    }

    // unique reduced basis: minimal lead set, then tails fully reduced
    void interreduce() {
        std::vector<Binomial> live;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (alive[i]) live.push_back(std::move(basis[i]));
        basis = std::move(live);
        alive.assign(basis.size(), 1);
        reset_alive_idx();

        std::vector<char> keep(basis.size(), 1);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (!keep[i]) continue;
            for (std::size_t j = 0; j < basis.size(); ++j) {
                if (i == j || !keep[j]) continue;
                if (divides(basis[j].lead_s, basis[j].lead_mask, basis[i].lead,
                            basis[i].lead_mask)) {
                    // identical leads: drop the later one
                    if (basis[i].lead == basis[j].lead && i < j) continue;
                    keep[i] = 0;
                    break;
                }
            }
        }
        std::vector<Binomial> kept;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if (keep[i]) kept.push_back(std::move(basis[i]));
        basis = std::move(kept);
        alive.assign(basis.size(), 1);
        reset_alive_idx();
        for (Binomial& g : basis) {
            Exp t = g.trail;
            normal_form(t);
            if (t != g.trail) {
                g.trail = std::move(t);
                g.trail_s = sparse_of(g.trail);
            }
        }
    }
};

}  // namespace

std::vector<std::pair<Exp, Exp>> saturation_round(std::vector<std::pair<Exp, Exp>> gens,
                                                  int cheap, const ToricBudget& budget,
                                                  GbCounters& counters) {
    Engine eng(cheap, budget, counters);
    std::sort(gens.begin(), gens.end());  // input order must not matter
    for (auto& [a, b] : gens) eng.add(std::move(a), std::move(b));
    eng.run();
    eng.interreduce();

    std::vector<std::pair<Exp, Exp>> out;
    out.reserve(eng.basis.size());
    for (Binomial& g : eng.basis) {
        int strip = std::min(g.lead[cheap], g.trail[cheap]);
        if (strip > 0) {
            g.lead[cheap] -= strip;
            g.trail[cheap] -= strip;
        }
        if (g.lead == g.trail) continue;
        out.emplace_back(std::move(g.lead), std::move(g.trail));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace matchtoric::detail
