#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "matchtoric/graph.hpp"
#include "matchtoric/toric.hpp"
#include "test_util.hpp"

using namespace matchtoric;

namespace {

// --- independent fiber oracle -----------------------------------------
// Everything below re-derives per-degree minimal generator counts from first
// principles: enumerate all k-multisets, group by coordinate sum, and take
// connected components under "differ in at most k-1 points". No Markov
// basis, Groebner or library fiber code is involved.

std::vector<int> multiset_sum(const PointConfiguration& a, const std::vector<int>& elem) {
    std::vector<int> s(a.ambient_dim, 0);
    for (int idx : elem)
        for (int c = 0; c < a.ambient_dim; ++c) s[c] += a.points[idx - 1][c];
    return s;
}

void enumerate_multisets(int n, int k, std::vector<int>& cur,
                         std::vector<std::vector<int>>& out, int lo) {
    if (static_cast<int>(cur.size()) == k) {
        out.push_back(cur);
        return;
    }
    for (int i = lo; i <= n; ++i) {
        cur.push_back(i);
        enumerate_multisets(n, k, cur, out, i);
        cur.pop_back();
    }
}

int multiset_difference(const std::vector<int>& u, const std::vector<int>& v) {
    int i = 0, j = 0, diff = 0;
    while (i < static_cast<int>(u.size()) && j < static_cast<int>(v.size())) {
        if (u[i] == v[j]) {
            ++i;
            ++j;
        } else if (u[i] < v[j]) {
            ++diff;
            ++i;
        } else {
            ++j;
        }
    }
    diff += static_cast<int>(u.size()) - i;
    return diff;
}

int exchange_components(const std::vector<std::vector<int>>& elems, int r) {
    int n = static_cast<int>(elems.size());
    std::vector<int> parent(n);
    for (int i = 0; i < n; ++i) parent[i] = i;
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (multiset_difference(elems[i], elems[j]) <= r)
                parent[find(i)] = find(j);
    std::set<int> roots;
    for (int i = 0; i < n; ++i) roots.insert(find(i));
    return static_cast<int>(roots.size());
}

// degree -> number of needed generators, scanned up to max_degree
std::map<int, int> oracle_degree_counts(const PointConfiguration& a, int max_degree) {
    std::map<int, int> counts;
    for (int k = 2; k <= max_degree; ++k) {
        std::vector<std::vector<int>> all;
        std::vector<int> cur;
        enumerate_multisets(a.n(), k, cur, all, 1);
        std::map<std::vector<int>, std::vector<std::vector<int>>> fibers;
        for (auto& e : all) fibers[multiset_sum(a, e)].push_back(e);
        int needed = 0;
        for (auto& [target, elems] : fibers)
            needed += exchange_components(elems, k - 1) - 1;
        if (needed > 0) counts[k] = needed;
    }
    return counts;
}

// apply a move to a sorted multiset if its plus side is contained; nullopt
// otherwise (test-local reimplementation)
std::optional<std::vector<int>> apply(const MarkovMove& w, std::vector<int> elem,
                                      bool forward) {
    const auto& take = forward ? w.plus : w.minus;
    const auto& put = forward ? w.minus : w.plus;
    for (auto [idx, mult] : take) {
        for (int t = 0; t < mult; ++t) {
            auto it = std::find(elem.begin(), elem.end(), idx);
            if (it == elem.end()) return std::nullopt;
            elem.erase(it);
        }
    }
    for (auto [idx, mult] : put) elem.insert(elem.end(), mult, idx);
    std::sort(elem.begin(), elem.end());
    return elem;
}

// connectivity of a fiber's element list under a move set, test-local BFS
bool fiber_connected(const std::vector<std::vector<int>>& elems,
                     const std::vector<MarkovMove>& moves) {
    if (elems.empty()) return true;
    std::set<std::vector<int>> pending(elems.begin() + 1, elems.end());
    std::vector<std::vector<int>> stack{elems.front()};
    while (!stack.empty()) {
        std::vector<int> u = stack.back();
        stack.pop_back();
        for (const MarkovMove& w : moves)
            for (bool fwd : {true, false})
                if (auto v = apply(w, u, fwd)) {
                    auto it = pending.find(*v);
                    if (it != pending.end()) {
                        stack.push_back(*it);
                        pending.erase(it);
                    }
                }
    }
    return pending.empty();
}

PointConfiguration matching_config(const SimpleGraph& g) {
    return lattice_points(g, SubsetKind::matchings);
}

}  // namespace

TEST_CASE("point configuration validates and sorts") {
    PointConfiguration a(2, {{1, 0}, {0, 1}, {0, 0}});
    CHECK(a.points == std::vector<std::vector<int>>{{0, 0}, {0, 1}, {1, 0}});
    CHECK(a.point_degree(2) == 1);
    CHECK_THROWS_AS(PointConfiguration(2, {{1, -1}}), invalid_input);
    CHECK_THROWS_AS(PointConfiguration(2, {{1, 0}, {1, 0}}), invalid_input);
    CHECK_THROWS_AS(PointConfiguration(2, {{1, 0, 0}}), invalid_input);
}

TEST_CASE("lattice points match the oracle enumeration") {
    std::mt19937_64 rng(23);
    for (int it = 0; it < 20; ++it) {
        SimpleGraph g = oracle::random_graph(rng, 5, 0.5);
        PointConfiguration a = matching_config(g);
        auto expect = oracle::matchings(g);
        REQUIRE(a.n() == static_cast<int>(expect.size()));
        std::set<std::uint64_t> got;
        for (const auto& p : a.points) {
            std::uint64_t mask = 0;
            for (int e = 0; e < g.n(); ++e)
                if (p[e]) mask |= 1ull << e;
            got.insert(mask);
        }
        CHECK(got == expect);
    }
}

TEST_CASE("kernel basis annihilates the homogenized matrix") {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 10; ++it) {
        SimpleGraph g = oracle::random_graph(rng, 4, 0.6);
        PointConfiguration a = matching_config(g);
        auto kernel = lattice_kernel_basis(a);
        for (const auto& row : kernel) {
            REQUIRE(row.size() == static_cast<std::size_t>(a.n()));
            long long count = 0;
            std::vector<long long> sum(a.ambient_dim, 0);
            for (int i = 0; i < a.n(); ++i) {
                count += row[i];
                for (int c = 0; c < a.ambient_dim; ++c)
                    sum[c] += row[i] * a.points[i][c];
            }
            CHECK(count == 0);
            CHECK(std::all_of(sum.begin(), sum.end(), [](long long x) { return x == 0; }));
        }
    }
}

TEST_CASE("path with three edges has the single quadratic relation") {
    SimpleGraph p4 = named_graph("P4");
    PointConfiguration a = matching_config(p4);
    REQUIRE(a.n() == 5);
    // points lex ascending: (0,0,0) (0,0,1) (0,1,0) (1,0,0) (1,0,1)
    auto kernel = lattice_kernel_basis(a);
    REQUIRE(kernel.size() == 1);
    // x_{e1} x_{e3} = x_{e1 e3} x_{empty}: indices 2,4 vs 1,5
    std::vector<long long> expect{-1, 1, 0, 1, -1};
    bool match = kernel[0] == expect;
    for (auto& x : expect) x = -x;
    CHECK((match || kernel[0] == expect));

    MarkovBasis b = markov_basis(a);
    REQUIRE(b.moves.size() == 1);
    const MarkovMove& w = b.moves[0];
    CHECK(w.degree == 2);
    // plus side is the lexicographically larger exponent vector
    CHECK(w.plus == std::vector<std::pair<int, int>>{{1, 1}, {5, 1}});
    CHECK(w.minus == std::vector<std::pair<int, int>>{{2, 1}, {4, 1}});

    MinimalBasis m = minimalize(b, a);
    CHECK(m.omega == 2);
    CHECK(m.degree_counts == std::map<int, int>{{2, 1}});
}

TEST_CASE("markov basis moves are well-formed and canonical") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 12; ++it) {
        SimpleGraph g = oracle::random_graph(rng, 4, 0.6);
        PointConfiguration a = matching_config(g);
        MarkovBasis b = markov_basis(a);
        for (const MarkovMove& w : b.moves) {
            int dplus = 0, dminus = 0;
            std::set<int> sup;
            for (auto [i, m] : w.plus) {
                CHECK(m > 0);
                CHECK(sup.insert(i).second);
                dplus += m;
            }
            for (auto [i, m] : w.minus) {
                CHECK(m > 0);
                CHECK(sup.insert(i).second);  // disjoint supports
                dminus += m;
            }
            CHECK(dplus == w.degree);
            CHECK(dminus == w.degree);
            // both sides have the same coordinate sum
            std::vector<int> s(a.ambient_dim, 0);
            for (auto [i, m] : w.plus)
                for (int c = 0; c < a.ambient_dim; ++c)
                    s[c] += m * a.points[i - 1][c];
            for (auto [i, m] : w.minus)
                for (int c = 0; c < a.ambient_dim; ++c)
                    s[c] -= m * a.points[i - 1][c];
            CHECK(std::all_of(s.begin(), s.end(), [](int x) { return x == 0; }));
        }
        CHECK(std::is_sorted(b.moves.begin(), b.moves.end(),
                             [](const MarkovMove& x, const MarkovMove& y) {
                                 return std::tie(x.degree, x.plus, x.minus) <
                                        std::tie(y.degree, y.plus, y.minus);
                             }));
        // determinism: an identical input yields an identical basis
        CHECK(markov_basis(a).moves == b.moves);
    }
}

TEST_CASE("markov basis connects every fiber") {
    std::mt19937_64 rng(43);
    for (int it = 0; it < 8; ++it) {
        SimpleGraph g = oracle::random_graph(rng, 4, 0.55);
        PointConfiguration a = matching_config(g);
        MarkovBasis b = markov_basis(a);
        for (int k = 2; k <= 4; ++k) {
            std::vector<std::vector<int>> all;
            std::vector<int> cur;
            enumerate_multisets(a.n(), k, cur, all, 1);
            std::map<std::vector<int>, std::vector<std::vector<int>>> fibers;
            for (auto& e : all) fibers[multiset_sum(a, e)].push_back(e);
            for (auto& [target, elems] : fibers)
                CHECK(fiber_connected(elems, b.moves));
        }
    }
}

TEST_CASE("minimal generator counts match the exchange oracle") {
    std::vector<SimpleGraph> graphs{named_graph("P4"), named_graph("C4"),
                                    named_graph("C5"), named_graph("K4")};
    std::mt19937_64 rng(47);
    for (int it = 0; it < 6; ++it) graphs.push_back(oracle::random_graph(rng, 4, 0.6));
    for (const SimpleGraph& g : graphs) {
        PointConfiguration a = matching_config(g);
        OmegaResult r = exact_omega(g, SubsetKind::matchings);
        std::map<int, int> expect = oracle_degree_counts(a, std::max(r.omega, 2));
        CHECK(r.degree_counts == expect);
        if (expect.empty()) {
            CHECK(r.zero_ideal);
            CHECK(r.omega == 2);
        } else {
            CHECK(r.omega == expect.rbegin()->first);
        }
    }
}

TEST_CASE("every move of a minimal basis is needed") {
    for (const char* name : {"P4", "C5", "C4"}) {
        SimpleGraph g = named_graph(name);
        PointConfiguration a = matching_config(g);
        MinimalBasis m = minimalize(markov_basis(a), a);
        for (std::size_t drop = 0; drop < m.basis.moves.size(); ++drop) {
            const MarkovMove& gone = m.basis.moves[drop];
            std::vector<MarkovMove> rest;
            for (std::size_t i = 0; i < m.basis.moves.size(); ++i)
                if (i != drop && m.basis.moves[i].degree <= gone.degree)
                    rest.push_back(m.basis.moves[i]);
            Fiber f = fiber(a, move_target(a, gone), gone.degree);
            std::vector<int> comp = fiber_components(a, f, rest);
            CHECK(*std::max_element(comp.begin(), comp.end()) >= 1);  // disconnected
        }
    }
}

TEST_CASE("named graph spot values") {
    CHECK(exact_omega(named_graph("G1"), SubsetKind::matchings).omega == 4);
    CHECK(exact_omega(named_graph("K23"), SubsetKind::matchings).omega == 3);
    CHECK(exact_omega(named_graph("W4"), SubsetKind::matchings).omega == 2);
    CHECK(exact_omega(named_graph("C4"), SubsetKind::matchings).omega == 2);
    CHECK(exact_omega(named_graph("C6"), SubsetKind::matchings).omega == 2);
    CHECK(exact_omega(named_graph("P5"), SubsetKind::matchings).omega == 2);
}

TEST_CASE("degenerate ideals") {
    OmegaResult k2 = exact_omega(named_graph("K2"), SubsetKind::matchings);
    CHECK(k2.omega == 2);
    CHECK(k2.zero_ideal);
    CHECK(!k2.empty_polytope);
    CHECK(k2.point_count == 2);

    OmegaResult k1 = exact_omega(SimpleGraph(1, {}), SubsetKind::matchings);
    CHECK(k1.omega == 2);
    CHECK(k1.zero_ideal);
    CHECK(k1.point_count == 1);

    // odd cycle has no perfect matching at all
    OmegaResult pm = exact_omega(named_graph("C5"), SubsetKind::perfect_matchings);
    CHECK(pm.omega == 2);
    CHECK(pm.empty_polytope);
    CHECK(pm.point_count == 0);

    OmegaResult one = exact_omega(named_graph("K2"), SubsetKind::perfect_matchings);
    CHECK(one.omega == 2);
    CHECK(one.zero_ideal);
    CHECK(one.point_count == 1);
}

TEST_CASE("matchings of an odd cycle are its stable sets on the line graph") {
    // the line graph of C5 is C5 again, so both kinds give the same ideal
    OmegaResult m = exact_omega(named_graph("C5"), SubsetKind::matchings);
    OmegaResult s = exact_omega(named_graph("C5"), SubsetKind::stable_sets);
    CHECK(m.point_count == 11);
    CHECK(s.point_count == 11);
    CHECK(m.omega == s.omega);
    CHECK(m.degree_counts == s.degree_counts);
}

TEST_CASE("block route agrees with the whole-graph computation") {
    // K23 with a pendant edge and a disjoint edge: blocks are K23 and two
    // single edges
    SimpleGraph k23 = named_graph("K23");
    std::vector<std::pair<int, int>> edges = k23.edges;
    edges.emplace_back(5, 6);
    edges.emplace_back(7, 8);
    SimpleGraph g(8, edges);
    BlockOmega via_blocks = omega_via_blocks(g);
    CHECK(via_blocks.omega == 3);
    CHECK(via_blocks.block_results.size() == 3);
    OmegaResult whole = exact_omega(g, SubsetKind::matchings);
    CHECK(whole.omega == via_blocks.omega);
}

TEST_CASE("fiber enumeration and components") {
    SimpleGraph p4 = named_graph("P4");
    PointConfiguration a = matching_config(p4);
    Fiber f = fiber(a, {1, 0, 1}, 2);
    CHECK(f.elements == std::vector<std::vector<int>>{{1, 5}, {2, 4}});
    CHECK(fiber_components(a, f, {}) == std::vector<int>{0, 1});
    MarkovBasis b = markov_basis(a);
    CHECK(fiber_components(a, f, b.moves) == std::vector<int>{0, 0});
    CHECK(move_target(a, b.moves[0]) == std::vector<int>{1, 0, 1});

    Fiber empty = fiber(a, {5, 5, 5}, 2);
    CHECK(empty.elements.empty());

    // exchange components against the quadratic brute force
    std::mt19937_64 rng(53);
    for (int it = 0; it < 10; ++it) {
        SimpleGraph g = oracle::random_graph(rng, 4, 0.5);
        PointConfiguration cfg = matching_config(g);
        std::vector<std::vector<int>> all;
        std::vector<int> cur;
        enumerate_multisets(cfg.n(), 3, cur, all, 1);
        std::map<std::vector<int>, std::vector<std::vector<int>>> fibers;
        for (auto& e : all) fibers[multiset_sum(cfg, e)].push_back(e);
        for (auto& [target, elems] : fibers) {
            Fiber fb;
            fb.target = target;
            fb.degree = 3;
            fb.elements = elems;  // already lex sorted by construction
            for (int r = 1; r <= 3; ++r) {
                std::vector<int> comp = fiber_components_exchange(fb, r);
                int distinct = static_cast<int>(
                    std::set<int>(comp.begin(), comp.end()).size());
                CHECK(distinct == exchange_components(elems, r));
            }
        }
    }
}

TEST_CASE("verification scan finds the degree-4 obstruction fiber") {
    PointConfiguration g1 = matching_config(named_graph("G1"));
    VerifyReport bad = verify_omega_le(g1, 3, 4);
    CHECK(bad.complete);
    CHECK(!bad.ok());
    REQUIRE(!bad.failures.empty());
    const DisconnectedFiber& w = bad.failures.front();
    CHECK(w.degree == 4);
    // replay the witness: u and v really are in different exchange classes
    Fiber f = fiber(g1, w.target, w.degree);
    std::vector<int> comp = fiber_components_exchange(f, 3);
    auto find_elem = [&](const std::vector<int>& e) {
        auto it = std::find(f.elements.begin(), f.elements.end(), e);
        REQUIRE(it != f.elements.end());
        return static_cast<int>(it - f.elements.begin());
    };
    CHECK(comp[find_elem(w.u)] != comp[find_elem(w.v)]);

    PointConfiguration k33 = matching_config(named_graph("K33"));
    VerifyReport good = verify_omega_le(k33, 3, 5);
    CHECK(good.complete);
    CHECK(good.ok());
    CHECK(good.fibers_checked.count(4) == 1);
    CHECK(good.fibers_checked.count(5) == 1);

    // thread count must not change the report
    VerifyReport threaded = verify_omega_le(k33, 3, 5, 50'000'000, 3);
    CHECK(threaded.ok() == good.ok());
    CHECK(threaded.multisets_seen == good.multisets_seen);
    CHECK(threaded.fibers_checked == good.fibers_checked);

    VerifyReport truncated = verify_omega_le(g1, 3, 4, 100);
    CHECK(!truncated.complete);
}

TEST_CASE("pair budget throws") {
    ToricBudget tiny;
    tiny.max_pairs = 1;
    CHECK_THROWS_AS(exact_omega(named_graph("G1"), SubsetKind::matchings, tiny),
                    budget_exceeded);
}
