#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "matchtoric/coloring.hpp"
#include "matchtoric/graph.hpp"
#include "test_util.hpp"

using namespace matchtoric;

namespace {

// Reference partition of all proper colorings into Kempe classes: labelled
// BFS where a step swaps two colors on one component of their union.
std::vector<int> kempe_classes(const std::vector<Coloring>& all) {
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < static_cast<int>(all.size()); ++i) index[all[i].colors] = i;
    std::vector<int> cls(all.size(), -1);
    int next = 0;
    for (int s = 0; s < static_cast<int>(all.size()); ++s) {
        if (cls[s] >= 0) continue;
        cls[s] = next;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            const Coloring& f = all[u];
            for (int i = 1; i <= f.k; ++i)
                for (int j = i + 1; j <= f.k; ++j)
                    for (int seed = 1; seed <= f.copy_count(); ++seed) {
                        if (f.colors[seed - 1] != i && f.colors[seed - 1] != j) continue;
                        Coloring g = kempe_switch(f, i, j, seed);
                        int v = index.at(g.colors);
                        if (cls[v] < 0) {
                            cls[v] = next;
                            stack.push_back(v);
                        }
                    }
        }
        ++next;
    }
    return cls;
}

std::vector<Coloring> all_proper(const SimpleGraph& base, const std::vector<int>& a, int k) {
    SimpleGraph x = vertex_replication(base, a);
    std::vector<Coloring> out;
    std::vector<int> colors(x.d, 1);
    for (;;) {
        bool proper = true;
        for (auto [u, v] : x.edges)
            if (colors[u - 1] == colors[v - 1]) { proper = false; break; }
        if (proper) out.emplace_back(base, a, k, colors);
        int i = 0;
        while (i < x.d && colors[i] == k) colors[i++] = 1;
        if (i == x.d) break;
        ++colors[i];
    }
    return out;
}

}  // namespace

TEST_CASE("identical colorings are equivalent with a one-step certificate") {
    auto [f, g] = g1_witness_pair();
    (void)g;
    for (int r = 1; r <= 4; ++r) {
        EquivResult res = decide_equiv_r(f, f, r);
        CHECK(res.outcome == EquivOutcome::equivalent);
        REQUIRE(res.certificate.has_value());
        CHECK(res.certificate->steps.size() == 1);
        std::string why;
        CHECK(check_certificate(*res.certificate, f, f, r, &why));
    }
}

TEST_CASE("r = 1 is labelled equality") {
    SimpleGraph p2(2, {{1, 2}});
    Coloring f(p2, {1, 1}, 3, {1, 2});
    Coloring g(p2, {1, 1}, 3, {2, 1});
    CHECK(decide_equiv_r(f, g, 1).outcome == EquivOutcome::not_equivalent);
    CHECK(decide_equiv_r(f, g, 2).outcome == EquivOutcome::equivalent);
}

TEST_CASE("palette mismatch lands in different fibers") {
    SimpleGraph p2(2, {{1, 2}});
    Coloring f(p2, {1, 1}, 3, {1, 2});
    Coloring g(p2, {1, 1}, 4, {1, 2});
    CHECK(decide_equiv_r(f, g, 3).outcome == EquivOutcome::different_fibers);
}

TEST_CASE("mismatched multigraphs are invalid") {
    SimpleGraph p2(2, {{1, 2}});
    SimpleGraph p3(3, {{1, 2}, {2, 3}});
    Coloring f(p2, {1, 1}, 3, {1, 2});
    Coloring g(p3, {1, 1, 1}, 3, {1, 2, 1});
    CHECK_THROWS_AS(decide_equiv_r(f, g, 2), invalid_input);
}

TEST_CASE("alternating 4-cycle needs one 2-step") {
    SimpleGraph lg = line_graph(named_graph("C4"));
    Coloring f(lg, {1, 1, 1, 1}, 2, {1, 2, 1, 2});
    Coloring g(lg, {1, 1, 1, 1}, 2, {2, 1, 2, 1});
    EquivResult res = decide_equiv_r(f, g, 2);
    CHECK(res.outcome == EquivOutcome::equivalent);
    REQUIRE(res.certificate.has_value());
    std::string why;
    CHECK(check_certificate(*res.certificate, f, g, 2, &why));
    CHECK(decide_equiv_r(f, g, 1).outcome == EquivOutcome::not_equivalent);
}

TEST_CASE("encoded obstruction pairs separate r = 3 from r = 4") {
    auto [f, g] = g1_witness_pair();
    CHECK(decide_equiv_r(f, g, 3).outcome == EquivOutcome::not_equivalent);
    EquivResult res = decide_equiv_r(f, g, 4);
    CHECK(res.outcome == EquivOutcome::equivalent);
    REQUIRE(res.certificate.has_value());
    std::string why;
    CHECK(check_certificate(*res.certificate, f, g, 4, &why));
    CHECK_MESSAGE(why.empty(), why);
}

TEST_CASE("doubled-rung pair separates r = 3 from r = 4") {
    auto [f, g] = g3_doubled_witness_pair();
    CHECK(decide_equiv_r(f, g, 3).outcome == EquivOutcome::not_equivalent);
    EquivResult res = decide_equiv_r(f, g, 4);
    CHECK(res.outcome == EquivOutcome::equivalent);
    REQUIRE(res.certificate.has_value());
    std::string why;
    CHECK(check_certificate(*res.certificate, f, g, 4, &why));
}

TEST_CASE("bipartite colorings connect at r = 3") {
    // omega of the K33 matching configuration is 3, so any two 4-edge-
    // colorings are equivalent under 3-class exchanges; this genuinely walks
    // the state graph (several steps, nontrivial relabelling).
    SimpleGraph lg = line_graph(named_graph("K33"));
    std::vector<int> ones(lg.d, 1);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Coloring f = random_coloring(lg, ones, 4, seed);
        Coloring g = random_coloring(lg, ones, 4, seed + 100);
        EquivResult res = decide_equiv_r(f, g, 3);
        CHECK(res.outcome == EquivOutcome::equivalent);
        REQUIRE(res.certificate.has_value());
        std::string why;
        CHECK_MESSAGE(check_certificate(*res.certificate, f, g, 3, &why), why);
    }
}

TEST_CASE("state budget reports exhaustion") {
    // budget 1 trips on the first fresh state, before the goal test; the two
    // colorings have distinct class multisets, so the search cannot finish
    // at the start state
    SimpleGraph c5 = named_graph("C5");
    std::vector<int> ones(5, 1);
    Coloring f(c5, ones, 3, {1, 2, 1, 2, 3});
    Coloring g(c5, ones, 3, {1, 2, 1, 3, 2});
    EquivResult res = decide_equiv_r(f, g, 2, 1);
    CHECK(res.outcome == EquivOutcome::budget_exceeded);
    CHECK(res.states_explored == 1);
    CHECK(!res.certificate.has_value());
}

TEST_CASE("certificate replay rejects tampering") {
    SimpleGraph lg = line_graph(named_graph("C4"));
    Coloring f(lg, {1, 1, 1, 1}, 2, {1, 2, 1, 2});
    Coloring g(lg, {1, 1, 1, 1}, 2, {2, 1, 2, 1});
    EquivResult res = decide_equiv_r(f, g, 2);
    REQUIRE(res.certificate.has_value());
    std::string why;

    EquivCertificate broken = *res.certificate;
    broken.relabel = {2, 1};  // wrong final relabelling
    bool ok = check_certificate(broken, f, g, 2, &why);
    if (ok) {
        // a 2-palette has only two relabellings; flipping must break exactly
        // one of the two possible verdicts
        broken.relabel = {1, 2};
        CHECK(!check_certificate(broken, f, g, 2, &why));
    } else {
        CHECK(!why.empty());
    }

    EquivCertificate wrong_start = *res.certificate;
    wrong_start.steps.front().colors = g.colors;
    CHECK(!check_certificate(wrong_start, f, g, 2, &why));

    EquivCertificate improper = *res.certificate;
    improper.steps.back().colors = {1, 1, 2, 2};  // not a proper coloring
    CHECK(!check_certificate(improper, f, g, 2, &why));

    // same certificate against a tighter r than its steps use
    if (res.certificate->steps.size() > 1)
        CHECK(!check_certificate(*res.certificate, f, g, 1, &why));
}

TEST_CASE("r = 2 equivalence matches Kempe reachability") {
    // two small configurations: proper 3-colorings of C5 and of the path
    // replication below; the partition into Kempe classes must coincide with
    // the r = 2 decision on every pair
    struct Case {
        SimpleGraph base;
        std::vector<int> a;
        int k;
    };
    std::vector<Case> cases;
    cases.push_back({named_graph("C5"), std::vector<int>(5, 1), 3});
    cases.push_back({SimpleGraph(3, {{1, 2}, {2, 3}}), {2, 1, 1}, 3});
    for (const Case& c : cases) {
        std::vector<Coloring> all = all_proper(c.base, c.a, c.k);
        REQUIRE(!all.empty());
        std::vector<int> cls = kempe_classes(all);
        for (std::size_t i = 0; i < all.size(); ++i)
            for (std::size_t j = i; j < all.size(); ++j) {
                bool expect = cls[i] == cls[j];
                EquivResult res = decide_equiv_r(all[i], all[j], 2);
                CHECK(res.outcome == (expect ? EquivOutcome::equivalent
                                             : EquivOutcome::not_equivalent));
            }
    }
}

TEST_CASE("certificates stay within the step bound") {
    auto [f, g] = g2_witness_pair();
    EquivResult res = decide_equiv_r(f, g, 4);
    CHECK(res.outcome == EquivOutcome::equivalent);
    REQUIRE(res.certificate.has_value());
    const auto& steps = res.certificate->steps;
    for (std::size_t i = 1; i < steps.size(); ++i) {
        CHECK(steps[i].changed.size() >= 1);
        CHECK(steps[i].changed.size() <= 4);
        int diff = 0;
        // changed labels are exactly the classes whose vertex sets moved
        Coloring prev(f.base, f.a, f.k, steps[i - 1].colors);
        Coloring cur(f.base, f.a, f.k, steps[i].colors);
        std::vector<int> d = differing_classes(prev, cur);
        diff = static_cast<int>(d.size());
        CHECK(diff == static_cast<int>(steps[i].changed.size()));
        CHECK(d == steps[i].changed);
    }
}
