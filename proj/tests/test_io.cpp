#include <doctest.h>

#include <algorithm>
#include <string>
#include <vector>

#include "matchtoric/classify.hpp"
#include "matchtoric/coloring.hpp"
#include "matchtoric/json_io.hpp"
#include "matchtoric/toric.hpp"

using namespace matchtoric;

TEST_CASE("canonical dump keeps insertion order") {
    json j;
    j["zeta"] = 1;
    j["alpha"] = 2;
    std::string s = dump_canonical(j);
    CHECK(s.find("zeta") < s.find("alpha"));
    CHECK(s.back() == '\n');
}

TEST_CASE("graph json round trip") {
    for (const char* name : {"G1", "G3", "K33", "P5"}) {
        SimpleGraph g = named_graph(name);
        SimpleGraph back = graph_from_json(graph_to_json(g));
        CHECK(back.d == g.d);
        CHECK(back.edges == g.edges);
    }
    // d defaults to the largest endpoint, and may be overridden upward
    SimpleGraph one = graph_from_json(json::parse(R"({"edges": [[1, 2]]})"));
    CHECK(one.d == 2);
    SimpleGraph padded = graph_from_json(json::parse(R"({"d": 4, "edges": [[1, 2]]})"));
    CHECK(padded.d == 4);
    CHECK_THROWS_AS(graph_from_json(json::parse("[]")), invalid_input);
    CHECK_THROWS_AS(graph_from_json(json::parse(R"({"edges": [[1, 2, 3]]})")),
                    invalid_input);
}

TEST_CASE("edge coloring file round trip") {
    auto [f, g] = g3_doubled_witness_pair();
    std::vector<int> mult(10, 1);
    mult[9] = 2;
    Multigraph m(named_graph("G3"), mult);
    REQUIRE(f.base.edges == line_graph(m.base).edges);
    REQUIRE(f.a == mult);

    json j = edge_coloring_to_json(m, 4, f.colors);
    EdgeColoringFile file = edge_coloring_from_json(j);
    CHECK(file.multigraph.base.edges == m.base.edges);
    CHECK(file.multigraph.multiplicity == m.multiplicity);
    CHECK(file.coloring == f);

    // multiplicity defaults to ones, k to the largest used color
    json simple = json::parse(R"({"edges": [[1, 2], [2, 3]], "colors": [1, 2]})");
    EdgeColoringFile sf = edge_coloring_from_json(simple);
    CHECK(sf.multigraph.multiplicity == std::vector<int>{1, 1});
    CHECK(sf.coloring.k == 2);
    CHECK(sf.coloring.a == std::vector<int>{1, 1});

    // a declared palette must cover all colors
    json bad_k = json::parse(R"({"edges": [[1, 2]], "colors": [3], "k": 2})");
    CHECK_THROWS_AS(edge_coloring_from_json(bad_k), invalid_input);

    // adjacent copies with equal colors are rejected with a diagnostic
    json improper =
        json::parse(R"({"edges": [[1, 2], [2, 3]], "colors": [1, 1], "k": 2})");
    CHECK_THROWS_WITH_AS(edge_coloring_from_json(improper),
                         doctest::Contains("not proper"), invalid_input);
}

TEST_CASE("move json round trip") {
    PointConfiguration a = lattice_points(named_graph("C5"), SubsetKind::matchings);
    MarkovBasis b = markov_basis(a);
    REQUIRE(!b.moves.empty());
    for (const MarkovMove& w : b.moves) CHECK(move_from_json(move_to_json(w)) == w);
    CHECK_THROWS_AS(
        move_from_json(json::parse(R"({"degree": 2, "plus": [[1]], "minus": []})")),
        invalid_input);
}

TEST_CASE("omega json is deterministic and optionally carries generators") {
    SimpleGraph g = named_graph("K23");
    std::string first = dump_canonical(
        omega_to_json(exact_omega(g, SubsetKind::matchings), false));
    std::string second = dump_canonical(
        omega_to_json(exact_omega(g, SubsetKind::matchings), false));
    CHECK(first == second);

    OmegaResult r = exact_omega(g, SubsetKind::matchings);
    json with = omega_to_json(r, true);
    REQUIRE(with.contains("generators"));
    CHECK(with["generators"].size() == r.minimal.basis.moves.size());
    CHECK(with["omega"] == 3);
    CHECK(with["degree_counts"].contains("3"));
    json without = omega_to_json(r, false);
    CHECK(!without.contains("generators"));
}

TEST_CASE("verify report json") {
    PointConfiguration a = lattice_points(named_graph("K23"), SubsetKind::matchings);
    VerifyReport rep = verify_omega_le(a, 3, 4);
    json j = verify_to_json(rep);
    CHECK(j["r"] == 3);
    CHECK(j["max_degree"] == 4);
    CHECK(j["ok"] == rep.ok());
    CHECK(j["complete"] == true);
    CHECK(j["failures"].is_array());
    CHECK(j["fibers_checked"].contains("4"));
}

TEST_CASE("certificate json round trip and replay") {
    SimpleGraph c4 = named_graph("C4");
    std::vector<int> ones(4, 1);
    Coloring f(c4, ones, 2, {1, 2, 1, 2});
    Coloring g(c4, ones, 2, {2, 1, 2, 1});
    EquivResult res = decide_equiv_r(f, g, 2);
    REQUIRE(res.outcome == EquivOutcome::equivalent);
    REQUIRE(res.certificate.has_value());

    json j = certificate_to_json(*res.certificate, f, 2);
    CertificateFile file = certificate_from_json(j);
    CHECK(file.r == 2);
    CHECK(file.start == f);
    CHECK(check_certificate(file.certificate, f, g, 2));
    CHECK(dump_canonical(certificate_to_json(file.certificate, file.start, file.r)) ==
          dump_canonical(j));

    json empty = j;
    empty["steps"] = json::array();
    CHECK_THROWS_AS(certificate_from_json(empty), invalid_input);
}

TEST_CASE("classification tables") {
    std::vector<ClassifyRow> rows = classify_small(4, 0);
    std::string tsv = classify_rows_to_tsv(rows);
    CHECK(tsv.substr(0, tsv.find('\n')) ==
          "graph6\tvertices\tedges\tconnected\tmatchings\tline_perfect\teven_theta"
          "\tpredicted\tomega\tconsistent");
    CHECK(std::count(tsv.begin(), tsv.end(), '\n') == 12);
    CHECK(tsv.find("\t-\t-\n") != std::string::npos);  // exact columns unset

    json j = classify_rows_to_json(rows);
    REQUIRE(j.size() == 11);
    CHECK(!j[0].contains("omega"));
    CHECK(j[0]["predicted"] == "2");

    std::vector<WheelRow> wheels = wheel_experiment(6, 20);
    std::string wtsv = wheel_rows_to_tsv(wheels);
    CHECK(wtsv.substr(0, wtsv.find('\n')) == "d\tmatchings\tpredicted\tomega\tconsistent");
    json wj = wheel_rows_to_json(wheels);
    REQUIRE(wj.size() == 3);
    CHECK(wj[0]["matchings"] == 10);
    CHECK(wj[1]["omega"] == 4);
}

TEST_CASE("flow json") {
    BipartiteFlow bf = flow_network_of_bipartite(named_graph("K23"));
    json j = flow_to_json(bf, true);
    CHECK(j["nodes"] == 6);
    CHECK(j["arrows"].size() == 11);
    CHECK(j["v1"] == json::array({1, 2}));
    CHECK(j["v2"] == json::array({3, 4, 5}));
    REQUIRE(j.contains("points"));
    CHECK(j["points"].size() == 13);
    CHECK(!flow_to_json(bf, false).contains("points"));
}
