#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "matchtoric/classify.hpp"
#include "matchtoric/coloring.hpp"
#include "matchtoric/flow.hpp"
#include "matchtoric/graph.hpp"
#include "matchtoric/json_io.hpp"
#include "matchtoric/toric.hpp"
#include "matchtoric/util.hpp"

using namespace matchtoric;

namespace {

// All timing goes to stderr so stdout stays byte-stable for a fixed run
// configuration.
struct StopWatch {
    std::string label;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    explicit StopWatch(std::string l) : label(std::move(l)) {}
    ~StopWatch() {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        std::cerr << label << ": " << ms << " ms\n";
    }
};

std::uint64_t splitmix64(std::uint64_t& s) {
    std::uint64_t z = (s += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw invalid_input("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json_file(const std::string& path) {
    try {
        return json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw invalid_input(path + ": " + e.what());
    }
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) throw invalid_input("cannot write " + out_path);
    out << text;
}

SimpleGraph load_graph(const std::string& name, const std::string& g6,
                       const std::string& file) {
    int sources = (!name.empty()) + (!g6.empty()) + (!file.empty());
    if (sources != 1)
        throw invalid_input("provide exactly one of --graph, --graph6, --file");
    if (!name.empty()) return named_graph(name);
    if (!g6.empty()) return from_graph6(g6);
    std::string text = read_file(file);
    // A JSON graph file starts with '{'; anything else is a graph6 line.
    auto pos = text.find_first_not_of(" \t\r\n");
    if (pos != std::string::npos && text[pos] == '{') {
        try {
            return graph_from_json(json::parse(text));
        } catch (const nlohmann::json::exception& e) {
            throw invalid_input(file + ": " + e.what());
        }
    }
    auto end = text.find_first_of(" \t\r\n", pos);
    if (pos == std::string::npos) throw invalid_input(file + ": empty graph file");
    return from_graph6(text.substr(pos, end == std::string::npos ? end : end - pos));
}

SubsetKind parse_kind(const std::string& kind) {
    if (kind == "matching") return SubsetKind::matchings;
    if (kind == "perfect-matching") return SubsetKind::perfect_matchings;
    if (kind == "stable-set") return SubsetKind::stable_sets;
    throw invalid_input("unknown kind: " + kind);
}

const char* outcome_name(EquivOutcome o) {
    switch (o) {
        case EquivOutcome::equivalent: return "equivalent";
        case EquivOutcome::not_equivalent: return "not_equivalent";
        case EquivOutcome::different_fibers: return "different_fibers";
        case EquivOutcome::budget_exceeded: return "budget_exceeded";
    }
    return "unknown";
}

// ---------------------------------------------------------------- scoreboard

struct Scoreboard {
    json checks = json::array();
    bool ok = true;

    void add(const std::string& name, const std::string& expected,
             const std::string& got) {
        bool pass = expected == got;
        checks.push_back(json{{"check", name},
                              {"expected", expected},
                              {"got", got},
                              {"pass", pass}});
        if (!pass) ok = false;
    }
    void add_bool(const std::string& name, bool expected, bool got) {
        add(name, expected ? "true" : "false", got ? "true" : "false");
    }
    void add_int(const std::string& name, long long expected, long long got) {
        add(name, std::to_string(expected), std::to_string(got));
    }
};

void check_pair(Scoreboard& board, const std::string& tag, const Coloring& f,
                const Coloring& g, int r, bool expected_equiv,
                long long state_budget) {
    EquivResult res = decide_equiv_r(f, g, r, state_budget);
    board.add(tag + "_r" + std::to_string(r),
              expected_equiv ? "equivalent" : "not_equivalent",
              outcome_name(res.outcome));
    if (res.outcome == EquivOutcome::equivalent) {
        std::string why;
        bool replay = res.certificate &&
                      check_certificate(*res.certificate, f, g, r, &why);
        board.add_bool(tag + "_r" + std::to_string(r) + "_certificate", true, replay);
        if (!replay && res.certificate) std::cerr << "certificate replay: " << why << "\n";
    }
}

Scoreboard suite_example61(std::uint64_t seed, const ToricBudget& budget,
                           long long state_budget) {
    Scoreboard board;
    board.add_int("omega_G1", 4,
                  exact_omega(named_graph("G1"), SubsetKind::matchings, budget).omega);
    auto [f1, g1] = g1_witness_pair();
    check_pair(board, "G1_pair", f1, g1, 3, false, state_budget);
    check_pair(board, "G1_pair", f1, g1, 4, true, state_budget);

    board.add_int("omega_G2", 4,
                  exact_omega(named_graph("G2"), SubsetKind::matchings, budget).omega);
    auto [f2, g2] = g2_witness_pair();
    check_pair(board, "G2_pair", f2, g2, 3, false, state_budget);
    check_pair(board, "G2_pair", f2, g2, 4, true, state_budget);

    board.add_int("omega_G3", 4,
                  exact_omega(named_graph("G3"), SubsetKind::matchings, budget).omega);
    auto [f3, g3] = g3_doubled_witness_pair();
    check_pair(board, "G3_doubled_pair", f3, g3, 3, false, state_budget);
    check_pair(board, "G3_doubled_pair", f3, g3, 4, true, state_budget);

    // Any two proper 4-edge-colorings of plain G3 are equivalent under
    // 4-class exchanges; sample pairs.
    SimpleGraph lg3 = line_graph(named_graph("G3"));
    std::vector<int> ones(lg3.d, 1);
    int equivalent = 0;
    for (int i = 0; i < 20; ++i) {
        Coloring a = random_coloring(lg3, ones, 4, splitmix64(seed));
        Coloring b = random_coloring(lg3, ones, 4, splitmix64(seed));
        EquivResult res = decide_equiv_r(a, b, 4, state_budget);
        if (res.outcome == EquivOutcome::equivalent) ++equivalent;
    }
    board.add_int("G3_sampled_pairs_r4_equivalent", 20, equivalent);
    return board;
}

Scoreboard suite_smallgraphs(const ToricBudget& budget) {
    Scoreboard board;
    SimpleGraph g1 = named_graph("G1");
    for (int d = 1; d <= 4; ++d) {
        int all_two = 0, total = 0;
        for (const SimpleGraph& g : all_graphs(d)) {
            ++total;
            if (exact_omega(g, SubsetKind::matchings, budget).omega == 2) ++all_two;
        }
        board.add_int("d" + std::to_string(d) + "_omega2_count", total, all_two);
    }
    int agree = 0, total = 0;
    for (const SimpleGraph& g : all_graphs(5)) {
        ++total;
        int omega = exact_omega(g, SubsetKind::matchings, budget).omega;
        bool has_g1 = subgraph_contains(g, g1);
        if (has_g1 ? omega == 4 : omega <= 3) ++agree;
    }
    board.add_int("d5_classification_agreement", total, agree);
    return board;
}

Scoreboard suite_wheels(const ToricBudget& budget) {
    Scoreboard board;
    board.add_int("omega_W4", 2,
                  exact_omega(named_graph("W4"), SubsetKind::matchings, budget).omega);
    board.add_int("omega_W6", 2,
                  exact_omega(named_graph("W6"), SubsetKind::matchings, budget).omega);
    board.add_int("omega_W5", 4,
                  exact_omega(named_graph("W5"), SubsetKind::matchings, budget).omega);
    auto w5 = find_degree4_obstruction(named_graph("W5"));
    board.add_bool("W5_obstruction_witness", true, w5.has_value());
    auto w7 = find_degree4_obstruction(named_graph("W7"));
    board.add_bool("W7_obstruction_witness", true, w7.has_value());
    return board;
}

Scoreboard suite_bipartite(const ToricBudget& budget, long long multiset_budget,
                           int threads) {
    Scoreboard board;
    auto spot = [&](const char* name, int expected, PredictedOmega predicted) {
        SimpleGraph g = named_graph(name);
        board.add_int(std::string("omega_") + name, expected,
                      exact_omega(g, SubsetKind::matchings, budget).omega);
        board.add(std::string("predicted_") + name, to_string(predicted),
                  to_string(predicted_omega(g).kind));
    };
    spot("K23", 3, PredictedOmega::three);
    spot("C4", 2, PredictedOmega::two);
    spot("C6", 2, PredictedOmega::two);
    spot("P5", 2, PredictedOmega::two);

    VerifyReport k33 = verify_omega_le(lattice_points(named_graph("K33"), SubsetKind::matchings),
                                       3, 5, multiset_budget, threads);
    board.add_bool("K33_fibers_connected_r3_D5", true, k33.ok() && k33.complete);
    VerifyReport g1 = verify_omega_le(lattice_points(named_graph("G1"), SubsetKind::matchings),
                                      3, 4, multiset_budget, threads);
    board.add_bool("G1_disconnected_fiber_found_r3_D4", true,
                   !g1.ok() && g1.complete);
    return board;
}

// Random bipartite graph with at most max_edges edges: random part sizes,
// each cross edge kept with probability 1/2; resampled until nonempty and
// small enough.
SimpleGraph random_bipartite(std::uint64_t& seed, int max_edges) {
    for (;;) {
        int m = 1 + static_cast<int>(splitmix64(seed) % 4);
        int n = 1 + static_cast<int>(splitmix64(seed) % 4);
        std::vector<std::pair<int, int>> edges;
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= n; ++j)
                if (splitmix64(seed) & 1) edges.emplace_back(i, m + j);
        if (edges.empty() || static_cast<int>(edges.size()) > max_edges) continue;
        return SimpleGraph(m + n, std::move(edges));
    }
}

Scoreboard suite_flow(std::uint64_t seed) {
    Scoreboard board;
    for (int i = 0; i < 10; ++i) {
        SimpleGraph g = random_bipartite(seed, 8);
        BipartiteFlow fl = flow_network_of_bipartite(g);
        PointConfiguration pts = flow_lattice_points(fl.network);
        auto matchings = enumerate_subsets(g, SubsetKind::matchings);
        std::string tag = "flow_" + std::to_string(i) + "_" + to_graph6(g);
        board.add_int(tag + "_points", static_cast<long long>(matchings.size()),
                      pts.n());
        // The first n() coordinates of each flow are a matching indicator;
        // together they must hit every matching exactly once.
        std::vector<std::uint64_t> projected;
        for (const auto& p : pts.points) {
            std::uint64_t mask = 0;
            for (int e = 0; e < g.n(); ++e)
                if (p[e]) mask |= 1ULL << e;
            projected.push_back(mask);
        }
        std::sort(projected.begin(), projected.end());
        bool distinct = std::adjacent_find(projected.begin(), projected.end()) ==
                        projected.end();
        std::vector<std::uint64_t> expect = matchings;
        std::sort(expect.begin(), expect.end());
        board.add_bool(tag + "_bijection", true, distinct && projected == expect);
    }
    return board;
}

// ------------------------------------------------------------------ commands

struct CommonOpts {
    std::string graph, graph6, file, kind = "matching", format = "json", out;
    ToricBudget budget;
    long long budget_states = 10'000'000;
    int threads = 1;
    std::uint64_t seed = 12345;
};

int cmd_omega(const CommonOpts& o, bool use_blocks, bool include_generators) {
    StopWatch sw("omega");
    SimpleGraph g = load_graph(o.graph, o.graph6, o.file);
    if (use_blocks) {
        BlockOmega r = omega_via_blocks(g, o.budget);
        json j = block_omega_to_json(r);
        j["command"] = "omega";
        emit(dump_canonical(j), o.out);
        return 0;
    }
    OmegaResult r = exact_omega(g, parse_kind(o.kind), o.budget);
    if (o.format == "text") {
        std::ostringstream ss;
        ss << "omega " << r.omega << "\n"
           << "points " << r.point_count << "\n";
        ss << "degree_counts";
        for (auto [deg, cnt] : r.degree_counts) ss << ' ' << deg << ':' << cnt;
        ss << "\nzero_ideal " << (r.zero_ideal ? "true" : "false") << "\n";
        emit(ss.str(), o.out);
    } else {
        json j = omega_to_json(r, include_generators);
        j["command"] = "omega";
        j["kind"] = o.kind;
        emit(dump_canonical(j), o.out);
    }
    return 0;
}

int cmd_equiv(const std::string& file_f, const std::string& file_g, int r,
              long long state_budget, const std::string& certificate_out,
              const std::string& certificate_check, const CommonOpts& o) {
    StopWatch sw("equiv");
    EdgeColoringFile f = edge_coloring_from_json(parse_json_file(file_f));
    EdgeColoringFile g = edge_coloring_from_json(parse_json_file(file_g));
    if (!(f.multigraph.base == g.multigraph.base) ||
        f.multigraph.multiplicity != g.multigraph.multiplicity)
        throw invalid_input("colorings live on different multigraphs");

    if (!certificate_check.empty()) {
        CertificateFile cert = certificate_from_json(parse_json_file(certificate_check));
        std::string why;
        bool ok = check_certificate(cert.certificate, f.coloring, g.coloring, r, &why);
        json j{{"command", "equiv"}, {"r", r}, {"certificate_valid", ok}};
        if (!ok) j["reason"] = why;
        emit(dump_canonical(j), o.out);
        return ok ? 0 : 1;
    }

    EquivResult res = decide_equiv_r(f.coloring, g.coloring, r, state_budget);
    json j{{"command", "equiv"},
           {"r", r},
           {"outcome", outcome_name(res.outcome)},
           {"states_explored", res.states_explored}};
    if (res.certificate) {
        std::string why;
        if (!check_certificate(*res.certificate, f.coloring, g.coloring, r, &why))
            throw std::logic_error("issued certificate failed replay: " + why);
        j["certificate_steps"] = static_cast<int>(res.certificate->steps.size());
        if (!certificate_out.empty())
            emit(dump_canonical(certificate_to_json(*res.certificate, f.coloring, r)),
                 certificate_out);
    }
    emit(dump_canonical(j), o.out);
    return res.outcome == EquivOutcome::budget_exceeded ? 3 : 0;
}

int cmd_verify(const CommonOpts& o, int r, int max_degree) {
    StopWatch sw("verify");
    SimpleGraph g = load_graph(o.graph, o.graph6, o.file);
    PointConfiguration a = lattice_points(g, parse_kind(o.kind));
    VerifyReport report =
        verify_omega_le(a, r, max_degree, o.budget_states, o.threads);
    json j = verify_to_json(report);
    j["command"] = "verify";
    j["kind"] = o.kind;
    emit(dump_canonical(j), o.out);
    return report.complete ? 0 : 3;
}

int cmd_classify(const CommonOpts& o, int vertices, int exact_max_points) {
    StopWatch sw("classify");
    auto rows = classify_small(vertices, exact_max_points, o.budget);
    if (o.format == "tsv")
        emit(classify_rows_to_tsv(rows), o.out);
    else
        emit(dump_canonical(json{{"command", "classify"},
                                 {"vertices", vertices},
                                 {"rows", classify_rows_to_json(rows)}}),
             o.out);
    for (const auto& row : rows)
        if (row.exact_omega && !row.consistent) return 1;
    return 0;
}

int cmd_wheels(const CommonOpts& o, int max_d, int exact_max_points) {
    StopWatch sw("wheels");
    auto rows = wheel_experiment(max_d, exact_max_points, o.budget);
    if (o.format == "tsv")
        emit(wheel_rows_to_tsv(rows), o.out);
    else
        emit(dump_canonical(json{{"command", "wheels"},
                                 {"max", max_d},
                                 {"rows", wheel_rows_to_json(rows)}}),
             o.out);
    for (const auto& row : rows)
        if (row.exact_omega && !row.consistent) return 1;
    return 0;
}

int cmd_flow(const CommonOpts& o, bool include_points) {
    StopWatch sw("flow");
    SimpleGraph g = load_graph(o.graph, o.graph6, o.file);
    BipartiteFlow f = flow_network_of_bipartite(g);
    json j = flow_to_json(f, include_points);
    j["command"] = "flow";
    emit(dump_canonical(j), o.out);
    return 0;
}

int cmd_show(const CommonOpts& o) {
    SimpleGraph g = load_graph(o.graph, o.graph6, o.file);
    if (o.format == "dot")
        emit(to_dot(g), o.out);
    else if (o.format == "graph6")
        emit(to_graph6(g) + "\n", o.out);
    else
        emit(dump_canonical(graph_to_json(g)), o.out);
    return 0;
}

int cmd_reproduce(const CommonOpts& o, const std::string& suite) {
    StopWatch sw("reproduce_" + suite);
    Scoreboard board;
    std::uint64_t seed = o.seed;
    if (suite == "example61")
        board = suite_example61(seed, o.budget, o.budget_states);
    else if (suite == "smallgraphs")
        board = suite_smallgraphs(o.budget);
    else if (suite == "wheels")
        board = suite_wheels(o.budget);
    else if (suite == "bipartite")
        board = suite_bipartite(o.budget, o.budget_states, o.threads);
    else if (suite == "flow")
        board = suite_flow(seed);
    else
        throw invalid_input("unknown suite: " + suite);
    json j{{"command", "reproduce"},
           {"suite", suite},
           {"ok", board.ok},
           {"checks", board.checks}};
    emit(dump_canonical(j), o.out);
    return board.ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"toric ideals of matching polytopes: exact generator degrees, "
                 "coloring equivalence, classification"};
    app.require_subcommand(1);

    CommonOpts o;
    auto add_graph_opts = [&](CLI::App* cmd) {
        cmd->add_option("--graph", o.graph, "named graph (G1..G8, Wd, Kd, Kmn, K11n, Cd, Pd)");
        cmd->add_option("--graph6", o.graph6, "graph6 string");
        cmd->add_option("--file", o.file, "graph file (JSON {\"edges\":[[u,v],...]} or graph6)");
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--format", o.format, "output format (json|text|tsv|dot|graph6)");
        cmd->add_option("--out", o.out, "write output to a file instead of stdout");
        cmd->add_option("--budget-pairs", o.budget.max_pairs, "s-pair budget for basis computation");
        cmd->add_option("--budget-states", o.budget_states, "state/multiset budget for searches");
        cmd->add_option("--threads", o.threads, "worker threads for fiber verification");
        cmd->add_option("--seed", o.seed, "seed for sampled checks");
    };

    bool use_blocks = false, include_generators = false, include_points = false;
    int r = 2, max_degree = -1, vertices = 5, exact_max_points = 64, max_d = 8;
    std::string file_f, file_g, certificate_out, certificate_check, suite;

    CLI::App* omega = app.add_subcommand("omega", "maximal degree of a minimal generating set");
    add_graph_opts(omega);
    add_common(omega);
    omega->add_option("--kind", o.kind, "matching|perfect-matching|stable-set");
    omega->add_flag("--blocks", use_blocks, "compute per biconnected block and take the max");
    omega->add_flag("--generators", include_generators, "include the minimal generators in the output");

    CLI::App* equiv = app.add_subcommand("equiv", "decide coloring equivalence under r-class exchanges");
    equiv->add_option("-r,--r", r, "maximal classes changed per step")->required();
    equiv->add_option("file_f", file_f, "first edge coloring (JSON)")->required();
    equiv->add_option("file_g", file_g, "second edge coloring (JSON)")->required();
    equiv->add_option("--certificate", certificate_out, "write the step certificate here on success");
    equiv->add_option("--check", certificate_check, "replay an existing certificate instead of searching");
    add_common(equiv);

    CLI::App* verify = app.add_subcommand("verify", "check fiber connectivity up to a degree bound");
    add_graph_opts(verify);
    add_common(verify);
    verify->add_option("--kind", o.kind, "matching|perfect-matching|stable-set");
    verify->add_option("-r,--r", r, "exchange size")->required();
    verify->add_option("--max-degree", max_degree, "top fiber degree to scan (default r+2)");

    CLI::App* classify = app.add_subcommand("classify", "structural classification of all graphs on d vertices");
    classify->add_option("--vertices", vertices, "vertex count (<= 7)")->required();
    classify->add_option("--exact-max-points", exact_max_points,
                         "compute exact omega when the configuration has at most this many points (0 = never)");
    add_common(classify);

    CLI::App* wheels = app.add_subcommand("wheels", "wheel family experiment");
    wheels->add_option("--max", max_d, "largest wheel W_d");
    wheels->add_option("--exact-max-points", exact_max_points,
                       "compute exact omega when the configuration has at most this many points (0 = never)");
    add_common(wheels);

    CLI::App* flow = app.add_subcommand("flow", "flow network of a bipartite graph");
    add_graph_opts(flow);
    add_common(flow);
    flow->add_flag("--points", include_points, "include the integer flows");

    CLI::App* show = app.add_subcommand("show", "print a graph (dot, graph6 or JSON)");
    add_graph_opts(show);
    add_common(show);

    CLI::App* reproduce = app.add_subcommand("reproduce", "re-run a recorded computation suite");
    reproduce->add_option("suite", suite, "example61|smallgraphs|wheels|bipartite|flow")->required();
    add_common(reproduce);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*omega) return cmd_omega(o, use_blocks, include_generators);
        if (*equiv) return cmd_equiv(file_f, file_g, r, o.budget_states,
                                     certificate_out, certificate_check, o);
        if (*verify) return cmd_verify(o, r, max_degree < 0 ? r + 2 : max_degree);
        if (*classify) return cmd_classify(o, vertices, exact_max_points);
        if (*wheels) return cmd_wheels(o, max_d, exact_max_points);
        if (*flow) return cmd_flow(o, include_points);
        if (*show) return cmd_show(o);
        if (*reproduce) return cmd_reproduce(o, suite);
    } catch (const budget_exceeded& e) {
        std::cout << dump_canonical(json{{"error", "budget_exceeded"}, {"message", e.what()}});
        return 3;
    } catch (const invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
