#include "matchtoric/json_io.hpp"

#include <algorithm>

#include "matchtoric/util.hpp"

namespace matchtoric {

namespace {

std::vector<int> int_vector(const json& j, const char* what) {
    if (!j.is_array()) throw invalid_input(std::string(what) + " must be an array");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw invalid_input(std::string(what) + " must hold integers");
        out.push_back(x.get<int>());
    }
    return out;
}

json degree_counts_to_json(const std::map<int, int>& counts) {
    json out = json::object();
    for (auto [deg, cnt] : counts) out[std::to_string(deg)] = cnt;
    return out;
}

}  // namespace

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

json graph_to_json(const SimpleGraph& g) {
    json edges = json::array();
    for (auto [u, v] : g.edges) edges.push_back(json::array({u, v}));
    return json{{"d", g.d}, {"edges", edges}};
}

SimpleGraph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("edges"))
        throw invalid_input("graph JSON needs an \"edges\" array");
    std::vector<std::pair<int, int>> edges;
    int max_v = 0;
    for (const auto& e : j.at("edges")) {
        auto uv = int_vector(e, "edge");
        if (uv.size() != 2) throw invalid_input("edge must be a pair");
        edges.emplace_back(uv[0], uv[1]);
        max_v = std::max({max_v, uv[0], uv[1]});
    }
    int d = j.contains("d") ? j.at("d").get<int>() : max_v;
    return SimpleGraph(d, std::move(edges));
}

EdgeColoringFile edge_coloring_from_json(const json& j) {
    SimpleGraph base = graph_from_json(j);
    std::vector<int> mult(base.n(), 1);
    if (j.contains("multiplicity")) {
        mult = int_vector(j.at("multiplicity"), "multiplicity");
        if (static_cast<int>(mult.size()) != base.n())
            throw invalid_input("multiplicity length must match the edge count");
    }
    std::vector<int> colors = int_vector(j.at("colors"), "colors");
    int k = 0;
    for (int c : colors) k = std::max(k, c);
    if (j.contains("k")) {
        k = j.at("k").get<int>();
        for (int c : colors)
            if (c > k) throw invalid_input("color exceeds the declared palette");
    }
    EdgeColoringFile out;
    out.multigraph = Multigraph(base, mult);
    out.coloring = edge_coloring(out.multigraph, k, colors);
    return out;
}

json edge_coloring_to_json(const Multigraph& m, int k, const std::vector<int>& per_copy_colors) {
    json j = graph_to_json(m.base);
    j["multiplicity"] = m.multiplicity;
    j["colors"] = per_copy_colors;
    j["k"] = k;
    return j;
}

json move_to_json(const MarkovMove& w) {
    auto side = [](const std::vector<std::pair<int, int>>& s) {
        json out = json::array();
        for (auto [i, m] : s) out.push_back(json::array({i, m}));
        return out;
    };
    return json{{"degree", w.degree}, {"plus", side(w.plus)}, {"minus", side(w.minus)}};
}

MarkovMove move_from_json(const json& j) {
    auto side = [&](const char* key) {
        std::vector<std::pair<int, int>> out;
        for (const auto& e : j.at(key)) {
            auto im = int_vector(e, key);
            if (im.size() != 2) throw invalid_input("move entries are [index, multiplicity]");
            out.emplace_back(im[0], im[1]);
        }
        return out;
    };
    MarkovMove w;
    w.plus = side("plus");
    w.minus = side("minus");
    w.degree = j.at("degree").get<int>();
    return w;
}

json omega_to_json(const OmegaResult& r, bool include_generators) {
    json j{{"omega", r.omega},
           {"point_count", r.point_count},
           {"zero_ideal", r.zero_ideal},
           {"empty_polytope", r.empty_polytope},
           {"degree_counts", degree_counts_to_json(r.degree_counts)}};
    if (include_generators) {
        json gens = json::array();
        for (const auto& w : r.minimal.basis.moves) gens.push_back(move_to_json(w));
        j["generators"] = gens;
    }
    return j;
}

json block_omega_to_json(const BlockOmega& r) {
    json blocks = json::array();
    for (const auto& [edges, om] : r.block_results)
        blocks.push_back(json{{"edges", edges}, {"omega", om}});
    return json{{"omega", r.omega}, {"blocks", blocks}};
}

json verify_to_json(const VerifyReport& r) {
    json fibers = json::object();
    for (auto [deg, cnt] : r.fibers_checked) fibers[std::to_string(deg)] = cnt;
    json failures = json::array();
    for (const auto& f : r.failures)
        failures.push_back(json{
            {"target", f.target}, {"degree", f.degree}, {"u", f.u}, {"v", f.v}});
    return json{{"r", r.r},
                {"max_degree", r.max_degree},
                {"ok", r.ok()},
                {"complete", r.complete},
                {"multisets_seen", r.multisets_seen},
                {"fibers_checked", fibers},
                {"failures", failures}};
}

json certificate_to_json(const EquivCertificate& c, const Coloring& f, int r) {
    json steps = json::array();
    for (const auto& s : c.steps)
        steps.push_back(json{{"colors", s.colors}, {"changed", s.changed}});
    return json{{"r", r},
                {"k", f.k},
                {"base", graph_to_json(f.base)},
                {"copies", f.a},
                {"steps", steps},
                {"relabel", c.relabel}};
}

CertificateFile certificate_from_json(const json& j) {
    CertificateFile out;
    out.r = j.at("r").get<int>();
    SimpleGraph base = graph_from_json(j.at("base"));
    std::vector<int> copies = int_vector(j.at("copies"), "copies");
    int k = j.at("k").get<int>();
    for (const auto& s : j.at("steps")) {
        EquivStep step;
        step.colors = int_vector(s.at("colors"), "colors");
        step.changed = int_vector(s.at("changed"), "changed");
        out.certificate.steps.push_back(std::move(step));
    }
    out.certificate.relabel = int_vector(j.at("relabel"), "relabel");
    if (out.certificate.steps.empty()) throw invalid_input("certificate has no steps");
    out.start = Coloring(base, copies, k, out.certificate.steps.front().colors);
    return out;
}

json classify_rows_to_json(const std::vector<ClassifyRow>& rows) {
    json out = json::array();
    for (const auto& r : rows) {
        json j{{"graph6", r.graph6},
               {"vertices", r.vertices},
               {"edges", r.edges},
               {"connected", r.connected},
               {"matchings", r.matching_count},
               {"line_perfect", r.line_perfect},
               {"even_theta", r.even_theta},
               {"predicted", to_string(r.predicted)}};
        if (r.exact_omega) {
            j["omega"] = *r.exact_omega;
            j["consistent"] = r.consistent;
        }
        out.push_back(std::move(j));
    }
    return out;
}

std::string classify_rows_to_tsv(const std::vector<ClassifyRow>& rows) {
    std::string out =
        "graph6\tvertices\tedges\tconnected\tmatchings\tline_perfect\teven_theta\tpredicted\tomega\tconsistent\n";
    for (const auto& r : rows) {
        out += r.graph6 + '\t' + std::to_string(r.vertices) + '\t' +
               std::to_string(r.edges) + '\t' + (r.connected ? "1" : "0") + '\t' +
               std::to_string(r.matching_count) + '\t' +
               (r.line_perfect ? "1" : "0") + '\t' + (r.even_theta ? "1" : "0") +
               '\t' + to_string(r.predicted) + '\t' +
               (r.exact_omega ? std::to_string(*r.exact_omega) : "-") + '\t' +
               (r.exact_omega ? (r.consistent ? "1" : "0") : "-") + '\n';
    }
    return out;
}

json wheel_rows_to_json(const std::vector<WheelRow>& rows) {
    json out = json::array();
    for (const auto& r : rows) {
        json j{{"d", r.d},
               {"matchings", r.point_count},
               {"predicted", to_string(r.predicted)}};
        if (r.exact_omega) {
            j["omega"] = *r.exact_omega;
            j["consistent"] = r.consistent;
        }
        out.push_back(std::move(j));
    }
    return out;
}

std::string wheel_rows_to_tsv(const std::vector<WheelRow>& rows) {
    std::string out = "d\tmatchings\tpredicted\tomega\tconsistent\n";
    for (const auto& r : rows) {
        out += std::to_string(r.d) + '\t' + std::to_string(r.point_count) + '\t' +
               to_string(r.predicted) + '\t' +
               (r.exact_omega ? std::to_string(*r.exact_omega) : "-") + '\t' +
               (r.exact_omega ? (r.consistent ? "1" : "0") : "-") + '\n';
    }
    return out;
}

json flow_to_json(const BipartiteFlow& f, bool include_points) {
    json arrows = json::array();
    for (auto [t, h] : f.network.arrows) arrows.push_back(json::array({t, h}));
    json j{{"nodes", f.network.node_count},
           {"arrows", arrows},
           {"lower", f.network.lower},
           {"upper", f.network.upper},
           {"excess", f.network.excess},
           {"v1", f.v1},
           {"v2", f.v2}};
    if (include_points) {
        PointConfiguration pts = flow_lattice_points(f.network);
        json arr = json::array();
        for (const auto& p : pts.points) arr.push_back(p);
        j["points"] = arr;
    }
    return j;
}

}  // namespace matchtoric
