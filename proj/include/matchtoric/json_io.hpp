#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "matchtoric/classify.hpp"
#include "matchtoric/coloring.hpp"
#include "matchtoric/flow.hpp"
#include "matchtoric/graph.hpp"
#include "matchtoric/toric.hpp"

namespace matchtoric {

// All serialization goes through ordered_json: insertion order is kept, so a
// given value always dumps to the same bytes.
using json = nlohmann::ordered_json;

// Canonical dump used for every file the tools write: two-space indent and a
// trailing newline.
std::string dump_canonical(const json& j);

json graph_to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const json& j);

// Edge coloring of a multigraph as stored on disk:
//   {"edges": [[u,v],...], "multiplicity": [...], "colors": [...], "k": int}
// multiplicity defaults to all ones, k to the largest color used; "d" may
// override the vertex count (default: largest endpoint). colors follow copy
// order (all copies of edge 1, then edge 2, ...).
struct EdgeColoringFile {
    Multigraph multigraph;
    Coloring coloring;  // on line_graph(multigraph.base), copies = multiplicity
};
EdgeColoringFile edge_coloring_from_json(const json& j);
json edge_coloring_to_json(const Multigraph& m, int k, const std::vector<int>& per_copy_colors);

json move_to_json(const MarkovMove& w);
MarkovMove move_from_json(const json& j);

json omega_to_json(const OmegaResult& r, bool include_generators);
json block_omega_to_json(const BlockOmega& r);
json verify_to_json(const VerifyReport& r);

// Certificates carry their own coloring context so the replay needs nothing
// else: {"r", "k", "base": graph, "copies", "steps": [{"colors","changed"}],
// "relabel"}.
json certificate_to_json(const EquivCertificate& c, const Coloring& f, int r);
// Rebuilds the coloring context; steps[0] is the starting coloring.
struct CertificateFile {
    int r = 0;
    Coloring start;
    EquivCertificate certificate;
};
CertificateFile certificate_from_json(const json& j);

json classify_rows_to_json(const std::vector<ClassifyRow>& rows);
std::string classify_rows_to_tsv(const std::vector<ClassifyRow>& rows);
json wheel_rows_to_json(const std::vector<WheelRow>& rows);
std::string wheel_rows_to_tsv(const std::vector<WheelRow>& rows);

json flow_to_json(const BipartiteFlow& f, bool include_points);

}  // namespace matchtoric
