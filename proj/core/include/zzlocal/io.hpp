#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "zzlocal/complex.hpp"
#include "zzlocal/diagram.hpp"
#include "zzlocal/metric_graph.hpp"
#include "zzlocal/multiparam.hpp"
#include "zzlocal/zigzag.hpp"

// File formats. Rationals are written as strings ("3", "-1/2"); readers also
// accept JSON integers. Every reader throws InputError on malformed input.
//
//   diagram       {"points":[{"birth":"0","death":"5","dim":0}, ...]}   death may be "inf"
//   zigzag        {"dims":[1,2,1],"arrows":[{"dir":"fwd"|"bwd","matrix":[[1,1]]}, ...]}
//   graph         {"vertices":["a","b"],"edges":[{"u":"a","v":"b","length":"3"}, ...]}
//   bifiltration  {"simplices":[{"verts":[0,1],"grade":["1","3/2"]}, ...]}
//   snapshots     {"snapshots":[[[0],[1],[0,1]], [[1]], ...]}
namespace zzlocal::io {

using nlohmann::json;

json read_json_file(const std::filesystem::path& path);

Rational rational_from_json(const json& j);
ExtReal ext_real_from_json(const json& j);

json to_json(const PersistenceDiagram& diagram);
PersistenceDiagram diagram_from_json(const json& j);

json to_json(const ZigzagModule& module);
ZigzagModule zigzag_from_json(const json& j);
json to_json(const std::vector<IndexInterval>& intervals);

json to_json(const MetricGraph& graph);
MetricGraph graph_from_json(const json& j);

Bifiltration bifiltration_from_json(const json& j);
std::vector<SimplicialComplex> snapshots_from_json(const json& j);

/// "vertex:<name>" or "edge:<index>@<offset>".
GraphPoint parse_graph_point(const MetricGraph& graph, std::string_view text);
std::string format_graph_point(const MetricGraph& graph, const GraphPoint& point);

/// "r1:r2"
RestrictionInterval parse_interval(std::string_view text);
/// "x0:x1,y0:y1"
Box parse_box(std::string_view text);

}  // namespace zzlocal::io
