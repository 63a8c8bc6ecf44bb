#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include "CLI11.hpp"
#endif

#include <iostream>
#include <optional>
#include <string>

#include "zzlocal/errors.hpp"
#include "zzlocal/io.hpp"
#include "zzlocal/zzlocal.hpp"

namespace {

using namespace zzlocal;
using io::json;

enum ExitCode { kOk = 0, kUsage = 1, kInvalidInput = 2, kInternal = 3 };

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

json optional_rational(const std::optional<Rational>& r) { return r ? json(r->str()) : json(nullptr); }

struct DiagramArgs {
  std::string graph;
  std::string base;
  std::string interval;
};

void run_diagram(const DiagramArgs& args) {
  const MetricGraph g = io::graph_from_json(io::read_json_file(args.graph));
  const GraphPoint base = io::parse_graph_point(g, args.base);
  PersistenceDiagram d = lzz_diagram(distance_function(g, base));
  if (!args.interval.empty()) d = restrict_diagram(d, io::parse_interval(args.interval));
  emit(io::to_json(d));
}

struct PairArgs {
  std::string first;
  std::string second;
};

void run_bottleneck(const PairArgs& args) {
  const auto a = io::diagram_from_json(io::read_json_file(args.first));
  const auto b = io::diagram_from_json(io::read_json_file(args.second));
  std::cout << bottleneck_distance(a, b).str() << '\n';
}

struct RestrictArgs {
  std::string diagram;
  std::string interval;
};

void run_restrict(const RestrictArgs& args) {
  const auto d = io::diagram_from_json(io::read_json_file(args.diagram));
  emit(io::to_json(restrict_diagram(d, io::parse_interval(args.interval))));
}

struct DistortionArgs {
  PairArgs graphs;
  std::size_t samples = 2;
  std::string radius;
};

void run_distortion(const DistortionArgs& args) {
  const MetricGraph g1 = io::graph_from_json(io::read_json_file(args.graphs.first));
  const MetricGraph g2 = io::graph_from_json(io::read_json_file(args.graphs.second));
  std::optional<Rational> radius;
  if (!args.radius.empty()) radius = Rational::parse(args.radius);
  const DistortionReport r = persistence_distortion(g1, g2, args.samples, radius);
  emit({{"d_pd", r.d_pd.str()},
        {"radius", optional_rational(r.radius)},
        {"epsilon", r.epsilon.str()},
        {"samples_per_edge", r.samples_per_edge}});
}

struct MatchArgs {
  PairArgs bifiltrations;
  std::string box;
  std::size_t grid = 16;
  int dim = 0;
};

void run_match(const MatchArgs& args) {
  const Bifiltration a = io::bifiltration_from_json(io::read_json_file(args.bifiltrations.first));
  const Bifiltration b = io::bifiltration_from_json(io::read_json_file(args.bifiltrations.second));
  const LineSample lines = line_grid(a, b, args.grid, args.grid);
  json out{{"matching_distance", matching_distance(a, b, lines, args.dim).str()},
           {"bound", "lower"},
           {"dim", args.dim},
           {"directions", args.grid},
           {"offsets", args.grid},
           {"lines", lines.size()}};
  if (!args.box.empty()) {
    const Box box = io::parse_box(args.box);
    out["box"] = {{"x", {box.x.lo.str(), box.x.hi.str()}}, {"y", {box.y.lo.str(), box.y.hi.str()}}};
    out["restricted_matching_distance"] = restricted_matching_distance(a, b, box, lines, args.dim).str();
  }
  emit(out);
}

void run_zigzag(const std::string& path) {
  const ZigzagModule m = io::zigzag_from_json(io::read_json_file(path));
  emit(io::to_json(interval_decomposition(m)));
}

struct UnionArgs {
  std::string snapshots;
  int dim = 0;
};

void run_union(const UnionArgs& args) {
  const ZigzagModule m = build_union_zigzag(io::snapshots_from_json(io::read_json_file(args.snapshots)), args.dim);
  json out = io::to_json(interval_decomposition(m));
  out["dims"] = m.dims();
  emit(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Zigzag and restricted persistence on metric graphs and bifiltrations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "zzlocal 0.1.0");

  DiagramArgs diagram;
  auto* cmd_diagram = app.add_subcommand("diagram", "Level-set zigzag diagram of a geodesic distance function");
  cmd_diagram->add_option("graph", diagram.graph, "Graph JSON file")->required();
  cmd_diagram->add_option("base", diagram.base, "Base point: vertex:<name> or edge:<i>@<offset>")->required();
  cmd_diagram->add_option("--interval", diagram.interval, "Restrict to r1:r2");

  PairArgs bottleneck;
  auto* cmd_bottleneck = app.add_subcommand("bottleneck", "Bottleneck distance of two diagrams");
  cmd_bottleneck->add_option("first", bottleneck.first, "Diagram JSON file")->required();
  cmd_bottleneck->add_option("second", bottleneck.second, "Diagram JSON file")->required();

  RestrictArgs restrict_args;
  auto* cmd_restrict = app.add_subcommand("restrict", "Restrict a diagram to an interval");
  cmd_restrict->add_option("diagram", restrict_args.diagram, "Diagram JSON file")->required();
  cmd_restrict->add_option("--interval", restrict_args.interval, "r1:r2")->required();

  DistortionArgs distortion;
  auto* cmd_distortion = app.add_subcommand("distortion", "Sampled persistence distortion distance");
  cmd_distortion->add_option("first", distortion.graphs.first, "Graph JSON file")->required();
  cmd_distortion->add_option("second", distortion.graphs.second, "Graph JSON file")->required();
  cmd_distortion->add_option("--samples", distortion.samples, "Interior base points per edge")
      ->capture_default_str();
  cmd_distortion->add_option("--radius", distortion.radius, "Local radius r; diagrams restricted to [0, r]");

  MatchArgs match;
  auto* cmd_match = app.add_subcommand("match-distance", "Matching distance lower bound over a line grid");
  cmd_match->add_option("first", match.bifiltrations.first, "Bifiltration JSON file")->required();
  cmd_match->add_option("second", match.bifiltrations.second, "Bifiltration JSON file")->required();
  cmd_match->add_option("--box", match.box, "Restriction box x0:x1,y0:y1");
  cmd_match->add_option("--grid", match.grid, "Directions and offsets per grid side")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  cmd_match->add_option("--dim", match.dim, "Homology degree")->check(CLI::NonNegativeNumber)->capture_default_str();

  std::string zigzag_path;
  auto* cmd_zigzag = app.add_subcommand("zigzag", "Interval decomposition of a zigzag module");
  cmd_zigzag->add_option("module", zigzag_path, "Zigzag JSON file")->required();

  UnionArgs union_args;
  auto* cmd_union = app.add_subcommand("union-zigzag", "Union zigzag of a snapshot sequence");
  cmd_union->add_option("snapshots", union_args.snapshots, "Snapshot JSON file")->required();
  cmd_union->add_option("--dim", union_args.dim, "Homology degree")->check(CLI::NonNegativeNumber)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*cmd_diagram) run_diagram(diagram);
    if (*cmd_bottleneck) run_bottleneck(bottleneck);
    if (*cmd_restrict) run_restrict(restrict_args);
    if (*cmd_distortion) run_distortion(distortion);
    if (*cmd_match) run_match(match);
    if (*cmd_zigzag) run_zigzag(zigzag_path);
    if (*cmd_union) run_union(union_args);
  } catch (const InputError& e) {
    std::cerr << "zzlocal: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const json::exception& e) {
    std::cerr << "zzlocal: " << e.what() << '\n';
    return kInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "zzlocal: internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}
