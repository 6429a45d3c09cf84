// Command-line front end: scores node sets, detects groups, generates
// synthetic models, and emits CSV for downstream correlation analysis.
//
// Exit codes: 0 success, 1 usage error, 2 data/parse error.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cohesion/detection.hpp"
#include "cohesion/graph.hpp"
#include "cohesion/metrics.hpp"
#include "cohesion/models.hpp"
#include "cohesion/stats.hpp"
#include "cohesion/triangles.hpp"

namespace {

using namespace coh;

std::string fixed6(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", value);
  return buf;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

NodeSet resolve_set(const Graph& g, const std::string& set_spec,
                    const std::string& set_file) {
  std::vector<std::string> labels;
  if (!set_file.empty()) {
    std::ifstream in(set_file);
    if (!in) throw ParseError("cannot open " + set_file, 0);
    std::string token;
    while (in >> token) labels.push_back(token);
  } else {
    for (auto& token : split(set_spec, ','))
      if (!token.empty()) labels.push_back(token);
  }
  if (labels.empty()) throw ParseError("empty node set", 0);
  return g.set_from_labels(labels);
}

std::string joined_labels(const Graph& g, const NodeSet& s) {
  std::string out;
  for (NodeId u : s) {
    if (!out.empty()) out.push_back(';');
    out += g.label(u);
  }
  return out;
}

// --- ratings CSV -----------------------------------------------------------

struct RatingRecord {
  std::string group_id;
  double cohesion_value = 0.0;
  double rating = 0.0;
};

std::vector<RatingRecord> read_ratings(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path, 0);
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty ratings file", 1);
  const auto header = split(line, ',');
  std::optional<std::size_t> id_col, cohesion_col, rating_col;
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (header[i] == "group_id") id_col = i;
    if (header[i] == "cohesion") cohesion_col = i;
    if (header[i] == "rating") rating_col = i;
  }
  if (!cohesion_col || !rating_col)
    throw ParseError("ratings header needs `cohesion` and `rating` columns", 1);

  std::vector<RatingRecord> records;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() < header.size())
      throw ParseError("short ratings row", line_no);
    RatingRecord r;
    if (id_col) r.group_id = fields[*id_col];
    try {
      r.cohesion_value = std::stod(fields[*cohesion_col]);
      r.rating = std::stod(fields[*rating_col]);
    } catch (const std::logic_error&) {
      throw ParseError("bad numeric field in ratings row", line_no);
    }
    records.push_back(std::move(r));
  }
  return records;
}

// --- subcommands ------------------------------------------------------------

int cmd_score(const std::string& graph_file, const std::string& set_spec,
              const std::string& set_file) {
  const Graph g = load_edge_list(graph_file);
  const NodeSet s = resolve_set(g, set_spec, set_file);
  std::cout << "metric,value\n";
  if (g.is_weighted()) {
    const CohesionScore score = weighted_cohesion(g, s);
    std::cout << "cohesion," << fixed6(score.value) << '\n'
              << "density_factor," << fixed6(score.density_factor) << '\n'
              << "isolation_factor," << fixed6(score.isolation_factor) << '\n'
              << "triangles_inbound," << fixed6(score.stats.inbound) << '\n'
              << "triangles_outbound," << fixed6(score.stats.outbound) << '\n';
  } else {
    const CohesionScore score = cohesion(g, s);
    std::cout << "cohesion," << fixed6(score.value) << '\n'
              << "density_factor," << fixed6(score.density_factor) << '\n'
              << "isolation_factor," << fixed6(score.isolation_factor) << '\n'
              << "triangles_inbound," << static_cast<long long>(score.stats.inbound) << '\n'
              << "triangles_outbound," << static_cast<long long>(score.stats.outbound) << '\n';
  }
  std::cout << "density," << fixed6(density(g, s)) << '\n'
            << "clustering," << fixed6(clustering(g, s)) << '\n'
            << "conductance," << fixed6(conductance(g, s)) << '\n';
  return 0;
}

int cmd_detect(const std::string& graph_file, double min_cohesion,
               std::size_t max_group_size, const std::string& ego_label) {
  const Graph full = load_edge_list(graph_file);
  const Graph* g = &full;
  Graph ego;
  if (!ego_label.empty()) {
    const auto id = full.node_for_label(ego_label);
    if (!id) throw ParseError("unknown node label: " + ego_label, 0);
    ego = ego_network(full, *id);
    g = &ego;
  }
  DetectionConfig config;
  config.min_cohesion = min_cohesion;
  config.max_group_size = max_group_size;
  std::cout << "members,size,triangles_inbound,triangles_outbound,cohesion\n";
  for (const Egomunity& group : detect_groups(*g, config)) {
    std::cout << joined_labels(*g, group.members) << ',' << group.members.size() << ','
              << static_cast<long long>(group.score.stats.inbound) << ','
              << static_cast<long long>(group.score.stats.outbound) << ','
              << fixed6(group.score.value) << '\n';
  }
  return 0;
}

int cmd_cohesion1(const std::string& graph_file, std::size_t k) {
  const Graph g = load_edge_list(graph_file);
  std::cout << "members,size,cohesion\n";
  if (const auto found = find_cohesion_one(g, k)) {
    std::cout << joined_labels(g, *found) << ',' << found->size() << ','
              << fixed6(cohesion(g, *found).value) << '\n';
  }
  return 0;
}

int cmd_triangles(const std::string& graph_file, bool dump_classes) {
  const Graph g = load_edge_list(graph_file);
  const EdgeClassPartition partition = triangle_connectivity_classes(g);
  if (!dump_classes) {
    std::size_t triangle_edges = 0;
    for (const auto& cls : partition.classes) triangle_edges += cls.size();
    std::cout << "metric,value\n"
              << "nodes," << g.node_count() << '\n'
              << "edges," << g.edge_count() << '\n'
              << "triangles," << enumerate_triangles(g).size() << '\n'
              << "triangle_edges," << triangle_edges << '\n'
              << "weak_ties," << partition.weak_ties.size() << '\n'
              << "classes," << partition.classes.size() << '\n';
    return 0;
  }
  std::cout << "class_id,edge_count,vertex_count,edges\n";
  for (std::size_t c = 0; c < partition.classes.size(); ++c) {
    const auto& cls = partition.classes[c];
    std::vector<NodeId> vertices;
    std::string edge_list;
    for (EdgeId e : cls) {
      const Edge& edge = g.edges()[e];
      vertices.push_back(edge.u);
      vertices.push_back(edge.v);
      if (!edge_list.empty()) edge_list.push_back(';');
      edge_list += g.label(edge.u) + "~" + g.label(edge.v);
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    std::cout << c << ',' << cls.size() << ',' << vertices.size() << ',' << edge_list << '\n';
  }
  return 0;
}

int cmd_gen(const std::string& spec_file, const std::string& out_file,
            const std::string& blocks_file) {
  const ModelSpec spec = ModelSpec::parse_file(spec_file);
  std::ofstream out(out_file);
  if (!out) throw ParseError("cannot open " + out_file, 0);
  if (spec.kind == ModelKind::gnp) {
    write_edge_list(gen_gnp(spec), out);
    return 0;
  }
  const FourGroupsSample sample = gen_four_groups(spec);
  write_edge_list(sample.graph, out);
  if (!blocks_file.empty()) {
    std::ofstream blocks(blocks_file);
    if (!blocks) throw ParseError("cannot open " + blocks_file, 0);
    blocks << "block,label\n";
    for (std::size_t b = 0; b < sample.blocks.size(); ++b)
      for (NodeId u : sample.blocks[b]) blocks << b << ',' << sample.graph.label(u) << '\n';
  }
  return 0;
}

int cmd_validate_models(const std::string& spec_file, std::size_t trials,
                        std::size_t subset_size) {
  const ModelSpec spec = ModelSpec::parse_file(spec_file);
  if (spec.kind == ModelKind::gnp && subset_size == 0) subset_size = spec.n;
  const MonteCarloResult mc = monte_carlo_cohesion(spec, subset_size, trials);
  double rel_err = 0.0;
  if (mc.formula != 0.0)
    rel_err = std::abs(mc.mean - mc.formula) / mc.formula;
  else if (mc.mean != 0.0)
    rel_err = std::numeric_limits<double>::infinity();
  std::cout << "model,formula,sample_mean,sample_std,rel_err\n"
            << (spec.kind == ModelKind::gnp ? "gnp" : "four_groups") << ','
            << fixed6(mc.formula) << ',' << fixed6(mc.mean) << ',' << fixed6(mc.stddev)
            << ',' << fixed6(rel_err) << '\n';
  return 0;
}

int cmd_correlate(const std::string& ratings_file) {
  const auto records = read_ratings(ratings_file);
  if (records.size() < 3) throw ParseError("need at least 3 rating records", 0);
  std::vector<double> cohesions, ratings;
  for (const auto& r : records) {
    cohesions.push_back(r.cohesion_value);
    ratings.push_back(r.rating);
  }
  const Correlation rho = spearman_test(cohesions, ratings);

  std::vector<double> log_c, log_r;
  std::size_t excluded = 0;
  for (const auto& r : records) {
    if (r.cohesion_value > 0.0 && r.rating > 0.0) {
      log_c.push_back(std::log(r.cohesion_value));
      log_r.push_back(std::log(r.rating));
    } else {
      ++excluded;
    }
  }

  std::cout << "metric,value\n"
            << "records," << records.size() << '\n'
            << "spearman_rho," << fixed6(rho.coefficient) << '\n'
            << "spearman_p," << fixed6(rho.p_value) << '\n'
            << "log_excluded," << excluded << '\n';
  if (log_c.size() >= 3) {
    try {
      const Correlation r = pearson_test(log_c, log_r);
      std::cout << "pearson_log_r," << fixed6(r.coefficient) << '\n'
                << "pearson_log_p," << fixed6(r.p_value) << '\n';
      return 0;
    } catch (const std::invalid_argument&) {
      // constant sample after exclusion; fall through
    }
  }
  std::cout << "pearson_log_r,nan\npearson_log_p,nan\n";
  return 0;
}

int cmd_bins(const std::string& ratings_file, double bin_width) {
  if (!(bin_width > 0.0)) throw ParseError("bin width must be positive", 0);
  const auto records = read_ratings(ratings_file);
  // Left-closed bins [i*w, (i+1)*w); empty bins are omitted.
  std::map<long long, std::pair<double, std::size_t>> bins;
  for (const auto& r : records) {
    const auto bin = static_cast<long long>(std::floor(r.cohesion_value / bin_width));
    auto& [sum, count] = bins[bin];
    sum += r.rating;
    ++count;
  }
  std::cout << "cohesion_bin,mean_rating,count\n";
  for (const auto& [bin, agg] : bins) {
    std::cout << fixed6(static_cast<double>(bin) * bin_width) << ','
              << fixed6(agg.first / static_cast<double>(agg.second)) << ',' << agg.second
              << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cohesion: triangle-based community quality for social graphs"};
  app.set_help_flag("--help", "print usage");
  app.require_subcommand(1);

  std::string graph_file, set_spec, set_file, spec_file, out_file, blocks_file,
      ratings_file, ego_label;
  double min_cohesion = 0.0;
  double bin_width = 0.01;
  std::size_t k = 0, trials = 50, subset_size = 0, max_group_size = 0;

  auto* score = app.add_subcommand("score", "Score one node set");
  score->add_option("--graph", graph_file, "edge-list file")->required();
  score->add_option("--set", set_spec, "comma-separated node labels");
  score->add_option("--set-file", set_file, "file of whitespace-separated labels");

  auto* detect = app.add_subcommand("detect", "Detect groups by greedy cohesion growth");
  detect->add_option("--graph", graph_file, "edge-list file")->required();
  detect->add_option("--min-cohesion", min_cohesion, "drop groups scoring below this");
  detect->add_option("--max-group-size", max_group_size, "cap group size (0 = unlimited)");
  detect->add_option("--ego", ego_label, "detect inside this node's ego network");

  auto* cohesion1 = app.add_subcommand("cohesion1", "Find a k-set with cohesion exactly 1");
  cohesion1->add_option("--graph", graph_file, "edge-list file")->required();
  cohesion1->add_option("--k", k, "set size")->required();

  auto* triangles = app.add_subcommand("triangles", "Triangle and connectivity-class summary");
  triangles->add_option("--graph", graph_file, "edge-list file")->required();
  const auto classes_flag = triangles->add_flag("--classes", "dump one row per class");

  auto* gen = app.add_subcommand("gen", "Generate a synthetic model graph");
  gen->add_option("--spec", spec_file, "model spec file (key=value)")->required();
  gen->add_option("--out", out_file, "output edge-list file")->required();
  gen->add_option("--blocks-out", blocks_file, "write planted blocks CSV (four_groups)");

  auto* validate = app.add_subcommand("validate-models",
                                      "Monte Carlo check of the closed-form cohesion");
  validate->add_option("--spec", spec_file, "model spec file")->required();
  validate->add_option("--trials", trials, "number of generated graphs");
  validate->add_option("--subset-size", subset_size,
                       "gnp subset size (default: whole graph)");

  auto* correlate = app.add_subcommand("correlate", "Correlate cohesion against ratings");
  correlate->add_option("--ratings", ratings_file, "CSV with cohesion and rating columns")
      ->required();

  auto* bins = app.add_subcommand("bins", "Mean rating per cohesion bin");
  bins->add_option("--ratings", ratings_file, "CSV with cohesion and rating columns")
      ->required();
  bins->add_option("--bin-width", bin_width, "bin width (default 0.01)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (score->parsed()) {
      if (set_spec.empty() == set_file.empty()) {
        std::cerr << "score: exactly one of --set / --set-file is required\n";
        return 1;
      }
      return cmd_score(graph_file, set_spec, set_file);
    }
    if (detect->parsed()) return cmd_detect(graph_file, min_cohesion, max_group_size, ego_label);
    if (cohesion1->parsed()) return cmd_cohesion1(graph_file, k);
    if (triangles->parsed()) return cmd_triangles(graph_file, classes_flag->count() > 0);
    if (gen->parsed()) return cmd_gen(spec_file, out_file, blocks_file);
    if (validate->parsed()) return cmd_validate_models(spec_file, trials, subset_size);
    if (correlate->parsed()) return cmd_correlate(ratings_file);
    if (bins->parsed()) return cmd_bins(ratings_file, bin_width);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
