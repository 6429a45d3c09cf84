#include "cohesion/models.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <istream>
#include <numeric>
#include <sstream>

#include "cohesion/metrics.hpp"

namespace coh {

std::uint64_t splitmix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ull;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBull;
  x ^= x >> 31;
  return x;
}

std::uint64_t SplitMix64Stream::next_below(std::uint64_t bound) {
  const std::uint64_t limit = bound * (UINT64_MAX / bound);
  std::uint64_t x;
  do {
    x = next();
  } while (x >= limit);
  return x % bound;
}

namespace {

void check_probability(double p, const char* name) {
  if (!(p >= 0.0) || p > 1.0)
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
}

std::string format_probability(double p) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", p);
  return buf;
}

}  // namespace

ModelSpec ModelSpec::parse(std::istream& in) {
  ModelSpec spec;
  bool have_kind = false, have_n = false, have_p = false, have_pin = false, have_pout = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("model spec: expected key=value", line_no);
    std::string key = line.substr(first, eq - first);
    std::string value = line.substr(eq + 1);
    auto strip = [](std::string& s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
    };
    strip(key);
    strip(value);
    try {
      if (key == "kind") {
        if (value == "gnp")
          spec.kind = ModelKind::gnp;
        else if (value == "four_groups")
          spec.kind = ModelKind::four_groups;
        else
          throw ParseError("model spec: unknown kind `" + value + "`", line_no);
        have_kind = true;
      } else if (key == "n") {
        spec.n = static_cast<std::uint32_t>(std::stoul(value));
        have_n = true;
      } else if (key == "p") {
        spec.p = std::stod(value);
        have_p = true;
      } else if (key == "p_in") {
        spec.p_in = std::stod(value);
        have_pin = true;
      } else if (key == "p_out") {
        spec.p_out = std::stod(value);
        have_pout = true;
      } else if (key == "seed") {
        spec.rng_seed = std::stoull(value);
      } else {
        throw ParseError("model spec: unknown key `" + key + "`", line_no);
      }
    } catch (const std::logic_error&) {
      throw ParseError("model spec: bad value for `" + key + "`", line_no);
    }
  }
  if (!have_kind || !have_n)
    throw ParseError("model spec: kind and n are required", 0);
  if (spec.n == 0) throw ParseError("model spec: n must be positive", 0);
  if (spec.kind == ModelKind::gnp) {
    if (!have_p) throw ParseError("model spec: gnp requires p", 0);
    check_probability(spec.p, "p");
  } else {
    if (!have_pin || !have_pout)
      throw ParseError("model spec: four_groups requires p_in and p_out", 0);
    check_probability(spec.p_in, "p_in");
    check_probability(spec.p_out, "p_out");
  }
  return spec;
}

ModelSpec ModelSpec::parse_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path.string(), 0);
  return parse(in);
}

std::string ModelSpec::serialize() const {
  std::ostringstream out;
  if (kind == ModelKind::gnp) {
    out << "kind=gnp\n"
        << "n=" << n << "\n"
        << "p=" << format_probability(p) << "\n";
  } else {
    out << "kind=four_groups\n"
        << "n=" << n << "\n"
        << "p_in=" << format_probability(p_in) << "\n"
        << "p_out=" << format_probability(p_out) << "\n";
  }
  out << "seed=" << rng_seed << "\n";
  return out.str();
}

namespace {

// Pairs (u, v), u < v, indexed lexicographically; the coin for pair i is
// substream i of the graph seed.
Graph gen_pair_model(std::size_t node_count, std::uint64_t seed,
                     const std::function<double(NodeId, NodeId)>& probability) {
  std::vector<std::pair<NodeId, NodeId>> pairs;
  std::uint64_t pair_index = 0;
  for (NodeId u = 0; u + 1 < node_count; ++u) {
    for (NodeId v = u + 1; v < node_count; ++v, ++pair_index) {
      if (uniform01(substream_seed(seed, pair_index)) < probability(u, v))
        pairs.emplace_back(u, v);
    }
  }
  return Graph::from_index_edges(node_count, pairs);
}

}  // namespace

Graph gen_gnp(const ModelSpec& spec) {
  if (spec.kind != ModelKind::gnp) throw std::invalid_argument("spec kind is not gnp");
  check_probability(spec.p, "p");
  return gen_pair_model(spec.n, spec.rng_seed, [&](NodeId, NodeId) { return spec.p; });
}

FourGroupsSample gen_four_groups(const ModelSpec& spec) {
  if (spec.kind != ModelKind::four_groups)
    throw std::invalid_argument("spec kind is not four_groups");
  check_probability(spec.p_in, "p_in");
  check_probability(spec.p_out, "p_out");
  const std::size_t n = spec.n;
  FourGroupsSample sample;
  sample.graph = gen_pair_model(4 * n, spec.rng_seed, [&](NodeId u, NodeId v) {
    return u / n == v / n ? spec.p_in : spec.p_out;
  });
  for (std::size_t b = 0; b < 4; ++b) {
    std::vector<NodeId> members(n);
    std::iota(members.begin(), members.end(), static_cast<NodeId>(b * n));
    sample.blocks[b] = NodeSet(std::move(members));
  }
  return sample;
}

double expected_cohesion_gnp(std::size_t n, std::size_t k, double p) {
  check_probability(p, "p");
  if (k < 3 || k > n) throw std::invalid_argument("expected_cohesion_gnp needs 3 <= k <= n");
  return p * p * p * static_cast<double>(k) / static_cast<double>(n);
}

double expected_cohesion_four_groups(double p_in, double p_out) {
  check_probability(p_in, "p_in");
  check_probability(p_out, "p_out");
  const double denom = p_in * p_in + 9.0 * p_out * p_out;
  if (denom == 0.0) return 0.0;
  return std::pow(p_in, 5) / denom;
}

namespace {

NodeSet random_subset(std::size_t n, std::size_t k, std::uint64_t seed) {
  std::vector<NodeId> ids(n);
  std::iota(ids.begin(), ids.end(), NodeId{0});
  SplitMix64Stream stream(seed);
  for (std::size_t i = 0; i < k; ++i) {
    const std::size_t j = i + static_cast<std::size_t>(stream.next_below(n - i));
    std::swap(ids[i], ids[j]);
  }
  ids.resize(k);
  return NodeSet(std::move(ids));
}

}  // namespace

MonteCarloResult monte_carlo_cohesion(const ModelSpec& spec, std::size_t subset_size,
                                      std::size_t trials) {
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  MonteCarloResult result;
  std::vector<double> values;
  if (spec.kind == ModelKind::gnp) {
    if (subset_size < 3 || subset_size > spec.n)
      throw std::invalid_argument("subset size must lie in [3, n]");
    result.formula = expected_cohesion_gnp(spec.n, subset_size, spec.p);
    for (std::size_t t = 0; t < trials; ++t) {
      ModelSpec trial = spec;
      trial.rng_seed = substream_seed(spec.rng_seed, 2 * t);
      const Graph g = gen_gnp(trial);
      const NodeSet s =
          random_subset(spec.n, subset_size, substream_seed(spec.rng_seed, 2 * t + 1));
      values.push_back(cohesion(g, s).value);
    }
  } else {
    result.formula = expected_cohesion_four_groups(spec.p_in, spec.p_out);
    for (std::size_t t = 0; t < trials; ++t) {
      ModelSpec trial = spec;
      trial.rng_seed = substream_seed(spec.rng_seed, 2 * t);
      const FourGroupsSample sample = gen_four_groups(trial);
      for (const NodeSet& block : sample.blocks)
        values.push_back(cohesion(sample.graph, block).value);
    }
  }
  result.samples = values.size();
  result.mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
  double ss = 0.0;
  for (double v : values) ss += (v - result.mean) * (v - result.mean);
  result.stddev = values.size() > 1 ? std::sqrt(ss / static_cast<double>(values.size() - 1)) : 0.0;
  return result;
}

}  // namespace coh
