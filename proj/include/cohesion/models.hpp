#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "cohesion/graph.hpp"

namespace coh {

/// SplitMix64 output mixer (Steele, Lea & Flood 2014). All synthetic-model
/// randomness is counter-based on top of it: substream `i` of a base seed
/// is `splitmix64(base + (i + 1) * GOLDEN_GAMMA)`, i.e. the i-th output of a
/// SplitMix64 generator seeded at `base`. This makes every edge coin and
/// every trial an independent, platform-reproducible function of
/// (seed, index).
std::uint64_t splitmix64(std::uint64_t x);

inline constexpr std::uint64_t kGoldenGamma = 0x9E3779B97F4A7C15ull;

inline std::uint64_t substream_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(base + (index + 1) * kGoldenGamma);
}

/// Maps 64 random bits to a double in [0, 1) using the top 53 bits.
inline double uniform01(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Minimal sequential SplitMix64 stream with an unbiased bounded draw.
class SplitMix64Stream {
 public:
  explicit SplitMix64Stream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() { return splitmix64(state_ += kGoldenGamma); }

  /// Uniform integer in [0, bound) by rejection sampling.
  std::uint64_t next_below(std::uint64_t bound);

 private:
  std::uint64_t state_;
};

enum class ModelKind { gnp, four_groups };

/// Parameters of a synthetic generator, reproducible from the seed alone.
/// For four_groups the graph has 4 blocks of n nodes each.
struct ModelSpec {
  ModelKind kind = ModelKind::gnp;
  std::uint32_t n = 0;
  double p = 0.0;       // gnp edge probability
  double p_in = 0.0;    // four_groups within-block probability
  double p_out = 0.0;   // four_groups cross-block probability
  std::uint64_t rng_seed = 0;

  /// Flat `key=value` block, one per line: kind, n, p or p_in/p_out, seed.
  static ModelSpec parse(std::istream& in);
  static ModelSpec parse_file(const std::filesystem::path& path);
  std::string serialize() const;
};

/// G(n, p): each of the C(n,2) node pairs is an edge independently with
/// probability p. Deterministic for a fixed spec.
Graph gen_gnp(const ModelSpec& spec);

struct FourGroupsSample {
  Graph graph;
  std::array<NodeSet, 4> blocks;
};

/// Four planted blocks of n nodes: within-block pairs wired with p_in,
/// cross-block pairs with p_out.
FourGroupsSample gen_four_groups(const ModelSpec& spec);

/// The closed-form large-graph approximation p^3 * k / n for the expected
/// cohesion of a k-subset of G(n, p). This is a ratio-of-expectations
/// heuristic quoted as-is; Monte Carlo means track it loosely at best away
/// from k = n (see monte_carlo_cohesion).
double expected_cohesion_gnp(std::size_t n, std::size_t k, double p);

/// Closed-form large-n approximation p_in^5 / (p_in^2 + 9 p_out^2) for the
/// expected cohesion of a planted block.
double expected_cohesion_four_groups(double p_in, double p_out);

struct MonteCarloResult {
  double mean = 0.0;
  double stddev = 0.0;     // sample standard deviation
  double formula = 0.0;    // matching closed-form value
  std::size_t samples = 0;
};

/// Samples cohesion over `trials` independently generated graphs: uniformly
/// random k-subsets for gnp (k = subset_size), all four planted blocks for
/// four_groups (subset_size ignored). Trial t draws its graph and subset
/// streams from substreams (2t, 2t+1) of the spec seed.
MonteCarloResult monte_carlo_cohesion(const ModelSpec& spec, std::size_t subset_size,
                                      std::size_t trials);

}  // namespace coh
