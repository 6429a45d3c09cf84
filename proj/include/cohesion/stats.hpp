#pragma once

#include <span>
#include <vector>

namespace coh {

/// Fractional (average) ranks, 1-based; ties share the mean of their ranks.
std::vector<double> average_ranks(std::span<const double> values);

/// Pearson product-moment correlation of two equal-length samples.
double pearson(std::span<const double> x, std::span<const double> y);

struct Correlation {
  double coefficient = 0.0;
  double p_value = 1.0;  // two-sided, t-approximation with n-2 dof
  std::size_t n = 0;
};

/// Pearson r with its two-sided p-value. Requires n >= 3 and nonconstant
/// samples; throws std::invalid_argument otherwise.
Correlation pearson_test(std::span<const double> x, std::span<const double> y);

/// Spearman rank correlation (average ranks for ties) with its two-sided
/// p-value via the same t-approximation.
Correlation spearman_test(std::span<const double> x, std::span<const double> y);

}  // namespace coh
