#include "cohesion/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/math/distributions/students_t.hpp>

namespace coh {

std::vector<double> average_ranks(std::span<const double> values) {
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(n, 0.0);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
    const double shared = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = shared;
    i = j + 1;
  }
  return ranks;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("samples differ in length");
  const std::size_t n = x.size();
  if (n < 2) throw std::invalid_argument("need at least two observations");
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) throw std::invalid_argument("constant sample has no correlation");
  return sxy / std::sqrt(sxx * syy);
}

namespace {

double two_sided_p(double r, std::size_t n) {
  const double dof = static_cast<double>(n - 2);
  const double denom = (1.0 - r) * (1.0 + r);
  if (denom <= 0.0) return 0.0;  // |r| = 1: exact monotone relation
  const double t = r * std::sqrt(dof / denom);
  boost::math::students_t_distribution<double> dist(dof);
  return 2.0 * boost::math::cdf(boost::math::complement(dist, std::fabs(t)));
}

}  // namespace

Correlation pearson_test(std::span<const double> x, std::span<const double> y) {
  if (x.size() < 3) throw std::invalid_argument("need at least three observations");
  Correlation c;
  c.n = x.size();
  c.coefficient = pearson(x, y);
  c.p_value = two_sided_p(c.coefficient, c.n);
  return c;
}

Correlation spearman_test(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size()) throw std::invalid_argument("samples differ in length");
  const auto rx = average_ranks(x);
  const auto ry = average_ranks(y);
  return pearson_test(rx, ry);
}

}  // namespace coh
