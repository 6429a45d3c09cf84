#include <doctest.h>

#include <stdexcept>
#include <vector>

#include "cohesion/stats.hpp"

using namespace coh;

TEST_SUITE("stats") {

TEST_CASE("average ranks with ties") {
  const std::vector<double> values = {3.0, 1.0, 4.0, 1.0, 5.0};
  const auto ranks = average_ranks(values);
  CHECK(ranks == std::vector<double>{3.0, 1.5, 4.0, 1.5, 5.0});
}

TEST_CASE("perfectly monotone data") {
  const std::vector<double> x = {0.1, 0.2, 0.3, 0.4, 0.5};
  const std::vector<double> up = {1.0, 2.0, 3.0, 4.0, 5.0};
  const Correlation rho = spearman_test(x, up);
  CHECK(rho.coefficient == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rho.p_value == doctest::Approx(0.0).epsilon(1e-12));

  const std::vector<double> down = {9.0, 7.0, 5.0, 3.0, 1.0};
  CHECK(spearman_test(x, down).coefficient == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("four-point rank fixture") {
  const std::vector<double> x = {1.0, 2.0, 3.0, 4.0};
  const std::vector<double> y = {2.0, 1.0, 4.0, 3.0};
  const Correlation rho = spearman_test(x, y);
  CHECK(rho.coefficient == doctest::Approx(0.6).epsilon(1e-12));
  CHECK(rho.p_value == doctest::Approx(0.4).epsilon(1e-9));
}

TEST_CASE("spearman with ties matches the reference implementation") {
  const std::vector<double> x = {17, 86, 60, 77, 47, 3, 70, 47, 88, 92};
  const std::vector<double> y = {70, 29, 85, 61, 80, 34, 60, 31, 73, 66};
  const Correlation rho = spearman_test(x, y);
  CHECK(rho.coefficient == doctest::Approx(0.024316221747202587).epsilon(1e-12));
  CHECK(rho.p_value == doctest::Approx(0.9468397049085097).epsilon(1e-9));
}

TEST_CASE("pearson matches the reference implementation") {
  const std::vector<double> x = {1.0, 2.0, 3.0, 4.0, 5.0, 6.0};
  const std::vector<double> y = {2.0, 1.0, 4.0, 3.0, 7.0, 5.5};
  const Correlation r = pearson_test(x, y);
  CHECK(r.coefficient == doctest::Approx(0.8267772737836245).epsilon(1e-12));
  CHECK(r.p_value == doctest::Approx(0.042410298978822765).epsilon(1e-9));

  const std::vector<double> x2 = {0.1, 0.4, 0.2, 0.9, 0.7};
  const std::vector<double> y2 = {1.2, 2.1, 1.3, 3.9, 2.6};
  const Correlation r2 = pearson_test(x2, y2);
  CHECK(r2.coefficient == doctest::Approx(0.9734702665056121).epsilon(1e-12));
  CHECK(r2.p_value == doctest::Approx(0.005166510916859934).epsilon(1e-9));
}

TEST_CASE("degenerate inputs are rejected") {
  const std::vector<double> two = {1.0, 2.0};
  CHECK_THROWS_AS(pearson_test(two, two), std::invalid_argument);
  const std::vector<double> constant = {1.0, 1.0, 1.0};
  const std::vector<double> varying = {1.0, 2.0, 3.0};
  CHECK_THROWS_AS(pearson_test(constant, varying), std::invalid_argument);
  const std::vector<double> longer = {1.0, 2.0, 3.0, 4.0};
  CHECK_THROWS_AS(pearson(longer, varying), std::invalid_argument);
}

}  // TEST_SUITE
