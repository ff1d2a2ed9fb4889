#include <cmath>
#include <vector>

#include "doctest.h"
#include "logitlab/numerics.hpp"

using namespace logitlab;

TEST_CASE("log_sum_exp basics") {
  std::vector<double> two_zeros = {0.0, 0.0};
  CHECK(num::log_sum_exp(two_zeros) == doctest::Approx(std::log(2.0)).epsilon(1e-15));

  std::vector<double> empty;
  CHECK(num::log_sum_exp(empty) == num::neg_inf);

  std::vector<double> all_neg_inf = {num::neg_inf, num::neg_inf};
  CHECK(num::log_sum_exp(all_neg_inf) == num::neg_inf);

  // -inf entries drop out of the sum instead of poisoning it.
  std::vector<double> with_hole = {num::neg_inf, 0.0};
  CHECK(num::log_sum_exp(with_hole) == doctest::Approx(0.0));

  std::vector<double> single = {3.5};
  CHECK(num::log_sum_exp(single) == doctest::Approx(3.5));
}

TEST_CASE("log_sum_exp survives magnitudes that overflow exp") {
  std::vector<double> big = {1000.0, 1000.0};
  CHECK(num::log_sum_exp(big) == doctest::Approx(1000.0 + std::log(2.0)));

  std::vector<double> low = {-1000.0, -1000.0, -1000.0};
  CHECK(num::log_sum_exp(low) == doctest::Approx(-1000.0 + std::log(3.0)));

  // Shift invariance: LSE(v + c) = LSE(v) + c.
  std::vector<double> v = {0.3, -1.7, 2.2};
  double base = num::log_sum_exp(v);
  std::vector<double> shifted = v;
  for (double& x : shifted) x += 500.0;
  CHECK(num::log_sum_exp(shifted) == doctest::Approx(base + 500.0).epsilon(1e-13));
}

TEST_CASE("softmax_inplace normalizes and honors shifts") {
  std::vector<double> flat = {0.0, 0.0, 0.0};
  num::softmax_inplace(flat);
  for (double p : flat) CHECK(p == doctest::Approx(1.0 / 3.0).epsilon(1e-15));

  // Huge magnitudes: the max shift keeps everything finite.
  std::vector<double> big = {1000.0, 1000.0 + std::log(3.0)};
  num::softmax_inplace(big);
  CHECK(big[0] == doctest::Approx(0.25).epsilon(1e-13));
  CHECK(big[1] == doctest::Approx(0.75).epsilon(1e-13));

  std::vector<double> v = {0.1, -0.4, 1.3, 0.0};
  std::vector<double> w = v;
  for (double& x : w) x -= 123.0;
  num::softmax_inplace(v);
  num::softmax_inplace(w);
  double mass = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    CHECK(std::abs(v[i] - w[i]) < 1e-14);
    mass += v[i];
  }
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("log_sigmoid is stable for both tails") {
  CHECK(num::log_sigmoid(0.0) == doctest::Approx(-std::log(2.0)).epsilon(1e-15));
  // sigmoid(t) + sigmoid(-t) = 1.
  for (double t : {0.3, 2.0, 10.0, 40.0}) {
    CHECK(std::exp(num::log_sigmoid(t)) + std::exp(num::log_sigmoid(-t)) ==
          doctest::Approx(1.0).epsilon(1e-14));
    // log sigmoid(t) - log sigmoid(-t) = t.
    CHECK(num::log_sigmoid(t) - num::log_sigmoid(-t) == doctest::Approx(t).epsilon(1e-12));
  }
  // Deep tails stay finite and first-order accurate.
  CHECK(num::log_sigmoid(-700.0) == doctest::Approx(-700.0));
  CHECK(std::abs(num::log_sigmoid(700.0)) < 1e-300);
}

TEST_CASE("log_binomial matches exact coefficients") {
  CHECK(num::log_binomial(0, 0) == doctest::Approx(0.0));
  CHECK(num::log_binomial(5, 2) == doctest::Approx(std::log(10.0)).epsilon(1e-13));
  CHECK(num::log_binomial(10, 5) == doctest::Approx(std::log(252.0)).epsilon(1e-13));
  CHECK(num::log_binomial(3, 5) == num::neg_inf);

  // Pascal identity in log space for a larger row.
  for (std::uint64_t k = 1; k <= 49; ++k) {
    double merged = num::log_binomial(50, k);
    std::vector<double> parts = {num::log_binomial(49, k - 1), num::log_binomial(49, k)};
    CHECK(merged == doctest::Approx(num::log_sum_exp(parts)).epsilon(1e-12));
  }
}

TEST_CASE("total_variation agrees with hand values") {
  std::vector<double> u = {0.5, 0.5};
  CHECK(num::total_variation(u, u) == doctest::Approx(0.0));

  std::vector<double> point_a = {1.0, 0.0};
  std::vector<double> point_b = {0.0, 1.0};
  CHECK(num::total_variation(point_a, point_b) == doctest::Approx(1.0));

  std::vector<double> skew = {0.75, 0.25};
  CHECK(num::total_variation(u, skew) == doctest::Approx(0.25));

  std::vector<double> p = {0.2, 0.3, 0.5};
  std::vector<double> q = {0.4, 0.3, 0.3};
  CHECK(num::total_variation(p, q) == doctest::Approx(0.2).epsilon(1e-15));
  // Symmetry.
  CHECK(num::total_variation(q, p) == doctest::Approx(num::total_variation(p, q)));
}
