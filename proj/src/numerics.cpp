#include "logitlab/numerics.hpp"

#include <algorithm>

namespace logitlab::num {

double log_sum_exp(std::span<const double> v) {
  double m = neg_inf;
  for (double x : v) m = std::max(m, x);
  if (m == neg_inf) return neg_inf;  // empty or all -inf
  double s = 0.0;
  for (double x : v) {
    if (x != neg_inf) s += std::exp(x - m);
  }
  return m + std::log(s);
}

void softmax_inplace(std::vector<double>& v) {
  double m = neg_inf;
  for (double x : v) m = std::max(m, x);
  double s = 0.0;
  for (double& x : v) {
    x = std::exp(x - m);
    s += x;
  }
  for (double& x : v) x /= s;
}

double total_variation(std::span<const double> p, std::span<const double> q) {
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) acc += std::abs(p[i] - q[i]);
  return 0.5 * acc;
}

}  // namespace logitlab::num
