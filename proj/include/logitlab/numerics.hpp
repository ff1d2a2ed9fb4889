#ifndef LOGITLAB_NUMERICS_HPP
#define LOGITLAB_NUMERICS_HPP

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

namespace logitlab::num {

inline constexpr double neg_inf = -std::numeric_limits<double>::infinity();

// Largest exponent magnitude we allow inside a Boltzmann weight. Beyond this,
// e^t overflows (or the matching e^{-t} underflows to an exact zero), so
// operations that would cross it raise an error instead of returning inf/0.
inline constexpr double max_exponent = 700.0;

// log(sum_k e^{v_k}) with the usual max-shift; empty input gives -inf.
double log_sum_exp(std::span<const double> v);

// In-place softmax of p_k = e^{v_k} / sum e^{v_j}, max-shifted.
void softmax_inplace(std::vector<double>& v);

// log(1 / (1 + e^{-t})), stable for both signs of t.
inline double log_sigmoid(double t) {
  return t >= 0.0 ? -std::log1p(std::exp(-t)) : t - std::log1p(std::exp(t));
}

// log C(n, k); exact to ~1e-14 relative for the sizes we use.
inline double log_binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return neg_inf;
  return std::lgamma(double(n) + 1.0) - std::lgamma(double(k) + 1.0) -
         std::lgamma(double(n - k) + 1.0);
}

// Total variation distance between two finite distributions of equal length.
double total_variation(std::span<const double> p, std::span<const double> q);

}  // namespace logitlab::num

#endif  // LOGITLAB_NUMERICS_HPP
