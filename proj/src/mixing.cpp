#include "logitlab/mixing.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace logitlab {

namespace {

// Smallest integer t with (1 - alpha)^t <= epsilon, as ceil(log eps / log(1
// - alpha)); alpha >= 1 collapses everything in one step.
std::optional<std::int64_t> overlap_steps(double alpha, double epsilon) {
  if (alpha <= 0.0) return std::nullopt;
  if (alpha >= 1.0) return 1;
  double t = std::ceil(std::log(epsilon) / std::log1p(-alpha));
  t = std::max(t, 1.0);
  if (t > 9.0e18) return std::nullopt;
  return std::int64_t(t);
}

void require_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw InputError("epsilon must lie strictly between 0 and 1");
  }
}

}  // namespace

double worst_case_tv(const Matrix& pt, const Distribution& pi) {
  double worst = 0.0;
  for (std::size_t x = 0; x < pt.rows; ++x) {
    worst = std::max(worst, total_variation(pt.row(x), pi.probs));
  }
  return worst;
}

MixingResult exact_mixing_time(const TransitionKernel& kernel, const Distribution& pi,
                               const MixingOptions& options, const Limits& limits) {
  require_epsilon(options.epsilon);
  if (options.t_cap < 1) throw InputError("t_cap must be at least 1");
  const std::uint64_t n = kernel.p.rows;
  if (n > limits.mixing_cap) {
    throw CapExceeded("state count exceeds the mixing-analysis budget");
  }
  if (pi.probs.size() != n) {
    throw InputError("distribution length does not match the kernel");
  }
  {
    // A wrong pi would silently corrupt every TV number downstream.
    std::vector<double> check = left_apply(pi.probs, kernel.p);
    double res = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) res += std::abs(check[i] - pi.probs[i]);
    if (res > 1e-8) {
      throw InputError("supplied distribution is not stationary for the kernel");
    }
  }

  MixingResult result;
  result.epsilon = options.epsilon;
  result.t_cap = options.t_cap;

  // Phase 1: plain stepping. Also produces the dense prefix of the curve.
  Matrix power = kernel.p;
  std::int64_t t = 1;
  double tv = worst_case_tv(power, pi);
  result.tv_curve.emplace_back(t, tv);
  while (tv > options.epsilon && t < options.t_cap &&
         std::uint64_t(t) < options.step_window) {
    power = multiply(power, kernel.p);
    renormalize_rows(power);
    ++t;
    tv = worst_case_tv(power, pi);
    result.tv_curve.emplace_back(t, tv);
  }
  if (tv <= options.epsilon) {
    result.t_mix = t;
    return result;
  }
  if (t >= options.t_cap) {
    result.cap_exceeded = true;
    result.tv_at_cap = tv;
    return result;
  }

  // Phase 2: repeated squaring until the crossing is bracketed (worst-start
  // TV is nonincreasing in t, so the first dip below epsilon brackets the
  // mixing time), then binary search using exact powers assembled from the
  // cached squares.
  std::vector<Matrix> squares;  // squares[j] = P^(2^j), rows renormalized
  squares.push_back(kernel.p);
  std::int64_t lo = t;  // known: tv(lo) > epsilon
  std::optional<std::int64_t> hi;
  double tv_hi = 0.0;
  for (int j = 1; j < 62; ++j) {
    std::int64_t tj = std::int64_t(1) << j;
    Matrix next = multiply(squares.back(), squares.back());
    renormalize_rows(next);
    squares.push_back(std::move(next));
    if (tj <= lo) continue;
    if (tj >= options.t_cap) break;
    double v = worst_case_tv(squares.back(), pi);
    result.tv_curve.emplace_back(tj, v);
    if (v <= options.epsilon) {
      hi = tj;
      tv_hi = v;
      break;
    }
    lo = tj;
  }

  auto power_at = [&](std::int64_t steps) {
    Matrix acc;
    bool first = true;
    for (int j = 0; j < 62 && (steps >> j) != 0; ++j) {
      if (((steps >> j) & 1) == 0) continue;
      while (std::size_t(j) >= squares.size()) {
        Matrix next = multiply(squares.back(), squares.back());
        renormalize_rows(next);
        squares.push_back(std::move(next));
      }
      if (first) {
        acc = squares[std::size_t(j)];
        first = false;
      } else {
        acc = multiply(acc, squares[std::size_t(j)]);
        renormalize_rows(acc);
      }
    }
    return acc;
  };

  if (!hi) {
    // The doubling run reached the cap without crossing; settle at t_cap.
    Matrix at_cap = power_at(options.t_cap);
    double v = worst_case_tv(at_cap, pi);
    result.tv_curve.emplace_back(options.t_cap, v);
    if (v > options.epsilon) {
      result.cap_exceeded = true;
      result.tv_at_cap = v;
      std::sort(result.tv_curve.begin(), result.tv_curve.end());
      return result;
    }
    hi = options.t_cap;
    tv_hi = v;
  }

  while (lo + 1 < *hi) {
    std::int64_t mid = lo + (*hi - lo) / 2;
    Matrix pm = power_at(mid);
    double v = worst_case_tv(pm, pi);
    result.tv_curve.emplace_back(mid, v);
    if (v <= options.epsilon) {
      hi = mid;
      tv_hi = v;
    } else {
      lo = mid;
    }
  }
  (void)tv_hi;
  result.t_mix = *hi;
  std::sort(result.tv_curve.begin(), result.tv_curve.end());
  return result;
}

OverlapBound overlap_upper_bound(const TransitionKernel& kernel, double epsilon) {
  require_epsilon(epsilon);
  const std::uint64_t n = kernel.p.rows;
  OverlapBound bound;
  for (std::uint64_t y = 0; y < n; ++y) {
    double col_min = std::numeric_limits<double>::infinity();
    for (std::uint64_t x = 0; x < n; ++x) col_min = std::min(col_min, kernel.p(x, y));
    bound.alpha += col_min;
  }
  bound.t_upper = overlap_steps(bound.alpha, epsilon);
  return bound;
}

RangeBound general_upper_bound(const Game& game, double beta, double epsilon,
                               const Limits& limits) {
  require_epsilon(epsilon);
  if (beta < 0.0 || !std::isfinite(beta)) {
    throw InputError("beta must be finite and nonnegative");
  }
  Matrix u = cumulative_utility_matrix(game, limits);
  double lo = u.data[0], hi = u.data[0];
  for (double v : u.data) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  RangeBound bound;
  bound.delta_u = hi - lo;

  const double exponent = beta * bound.delta_u;
  const double log_eps_inv = std::log(1.0 / epsilon);
  if (exponent < 30.0) {
    double alpha = std::exp(-exponent);
    auto t = overlap_steps(alpha, epsilon);
    bound.t_upper = t;
    bound.log_t_upper = std::log(double(*t));
  } else {
    // alpha is tiny; -log(1 - alpha) = alpha to double precision, so
    // t = log(1/eps) * exp(beta delta_u), kept in log form.
    bound.log_t_upper = std::log(log_eps_inv) + exponent;
    if (bound.log_t_upper < std::log(9.0e18)) {
      bound.t_upper = std::int64_t(std::ceil(std::exp(bound.log_t_upper)));
    }
  }
  return bound;
}

double coordination_cumulative_range(double a, double b, double c, double d,
                                     std::uint64_t edge_count) {
  if (!(a > d && b > c)) {
    throw InputError("coordination payoffs need a > d and b > c");
  }
  return 2.0 * (std::max(a, b) - std::min(c, d)) * double(edge_count);
}

DominantProfileBound dominant_profile_bound(const Game& game, double epsilon,
                                            const Limits& limits) {
  require_epsilon(epsilon);
  const ProfileSpace& s = game.space();
  s.require_within(limits.enumeration_cap, "dominant profile search");
  const int n = s.players();

  DominantProfileBound bound;
  // A strictly dominant strategy per player: best reply with strict margin
  // against every opponent profile.
  std::vector<int> dominant(std::size_t(n), -1);
  for (int i = 0; i < n; ++i) {
    for (int cand = 0; cand < s.size(i) && dominant[std::size_t(i)] == -1; ++cand) {
      bool strict = true;
      for (std::uint64_t x = 0; x < s.count() && strict; ++x) {
        if (s.digit(x, i) != cand) continue;  // visit each opponent profile once
        double best = game.utility(i, x);
        for (int z = 0; z < s.size(i) && strict; ++z) {
          if (z == cand) continue;
          if (game.utility(i, s.with(x, i, z)) >= best) strict = false;
        }
      }
      if (strict) dominant[std::size_t(i)] = cand;
    }
    if (dominant[std::size_t(i)] == -1) return bound;  // no dominant profile
  }
  bound.profile = s.encode(dominant);

  int m = 0;
  for (int i = 0; i < n; ++i) m = std::max(m, s.size(i));
  bound.log_m_pow_n = double(n) * std::log(double(m));

  const double log_eps_inv = std::log(1.0 / epsilon);
  if (bound.log_m_pow_n < 30.0) {
    double alpha = std::exp(-bound.log_m_pow_n);
    auto t = overlap_steps(alpha, epsilon);
    bound.t_upper = t;
    bound.log_t_upper = std::log(double(*t));
  } else {
    bound.log_t_upper = std::log(log_eps_inv) + bound.log_m_pow_n;
    if (bound.log_t_upper < std::log(9.0e18)) {
      bound.t_upper = std::int64_t(std::ceil(std::exp(bound.log_t_upper)));
    }
  }
  return bound;
}

BottleneckBound bottleneck_lower_bound(const TransitionKernel& kernel,
                                       const Distribution& pi,
                                       const std::vector<std::uint64_t>& subset) {
  const std::uint64_t n = kernel.p.rows;
  if (pi.probs.size() != n) {
    throw InputError("distribution length does not match the kernel");
  }
  std::vector<bool> in_set(n, false);
  for (std::uint64_t x : subset) {
    if (x >= n) throw InputError("bottleneck set contains an out-of-range state");
    in_set[x] = true;
  }
  BottleneckBound bound;
  for (std::uint64_t x = 0; x < n; ++x) {
    if (!in_set[x]) continue;
    bound.pi_s += pi.probs[x];
    for (std::uint64_t y = 0; y < n; ++y) {
      if (!in_set[y]) bound.flux += pi.probs[x] * kernel.p(x, y);
    }
  }
  if (bound.pi_s <= 0.0) throw InputError("bottleneck set has zero mass");
  if (bound.pi_s > 0.5 + 1e-12) {
    throw InputError("bottleneck set must have stationary mass at most 1/2");
  }
  bound.ratio = bound.flux / bound.pi_s;
  if (bound.flux <= 0.0) {
    bound.infinite = true;
  } else {
    bound.t_lower = 1.0 / (4.0 * bound.ratio);
  }
  return bound;
}

}  // namespace logitlab
