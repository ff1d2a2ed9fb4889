#ifndef LOGITLAB_MIXING_HPP
#define LOGITLAB_MIXING_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "logitlab/dynamics.hpp"
#include "logitlab/game.hpp"
#include "logitlab/numerics.hpp"
#include "logitlab/stationary.hpp"

namespace logitlab {

using num::total_variation;

// Worst-start total variation distance to pi after the kernel has been
// applied t times, i.e. with pt = P^t.
double worst_case_tv(const Matrix& pt, const Distribution& pi);

struct MixingOptions {
  double epsilon = 0.25;
  std::int64_t t_cap = std::int64_t(1) << 40;
  std::size_t step_window = 256;  // plain stepping before switching to doubling
};

struct MixingResult {
  double epsilon = 0.25;
  std::int64_t t_cap = 0;
  std::optional<std::int64_t> t_mix;  // empty when the cap was hit first
  bool cap_exceeded = false;
  double tv_at_cap = 0.0;  // worst-case TV at t_cap, when the cap was hit
  std::vector<std::pair<std::int64_t, double>> tv_curve;  // every t probed
};

// First t with worst-start TV at most epsilon, computed from exact matrix
// powers: plain stepping through a window (which also yields the TV curve),
// then repeated squaring plus binary search, leaning on the fact that the
// worst-start TV never increases with t. Every probe is an exact power;
// nothing is extrapolated. If t_cap is reached first the result certifies
// t_mix > t_cap via the exact TV at the cap.
MixingResult exact_mixing_time(const TransitionKernel& kernel, const Distribution& pi,
                               const MixingOptions& options = {},
                               const Limits& limits = default_limits());

// Doeblin overlap bound: alpha = sum_y min_x P(x,y) makes the worst TV
// shrink by (1 - alpha) per step, giving t <= ceil(log(1/eps)/-log(1-alpha)).
// Unavailable when alpha is zero (e.g. one-at-a-time kernels).
struct OverlapBound {
  double alpha = 0.0;
  std::optional<std::int64_t> t_upper;
};

OverlapBound overlap_upper_bound(const TransitionKernel& kernel, double epsilon = 0.25);

// Range-based bound: every simultaneous-kernel entry is at least
// exp(-beta range(U)) / |S|, so alpha >= exp(-beta range(U)). The log of
// the resulting t bound stays valid when the linear value overflows int64.
struct RangeBound {
  double delta_u = 0.0;     // max U - min U over profile pairs
  double log_t_upper = 0.0;
  std::optional<std::int64_t> t_upper;  // empty when it does not fit
};

RangeBound general_upper_bound(const Game& game, double beta, double epsilon = 0.25,
                               const Limits& limits = default_limits());

// Exact range of the cumulative revision utility for a graph of identical
// two-strategy coordination edges (payoffs a, b on agreement, c, d on the
// off-diagonal, a > d and b > c): 2 (max(a,b) - min(c,d)) |E|.
double coordination_cumulative_range(double a, double b, double c, double d,
                                     std::uint64_t edge_count);

// If some profile is every player's strict best reply no matter what the
// others do, each player picks it with probability at least 1/|S_i|, so the
// kernel has a Doeblin column of mass at least m^-n with m = max |S_i|.
struct DominantProfileBound {
  std::optional<std::uint64_t> profile;
  double log_m_pow_n = 0.0;    // log(m^n), the inverse overlap
  double log_t_upper = 0.0;
  std::optional<std::int64_t> t_upper;
};

DominantProfileBound dominant_profile_bound(const Game& game, double epsilon = 0.25,
                                            const Limits& limits = default_limits());

// Conductance lower bound from a single cut: with B = Q(S, S^c) / pi(S) and
// pi(S) <= 1/2, mixing needs at least 1/(4B) steps. An empty boundary flux
// certifies a reducible chain (infinite mixing time).
struct BottleneckBound {
  double flux = 0.0;      // Q(S, S^c)
  double pi_s = 0.0;      // pi(S)
  double ratio = 0.0;     // B
  bool infinite = false;  // boundary flux is zero
  double t_lower = 0.0;   // 1/(4B) when finite
};

BottleneckBound bottleneck_lower_bound(const TransitionKernel& kernel,
                                       const Distribution& pi,
                                       const std::vector<std::uint64_t>& subset);

}  // namespace logitlab

#endif  // LOGITLAB_MIXING_HPP
