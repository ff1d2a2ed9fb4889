#ifndef LOGITLAB_STATIONARY_HPP
#define LOGITLAB_STATIONARY_HPP

#include <cstdint>
#include <vector>

#include "logitlab/dynamics.hpp"
#include "logitlab/game.hpp"

namespace logitlab {

// A probability distribution over the flat-indexed profile space, kept in
// both linear and log form (log weights stay valid even when the linear
// values would underflow).
struct Distribution {
  std::vector<double> probs;
  std::vector<double> logp;
};

// Normalize log weights into a Distribution via log-sum-exp.
Distribution distribution_from_log_weights(std::vector<double> logw);

// Gibbs measure of the potential: pi(x) proportional to exp(-beta phi(x)).
// Stationary and reversible for one-at-a-time logit revision.
Distribution gibbs(const Game& game, double beta,
                   const Limits& limits = default_limits());

// Closed-form stationary distribution of simultaneous logit revision for
// games whose K is symmetric: pi(x) proportional to
// gamma(x) = sum_y exp(-beta K(x, y)). Throws InputError if the game
// carries no potential. For asymmetric K this is not stationary; callers
// wanting a verdict should certify reversibility first.
Distribution all_logit_stationary_closed_form(const Game& game, double beta,
                                              const Limits& limits = default_limits());

// Same closed form from a raw potential table (for games that admit an
// exact potential without carrying one, e.g. recovered from utilities).
Distribution all_logit_stationary_closed_form(const ProfileSpace& space,
                                              const std::vector<double>& phi,
                                              double beta,
                                              const Limits& limits = default_limits());

struct SolveOptions {
  double residual = 1e-12;                 // L1 fixed-point residual target
  std::uint64_t max_row_sweeps = 10'000'000;  // power-iteration budget, rows touched
  bool allow_dense_fallback = true;
  std::uint64_t dense_cap = 2048;          // largest space for the dense solve
};

struct SolveResult {
  Distribution dist;
  std::uint64_t iterations = 0;  // power-iteration steps actually used
  bool used_dense = false;
  double residual = 0.0;         // final L1 residual of pi P = pi
};

// Stationary distribution of an ergodic kernel: power iteration from the
// uniform vector; if the budget runs out first, a dense LU solve of the
// fixed-point system (when allowed and within dense_cap). Throws
// InternalError if neither route reaches the residual target.
SolveResult stationary_by_solve(const TransitionKernel& kernel,
                                const SolveOptions& options = {});

// Normalizing constants of the two dynamics at the same beta:
// z1 = sum_x exp(-beta phi(x)) and zA = sum_{x,y} exp(-beta K(x, y)).
// Log values are always valid; linear values are flagged when they would
// overflow the double range.
struct PartitionFunctions {
  double log_z1 = 0.0;
  double log_zA = 0.0;
  double z1 = 0.0;
  double zA = 0.0;
  bool z1_finite = true;
  bool zA_finite = true;
};

PartitionFunctions partition_functions(const Game& game, double beta,
                                       const Limits& limits = default_limits());

// For a local interaction game on a bipartite graph, the simultaneous-
// revision stationary distribution factorizes over the sides: pi_A(x) is
// the product of the Gibbs marginal of x's left half and the Gibbs marginal
// of x's right half (and zA = z1^2). Returns the maximum absolute deviation
// of that identity over all profiles; validates that the bipartition is a
// genuine two-coloring of the interaction graph.
double bipartite_product_identity(const LocalInteractionGame& game,
                                  const Bipartition& bipartition, double beta,
                                  const Limits& limits = default_limits());

}  // namespace logitlab

#endif  // LOGITLAB_STATIONARY_HPP
