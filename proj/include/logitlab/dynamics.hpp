#ifndef LOGITLAB_DYNAMICS_HPP
#define LOGITLAB_DYNAMICS_HPP

#include <cstdint>
#include <vector>

#include "logitlab/game.hpp"
#include "logitlab/matrix.hpp"
#include "logitlab/rng.hpp"

namespace logitlab {

enum class KernelKind { one_logit, all_logit };

// Dense row-stochastic transition matrix over the flat-indexed profile
// space, together with the inverse temperature and revision discipline that
// produced it.
struct TransitionKernel {
  Matrix p;
  double beta = 0.0;
  KernelKind kind = KernelKind::all_logit;
};

// Logit choice distribution of one player given the others' strategies:
// sigma(z) proportional to exp(beta * u_player(profile with z)). Computed
// with a max shift, so it is invariant (to rounding) under constant payoff
// shifts and safe for large beta.
std::vector<double> logit_choice(const Game& game, int player,
                                 std::span<const int> profile, double beta);

// Cumulative revision utility U(x, y) = sum_i u_i(x with player i moved to
// y_i): every player evaluates her own deviation against the others staying
// at x. Drives the simultaneous-revision kernel.
double cumulative_utility(const Game& game, std::uint64_t x, std::uint64_t y);

// Full cumulative-utility matrix over an enumerable space.
Matrix cumulative_utility_matrix(const Game& game,
                                 const Limits& limits = default_limits());

// The two-argument potential K(x, y) = sum_i phi(x with i moved to y_i)
// - (n - 2) phi(x). Plays for simultaneous revision the role the potential
// plays for one-at-a-time revision: the kernel has Gibbs form in K, and its
// symmetry in (x, y) is exactly reversibility.
double kappa(const ProfileSpace& space, const std::vector<double>& phi,
             std::uint64_t x, std::uint64_t y);

// Full K matrix.
Matrix kappa_matrix(const ProfileSpace& space, const std::vector<double>& phi,
                    const Limits& limits = default_limits());

// Edge share of K: K_e(x, y) = phi_e(x_u, y_v) + phi_e(y_u, x_v). K is the
// sum of these over the edges of a local interaction game.
double kappa_edge(const EdgeGame& e, std::span<const int> x, std::span<const int> y);

// Simultaneous revision: every player draws a logit choice against the
// current profile, independently. Row x is the product of the per-player
// choice distributions; equivalently exp(beta U(x, y)) / T(x), and for
// potential games exp(-beta K(x, y)) / gamma(x). Strictly positive for
// finite beta (the builder refuses beta large enough to underflow).
TransitionKernel all_logit_kernel(const Game& game, double beta,
                                  const Limits& limits = default_limits());

// One-at-a-time revision: pick a player uniformly, draw her logit choice.
// Moves at Hamming distance at most one; the diagonal collects every
// player's probability of re-picking her current strategy.
TransitionKernel one_logit_kernel(const Game& game, double beta,
                                  const Limits& limits = default_limits());

// One simulation step; works on explicit profiles so it does not require an
// enumerable space. Deterministic given the generator state.
Profile simulate_step(const Game& game, const Profile& x, double beta,
                      KernelKind kind, SplitRng& rng);

}  // namespace logitlab

#endif  // LOGITLAB_DYNAMICS_HPP
