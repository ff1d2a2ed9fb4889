#ifndef LOGITLAB_CURIE_WEISS_HPP
#define LOGITLAB_CURIE_WEISS_HPP

#include <string>
#include <vector>

#include "logitlab/game.hpp"
#include "logitlab/matrix.hpp"

namespace logitlab {

// The mean-field coordination benchmark: n players on the complete graph,
// every edge the unit coordination game (+1 for agreeing, -1 for
// disagreeing). Utilities are u_i(x) = x_i * sum_{j != i} x_j under the
// spin convention, and the potential is -(diff(x)^2 - n) / 2.
LocalInteractionGame curie_weiss_game(int n, const Limits& limits = default_limits());

// Closed-form two-argument potential: K(x, y) = n - diff(x) diff(y) - 2 h
// with h the Hamming distance. Only (diff_x, diff_y, h) matter, not the
// profiles themselves. Throws InputError for infeasible triples.
double cw_kappa(int n, int diff_x, int diff_y, int hamming);

// Spin-count chain: the image of simultaneous revision under k = number of
// +1 players. State k jumps to Binomial(k, stay) + Binomial(n - k, flip)
// where stay/flip are the logistic choice probabilities at magnetization
// 2k - n; rows are assembled in log arithmetic from explicit log-binomial
// coefficients. The projection is exactly lumpable: pushing the full chain
// through k reproduces this kernel's law.
struct MagnetizationChain {
  int n = 0;
  double beta = 0.0;
  Matrix kernel;           // (n+1) x (n+1), row-stochastic
  std::vector<int> diffs;  // diff value 2k - n of each state k
};

MagnetizationChain cw_lumped_kernel(int n, double beta,
                                    const Limits& limits = default_limits());

// Log of the column-minimum lower bound for landing on a profile with spin
// sum of magnitude |diff_y|: with q the least likely single choice,
// alpha_y >= q^((n+|diff_y|)/2) * (1-q)^((n-|diff_y|)/2).
double cw_log_alpha_y_bound(int n, double beta, int abs_diff_y);

// Mixing-time bounds and the regime classification for the benchmark.
// All bound values are carried in log form; they overflow doubles quickly.
struct CwBounds {
  double log_upper_general = 0.0;   // overlap bound via the alpha_y sums
  double log_upper_highbeta = 0.0;  // sharper variant, valid for beta >= log(n)/n
  bool highbeta_applicable = false;
  double log_lower = 0.0;           // conductance bound through the zero-spin cut
  std::string regime;               // "polynomial", "exponential", or "unresolved"
};

CwBounds cw_bounds(int n, double beta);

// Stationary distribution of the spin count under simultaneous revision,
// computed from the full chain's closed form and bucketed by k. Needs the
// full 2^n space within caps.
std::vector<double> cw_pushforward_stationary(int n, double beta,
                                              const Limits& limits = default_limits());

// The same distribution from the closed form alone, in O(n^3) log
// arithmetic and without touching the 2^n space: the two-argument
// potential depends only on (diff_x, diff_y, hamming), so the sum over y
// collapses to a double binomial sum per spin count. Exact even at betas
// where the represented lumped kernel underflows to a reducible matrix.
std::vector<double> cw_lumped_stationary(int n, double beta);

}  // namespace logitlab

#endif  // LOGITLAB_CURIE_WEISS_HPP
