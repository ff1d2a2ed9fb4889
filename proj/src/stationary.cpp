#include "logitlab/stationary.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include "logitlab/numerics.hpp"

namespace logitlab {

Distribution distribution_from_log_weights(std::vector<double> logw) {
  Distribution d;
  double norm = num::log_sum_exp(logw);
  d.logp = std::move(logw);
  d.probs.resize(d.logp.size());
  for (std::size_t i = 0; i < d.logp.size(); ++i) {
    d.logp[i] -= norm;
    d.probs[i] = std::exp(d.logp[i]);
  }
  return d;
}

Distribution gibbs(const Game& game, double beta, const Limits& limits) {
  if (beta < 0.0 || !std::isfinite(beta)) {
    throw InputError("beta must be finite and nonnegative");
  }
  PotentialTable phi = build_potential_table(game, limits);
  std::vector<double> logw(phi.values.size());
  for (std::size_t x = 0; x < logw.size(); ++x) logw[x] = -beta * phi.values[x];
  return distribution_from_log_weights(std::move(logw));
}

Distribution all_logit_stationary_closed_form(const Game& game, double beta,
                                              const Limits& limits) {
  PotentialTable phi = build_potential_table(game, limits);
  return all_logit_stationary_closed_form(game.space(), phi.values, beta, limits);
}

Distribution all_logit_stationary_closed_form(const ProfileSpace& s,
                                              const std::vector<double>& phi,
                                              double beta, const Limits& limits) {
  if (beta < 0.0 || !std::isfinite(beta)) {
    throw InputError("beta must be finite and nonnegative");
  }
  s.require_within(limits.matrix_cap, "closed-form stationary distribution");
  const std::uint64_t count = s.count();
  if (phi.size() != count) {
    throw InputError("potential table length does not match the profile count");
  }
  std::vector<double> logw(count);
  std::vector<double> row(count);
  for (std::uint64_t x = 0; x < count; ++x) {
    for (std::uint64_t y = 0; y < count; ++y) {
      row[y] = -beta * kappa(s, phi, x, y);
    }
    logw[x] = num::log_sum_exp(row);  // log gamma(x)
  }
  return distribution_from_log_weights(std::move(logw));
}

SolveResult stationary_by_solve(const TransitionKernel& kernel,
                                const SolveOptions& options) {
  const std::uint64_t n = kernel.p.rows;
  if (n == 0) throw InputError("empty kernel");

  SolveResult result;
  std::vector<double> pi(n, 1.0 / double(n));

  // Power iteration: each step is one pass of pi <- pi P.
  const std::uint64_t max_steps = std::max<std::uint64_t>(1, options.max_row_sweeps / n);
  for (std::uint64_t step = 0; step < max_steps; ++step) {
    std::vector<double> next = left_apply(pi, kernel.p);
    double mass = 0.0;
    for (double v : next) mass += v;
    for (double& v : next) v /= mass;
    double res = 0.0;
    for (std::uint64_t i = 0; i < n; ++i) res += std::abs(next[i] - pi[i]);
    pi = std::move(next);
    ++result.iterations;
    if (res < options.residual) {
      // The step-to-step difference understates the true fixed-point
      // residual only by a bounded factor; measure the real thing.
      std::vector<double> check = left_apply(pi, kernel.p);
      double true_res = 0.0;
      for (std::uint64_t i = 0; i < n; ++i) true_res += std::abs(check[i] - pi[i]);
      if (true_res < options.residual) {
        result.residual = true_res;
        result.dist.probs = std::move(pi);
        result.dist.logp.resize(n);
        for (std::uint64_t i = 0; i < n; ++i) {
          result.dist.logp[i] = std::log(result.dist.probs[i]);
        }
        return result;
      }
    }
  }

  if (!options.allow_dense_fallback || n > options.dense_cap) {
    throw InternalError(
        "power iteration did not reach the residual target within budget and "
        "the dense fallback is unavailable");
  }

  // Dense fallback: solve pi (P - I) = 0 with a normalization equation in
  // place of the last (redundant) column.
  Matrix a(n, n, 0.0);
  for (std::uint64_t r = 0; r < n; ++r) {
    for (std::uint64_t c = 0; c < n; ++c) {
      // Column c of the fixed-point system is sum_r pi_r (P(r,c) - delta).
      a(c, r) = kernel.p(r, c) - (r == c ? 1.0 : 0.0);
    }
  }
  for (std::uint64_t r = 0; r < n; ++r) a(n - 1, r) = 1.0;  // sum pi = 1
  std::vector<double> rhs(n, 0.0);
  rhs[n - 1] = 1.0;
  std::vector<double> sol = solve_inplace(a, rhs);

  // Clamp roundoff negatives and renormalize.
  double mass = 0.0;
  for (double& v : sol) {
    if (v < 0.0) v = 0.0;
    mass += v;
  }
  for (double& v : sol) v /= mass;

  std::vector<double> check = left_apply(sol, kernel.p);
  double res = 0.0;
  for (std::uint64_t i = 0; i < n; ++i) res += std::abs(check[i] - sol[i]);
  if (res > 1e-9) {
    throw InternalError("dense stationary solve left residual " + std::to_string(res));
  }
  result.used_dense = true;
  result.residual = res;
  result.dist.probs = std::move(sol);
  result.dist.logp.resize(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    result.dist.logp[i] = std::log(result.dist.probs[i]);
  }
  return result;
}

PartitionFunctions partition_functions(const Game& game, double beta,
                                       const Limits& limits) {
  if (beta < 0.0 || !std::isfinite(beta)) {
    throw InputError("beta must be finite and nonnegative");
  }
  const ProfileSpace& s = game.space();
  s.require_within(limits.matrix_cap, "partition functions");
  PotentialTable phi = build_potential_table(game, limits);
  const std::uint64_t count = s.count();

  std::vector<double> logw(count);
  for (std::uint64_t x = 0; x < count; ++x) logw[x] = -beta * phi.values[x];
  PartitionFunctions z;
  z.log_z1 = num::log_sum_exp(logw);

  std::vector<double> log_gamma(count);
  std::vector<double> row(count);
  for (std::uint64_t x = 0; x < count; ++x) {
    for (std::uint64_t y = 0; y < count; ++y) {
      row[y] = -beta * kappa(s, phi.values, x, y);
    }
    log_gamma[x] = num::log_sum_exp(row);
  }
  z.log_zA = num::log_sum_exp(log_gamma);

  z.z1 = std::exp(z.log_z1);
  z.zA = std::exp(z.log_zA);
  z.z1_finite = std::isfinite(z.z1);
  z.zA_finite = std::isfinite(z.zA);
  return z;
}

double bipartite_product_identity(const LocalInteractionGame& game,
                                  const Bipartition& bipartition, double beta,
                                  const Limits& limits) {
  const ProfileSpace& s = game.space();
  const int n = s.players();
  if (int(bipartition.in_left.size()) != n) {
    throw InputError("bipartition size does not match the player count");
  }
  for (const EdgeGame& e : game.edges()) {
    if (bipartition.in_left[std::size_t(e.u)] == bipartition.in_left[std::size_t(e.v)]) {
      throw InputError("bipartition is not a two-coloring of the interaction graph");
    }
  }
  s.require_within(limits.matrix_cap, "bipartite product identity");

  Distribution pi1 = gibbs(game, beta, limits);
  Distribution piA = all_logit_stationary_closed_form(game, beta, limits);

  // Gibbs marginals of each side: key a profile by the flat index with the
  // other side's digits zeroed out.
  const std::uint64_t count = s.count();
  std::unordered_map<std::uint64_t, double> left_marginal, right_marginal;
  for (std::uint64_t x = 0; x < count; ++x) {
    std::uint64_t lkey = 0, rkey = 0;
    for (int i = 0; i < n; ++i) {
      std::uint64_t part = std::uint64_t(s.digit(x, i)) * s.stride(i);
      if (bipartition.in_left[std::size_t(i)]) {
        lkey += part;
      } else {
        rkey += part;
      }
    }
    left_marginal[lkey] += pi1.probs[x];
    right_marginal[rkey] += pi1.probs[x];
  }

  double max_err = 0.0;
  for (std::uint64_t x = 0; x < count; ++x) {
    std::uint64_t lkey = 0, rkey = 0;
    for (int i = 0; i < n; ++i) {
      std::uint64_t part = std::uint64_t(s.digit(x, i)) * s.stride(i);
      if (bipartition.in_left[std::size_t(i)]) {
        lkey += part;
      } else {
        rkey += part;
      }
    }
    double err = std::abs(piA.probs[x] - left_marginal[lkey] * right_marginal[rkey]);
    max_err = std::max(max_err, err);
  }
  return max_err;
}

}  // namespace logitlab
