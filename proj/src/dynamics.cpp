#include "logitlab/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "logitlab/numerics.hpp"

namespace logitlab {

namespace {

// Exponents beta * u_player(x with own strategy z), for all z. The shared
// guard for kernel builders: if the spread of a row's exponents exceeds
// num::max_exponent, some choice probability would underflow to an exact
// zero, so we error instead of silently losing positivity.
std::vector<double> choice_exponents(const Game& game, int player, Profile& scratch,
                                     double beta) {
  const int m = game.space().size(player);
  std::vector<double> v(std::size_t(m), 0.0);
  const int original = scratch[std::size_t(player)];
  for (int z = 0; z < m; ++z) {
    scratch[std::size_t(player)] = z;
    v[std::size_t(z)] = beta * game.utility(player, scratch);
  }
  scratch[std::size_t(player)] = original;
  return v;
}

void require_bounded_spread(std::span<const double> exponents, int player) {
  double lo = exponents[0], hi = exponents[0];
  for (double e : exponents) {
    lo = std::min(lo, e);
    hi = std::max(hi, e);
  }
  if (hi - lo > num::max_exponent) {
    throw InputError(
        "beta too large: choice probabilities for player " + std::to_string(player) +
        " would underflow (exponent spread " + std::to_string(hi - lo) + ")");
  }
}

}  // namespace

std::vector<double> logit_choice(const Game& game, int player,
                                 std::span<const int> profile, double beta) {
  if (player < 0 || player >= game.space().players()) {
    throw InputError("player index out of range");
  }
  if (beta < 0.0 || !std::isfinite(beta)) {
    throw InputError("beta must be finite and nonnegative");
  }
  game.space().validate(profile);
  Profile scratch(profile.begin(), profile.end());
  std::vector<double> v = choice_exponents(game, player, scratch, beta);
  require_bounded_spread(v, player);
  num::softmax_inplace(v);
  return v;
}

double cumulative_utility(const Game& game, std::uint64_t x, std::uint64_t y) {
  const ProfileSpace& s = game.space();
  double total = 0.0;
  for (int i = 0; i < s.players(); ++i) {
    total += game.utility(i, s.with(x, i, s.digit(y, i)));
  }
  return total;
}

Matrix cumulative_utility_matrix(const Game& game, const Limits& limits) {
  const ProfileSpace& s = game.space();
  s.require_within(limits.matrix_cap, "cumulative utility matrix");
  const std::uint64_t count = s.count();
  Matrix u(count, count, 0.0);
  for (std::uint64_t x = 0; x < count; ++x) {
    for (std::uint64_t y = 0; y < count; ++y) {
      u(x, y) = cumulative_utility(game, x, y);
    }
  }
  return u;
}

double kappa(const ProfileSpace& space, const std::vector<double>& phi,
             std::uint64_t x, std::uint64_t y) {
  const int n = space.players();
  double acc = 2.0 * phi[x];
  for (int i = 0; i < n; ++i) {
    acc += phi[space.with(x, i, space.digit(y, i))] - phi[x];
  }
  return acc;
}

Matrix kappa_matrix(const ProfileSpace& space, const std::vector<double>& phi,
                    const Limits& limits) {
  space.require_within(limits.matrix_cap, "kappa matrix");
  if (phi.size() != space.count()) {
    throw InputError("potential table length does not match the profile count");
  }
  const std::uint64_t count = space.count();
  Matrix k(count, count, 0.0);
  for (std::uint64_t x = 0; x < count; ++x) {
    for (std::uint64_t y = 0; y < count; ++y) {
      k(x, y) = kappa(space, phi, x, y);
    }
  }
  return k;
}

double kappa_edge(const EdgeGame& e, std::span<const int> x, std::span<const int> y) {
  return e.potential(std::size_t(x[std::size_t(e.u)]), std::size_t(y[std::size_t(e.v)])) +
         e.potential(std::size_t(y[std::size_t(e.u)]), std::size_t(x[std::size_t(e.v)]));
}

TransitionKernel all_logit_kernel(const Game& game, double beta, const Limits& limits) {
  if (beta < 0.0 || !std::isfinite(beta)) {
    throw InputError("beta must be finite and nonnegative");
  }
  const ProfileSpace& s = game.space();
  s.require_within(limits.matrix_cap, "all-logit kernel");
  const std::uint64_t count = s.count();
  const int n = s.players();

  TransitionKernel kernel;
  kernel.beta = beta;
  kernel.kind = KernelKind::all_logit;
  kernel.p = Matrix(count, count, 0.0);

  Profile scratch(std::size_t(n), 0);
  std::vector<std::vector<double>> choice(std::size_t(n), std::vector<double>{});
  std::uint64_t x = 0;
  Profile row = s.decode(0);
  do {
    scratch = row;
    for (int i = 0; i < n; ++i) {
      std::vector<double> v = choice_exponents(game, i, scratch, beta);
      require_bounded_spread(v, i);
      num::softmax_inplace(v);
      choice[std::size_t(i)] = std::move(v);
    }
    // Row x: product of per-player choice probabilities, filled by odometer.
    Profile y(std::size_t(n), 0);
    std::uint64_t yi = 0;
    do {
      double p = 1.0;
      for (int i = 0; i < n; ++i) p *= choice[std::size_t(i)][std::size_t(y[std::size_t(i)])];
      kernel.p(x, yi) = p;
      ++yi;
    } while (s.next(y));
    ++x;
  } while (s.next(row));
  return kernel;
}

TransitionKernel one_logit_kernel(const Game& game, double beta, const Limits& limits) {
  if (beta < 0.0 || !std::isfinite(beta)) {
    throw InputError("beta must be finite and nonnegative");
  }
  const ProfileSpace& s = game.space();
  s.require_within(limits.matrix_cap, "one-logit kernel");
  const std::uint64_t count = s.count();
  const int n = s.players();

  TransitionKernel kernel;
  kernel.beta = beta;
  kernel.kind = KernelKind::one_logit;
  kernel.p = Matrix(count, count, 0.0);

  std::uint64_t x = 0;
  Profile row = s.decode(0);
  do {
    Profile scratch = row;
    for (int i = 0; i < n; ++i) {
      std::vector<double> v = choice_exponents(game, i, scratch, beta);
      require_bounded_spread(v, i);
      num::softmax_inplace(v);
      for (int z = 0; z < s.size(i); ++z) {
        kernel.p(x, s.with(x, i, z)) += v[std::size_t(z)] / double(n);
      }
    }
    ++x;
  } while (s.next(row));
  return kernel;
}

Profile simulate_step(const Game& game, const Profile& x, double beta,
                      KernelKind kind, SplitRng& rng) {
  if (beta < 0.0 || !std::isfinite(beta)) {
    throw InputError("beta must be finite and nonnegative");
  }
  const ProfileSpace& s = game.space();
  s.validate(x);
  const int n = s.players();
  Profile next = x;
  if (kind == KernelKind::all_logit) {
    Profile scratch = x;
    for (int i = 0; i < n; ++i) {
      std::vector<double> v = choice_exponents(game, i, scratch, beta);
      require_bounded_spread(v, i);
      num::softmax_inplace(v);
      next[std::size_t(i)] = int(rng.sample(v));
    }
  } else {
    int i = int(rng.next_below(std::uint64_t(n)));
    Profile scratch = x;
    std::vector<double> v = choice_exponents(game, i, scratch, beta);
    require_bounded_spread(v, i);
    num::softmax_inplace(v);
    next[std::size_t(i)] = int(rng.sample(v));
  }
  return next;
}

}  // namespace logitlab
