#include <cmath>
#include <cstdint>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "logitlab/curie_weiss.hpp"
#include "logitlab/dynamics.hpp"
#include "logitlab/game.hpp"
#include "logitlab/mixing.hpp"
#include "logitlab/numerics.hpp"
#include "logitlab/stationary.hpp"

using namespace logitlab;

TEST_CASE("complete-graph benchmark wiring") {
  for (int n : {2, 3, 5}) {
    LocalInteractionGame game = curie_weiss_game(n);
    CHECK(game.edges().size() == std::size_t(n) * std::size_t(n - 1) / 2);
  }
  CHECK_THROWS_AS(curie_weiss_game(1), InputError);

  // u_i(x) = own spin times the sum of the other spins.
  LocalInteractionGame g4 = curie_weiss_game(4);
  const ProfileSpace& s = g4.space();
  std::uint64_t all_plus = s.count() - 1;
  for (int i = 0; i < 4; ++i) CHECK(g4.utility(i, all_plus) == doctest::Approx(3.0));
  std::uint64_t mixed = fx::idx(s, {1, 0, 0, 1});
  CHECK(g4.utility(0, mixed) == doctest::Approx(-1.0));
  CHECK(g4.utility(1, mixed) == doctest::Approx(-1.0));
}

TEST_CASE("closed-form two-argument potential matches the generic one exactly") {
  for (int n = 2; n <= 5; ++n) {
    LocalInteractionGame game = curie_weiss_game(n);
    const ProfileSpace& s = game.space();
    std::vector<double> phi = build_potential_table(game).values;
    for (std::uint64_t x = 0; x < s.count(); ++x) {
      int dx = fx::diff_of(s, x);
      for (std::uint64_t y = 0; y < s.count(); ++y) {
        double closed = cw_kappa(n, dx, fx::diff_of(s, y), fx::hamming(s, x, y));
        CHECK(std::abs(closed - kappa(s, phi, x, y)) < 1e-12);
      }
    }
  }
}

TEST_CASE("closed-form potential diagonal doubles the one-argument potential") {
  for (int n : {3, 6}) {
    for (int k = 0; k <= n; ++k) {
      int d = 2 * k - n;
      CHECK(cw_kappa(n, d, d, 0) == doctest::Approx(double(n) - double(d) * double(d)));
    }
  }
}

TEST_CASE("closed-form potential rejects unrealizable triples") {
  CHECK_THROWS_AS(cw_kappa(4, 3, 0, 2), InputError);    // parity of diff_x
  CHECK_THROWS_AS(cw_kappa(3, -5, 1, 1), InputError);   // magnitude
  CHECK_THROWS_AS(cw_kappa(4, 0, 0, 5), InputError);    // hamming > n
  CHECK_THROWS_AS(cw_kappa(4, 4, 4, 1), InputError);    // identical profiles need h=0
  CHECK_THROWS_AS(cw_kappa(4, 0, 0, 1), InputError);    // flip parity: h must be even
  CHECK_THROWS_AS(cw_kappa(4, 4, -4, 3), InputError);   // needs all four flips
  CHECK(cw_kappa(4, 4, -4, 4) == doctest::Approx(4.0 + 16.0 - 8.0));
  CHECK(cw_kappa(4, 0, 0, 2) == doctest::Approx(0.0));
}

TEST_CASE("spin-count chain rows are distributions with flip symmetry") {
  for (int n : {4, 6}) {
    for (double beta : {0.0, 0.5, 1.0}) {
      MagnetizationChain chain = cw_lumped_kernel(n, beta);
      REQUIRE(chain.kernel.rows == std::size_t(n) + 1);
      for (int k = 0; k <= n; ++k) {
        CHECK(chain.diffs[std::size_t(k)] == 2 * k - n);
        double sum = 0.0;
        for (int j = 0; j <= n; ++j) sum += chain.kernel(std::size_t(k), std::size_t(j));
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        for (int j = 0; j <= n; ++j) {
          CHECK(chain.kernel(std::size_t(k), std::size_t(j)) ==
                doctest::Approx(chain.kernel(std::size_t(n - k), std::size_t(n - j)))
                    .epsilon(1e-12));
        }
      }
    }
  }
}

TEST_CASE("spin-count chain at beta zero is a binomial row") {
  const int n = 5;
  MagnetizationChain chain = cw_lumped_kernel(n, 0.0);
  for (int k = 0; k <= n; ++k) {
    for (int j = 0; j <= n; ++j) {
      double expected = std::exp(num::log_binomial(std::uint64_t(n), std::uint64_t(j)) -
                                 double(n) * std::log(2.0));
      CHECK(chain.kernel(std::size_t(k), std::size_t(j)) ==
            doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("projecting the full kernel onto spin counts reproduces the chain") {
  for (int n : {4, 6}) {
    for (double beta : {0.5, 1.0}) {
      LocalInteractionGame game = curie_weiss_game(n);
      const ProfileSpace& s = game.space();
      TransitionKernel full = all_logit_kernel(game, beta);
      MagnetizationChain chain = cw_lumped_kernel(n, beta);
      for (std::uint64_t x = 0; x < s.count(); ++x) {
        int kx = (fx::diff_of(s, x) + n) / 2;
        std::vector<double> bucket(std::size_t(n) + 1, 0.0);
        for (std::uint64_t y = 0; y < s.count(); ++y) {
          bucket[std::size_t((fx::diff_of(s, y) + n) / 2)] += full.p(x, y);
        }
        for (int j = 0; j <= n; ++j) {
          CHECK(std::abs(bucket[std::size_t(j)] -
                         chain.kernel(std::size_t(kx), std::size_t(j))) < 1e-8);
        }
      }
    }
  }
}

TEST_CASE("spin-count chain validates its inputs") {
  CHECK_THROWS_AS(cw_lumped_kernel(1, 1.0), InputError);
  CHECK_THROWS_AS(cw_lumped_kernel(4, -1.0), InputError);
  Limits tight = default_limits();
  tight.lumped_cap = 4;
  CHECK_THROWS_AS(cw_lumped_kernel(6, 1.0, tight), CapExceeded);
}

TEST_CASE("landing-probability lower bound: closed form and column minima") {
  // At beta zero every choice is a coin flip.
  CHECK(cw_log_alpha_y_bound(4, 0.0, 2) == doctest::Approx(-4.0 * std::log(2.0)));
  CHECK(cw_log_alpha_y_bound(5, 0.0, 5) == doctest::Approx(-5.0 * std::log(2.0)));

  // Full magnetization: the bound is n log q with q the worst single choice.
  for (double beta : {0.5, 1.0}) {
    double log_q = num::log_sigmoid(-2.0 * beta * 3.0);
    CHECK(cw_log_alpha_y_bound(4, beta, 4) == doctest::Approx(4.0 * log_q));
  }

  CHECK_THROWS_AS(cw_log_alpha_y_bound(4, 1.0, 3), InputError);
  CHECK_THROWS_AS(cw_log_alpha_y_bound(4, 1.0, -2), InputError);

  // Exhaustive column check at n = 4: every landing profile y is reached
  // from every start with probability at least the bound for |diff_y|.
  const int n = 4;
  LocalInteractionGame game = curie_weiss_game(n);
  const ProfileSpace& s = game.space();
  for (double beta : {0.5, 1.0}) {
    TransitionKernel k = all_logit_kernel(game, beta);
    for (std::uint64_t y = 0; y < s.count(); ++y) {
      double col_min = 1.0;
      for (std::uint64_t x = 0; x < s.count(); ++x) {
        col_min = std::min(col_min, k.p(x, y));
      }
      double bound = cw_log_alpha_y_bound(n, beta, std::abs(fx::diff_of(s, y)));
      CHECK(std::log(col_min) >= bound - 1e-9);
    }
  }
}

TEST_CASE("benchmark bound values are the advertised closed forms") {
  CwBounds b4 = cw_bounds(4, 0.5);
  CHECK(b4.log_upper_general == doctest::Approx(std::log(4.0) + 0.5 * 4.0 * 3.0));
  CHECK(b4.log_upper_highbeta ==
        doctest::Approx(b4.log_upper_general - 4.0 * std::log(2.0)));
  CHECK(b4.highbeta_applicable);
  CHECK(b4.log_lower ==
        doctest::Approx(0.5 * 4.0 * 2.0 - 8.0 * std::log(2.0) - std::log(4.0)));

  // Odd player counts use the n^2 - 1 exponent.
  CwBounds b5 = cw_bounds(5, 0.3);
  CHECK(b5.log_upper_general == doctest::Approx(std::log(5.0) + 0.3 * 24.0));

  CHECK_THROWS_AS(cw_bounds(1, 1.0), InputError);
  CHECK_THROWS_AS(cw_bounds(4, -0.1), InputError);
}

TEST_CASE("the exact mixing time sits inside the bound sandwich") {
  struct Case {
    int n;
    double beta;
  };
  const Case cases[] = {{4, 0.25}, {4, 0.5}, {4, 1.0}, {6, 0.25}, {6, 0.5}, {6, 1.0}};
  for (const Case& c : cases) {
    LocalInteractionGame game = curie_weiss_game(c.n);
    TransitionKernel k = all_logit_kernel(game, c.beta);
    Distribution pi = all_logit_stationary_closed_form(game, c.beta);
    MixingResult r = exact_mixing_time(k, pi);
    REQUIRE(r.t_mix.has_value());
    double log_t = std::log(double(*r.t_mix));
    CwBounds b = cw_bounds(c.n, c.beta);
    CHECK(b.log_lower <= log_t);
    CHECK(log_t <= b.log_upper_general);
    if (b.highbeta_applicable) CHECK(log_t <= b.log_upper_highbeta);
  }
}

TEST_CASE("regime classification thresholds") {
  // Inclusive polynomial threshold at 2 log(n) / n^2.
  double poly4 = 2.0 * std::log(4.0) / 16.0;
  CHECK(cw_bounds(4, poly4).regime == "polynomial");
  CHECK(cw_bounds(4, 0.0).regime == "polynomial");
  // The exponential regime needs beta strictly above log(4) / n.
  double exp4 = std::log(4.0) / 4.0;
  CHECK(cw_bounds(4, exp4).regime == "unresolved");
  CHECK(cw_bounds(4, exp4 + 0.01).regime == "exponential");
  CHECK(cw_bounds(2, 0.5).regime == "unresolved");
  CHECK(cw_bounds(10, 1.0).regime == "exponential");
}

TEST_CASE("sharper high-beta bound is gated to where it provably holds") {
  CHECK(!cw_bounds(2, 5.0).highbeta_applicable);
  CHECK(!cw_bounds(2, 0.5).highbeta_applicable);
  CHECK(cw_bounds(3, 0.4).highbeta_applicable);   // log(3)/3 is about 0.366
  CHECK(!cw_bounds(3, 0.3).highbeta_applicable);
  CHECK(!cw_bounds(4, 0.3).highbeta_applicable);  // log(4)/4 is about 0.347
  CHECK(cw_bounds(4, 0.35).highbeta_applicable);
}

TEST_CASE("spin-count stationary law: closed form equals the projection") {
  for (int n : {4, 6, 8}) {
    for (double beta : {0.5, 1.0}) {
      std::vector<double> closed = cw_lumped_stationary(n, beta);
      std::vector<double> projected = cw_pushforward_stationary(n, beta);
      CHECK(fx::max_abs_gap(closed, projected) < 1e-10);
      double sum = 0.0;
      for (double p : closed) sum += p;
      CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
      for (int k = 0; k <= n; ++k) {
        CHECK(closed[std::size_t(k)] ==
              doctest::Approx(closed[std::size_t(n - k)]).epsilon(1e-10));
      }
    }
  }
}

TEST_CASE("spin-count stationary law is stationary for the spin-count chain") {
  const int n = 5;
  const double beta = 0.7;
  MagnetizationChain chain = cw_lumped_kernel(n, beta);
  std::vector<double> pi = cw_lumped_stationary(n, beta);
  std::vector<double> next = left_apply(pi, chain.kernel);
  CHECK(fx::max_abs_gap(pi, next) < 1e-12);

  // And it agrees with the law the generic solver finds.
  TransitionKernel k;
  k.p = chain.kernel;
  k.beta = beta;
  SolveResult solved = stationary_by_solve(k);
  CHECK(fx::max_abs_gap(solved.dist.probs, pi) < 1e-9);
}
