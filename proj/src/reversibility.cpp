#include "logitlab/reversibility.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "logitlab/numerics.hpp"
#include "logitlab/rng.hpp"

namespace logitlab {

namespace {

constexpr double kPassTol = 1e-8;
constexpr double kFailTol = 1e-5;

enum class Outcome { pass, fail, ambiguous };

Outcome classify(double violation) {
  if (violation < kPassTol) return Outcome::pass;
  if (violation > kFailTol) return Outcome::fail;
  return Outcome::ambiguous;
}

}  // namespace

DetailedBalanceResult check_detailed_balance(const TransitionKernel& kernel,
                                             const Distribution& pi) {
  const std::uint64_t n = kernel.p.rows;
  if (pi.probs.size() != n) {
    throw InputError("distribution length does not match the kernel");
  }
  DetailedBalanceResult result;
  for (std::uint64_t x = 0; x < n; ++x) {
    for (std::uint64_t y = x + 1; y < n; ++y) {
      double f = pi.probs[x] * kernel.p(x, y);
      double g = pi.probs[y] * kernel.p(y, x);
      double abs_gap = std::abs(f - g);
      if (abs_gap > result.max_violation) {
        result.max_violation = abs_gap;
        result.worst = {x, y, abs_gap};
      }
      double total = f + g;
      if (total > 0.0) {
        double rel = abs_gap / total;
        if (rel > result.max_relative) {
          result.max_relative = rel;
          result.worst_relative = {x, y, rel};
        }
      }
    }
  }
  return result;
}

KolmogorovResult kolmogorov_check(const TransitionKernel& kernel,
                                  std::uint64_t sample_budget, std::uint64_t seed,
                                  const Limits& limits) {
  const std::uint64_t n = kernel.p.rows;
  if (n * n > limits.triple_budget / std::max<std::uint64_t>(n, 1)) {
    throw CapExceeded("state count too large for the exhaustive cycle scan");
  }
  KolmogorovResult result;

  auto cycle_log_ratio = [&](std::span<const std::uint64_t> cycle) -> std::optional<double> {
    // Forward and reverse traversal probabilities in log form; cycles that
    // leave the support of both orientations are skipped, and one-sided
    // support is an immediate (infinite-ratio) irreversibility witness.
    double fwd = 0.0, rev = 0.0;
    bool fwd_ok = true, rev_ok = true;
    const std::size_t len = cycle.size();
    for (std::size_t i = 0; i < len; ++i) {
      std::uint64_t a = cycle[i], b = cycle[(i + 1) % len];
      double pf = kernel.p(a, b), pr = kernel.p(b, a);
      if (pf <= 0.0) {
        fwd_ok = false;
      } else {
        fwd += std::log(pf);
      }
      if (pr <= 0.0) {
        rev_ok = false;
      } else {
        rev += std::log(pr);
      }
    }
    if (!fwd_ok && !rev_ok) return std::nullopt;
    if (fwd_ok != rev_ok) return std::numeric_limits<double>::infinity();
    return fwd - rev;
  };

  auto consider = [&](std::span<const std::uint64_t> cycle) {
    auto ratio = cycle_log_ratio(cycle);
    ++result.cycles_checked;
    if (!ratio) return;
    double mag = std::abs(*ratio);
    if (mag > result.max_abs_log_ratio) {
      result.max_abs_log_ratio = mag;
      result.worst.states.assign(cycle.begin(), cycle.end());
      result.worst.log_ratio = *ratio;
    }
  };

  // All 3-cycles, each undirected cycle visited once (x < y < z covers one
  // orientation; the other only flips the ratio's sign).
  std::uint64_t cyc[3];
  for (std::uint64_t x = 0; x < n; ++x) {
    for (std::uint64_t y = x + 1; y < n; ++y) {
      for (std::uint64_t z = y + 1; z < n; ++z) {
        cyc[0] = x;
        cyc[1] = y;
        cyc[2] = z;
        consider({cyc, 3});
      }
    }
  }

  // Sampled longer cycles.
  SplitRng rng(seed, /*stream=*/7);
  std::vector<std::uint64_t> cycle;
  for (std::uint64_t draw = 0; draw < sample_budget && n >= 4; ++draw) {
    std::size_t len = 4 + std::size_t(rng.next_below(3));  // lengths 4..6
    if (std::uint64_t(len) > n) len = std::size_t(n);
    cycle.clear();
    while (cycle.size() < len) {
      std::uint64_t s = rng.next_below(n);
      if (std::find(cycle.begin(), cycle.end(), s) == cycle.end()) cycle.push_back(s);
    }
    consider(cycle);
  }
  return result;
}

TripleScanResult check_cumulative_utility_condition(const Game& game,
                                                    std::uint64_t seed,
                                                    const Limits& limits) {
  const ProfileSpace& s = game.space();
  Matrix u = cumulative_utility_matrix(game, limits);
  const std::uint64_t n = s.count();

  TripleScanResult result;
  auto violation = [&](std::uint64_t x, std::uint64_t y, std::uint64_t z) {
    double lhs = u(x, y) - u(y, x);
    double rhs = (u(x, z) + u(z, y)) - (u(y, z) + u(z, x));
    return std::abs(lhs - rhs);
  };
  auto consider = [&](std::uint64_t x, std::uint64_t y, std::uint64_t z) {
    double v = violation(x, y, z);
    ++result.triples_checked;
    if (v > result.max_violation) {
      result.max_violation = v;
      result.worst = {x, y, z, v};
    }
  };

  if (n * n <= limits.triple_budget / std::max<std::uint64_t>(n, 1)) {
    for (std::uint64_t x = 0; x < n; ++x) {
      for (std::uint64_t y = 0; y < n; ++y) {
        for (std::uint64_t z = 0; z < n; ++z) consider(x, y, z);
      }
    }
  } else {
    result.sampled = true;
    SplitRng rng(seed, /*stream=*/11);
    for (std::uint64_t draw = 0; draw < limits.triple_budget; ++draw) {
      consider(rng.next_below(n), rng.next_below(n), rng.next_below(n));
    }
  }
  return result;
}

PairScanResult check_k_symmetry(const ProfileSpace& space,
                                const std::vector<double>& phi, const Limits& limits) {
  space.require_within(limits.matrix_cap, "K symmetry scan");
  if (phi.size() != space.count()) {
    throw InputError("potential table length does not match the profile count");
  }
  const std::uint64_t n = space.count();
  PairScanResult result;
  for (std::uint64_t x = 0; x < n; ++x) {
    for (std::uint64_t y = x + 1; y < n; ++y) {
      double gap = std::abs(kappa(space, phi, x, y) - kappa(space, phi, y, x));
      if (gap > result.max_violation) {
        result.max_violation = gap;
        result.worst = {x, y, gap};
      }
    }
  }
  return result;
}

ReversibilityReport certify(const Game& game, double beta, const Limits& limits) {
  const ProfileSpace& s = game.space();
  s.require_within(limits.matrix_cap, "reversibility certificate");

  ReversibilityReport report;
  report.beta = beta;

  // Structural stage: find a potential if there is one.
  std::vector<double> phi;
  bool have_phi = false;
  if (game.has_potential()) {
    phi = build_potential_table(game, limits).values;
    have_phi = true;
    report.is_potential_game = true;
  } else {
    auto tables = build_utility_tables(game, limits);
    auto exact = check_exact_potential(s, tables, kPassTol, limits);
    report.is_potential_game = exact.is_exact_potential;
    report.exactness_witness = exact.witness;
    if (exact.is_exact_potential) {
      phi = potential_from_utilities(s, tables, kPassTol, limits);
      have_phi = true;
    }
  }

  std::vector<Outcome> outcomes;

  if (have_phi) {
    report.k_symmetry_applicable = true;
    report.k_symmetry = check_k_symmetry(s, phi, limits);
    outcomes.push_back(classify(report.k_symmetry.max_violation));

    if (s.players() >= 2) {
      // With a single player there are no pairs to peel off, so the
      // remainder is the whole potential and says nothing about
      // reversibility; skip the cross-check there.
      auto dec = decompose_potential(s, phi, limits);
      report.residual_applicable = true;
      report.decomposition_residual_max = dec.residual_max_abs;
      outcomes.push_back(classify(dec.residual_max_abs));
    }
  }

  // Kernel stage at the requested beta.
  TransitionKernel kernel = all_logit_kernel(game, beta, limits);
  bool structural_reversible =
      have_phi && classify(report.k_symmetry.max_violation) == Outcome::pass;
  Distribution pi;
  if (structural_reversible) {
    // K symmetric: the gamma-weight distribution is stationary in closed
    // form, and in log arithmetic it is accurate entrywise, which keeps the
    // balance check sharp even where probabilities are tiny. Built from the
    // recovered potential so it also covers games that admit one without
    // carrying it.
    pi = all_logit_stationary_closed_form(s, phi, beta, limits);
    report.closed_form_stationary = true;
  } else {
    pi = stationary_by_solve(kernel).dist;
  }

  report.detailed_balance = check_detailed_balance(kernel, pi);
  outcomes.push_back(classify(report.detailed_balance.max_relative));

  report.kolmogorov = kolmogorov_check(kernel, 2000, 1, limits);
  outcomes.push_back(classify(report.kolmogorov.max_abs_log_ratio));

  report.cumulative_condition = check_cumulative_utility_condition(game, 1, limits);
  outcomes.push_back(classify(report.cumulative_condition.max_violation));

  // Non-potential games cannot be reversible (reversibility of the
  // simultaneous kernel forces an exact potential), so exactness failure
  // counts as a fail vote alongside the kernel evidence.
  if (!report.is_potential_game) outcomes.push_back(Outcome::fail);

  bool any_pass = false, any_fail = false, any_ambiguous = false;
  for (Outcome o : outcomes) {
    any_pass |= (o == Outcome::pass);
    any_fail |= (o == Outcome::fail);
    any_ambiguous |= (o == Outcome::ambiguous);
  }
  if (any_ambiguous || (any_pass && any_fail)) {
    throw InternalError(
        "reversibility checks are inconsistent or inside the tolerance dead "
        "zone; refusing to certify (k-symmetry " +
        std::to_string(report.k_symmetry.max_violation) + ", residual " +
        std::to_string(report.decomposition_residual_max) + ", balance " +
        std::to_string(report.detailed_balance.max_relative) + ", cycles " +
        std::to_string(report.kolmogorov.max_abs_log_ratio) + ", cumulative " +
        std::to_string(report.cumulative_condition.max_violation) + ")");
  }
  report.reversible = !any_fail;
  report.verdict = report.reversible ? "reversible" : "irreversible";
  return report;
}

}  // namespace logitlab
