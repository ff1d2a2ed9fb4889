#include "logitlab/observables.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "logitlab/dynamics.hpp"
#include "logitlab/rng.hpp"

namespace logitlab {

namespace {

void require_binary(const ProfileSpace& space, const char* what) {
  for (int i = 0; i < space.players(); ++i) {
    if (space.size(i) != 2) {
      throw InputError(std::string(what) + " requires two strategies per player");
    }
  }
}

double spin(int strategy) { return strategy == 0 ? -1.0 : 1.0; }

}  // namespace

Observable diff_observable(const ProfileSpace& space, const Limits& limits) {
  require_binary(space, "the spin-sum observable");
  space.require_within(limits.enumeration_cap, "spin-sum observable");
  Observable obs;
  obs.name = "diff";
  obs.values.resize(space.count());
  for (std::uint64_t x = 0; x < space.count(); ++x) {
    double total = 0.0;
    for (int i = 0; i < space.players(); ++i) total += spin(space.digit(x, i));
    obs.values[x] = total;
  }
  return obs;
}

Observable monoc_observable(const LocalInteractionGame& game, const Limits& limits) {
  const ProfileSpace& space = game.space();
  require_binary(space, "the monochromatic-edge observable");
  space.require_within(limits.enumeration_cap, "monochromatic-edge observable");
  Observable obs;
  obs.name = "monoc";
  obs.values.resize(space.count());
  for (std::uint64_t x = 0; x < space.count(); ++x) {
    double total = 0.0;
    for (const EdgeGame& e : game.edges()) {
      total += 0.5 * (spin(space.digit(x, e.u)) + spin(space.digit(x, e.v)));
    }
    obs.values[x] = total;
  }
  return obs;
}

double expectation(const Observable& obs, const Distribution& dist) {
  if (obs.values.size() != dist.probs.size()) {
    throw InputError("observable and distribution sizes do not match");
  }
  double acc = 0.0;
  for (std::size_t x = 0; x < obs.values.size(); ++x) {
    acc += obs.values[x] * dist.probs[x];
  }
  return acc;
}

std::uint64_t PairPermutation::first(const ProfileSpace& s, std::uint64_t x,
                                     std::uint64_t y) const {
  std::uint64_t out = 0;
  for (int i = 0; i < s.players(); ++i) {
    std::uint64_t src = in_left[std::size_t(i)] ? x : y;
    out += std::uint64_t(s.digit(src, i)) * s.stride(i);
  }
  return out;
}

std::uint64_t PairPermutation::second(const ProfileSpace& s, std::uint64_t x,
                                      std::uint64_t y) const {
  return first(s, y, x);
}

PairPermutation bipartite_mu(const Bipartition& bipartition) {
  return PairPermutation{bipartition.in_left};
}

double verify_decomposition(const Game& game, const PairPermutation& mu,
                            const Limits& limits) {
  const ProfileSpace& s = game.space();
  if (int(mu.in_left.size()) != s.players()) {
    throw InputError("pair permutation size does not match the player count");
  }
  s.require_within(limits.matrix_cap, "decomposition check");
  PotentialTable phi = build_potential_table(game, limits);
  const std::uint64_t count = s.count();
  double worst = 0.0;
  for (std::uint64_t x = 0; x < count; ++x) {
    for (std::uint64_t y = 0; y < count; ++y) {
      double k = kappa(s, phi.values, x, y);
      double split = phi.values[mu.first(s, x, y)] + phi.values[mu.second(s, x, y)];
      worst = std::max(worst, std::abs(k - split));
    }
  }
  return worst;
}

double verify_observable_decomposable(const ProfileSpace& space, const Observable& obs,
                                      const PairPermutation& mu, const Limits& limits) {
  if (int(mu.in_left.size()) != space.players()) {
    throw InputError("pair permutation size does not match the player count");
  }
  space.require_within(limits.matrix_cap, "observable decomposition check");
  if (obs.values.size() != space.count()) {
    throw InputError("observable length does not match the profile count");
  }
  const std::uint64_t count = space.count();
  double worst = 0.0;
  for (std::uint64_t x = 0; x < count; ++x) {
    for (std::uint64_t y = 0; y < count; ++y) {
      double direct = obs.values[x] + obs.values[y];
      double mapped = obs.values[mu.first(space, x, y)] + obs.values[mu.second(space, x, y)];
      worst = std::max(worst, std::abs(direct - mapped));
    }
  }
  return worst;
}

BipartitionCertificate bipartiting_weight(const LocalInteractionGame& game,
                                          const Limits& limits) {
  const int n = game.space().players();
  const auto& edges = game.edges();
  std::vector<double> weight(edges.size());
  for (std::size_t k = 0; k < edges.size(); ++k) {
    weight[k] = edge_potential_spread(edges[k]);
  }

  auto monochromatic_weight = [&](const std::vector<bool>& in_left) {
    double total = 0.0;
    for (std::size_t k = 0; k < edges.size(); ++k) {
      if (in_left[std::size_t(edges[k].u)] == in_left[std::size_t(edges[k].v)]) {
        total += weight[k];
      }
    }
    return total;
  };

  BipartitionCertificate best;
  best.sides.in_left.assign(std::size_t(n), false);

  if (std::uint64_t(n) <= limits.bipartition_exact_cap) {
    // Exact: try every side assignment with player 0 pinned left.
    double best_weight = std::numeric_limits<double>::infinity();
    std::vector<bool> assign(std::size_t(n), false);
    const std::uint64_t combos = n > 1 ? (std::uint64_t(1) << (n - 1)) : 1;
    for (std::uint64_t mask = 0; mask < combos; ++mask) {
      assign[0] = true;
      for (int i = 1; i < n; ++i) assign[std::size_t(i)] = ((mask >> (i - 1)) & 1) == 0;
      double w = monochromatic_weight(assign);
      if (w < best_weight) {
        best_weight = w;
        best.sides.in_left = assign;
      }
    }
    best.exact = true;
  } else {
    // Greedy local search with multiple deterministic starts.
    double best_weight = std::numeric_limits<double>::infinity();
    for (std::uint64_t start = 0; start < 8; ++start) {
      std::vector<bool> assign(std::size_t(n), false);
      SplitRng rng(start + 1, 13);
      for (int i = 0; i < n; ++i) assign[std::size_t(i)] = (rng.next_u64() & 1) != 0;
      bool improved = true;
      while (improved) {
        improved = false;
        for (int i = 0; i < n; ++i) {
          double before = monochromatic_weight(assign);
          assign[std::size_t(i)] = !assign[std::size_t(i)];
          double after = monochromatic_weight(assign);
          if (after + 1e-15 < before) {
            improved = true;
          } else {
            assign[std::size_t(i)] = !assign[std::size_t(i)];
          }
        }
      }
      double w = monochromatic_weight(assign);
      if (w < best_weight) {
        best_weight = w;
        best.sides.in_left = assign;
      }
    }
    best.exact = false;
  }

  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (best.sides.in_left[std::size_t(edges[k].u)] ==
        best.sides.in_left[std::size_t(edges[k].v)]) {
      best.removed_edges.emplace_back(edges[k].u, edges[k].v);
      best.removed_weight += weight[k];
    }
  }
  return best;
}

InvarianceGap invariance_gap(const LocalInteractionGame& game, const Observable& obs,
                             double beta, const Limits& limits) {
  const ProfileSpace& s = game.space();
  InvarianceGap gap;

  Distribution pi1 = gibbs(game, beta, limits);
  Distribution piA = all_logit_stationary_closed_form(game, beta, limits);
  gap.one_logit_expectation = expectation(obs, pi1);
  gap.all_logit_expectation = expectation(obs, piA);

  BipartitionCertificate cert = bipartiting_weight(game, limits);
  PairPermutation mu = bipartite_mu(cert.sides);
  gap.observable_defect = verify_observable_decomposable(s, obs, mu, limits);
  const bool decomposable = gap.observable_defect <= 1e-9;

  if (cert.removed_weight == 0.0) {
    gap.alpha = 0.0;
    if (!decomposable) {
      gap.status = InvarianceGap::Status::not_applicable;
      return gap;
    }
    double scale = std::max({1.0, std::abs(gap.one_logit_expectation),
                             std::abs(gap.all_logit_expectation)});
    bool equal =
        std::abs(gap.one_logit_expectation - gap.all_logit_expectation) <= 1e-8 * scale;
    gap.status =
        equal ? InvarianceGap::Status::equal_pass : InvarianceGap::Status::equal_fail;
    return gap;
  }

  gap.alpha = 2.0 * cert.removed_weight;
  if (!decomposable || gap.one_logit_expectation <= 0.0) {
    // The multiplicative bound is only proven for observables the pair
    // permutation leaves intact (pointwise nonnegative in the argument that
    // matters, checked here through the positive expectation gate).
    gap.status = InvarianceGap::Status::not_applicable;
    return gap;
  }
  double lo = std::exp(-2.0 * gap.alpha * beta) * gap.one_logit_expectation;
  double hi = std::exp(2.0 * gap.alpha * beta) * gap.one_logit_expectation;
  double slack = 1e-9 * std::max(1.0, std::abs(gap.one_logit_expectation));
  bool ok = (gap.all_logit_expectation >= lo - slack) &&
            (gap.all_logit_expectation <= hi + slack);
  gap.status =
      ok ? InvarianceGap::Status::sandwich_pass : InvarianceGap::Status::sandwich_fail;
  return gap;
}

}  // namespace logitlab
