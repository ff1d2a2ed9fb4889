#ifndef LOGITLAB_OBSERVABLES_HPP
#define LOGITLAB_OBSERVABLES_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "logitlab/game.hpp"
#include "logitlab/stationary.hpp"

namespace logitlab {

// A real-valued function of the profile, tabulated over the flat index.
struct Observable {
  std::string name;
  std::vector<double> values;
};

// Sum of +-1 spins: strategy index 0 counts as -1, index 1 as +1.
// Requires a binary game.
Observable diff_observable(const ProfileSpace& space,
                           const Limits& limits = default_limits());

// Signed monochromatic edge count: each edge contributes +1 when both
// endpoints play +1, -1 when both play -1, 0 when they disagree; i.e.
// half the sum of endpoint spins over the edges. Requires binary players.
Observable monoc_observable(const LocalInteractionGame& game,
                            const Limits& limits = default_limits());

double expectation(const Observable& obs, const Distribution& dist);

// A pair permutation of profile pairs built from a side assignment: the
// first output copies left players from x and right players from y, the
// second does the opposite. Involutive and swap-equivariant by
// construction.
struct PairPermutation {
  std::vector<bool> in_left;

  std::uint64_t first(const ProfileSpace& s, std::uint64_t x, std::uint64_t y) const;
  std::uint64_t second(const ProfileSpace& s, std::uint64_t x, std::uint64_t y) const;
};

// The canonical pair permutation of a bipartition.
PairPermutation bipartite_mu(const Bipartition& bipartition);

// Max over profile pairs of |K(x,y) - phi(mu1(x,y)) - phi(mu2(x,y))|: the
// smallest alpha for which mu splits K into two one-argument potentials.
// Zero exactly when the interaction graph is bipartite with mu's sides.
double verify_decomposition(const Game& game, const PairPermutation& mu,
                            const Limits& limits = default_limits());

// Max over profile pairs of |O(x) + O(y) - O(mu1(x,y)) - O(mu2(x,y))|:
// zero when the observable's pair sums pass through mu unchanged.
double verify_observable_decomposable(const ProfileSpace& space,
                                      const Observable& obs,
                                      const PairPermutation& mu,
                                      const Limits& limits = default_limits());

// Minimum total weight of edges whose removal makes the interaction graph
// bipartite, weighting each edge by its potential spread. Exact by
// enumeration of side assignments up to the configured player budget;
// greedy local search (flagged non-exact) beyond it.
struct BipartitionCertificate {
  Bipartition sides;
  std::vector<std::pair<int, int>> removed_edges;
  double removed_weight = 0.0;
  bool exact = true;
};

BipartitionCertificate bipartiting_weight(const LocalInteractionGame& game,
                                          const Limits& limits = default_limits());

// How the two dynamics' stationary expectations of an observable relate.
// On a bipartite graph with a decomposable observable they agree exactly;
// otherwise, for a decomposable observable with positive one-at-a-time
// expectation, the simultaneous expectation is sandwiched within
// exp(+-2 alpha beta), alpha = twice the bipartiting weight.
struct InvarianceGap {
  double one_logit_expectation = 0.0;
  double all_logit_expectation = 0.0;
  double alpha = 0.0;          // 0 when the graph is bipartite
  double observable_defect = 0.0;  // how far obs is from mu-decomposable
  enum class Status {
    equal_pass,       // bipartite: expectations agree within tolerance
    equal_fail,       // bipartite but the equality failed (reported, never hidden)
    sandwich_pass,    // non-bipartite: multiplicative bound holds
    sandwich_fail,    // non-bipartite: multiplicative bound violated
    not_applicable,   // observable not decomposable, or sign precondition unmet
  } status = Status::not_applicable;
};

InvarianceGap invariance_gap(const LocalInteractionGame& game, const Observable& obs,
                             double beta, const Limits& limits = default_limits());

}  // namespace logitlab

#endif  // LOGITLAB_OBSERVABLES_HPP
