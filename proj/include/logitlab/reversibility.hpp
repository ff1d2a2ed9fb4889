#ifndef LOGITLAB_REVERSIBILITY_HPP
#define LOGITLAB_REVERSIBILITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "logitlab/dynamics.hpp"
#include "logitlab/game.hpp"
#include "logitlab/stationary.hpp"

namespace logitlab {

struct PairWitness {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  double value = 0.0;
};

struct TripleWitness {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  std::uint64_t z = 0;
  double value = 0.0;
};

struct CycleWitness {
  std::vector<std::uint64_t> states;  // visited in order; last returns to first
  double log_ratio = 0.0;
};

// Detailed balance of a kernel against a candidate stationary distribution.
// max_violation is the worst absolute flux imbalance |pi(x)P(x,y) -
// pi(y)P(y,x)|; max_relative rescales each imbalance by the total flux of
// its pair, which keeps the verdict scale-free in beta.
struct DetailedBalanceResult {
  double max_violation = 0.0;
  double max_relative = 0.0;
  PairWitness worst;           // argmax of the absolute imbalance
  PairWitness worst_relative;  // argmax of the relative imbalance
};

DetailedBalanceResult check_detailed_balance(const TransitionKernel& kernel,
                                             const Distribution& pi);

// Cycle criterion: a positive chain is reversible iff every cycle has the
// same probability traversed in both directions. Length-3 cycles are
// enumerated exhaustively (for the kernels here, any failure already shows
// up at length 3); longer cycles are spot-checked by sampling.
struct KolmogorovResult {
  double max_abs_log_ratio = 0.0;
  CycleWitness worst;
  std::uint64_t cycles_checked = 0;
};

KolmogorovResult kolmogorov_check(const TransitionKernel& kernel,
                                  std::uint64_t sample_budget = 2000,
                                  std::uint64_t seed = 1,
                                  const Limits& limits = default_limits());

// The cumulative-utility condition characterizing reversibility of the
// simultaneous kernel: U(x,y) - U(y,x) must equal
// (U(x,z) + U(z,y)) - (U(y,z) + U(z,x)) for all triples. Enumerated
// exhaustively within the triple budget, sampled beyond it.
struct TripleScanResult {
  double max_violation = 0.0;
  TripleWitness worst;
  std::uint64_t triples_checked = 0;
  bool sampled = false;
};

TripleScanResult check_cumulative_utility_condition(const Game& game,
                                                    std::uint64_t seed = 1,
                                                    const Limits& limits = default_limits());

// Symmetry of the two-argument potential: K(x,y) = K(y,x) for all pairs.
// Holds iff the simultaneous kernel is reversible iff the potential splits
// into pairwise terms (a local interaction game).
struct PairScanResult {
  double max_violation = 0.0;
  PairWitness worst;
};

PairScanResult check_k_symmetry(const ProfileSpace& space,
                                const std::vector<double>& phi,
                                const Limits& limits = default_limits());

// The full certificate. Structural checks (exactness, K symmetry, pairwise
// decomposition residual) are beta-free; kernel checks (detailed balance,
// cycle ratios) confirm them at the given beta. Witnesses are concrete
// profiles/cycles that exhibit each failure.
struct ReversibilityReport {
  double beta = 0.0;

  bool is_potential_game = false;
  std::optional<CircuitWitness> exactness_witness;

  bool k_symmetry_applicable = false;
  PairScanResult k_symmetry;

  bool residual_applicable = false;  // potential game with at least 2 players
  double decomposition_residual_max = 0.0;

  DetailedBalanceResult detailed_balance;
  KolmogorovResult kolmogorov;
  TripleScanResult cumulative_condition;

  bool closed_form_stationary = false;  // gamma-weights distribution is stationary
  bool reversible = false;
  std::string verdict;  // "reversible" or "irreversible"
};

// Runs every check, classifies each against the tolerance ladder
// (pass below 1e-8, fail above 1e-5), and demands a unanimous verdict.
// A check landing between the thresholds, or checks disagreeing with each
// other or with the decomposition residual, throws InternalError rather
// than returning a shaky verdict.
ReversibilityReport certify(const Game& game, double beta,
                            const Limits& limits = default_limits());

}  // namespace logitlab

#endif  // LOGITLAB_REVERSIBILITY_HPP
