#ifndef LOGITLAB_GAME_HPP
#define LOGITLAB_GAME_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "logitlab/errors.hpp"
#include "logitlab/matrix.hpp"
#include "logitlab/profile_space.hpp"

namespace logitlab {

// Full potential table over an enumerable profile space, indexed by flat
// profile index. Defined up to an additive constant; the anchor used to
// build it is recorded by the builder, not the table.
struct PotentialTable {
  std::vector<double> values;
};

// A two-player game on an edge (u, v) that admits an exact potential.
// payoff_u(s, t) is u's payoff and payoff_v(s, t) is v's payoff when u plays
// s and v plays t. The potential table is derived at construction and
// anchored so that potential(0, 0) = -(payoff_u(0,0) + payoff_v(0,0)) / 2,
// which is symmetric in the endpoints and gives the pair potential -s*t for
// unit coordination payoffs under the +-1 convention.
struct EdgeGame {
  int u = 0;
  int v = 0;
  Matrix payoff_u;
  Matrix payoff_v;
  Matrix potential;
};

// Builds an EdgeGame, checking that the payoff pair admits an exact
// potential (throws InputError with the violating four-cycle otherwise).
EdgeGame make_edge_game(int u, int v, Matrix payoff_u, Matrix payoff_v,
                        double tol = 1e-9);

// Max spread (max entry - min entry) of the edge potential; independent of
// the anchor. This is the weight an edge contributes when it has to be
// removed to make the interaction graph bipartite.
double edge_potential_spread(const EdgeGame& e);

// Strategic game interface used by the dynamics: a profile space plus
// per-player utilities evaluable at flat indices (enumerable spaces) or at
// explicit profiles (works even when the space is too big to enumerate).
class Game {
 public:
  virtual ~Game() = default;

  const ProfileSpace& space() const { return space_; }

  virtual double utility(int player, std::uint64_t x) const = 0;
  virtual double utility(int player, std::span<const int> profile) const = 0;

  // Exact potential, when the game carries one by construction.
  virtual bool has_potential() const = 0;
  virtual double potential(std::uint64_t x) const = 0;
  virtual double potential(std::span<const int> profile) const = 0;

 protected:
  explicit Game(ProfileSpace space) : space_(std::move(space)) {}

 private:
  ProfileSpace space_;
};

// A bipartition of the players (interaction-graph vertices).
struct Bipartition {
  std::vector<bool> in_left;
};

// A game assembled from two-player exact-potential games on the edges of an
// interaction graph; each player's utility is the sum over incident edges.
// Always an exact potential game, with potential = sum of edge potentials.
class LocalInteractionGame final : public Game {
 public:
  LocalInteractionGame(ProfileSpace space, std::vector<EdgeGame> edges);

  const std::vector<EdgeGame>& edges() const { return edges_; }
  const std::vector<std::vector<int>>& incident_edges() const { return incident_; }

  double utility(int player, std::uint64_t x) const override;
  double utility(int player, std::span<const int> profile) const override;
  bool has_potential() const override { return true; }
  double potential(std::uint64_t x) const override;
  double potential(std::span<const int> profile) const override;

  // Two-coloring of the interaction graph, if one exists.
  std::optional<Bipartition> bipartition() const;

 private:
  std::vector<EdgeGame> edges_;
  std::vector<std::vector<int>> incident_;  // player -> indices into edges_
};

// A game given by explicit per-player utility tables, optionally carrying a
// potential table. Covers raw-potential input (identical-interest lift with
// u_i = -potential) and arbitrary utility tables that may fail to admit a
// potential at all.
class TableGame final : public Game {
 public:
  TableGame(ProfileSpace space, std::vector<std::vector<double>> utilities);

  // Identical-interest lift of a raw potential table: u_i(x) = -phi(x) for
  // every player, so the lifted game has exact potential phi.
  static TableGame from_potential(ProfileSpace space, std::vector<double> phi);

  double utility(int player, std::uint64_t x) const override;
  double utility(int player, std::span<const int> profile) const override;
  bool has_potential() const override { return !potential_.empty(); }
  double potential(std::uint64_t x) const override;
  double potential(std::span<const int> profile) const override;

  const std::vector<std::vector<double>>& utilities() const { return utilities_; }

 private:
  TableGame(ProfileSpace space, std::vector<double> phi, bool);
  std::vector<std::vector<double>> utilities_;  // per player, flat-indexed
  std::vector<double> potential_;               // empty when none attached
};

// ---- Potential machinery ------------------------------------------------

// Materialize the full potential table of a game that carries a potential.
PotentialTable build_potential_table(const Game& game,
                                     const Limits& limits = default_limits());

// Witness of a failed exactness check: the four-cycle of profiles, the two
// deviating players, and the signed improvement sum around the cycle.
struct CircuitWitness {
  std::uint64_t profiles[4] = {0, 0, 0, 0};
  int player_i = 0;
  int player_j = 0;
  double improvement_sum = 0.0;
};

struct ExactnessResult {
  bool is_exact_potential = true;
  std::optional<CircuitWitness> witness;  // set when the check fails
  double max_violation = 0.0;
};

// Tests whether explicit utility tables admit an exact potential by scanning
// all two-player four-cycles: around any such cycle the unilateral
// improvements must sum to zero.
ExactnessResult check_exact_potential(const ProfileSpace& space,
                                      const std::vector<std::vector<double>>& utilities,
                                      double tol = 1e-9,
                                      const Limits& limits = default_limits());

// Recovers the potential of an exact potential game by integrating utility
// differences along the canonical path that sets players' strategies one at
// a time from the all-zeros anchor (which gets potential 0). Verifies the
// defining difference identity afterwards and throws InternalError if the
// tables do not actually admit a potential.
std::vector<double> potential_from_utilities(
    const ProfileSpace& space, const std::vector<std::vector<double>>& utilities,
    double tol = 1e-9, const Limits& limits = default_limits());

// One extracted pairwise term of a potential decomposition.
struct TwoPlayerPotentialTerm {
  int u = 0;
  int v = 0;
  Matrix table;  // indexed by (strategy of u, strategy of v)
};

struct PotentialDecomposition {
  std::vector<TwoPlayerPotentialTerm> terms;
  std::vector<double> residual;     // what is left after all pair terms
  double residual_max_abs = 0.0;
  Profile anchor;
  std::vector<std::pair<int, int>> pair_order;
};

// All unordered player pairs (u < v) in lexicographic order.
std::vector<std::pair<int, int>> lexicographic_pairs(int players);

// Peels two-player tables off a potential, one player pair at a time: the
// term for pair (u, v) is the current remainder evaluated with all other
// players pinned to the anchor profile. The terms plus the residual always
// re-sum to the input potential exactly; the residual vanishes identically
// if and only if the potential is realizable by a local interaction game,
// and it always vanishes on profiles within Hamming distance 2 of the
// anchor, for any potential and any pair order.
PotentialDecomposition decompose_potential(
    const ProfileSpace& space, const std::vector<double>& phi,
    const Profile& anchor, const std::vector<std::pair<int, int>>& pair_order,
    const Limits& limits = default_limits());

// Convenience overload: all-zeros anchor, lexicographic pair order.
PotentialDecomposition decompose_potential(const ProfileSpace& space,
                                           const std::vector<double>& phi,
                                           const Limits& limits = default_limits());

// Materialize per-player utility tables for any enumerable game.
std::vector<std::vector<double>> build_utility_tables(
    const Game& game, const Limits& limits = default_limits());

}  // namespace logitlab

#endif  // LOGITLAB_GAME_HPP
