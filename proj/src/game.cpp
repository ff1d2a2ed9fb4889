#include "logitlab/game.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <string>

namespace logitlab {

namespace {

// Improvement sum around the four-cycle in which player i moves s -> s' and
// player j moves t -> t', for a two-player game given by payoff matrices.
double edge_circuit_sum(const Matrix& pu, const Matrix& pv, int s, int sp, int t,
                        int tp) {
  return (pu(std::size_t(sp), std::size_t(t)) - pu(std::size_t(s), std::size_t(t))) +
         (pv(std::size_t(sp), std::size_t(tp)) - pv(std::size_t(sp), std::size_t(t))) +
         (pu(std::size_t(s), std::size_t(tp)) - pu(std::size_t(sp), std::size_t(tp))) +
         (pv(std::size_t(s), std::size_t(t)) - pv(std::size_t(s), std::size_t(tp)));
}

}  // namespace

EdgeGame make_edge_game(int u, int v, Matrix payoff_u, Matrix payoff_v, double tol) {
  if (u == v) throw InputError("an edge needs two distinct endpoints");
  if (payoff_u.rows != payoff_v.rows || payoff_u.cols != payoff_v.cols) {
    throw InputError("edge payoff matrices must have matching shapes");
  }
  if (payoff_u.rows == 0 || payoff_u.cols == 0) {
    throw InputError("edge payoff matrices must be non-empty");
  }
  const std::size_t nu = payoff_u.rows, nv = payoff_u.cols;

  // Exactness: improvement sums around every four-cycle must vanish.
  for (std::size_t s = 0; s < nu; ++s) {
    for (std::size_t sp = s + 1; sp < nu; ++sp) {
      for (std::size_t t = 0; t < nv; ++t) {
        for (std::size_t tp = t + 1; tp < nv; ++tp) {
          double circuit =
              edge_circuit_sum(payoff_u, payoff_v, int(s), int(sp), int(t), int(tp));
          if (std::abs(circuit) > tol) {
            throw InputError(
                "edge payoffs do not admit an exact potential (four-cycle "
                "improvement sum " +
                std::to_string(circuit) + ")");
          }
        }
      }
    }
  }

  // Integrate the pair potential: a unilateral utility gain is exactly the
  // matching potential drop. Anchor symmetric in the two endpoints.
  EdgeGame e;
  e.u = u;
  e.v = v;
  e.payoff_u = std::move(payoff_u);
  e.payoff_v = std::move(payoff_v);
  e.potential = Matrix(nu, nv, 0.0);
  e.potential(0, 0) = -0.5 * (e.payoff_u(0, 0) + e.payoff_v(0, 0));
  for (std::size_t t = 1; t < nv; ++t) {
    e.potential(0, t) = e.potential(0, 0) - (e.payoff_v(0, t) - e.payoff_v(0, 0));
  }
  for (std::size_t t = 0; t < nv; ++t) {
    for (std::size_t s = 1; s < nu; ++s) {
      e.potential(s, t) = e.potential(0, t) - (e.payoff_u(s, t) - e.payoff_u(0, t));
    }
  }

  // Belt and braces: both players' difference identities, exhaustively.
  for (std::size_t s = 0; s < nu; ++s) {
    for (std::size_t sp = 0; sp < nu; ++sp) {
      for (std::size_t t = 0; t < nv; ++t) {
        double lhs = e.payoff_u(s, t) - e.payoff_u(sp, t);
        double rhs = e.potential(sp, t) - e.potential(s, t);
        if (std::abs(lhs - rhs) > tol) {
          throw InternalError("edge potential integration failed the u identity");
        }
      }
    }
  }
  for (std::size_t s = 0; s < nu; ++s) {
    for (std::size_t t = 0; t < nv; ++t) {
      for (std::size_t tp = 0; tp < nv; ++tp) {
        double lhs = e.payoff_v(s, t) - e.payoff_v(s, tp);
        double rhs = e.potential(s, tp) - e.potential(s, t);
        if (std::abs(lhs - rhs) > tol) {
          throw InternalError("edge potential integration failed the v identity");
        }
      }
    }
  }
  return e;
}

double edge_potential_spread(const EdgeGame& e) {
  double lo = e.potential.data[0], hi = e.potential.data[0];
  for (double x : e.potential.data) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  return hi - lo;
}

LocalInteractionGame::LocalInteractionGame(ProfileSpace space,
                                           std::vector<EdgeGame> edges)
    : Game(std::move(space)), edges_(std::move(edges)) {
  const int n = this->space().players();
  incident_.assign(std::size_t(n), {});
  std::vector<std::vector<bool>> seen(std::size_t(n), std::vector<bool>(std::size_t(n), false));
  for (std::size_t k = 0; k < edges_.size(); ++k) {
    const EdgeGame& e = edges_[k];
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
      throw InputError("edge endpoint out of range");
    }
    if (seen[std::size_t(e.u)][std::size_t(e.v)]) {
      throw InputError("duplicate edge between players " + std::to_string(e.u) +
                       " and " + std::to_string(e.v));
    }
    seen[std::size_t(e.u)][std::size_t(e.v)] = seen[std::size_t(e.v)][std::size_t(e.u)] = true;
    if (e.payoff_u.rows != std::size_t(this->space().size(e.u)) ||
        e.payoff_u.cols != std::size_t(this->space().size(e.v))) {
      throw InputError("edge payoff shape does not match the strategy space");
    }
    incident_[std::size_t(e.u)].push_back(int(k));
    incident_[std::size_t(e.v)].push_back(int(k));
  }
}

double LocalInteractionGame::utility(int player, std::uint64_t x) const {
  double total = 0.0;
  int own = space().digit(x, player);
  for (int k : incident_[std::size_t(player)]) {
    const EdgeGame& e = edges_[std::size_t(k)];
    if (e.u == player) {
      total += e.payoff_u(std::size_t(own), std::size_t(space().digit(x, e.v)));
    } else {
      total += e.payoff_v(std::size_t(space().digit(x, e.u)), std::size_t(own));
    }
  }
  return total;
}

double LocalInteractionGame::utility(int player, std::span<const int> p) const {
  double total = 0.0;
  int own = p[std::size_t(player)];
  for (int k : incident_[std::size_t(player)]) {
    const EdgeGame& e = edges_[std::size_t(k)];
    if (e.u == player) {
      total += e.payoff_u(std::size_t(own), std::size_t(p[std::size_t(e.v)]));
    } else {
      total += e.payoff_v(std::size_t(p[std::size_t(e.u)]), std::size_t(own));
    }
  }
  return total;
}

double LocalInteractionGame::potential(std::uint64_t x) const {
  double total = 0.0;
  for (const EdgeGame& e : edges_) {
    total += e.potential(std::size_t(space().digit(x, e.u)),
                         std::size_t(space().digit(x, e.v)));
  }
  return total;
}

double LocalInteractionGame::potential(std::span<const int> p) const {
  double total = 0.0;
  for (const EdgeGame& e : edges_) {
    total += e.potential(std::size_t(p[std::size_t(e.u)]), std::size_t(p[std::size_t(e.v)]));
  }
  return total;
}

std::optional<Bipartition> LocalInteractionGame::bipartition() const {
  const int n = space().players();
  std::vector<int> color(std::size_t(n), -1);
  std::deque<int> queue;
  for (int start = 0; start < n; ++start) {
    if (color[std::size_t(start)] != -1) continue;
    color[std::size_t(start)] = 0;
    queue.push_back(start);
    while (!queue.empty()) {
      int p = queue.front();
      queue.pop_front();
      for (int k : incident_[std::size_t(p)]) {
        const EdgeGame& e = edges_[std::size_t(k)];
        int q = (e.u == p) ? e.v : e.u;
        if (color[std::size_t(q)] == -1) {
          color[std::size_t(q)] = 1 - color[std::size_t(p)];
          queue.push_back(q);
        } else if (color[std::size_t(q)] == color[std::size_t(p)]) {
          return std::nullopt;  // odd cycle
        }
      }
    }
  }
  Bipartition b;
  b.in_left.resize(std::size_t(n));
  for (int i = 0; i < n; ++i) b.in_left[std::size_t(i)] = (color[std::size_t(i)] == 0);
  return b;
}

TableGame::TableGame(ProfileSpace space, std::vector<std::vector<double>> utilities)
    : Game(std::move(space)), utilities_(std::move(utilities)) {
  const ProfileSpace& s = this->space();
  s.require_within(default_limits().enumeration_cap, "utility table game");
  if (int(utilities_.size()) != s.players()) {
    throw InputError("need one utility table per player");
  }
  for (const auto& table : utilities_) {
    if (table.size() != s.count()) {
      throw InputError("utility table length does not match the profile count");
    }
  }
}

TableGame::TableGame(ProfileSpace space, std::vector<double> phi, bool)
    : Game(std::move(space)), potential_(std::move(phi)) {
  const ProfileSpace& s = this->space();
  s.require_within(default_limits().enumeration_cap, "potential table game");
  if (potential_.size() != s.count()) {
    throw InputError("potential table length does not match the profile count");
  }
}

TableGame TableGame::from_potential(ProfileSpace space, std::vector<double> phi) {
  return TableGame(std::move(space), std::move(phi), true);
}

double TableGame::utility(int player, std::uint64_t x) const {
  if (!utilities_.empty()) return utilities_[std::size_t(player)][x];
  return -potential_[x];  // identical-interest lift
}

double TableGame::utility(int player, std::span<const int> profile) const {
  return utility(player, space().encode(profile));
}

double TableGame::potential(std::uint64_t x) const {
  if (potential_.empty()) throw InputError("game carries no potential table");
  return potential_[x];
}

double TableGame::potential(std::span<const int> profile) const {
  return potential(space().encode(profile));
}

PotentialTable build_potential_table(const Game& game, const Limits& limits) {
  if (!game.has_potential()) throw InputError("game carries no potential");
  const ProfileSpace& s = game.space();
  s.require_within(limits.enumeration_cap, "potential table");
  PotentialTable table;
  table.values.resize(s.count());
  for (std::uint64_t x = 0; x < s.count(); ++x) table.values[x] = game.potential(x);
  return table;
}

std::vector<std::vector<double>> build_utility_tables(const Game& game,
                                                      const Limits& limits) {
  const ProfileSpace& s = game.space();
  s.require_within(limits.enumeration_cap, "utility tables");
  std::vector<std::vector<double>> tables(std::size_t(s.players()));
  for (int i = 0; i < s.players(); ++i) {
    tables[std::size_t(i)].resize(s.count());
    for (std::uint64_t x = 0; x < s.count(); ++x) {
      tables[std::size_t(i)][x] = game.utility(i, x);
    }
  }
  return tables;
}

ExactnessResult check_exact_potential(const ProfileSpace& space,
                                      const std::vector<std::vector<double>>& utilities,
                                      double tol, const Limits& limits) {
  space.require_within(limits.enumeration_cap, "exactness check");
  if (int(utilities.size()) != space.players()) {
    throw InputError("need one utility table per player");
  }
  const std::uint64_t count = space.count();
  const int n = space.players();
  ExactnessResult result;

  // Every two-player four-cycle: base profile x, player i moves x_i -> yi,
  // player j moves x_j -> yj (yi > x_i and yj > x_j visits each undirected
  // cycle once). Improvement sums around the cycle must vanish.
  for (std::uint64_t x = 0; x < count; ++x) {
    for (int i = 0; i < n; ++i) {
      const int xi = space.digit(x, i);
      for (int yi = xi + 1; yi < space.size(i); ++yi) {
        const std::uint64_t x_i = space.with(x, i, yi);
        for (int j = i + 1; j < n; ++j) {
          const int xj = space.digit(x, j);
          for (int yj = xj + 1; yj < space.size(j); ++yj) {
            const std::uint64_t x_j = space.with(x, j, yj);
            const std::uint64_t x_ij = space.with(x_i, j, yj);
            const auto& ui = utilities[std::size_t(i)];
            const auto& uj = utilities[std::size_t(j)];
            double circuit = (ui[x_i] - ui[x]) + (uj[x_ij] - uj[x_i]) +
                             (ui[x_j] - ui[x_ij]) + (uj[x] - uj[x_j]);
            double mag = std::abs(circuit);
            if (mag > result.max_violation) {
              result.max_violation = mag;
              if (mag > tol) {
                result.is_exact_potential = false;
                CircuitWitness w;
                w.profiles[0] = x;
                w.profiles[1] = x_i;
                w.profiles[2] = x_ij;
                w.profiles[3] = x_j;
                w.player_i = i;
                w.player_j = j;
                w.improvement_sum = circuit;
                result.witness = w;
              }
            }
          }
        }
      }
    }
  }
  return result;
}

std::vector<double> potential_from_utilities(
    const ProfileSpace& space, const std::vector<std::vector<double>>& utilities,
    double tol, const Limits& limits) {
  space.require_within(limits.enumeration_cap, "potential recovery");
  if (int(utilities.size()) != space.players()) {
    throw InputError("need one utility table per player");
  }
  const std::uint64_t count = space.count();
  const int n = space.players();
  std::vector<double> phi(count, 0.0);

  // Canonical path from the all-zeros anchor: the predecessor of x zeroes
  // the last nonzero digit, so a single increasing-index pass suffices.
  for (std::uint64_t x = 1; x < count; ++x) {
    int p = -1;
    for (int i = n - 1; i >= 0; --i) {
      if (space.digit(x, i) != 0) {
        p = i;
        break;
      }
    }
    const std::uint64_t prev = space.with(x, p, 0);
    phi[x] = phi[prev] - (utilities[std::size_t(p)][x] - utilities[std::size_t(p)][prev]);
  }

  // The integral only used one path per profile; verify the defining
  // identity for every unilateral deviation.
  for (std::uint64_t x = 0; x < count; ++x) {
    for (int i = 0; i < n; ++i) {
      const int xi = space.digit(x, i);
      for (int yi = xi + 1; yi < space.size(i); ++yi) {
        const std::uint64_t y = space.with(x, i, yi);
        double lhs = utilities[std::size_t(i)][x] - utilities[std::size_t(i)][y];
        double rhs = phi[y] - phi[x];
        if (std::abs(lhs - rhs) > tol) {
          throw InternalError(
              "utilities do not admit an exact potential; run the exactness "
              "check before recovering one");
        }
      }
    }
  }
  return phi;
}

std::vector<std::pair<int, int>> lexicographic_pairs(int players) {
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < players; ++u) {
    for (int v = u + 1; v < players; ++v) pairs.emplace_back(u, v);
  }
  return pairs;
}

PotentialDecomposition decompose_potential(
    const ProfileSpace& space, const std::vector<double>& phi, const Profile& anchor,
    const std::vector<std::pair<int, int>>& pair_order, const Limits& limits) {
  space.require_within(limits.enumeration_cap, "potential decomposition");
  if (phi.size() != space.count()) {
    throw InputError("potential table length does not match the profile count");
  }
  space.validate(anchor);
  const int n = space.players();

  // The pair order must visit every unordered pair exactly once.
  {
    auto expected = lexicographic_pairs(n);
    std::vector<std::pair<int, int>> got;
    got.reserve(pair_order.size());
    for (auto [u, v] : pair_order) {
      if (u == v || u < 0 || v < 0 || u >= n || v >= n) {
        throw InputError("pair order contains an invalid player pair");
      }
      got.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(got.begin(), got.end());
    if (got != expected) {
      throw InputError("pair order must list every unordered player pair once");
    }
  }

  PotentialDecomposition dec;
  dec.anchor = anchor;
  dec.pair_order = pair_order;
  dec.residual = phi;
  const std::uint64_t anchor_index = space.encode(anchor);

  for (auto [u, v] : pair_order) {
    // Term table: remainder with everyone but u, v pinned to the anchor.
    TwoPlayerPotentialTerm term;
    term.u = u;
    term.v = v;
    term.table = Matrix(std::size_t(space.size(u)), std::size_t(space.size(v)), 0.0);
    for (int s = 0; s < space.size(u); ++s) {
      const std::uint64_t row = space.with(anchor_index, u, s);
      for (int t = 0; t < space.size(v); ++t) {
        term.table(std::size_t(s), std::size_t(t)) = dec.residual[space.with(row, v, t)];
      }
    }
    for (std::uint64_t x = 0; x < space.count(); ++x) {
      dec.residual[x] -=
          term.table(std::size_t(space.digit(x, u)), std::size_t(space.digit(x, v)));
    }
    dec.terms.push_back(std::move(term));
  }

  for (double r : dec.residual) {
    dec.residual_max_abs = std::max(dec.residual_max_abs, std::abs(r));
  }
  return dec;
}

PotentialDecomposition decompose_potential(const ProfileSpace& space,
                                           const std::vector<double>& phi,
                                           const Limits& limits) {
  Profile anchor(std::size_t(space.players()), 0);
  return decompose_potential(space, phi, anchor, lexicographic_pairs(space.players()),
                             limits);
}

}  // namespace logitlab
