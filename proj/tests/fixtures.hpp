#ifndef TESTS_FIXTURES_HPP
#define TESTS_FIXTURES_HPP

// Shared game builders for the test suites. Binary strategy indexing follows
// the project-wide spin convention: index 0 is -1, index 1 is +1.

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "logitlab/game.hpp"
#include "logitlab/rng.hpp"

namespace fx {

using namespace logitlab;

// Two-strategy payoff [[a, c], [d, b]]: rows are the owner's strategy,
// columns the neighbor's; a and b pay on the diagonal, c and d off it.
inline Matrix coordination_payoff(double a, double b, double c, double d) {
  Matrix m(2, 2, 0.0);
  m(0, 0) = a;
  m(0, 1) = c;
  m(1, 0) = d;
  m(1, 1) = b;
  return m;
}

inline Matrix transpose(const Matrix& m) {
  Matrix t(m.cols, m.rows, 0.0);
  for (std::size_t r = 0; r < m.rows; ++r) {
    for (std::size_t c = 0; c < m.cols; ++c) t(c, r) = m(r, c);
  }
  return t;
}

// Symmetric two-player edge: the second player sees the transposed table.
inline EdgeGame coordination_edge(int u, int v, double a, double b, double c,
                                  double d) {
  Matrix pu = coordination_payoff(a, b, c, d);
  Matrix pv = transpose(pu);
  return make_edge_game(u, v, std::move(pu), std::move(pv));
}

inline ProfileSpace binary_space(int n) {
  return ProfileSpace(std::vector<int>(std::size_t(n), 2));
}

inline LocalInteractionGame single_edge_coordination(double a = 1.0, double b = 1.0,
                                                     double c = -1.0,
                                                     double d = -1.0) {
  std::vector<EdgeGame> edges;
  edges.push_back(coordination_edge(0, 1, a, b, c, d));
  return LocalInteractionGame(binary_space(2), std::move(edges));
}

// a=0, b=3, c=5, d=-2: strategy 0 strictly dominant by margin 2; exact
// potential (0, 2, 2, 4) over profiles (00, 01, 10, 11).
inline LocalInteractionGame prisoners_dilemma() {
  return single_edge_coordination(0.0, 3.0, 5.0, -2.0);
}

inline LocalInteractionGame unit_triangle() {
  std::vector<EdgeGame> edges;
  edges.push_back(coordination_edge(0, 1, 1.0, 1.0, -1.0, -1.0));
  edges.push_back(coordination_edge(0, 2, 1.0, 1.0, -1.0, -1.0));
  edges.push_back(coordination_edge(1, 2, 1.0, 1.0, -1.0, -1.0));
  return LocalInteractionGame(binary_space(3), std::move(edges));
}

inline LocalInteractionGame unit_path(int n) {
  std::vector<EdgeGame> edges;
  for (int i = 0; i + 1 < n; ++i) {
    edges.push_back(coordination_edge(i, i + 1, 1.0, 1.0, -1.0, -1.0));
  }
  return LocalInteractionGame(binary_space(n), std::move(edges));
}

inline LocalInteractionGame unit_cycle(int n) {
  std::vector<EdgeGame> edges;
  for (int i = 0; i < n; ++i) {
    edges.push_back(coordination_edge(i, (i + 1) % n, 1.0, 1.0, -1.0, -1.0));
  }
  return LocalInteractionGame(binary_space(n), std::move(edges));
}

inline double spin(int digit) { return digit == 0 ? -1.0 : 1.0; }

// Spin product s0 s1 s2 over three binary players; the canonical potential
// no sum of pairwise tables can realize.
inline std::vector<double> three_way_phi() {
  std::vector<double> phi(8, 0.0);
  ProfileSpace space = binary_space(3);
  for (std::uint64_t x = 0; x < 8; ++x) {
    double prod = 1.0;
    for (int i = 0; i < 3; ++i) prod *= spin(space.digit(x, i));
    phi[x] = prod;
  }
  return phi;
}

inline TableGame three_way_game() {
  return TableGame::from_potential(binary_space(3), three_way_phi());
}

// Zero-sum matcher/mismatcher pair: no exact potential exists.
inline TableGame matching_pennies() {
  std::vector<std::vector<double>> utilities = {
      {1.0, -1.0, -1.0, 1.0},   // player 0 wants to match
      {-1.0, 1.0, 1.0, -1.0},   // player 1 wants to differ
  };
  return TableGame(binary_space(2), std::move(utilities));
}

// Every player: strategy 1 pays 1 and strategy 0 pays 0 regardless of the
// others, so all-ones is a strict dominant profile.
inline TableGame all_dominant_game(int n) {
  ProfileSpace space = binary_space(n);
  std::vector<std::vector<double>> utilities(
      std::size_t(n), std::vector<double>(space.count(), 0.0));
  for (std::uint64_t x = 0; x < space.count(); ++x) {
    for (int i = 0; i < n; ++i) {
      if (space.digit(x, i) == 1) utilities[std::size_t(i)][x] = 1.0;
    }
  }
  return TableGame(std::move(space), std::move(utilities));
}

inline double uniform(SplitRng& rng, double lo, double hi) {
  return lo + (hi - lo) * rng.next_unit();
}

// Edge with a random pair potential plus per-player offsets that depend only
// on the *other* endpoint's strategy: the offsets cancel out of every
// unilateral deviation, so the pair admits the drawn potential exactly while
// the payoff tables look generic.
inline EdgeGame random_edge(SplitRng& rng, int u, int v, int su, int sv) {
  Matrix phi(std::size_t(su), std::size_t(sv), 0.0);
  for (double& x : phi.data) x = uniform(rng, -1.0, 1.0);
  std::vector<double> du(std::size_t(sv), 0.0);
  std::vector<double> dv(std::size_t(su), 0.0);
  for (double& x : du) x = uniform(rng, -1.0, 1.0);
  for (double& x : dv) x = uniform(rng, -1.0, 1.0);
  Matrix pu(std::size_t(su), std::size_t(sv), 0.0);
  Matrix pv(std::size_t(su), std::size_t(sv), 0.0);
  for (int s = 0; s < su; ++s) {
    for (int t = 0; t < sv; ++t) {
      pu(std::size_t(s), std::size_t(t)) = -phi(std::size_t(s), std::size_t(t)) + du[std::size_t(t)];
      pv(std::size_t(s), std::size_t(t)) = -phi(std::size_t(s), std::size_t(t)) + dv[std::size_t(s)];
    }
  }
  return make_edge_game(u, v, std::move(pu), std::move(pv));
}

// Random interaction graph (each pair independently with probability 1/2, at
// least one edge) with random exact-potential edge games.
inline LocalInteractionGame random_lig(SplitRng& rng, int n, int max_size = 2) {
  std::vector<int> sizes(std::size_t(n), 2);
  if (max_size > 2) {
    for (int& s : sizes) s = 2 + int(rng.next_below(std::uint64_t(max_size - 1)));
  }
  std::vector<EdgeGame> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (rng.next_unit() < 0.5) {
        edges.push_back(random_edge(rng, u, v, sizes[std::size_t(u)], sizes[std::size_t(v)]));
      }
    }
  }
  if (edges.empty()) {
    edges.push_back(random_edge(rng, 0, n - 1, sizes[0], sizes[std::size_t(n - 1)]));
  }
  return LocalInteractionGame(ProfileSpace(sizes), std::move(edges));
}

// Random bipartite interaction graph: edges run only between the low and
// high halves of the player range.
inline LocalInteractionGame random_bipartite_lig(SplitRng& rng, int n,
                                                 int max_size = 2) {
  std::vector<int> sizes(std::size_t(n), 2);
  if (max_size > 2) {
    for (int& s : sizes) s = 2 + int(rng.next_below(std::uint64_t(max_size - 1)));
  }
  const int k = n > 1 ? n / 2 : 1;
  std::vector<EdgeGame> edges;
  for (int u = 0; u < k; ++u) {
    for (int v = k; v < n; ++v) {
      if (rng.next_unit() < 0.6) {
        edges.push_back(random_edge(rng, u, v, sizes[std::size_t(u)], sizes[std::size_t(v)]));
      }
    }
  }
  if (edges.empty()) {
    edges.push_back(random_edge(rng, 0, k, sizes[0], sizes[std::size_t(k)]));
  }
  return LocalInteractionGame(ProfileSpace(sizes), std::move(edges));
}

// Random pairwise-realizable potential contaminated with a genuine triple
// interaction on three random players; strength stays well above the
// certification tolerances. Binary strategies.
inline TableGame random_injected_three_way(SplitRng& rng, int n,
                                           double* strength_out = nullptr) {
  LocalInteractionGame base = random_lig(rng, n, 2);
  PotentialTable table = build_potential_table(base);
  int a = int(rng.next_below(std::uint64_t(n)));
  int b = int(rng.next_below(std::uint64_t(n)));
  while (b == a) b = int(rng.next_below(std::uint64_t(n)));
  int c = int(rng.next_below(std::uint64_t(n)));
  while (c == a || c == b) c = int(rng.next_below(std::uint64_t(n)));
  const double eps = uniform(rng, 0.25, 1.0);
  if (strength_out) *strength_out = eps;
  const ProfileSpace& space = base.space();
  for (std::uint64_t x = 0; x < space.count(); ++x) {
    table.values[x] +=
        eps * spin(space.digit(x, a)) * spin(space.digit(x, b)) * spin(space.digit(x, c));
  }
  return TableGame::from_potential(space, std::move(table.values));
}

inline std::uint64_t idx(const ProfileSpace& space, std::initializer_list<int> digits) {
  Profile p(digits);
  return space.encode(p);
}

inline double max_abs_gap(const std::vector<double>& a, const std::vector<double>& b) {
  double gap = 0.0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    gap = std::max(gap, std::abs(a[i] - b[i]));
  }
  return gap;
}

inline int hamming(const ProfileSpace& space, std::uint64_t x, std::uint64_t y) {
  int h = 0;
  for (int i = 0; i < space.players(); ++i) {
    if (space.digit(x, i) != space.digit(y, i)) ++h;
  }
  return h;
}

inline int diff_of(const ProfileSpace& space, std::uint64_t x) {
  int d = 0;
  for (int i = 0; i < space.players(); ++i) d += space.digit(x, i) == 0 ? -1 : 1;
  return d;
}

}  // namespace fx

#endif  // TESTS_FIXTURES_HPP
