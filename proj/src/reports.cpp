#include "logitlab/reports.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "logitlab/curie_weiss.hpp"
#include "logitlab/game_json.hpp"
#include "logitlab/mixing.hpp"
#include "logitlab/numerics.hpp"
#include "logitlab/observables.hpp"
#include "logitlab/reversibility.hpp"
#include "logitlab/rng.hpp"
#include "logitlab/stationary.hpp"

namespace logitlab {

using nlohmann::json;

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace {

// Deterministic serializer: sorted keys (nlohmann's object storage is an
// ordered map), floats at 17 significant digits, non-finite floats as null.
// Identical documents therefore serialize to identical bytes.
void dump_value(const json& v, std::string& out) {
  switch (v.type()) {
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) out += ',';
        first = false;
        out += json(it.key()).dump();
        out += ':';
        dump_value(it.value(), out);
      }
      out += '}';
      break;
    }
    case json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& item : v) {
        if (!first) out += ',';
        first = false;
        dump_value(item, out);
      }
      out += ']';
      break;
    }
    case json::value_t::string:
      out += json(v.get<std::string>()).dump();
      break;
    case json::value_t::boolean:
      out += v.get<bool>() ? "true" : "false";
      break;
    case json::value_t::number_integer:
      out += std::to_string(v.get<std::int64_t>());
      break;
    case json::value_t::number_unsigned:
      out += std::to_string(v.get<std::uint64_t>());
      break;
    case json::value_t::number_float: {
      const double d = v.get<double>();
      if (std::isfinite(d)) {
        out += format_double(d);
      } else {
        out += "null";
      }
      break;
    }
    default:
      out += "null";
      break;
  }
}

std::string dump(const json& v) {
  std::string out;
  dump_value(v, out);
  out += '\n';
  return out;
}

const char* kind_name(KernelKind kind) {
  return kind == KernelKind::one_logit ? "one_logit" : "all_logit";
}

void validate_common(const RunOptions& o) {
  if (o.betas.empty()) throw InputError("at least one beta is required");
  for (double b : o.betas) {
    if (!std::isfinite(b) || b < 0.0) {
      throw InputError("beta must be finite and nonnegative");
    }
  }
  if (!(o.epsilon > 0.0) || !(o.epsilon < 1.0)) {
    throw InputError("epsilon must lie strictly between 0 and 1");
  }
  if (o.t_cap < 1) throw InputError("t_cap must be at least 1");
}

json strategies_json(const ProfileSpace& s, std::uint64_t index) {
  json arr = json::array();
  for (int i = 0; i < s.players(); ++i) arr.push_back(s.digit(index, i));
  return arr;
}

json state_json(const ProfileSpace& s, std::uint64_t index) {
  json j;
  j["index"] = index;
  j["strategies"] = strategies_json(s, index);
  return j;
}

json pair_witness_json(const ProfileSpace& s, const PairWitness& w) {
  json j;
  j["x"] = state_json(s, w.x);
  j["y"] = state_json(s, w.y);
  j["value"] = w.value;
  return j;
}

json triple_witness_json(const ProfileSpace& s, const TripleWitness& w) {
  json j;
  j["x"] = state_json(s, w.x);
  j["y"] = state_json(s, w.y);
  j["z"] = state_json(s, w.z);
  j["value"] = w.value;
  return j;
}

json circuit_witness_json(const ProfileSpace& s, const CircuitWitness& w) {
  json profiles = json::array();
  for (int i = 0; i < 4; ++i) profiles.push_back(state_json(s, w.profiles[i]));
  json j;
  j["profiles"] = profiles;
  j["player_i"] = w.player_i;
  j["player_j"] = w.player_j;
  j["improvement_sum"] = w.improvement_sum;
  return j;
}

json report_json(const ProfileSpace& s, const ReversibilityReport& r) {
  json j;
  j["beta"] = r.beta;
  j["verdict"] = r.verdict;
  j["reversible"] = r.reversible;
  j["closed_form_stationary"] = r.closed_form_stationary;
  j["is_potential_game"] = r.is_potential_game;
  j["exactness_witness"] =
      r.exactness_witness ? circuit_witness_json(s, *r.exactness_witness) : json(nullptr);

  json ks;
  ks["applicable"] = r.k_symmetry_applicable;
  if (r.k_symmetry_applicable) {
    ks["max_violation"] = r.k_symmetry.max_violation;
    ks["witness"] = pair_witness_json(s, r.k_symmetry.worst);
  }
  j["k_symmetry"] = ks;

  json res;
  res["applicable"] = r.residual_applicable;
  if (r.residual_applicable) res["max_abs"] = r.decomposition_residual_max;
  j["pairwise_residual"] = res;

  json db;
  db["max_violation"] = r.detailed_balance.max_violation;
  db["max_relative"] = r.detailed_balance.max_relative;
  db["witness"] = pair_witness_json(s, r.detailed_balance.worst_relative);
  j["detailed_balance"] = db;

  json cyc;
  cyc["max_abs_log_ratio"] = r.kolmogorov.max_abs_log_ratio;
  cyc["cycles_checked"] = r.kolmogorov.cycles_checked;
  json cycle = json::array();
  for (std::uint64_t state : r.kolmogorov.worst.states) cycle.push_back(state);
  cyc["witness_cycle"] = cycle;
  j["cycle_criterion"] = cyc;

  json cu;
  cu["max_violation"] = r.cumulative_condition.max_violation;
  cu["triples_checked"] = r.cumulative_condition.triples_checked;
  cu["sampled"] = r.cumulative_condition.sampled;
  cu["witness"] = triple_witness_json(s, r.cumulative_condition.worst);
  j["cumulative_utility_condition"] = cu;
  return j;
}

json game_json(const Game& game) {
  const ProfileSpace& s = game.space();
  json g;
  g["players"] = s.players();
  json sizes = json::array();
  for (int i = 0; i < s.players(); ++i) sizes.push_back(s.size(i));
  g["strategy_sizes"] = sizes;
  g["profiles"] = s.enumerable() ? json(s.count()) : json(nullptr);
  g["carries_potential"] = game.has_potential();
  if (const auto* lig = dynamic_cast<const LocalInteractionGame*>(&game)) {
    g["structure"] = "local_interaction";
    g["edges"] = lig->edges().size();
  } else {
    g["structure"] = "table";
  }
  return g;
}

json distribution_json(const Distribution& d) {
  json j;
  j["probs"] = d.probs;
  j["log_probs"] = d.logp;
  return j;
}

double max_abs_gap(const std::vector<double>& a, const std::vector<double>& b) {
  double gap = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) gap = std::max(gap, std::abs(a[i] - b[i]));
  return gap;
}

bool is_binary(const ProfileSpace& s) {
  for (int i = 0; i < s.players(); ++i) {
    if (s.size(i) != 2) return false;
  }
  return true;
}

int profile_diff(const Profile& p) {
  int d = 0;
  for (int digit : p) d += digit == 0 ? -1 : 1;
  return d;
}

double profile_monoc(const LocalInteractionGame& game, const Profile& p) {
  double total = 0.0;
  for (const EdgeGame& e : game.edges()) {
    const int su = p[std::size_t(e.u)] == 0 ? -1 : 1;
    const int sv = p[std::size_t(e.v)] == 0 ? -1 : 1;
    total += 0.5 * double(su + sv) * (su == sv ? 1.0 : 0.0);
  }
  return total;
}

// Stationary distribution appropriate for a kernel of the given kind:
// closed forms when the structure supports them, a solve otherwise.
Distribution reference_stationary(const Game& game, const TransitionKernel& kernel,
                                  bool k_symmetric, const Limits& limits,
                                  std::string* method) {
  if (game.has_potential() && kernel.kind == KernelKind::one_logit) {
    if (method) *method = "gibbs";
    return gibbs(game, kernel.beta, limits);
  }
  if (game.has_potential() && kernel.kind == KernelKind::all_logit && k_symmetric) {
    if (method) *method = "closed_form";
    return all_logit_stationary_closed_form(game, kernel.beta, limits);
  }
  if (method) *method = "solve";
  return stationary_by_solve(kernel).dist;
}

bool k_symmetry_passes(const Game& game, const Limits& limits) {
  if (!game.has_potential()) return false;
  PotentialTable table = build_potential_table(game, limits);
  return check_k_symmetry(game.space(), table.values, limits).max_violation <= 1e-8;
}

// Heaviest states first, greedily filled while the mass stays at most 1/2.
std::vector<std::uint64_t> heavy_prefix_subset(const Distribution& pi) {
  std::vector<std::uint64_t> order(pi.probs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::uint64_t a, std::uint64_t b) {
    return pi.probs[a] > pi.probs[b];
  });
  std::vector<std::uint64_t> subset;
  double mass = 0.0;
  for (std::uint64_t state : order) {
    if (mass + pi.probs[state] > 0.5 + 1e-12) break;
    subset.push_back(state);
    mass += pi.probs[state];
  }
  return subset;
}

json bottleneck_json(const TransitionKernel& kernel, const Distribution& pi,
                     bool binary) {
  // Two candidate cuts: the heavy-prefix set and, for binary games, the
  // negative-spin half. Report whichever certifies the larger lower bound.
  std::vector<std::vector<std::uint64_t>> candidates;
  std::vector<std::string> names;
  auto prefix = heavy_prefix_subset(pi);
  if (!prefix.empty()) {
    candidates.push_back(std::move(prefix));
    names.emplace_back("heavy_prefix");
  }
  if (binary) {
    // Spin sum is negative iff fewer than half the bits are set.
    std::vector<std::uint64_t> negative;
    double mass = 0.0;
    const std::uint64_t n_states = pi.probs.size();
    const int players = int(std::llround(std::log2(double(n_states))));
    for (std::uint64_t x = 0; x < n_states; ++x) {
      int ones = 0;
      for (int i = 0; i < players; ++i) ones += int((x >> i) & 1u);
      if (2 * ones < players) {
        negative.push_back(x);
        mass += pi.probs[x];
      }
    }
    if (!negative.empty() && mass <= 0.5 + 1e-12) {
      candidates.push_back(std::move(negative));
      names.emplace_back("negative_spin");
    }
  }
  json best = nullptr;
  double best_t = -1.0;
  bool best_infinite = false;
  for (std::size_t c = 0; c < candidates.size(); ++c) {
    BottleneckBound b = bottleneck_lower_bound(kernel, pi, candidates[c]);
    const bool better =
        (b.infinite && !best_infinite) || (!best_infinite && b.t_lower > best_t);
    if (best.is_null() || better) {
      best_t = b.t_lower;
      best_infinite = b.infinite;
      json j;
      j["subset"] = names[c];
      j["subset_size"] = candidates[c].size();
      j["flux"] = b.flux;
      j["pi_s"] = b.pi_s;
      j["ratio"] = b.ratio;
      j["infinite"] = b.infinite;
      j["t_lower"] = b.infinite ? json(nullptr) : json(b.t_lower);
      best = j;
    }
  }
  return best;
}

Observable parse_observable_csv(const std::string& path, const ProfileSpace& space,
                                const Limits& limits) {
  space.require_within(limits.enumeration_cap, "observable table");
  const std::string text = read_text_file(path);
  std::vector<double> values(space.count(), num::neg_inf);
  std::vector<bool> seen(space.count(), false);
  std::istringstream in(text);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) {
      throw InputError("observable row " + std::to_string(line_no) +
                       " is not 'index,value'");
    }
    const std::string first = line.substr(0, comma);
    if (line_no == 1 && first.find_first_not_of("0123456789 \t") != std::string::npos) {
      continue;  // header row
    }
    std::uint64_t index = 0;
    double value = 0.0;
    try {
      index = std::stoull(first);
      value = std::stod(line.substr(comma + 1));
    } catch (const std::exception&) {
      throw InputError("observable row " + std::to_string(line_no) +
                       " is not 'index,value'");
    }
    if (index >= space.count()) {
      throw InputError("observable row " + std::to_string(line_no) +
                       " indexes a profile out of range");
    }
    if (!std::isfinite(value)) {
      throw InputError("observable row " + std::to_string(line_no) +
                       " carries a non-finite value");
    }
    values[index] = value;
    seen[index] = true;
  }
  for (std::uint64_t x = 0; x < space.count(); ++x) {
    if (!seen[x]) {
      throw InputError("observable table misses profile " + std::to_string(x));
    }
  }
  Observable obs;
  obs.name = std::filesystem::path(path).stem().string();
  if (obs.name.empty()) obs.name = "custom";
  obs.values = std::move(values);
  return obs;
}

}  // namespace

Limits limits_for(const RunOptions& options) {
  Limits limits = default_limits();
  if (options.cap_states > 0) {
    limits.matrix_cap = options.cap_states;
    limits.mixing_cap = options.cap_states;
    limits.enumeration_cap = std::max(limits.enumeration_cap, options.cap_states);
    limits.lumped_cap = std::max(limits.lumped_cap, options.cap_states);
  }
  return limits;
}

std::string run_analyze(const Game& game, const RunOptions& options) {
  validate_common(options);
  const Limits limits = limits_for(options);
  json root;
  root["command"] = "analyze";
  root["game"] = game_json(game);
  json results = json::array();
  for (double beta : options.betas) {
    results.push_back(report_json(game.space(), certify(game, beta, limits)));
  }
  root["results"] = results;
  return dump(root);
}

std::string run_stationary(const Game& game, const RunOptions& options) {
  validate_common(options);
  const Limits limits = limits_for(options);
  const ProfileSpace& space = game.space();
  space.require_within(limits.matrix_cap, "stationary analysis");
  const bool k_symmetric = k_symmetry_passes(game, limits);

  json root;
  root["command"] = "stationary";
  root["game"] = game_json(game);
  root["k_symmetric"] = game.has_potential() ? json(k_symmetric) : json(nullptr);

  std::vector<Distribution> one_dists, all_dists;
  json results = json::array();
  for (double beta : options.betas) {
    json r;
    r["beta"] = beta;

    TransitionKernel k1 = one_logit_kernel(game, beta, limits);
    std::string method1;
    Distribution pi1 = reference_stationary(game, k1, k_symmetric, limits, &method1);
    json one = distribution_json(pi1);
    one["method"] = method1;
    r["one_logit"] = one;

    TransitionKernel kA = all_logit_kernel(game, beta, limits);
    SolveResult solved = stationary_by_solve(kA);
    json all;
    json solved_json = distribution_json(solved.dist);
    solved_json["method"] = solved.used_dense ? "dense" : "power";
    solved_json["residual"] = solved.residual;
    all["solved"] = solved_json;
    if (game.has_potential()) {
      Distribution closed = all_logit_stationary_closed_form(game, beta, limits);
      all["closed_form"] = distribution_json(closed);
      all["closed_form_max_abs_gap"] = max_abs_gap(closed.probs, solved.dist.probs);
      all["closed_form_is_stationary"] = k_symmetric;
    } else {
      all["closed_form"] = nullptr;
    }
    r["all_logit"] = all;

    if (game.has_potential()) {
      PartitionFunctions pf = partition_functions(game, beta, limits);
      json p;
      p["log_z1"] = pf.log_z1;
      p["log_zA"] = pf.log_zA;
      p["z1"] = pf.z1_finite ? json(pf.z1) : json(nullptr);
      p["zA"] = pf.zA_finite ? json(pf.zA) : json(nullptr);
      p["log_zA_minus_two_log_z1"] = pf.log_zA - 2.0 * pf.log_z1;
      r["partition_functions"] = p;
    }

    if (options.format == RunOptions::Format::csv) {
      one_dists.push_back(pi1);
      all_dists.push_back(solved.dist);
    }
    results.push_back(r);
  }
  root["results"] = results;

  if (options.format == RunOptions::Format::csv) {
    std::string out =
        "beta,index,strategies,one_logit_prob,one_logit_log,all_logit_prob,all_logit_log\n";
    for (std::size_t b = 0; b < options.betas.size(); ++b) {
      for (std::uint64_t x = 0; x < space.count(); ++x) {
        out += format_double(options.betas[b]);
        out += ',';
        out += std::to_string(x);
        out += ',';
        for (int i = 0; i < space.players(); ++i) {
          if (i) out += '|';
          out += std::to_string(space.digit(x, i));
        }
        out += ',';
        out += format_double(one_dists[b].probs[x]);
        out += ',';
        out += format_double(one_dists[b].logp[x]);
        out += ',';
        out += format_double(all_dists[b].probs[x]);
        out += ',';
        out += format_double(all_dists[b].logp[x]);
        out += '\n';
      }
    }
    return out;
  }
  return dump(root);
}

std::string run_mixing(const Game& game, const RunOptions& options) {
  validate_common(options);
  const Limits limits = limits_for(options);
  const ProfileSpace& space = game.space();
  space.require_within(limits.mixing_cap, "mixing analysis");
  const bool k_symmetric = k_symmetry_passes(game, limits);
  const bool binary = is_binary(space);

  json root;
  root["command"] = "mixing";
  root["game"] = game_json(game);
  root["kernel"] = kind_name(options.kind);
  root["epsilon"] = options.epsilon;
  root["t_cap"] = options.t_cap;

  std::string csv = "beta,t,worst_tv\n";
  json results = json::array();
  for (double beta : options.betas) {
    json r;
    r["beta"] = beta;
    TransitionKernel kernel = options.kind == KernelKind::one_logit
                                  ? one_logit_kernel(game, beta, limits)
                                  : all_logit_kernel(game, beta, limits);
    std::string method;
    Distribution pi = reference_stationary(game, kernel, k_symmetric, limits, &method);
    r["stationary_method"] = method;

    MixingOptions mo;
    mo.epsilon = options.epsilon;
    mo.t_cap = options.t_cap;
    MixingResult mr = exact_mixing_time(kernel, pi, mo, limits);
    json exact;
    exact["t_mix"] = mr.t_mix ? json(*mr.t_mix) : json(nullptr);
    exact["cap_exceeded"] = mr.cap_exceeded;
    if (mr.cap_exceeded) exact["tv_at_cap"] = mr.tv_at_cap;
    r["exact"] = exact;
    json curve = json::array();
    for (const auto& [t, tv] : mr.tv_curve) {
      curve.push_back(json::array({t, tv}));
      csv += format_double(beta);
      csv += ',';
      csv += std::to_string(t);
      csv += ',';
      csv += format_double(tv);
      csv += '\n';
    }
    r["tv_curve"] = curve;

    json bounds;
    OverlapBound ob = overlap_upper_bound(kernel, options.epsilon);
    json overlap;
    overlap["alpha"] = ob.alpha;
    overlap["t_upper"] = ob.t_upper ? json(*ob.t_upper) : json(nullptr);
    bounds["overlap"] = overlap;
    if (options.kind == KernelKind::all_logit) {
      RangeBound rb = general_upper_bound(game, beta, options.epsilon, limits);
      json range;
      range["delta_u"] = rb.delta_u;
      range["log_t_upper"] = rb.log_t_upper;
      range["t_upper"] = rb.t_upper ? json(*rb.t_upper) : json(nullptr);
      bounds["cumulative_range"] = range;
      DominantProfileBound dp = dominant_profile_bound(game, options.epsilon, limits);
      json dom;
      dom["profile"] = dp.profile ? state_json(space, *dp.profile) : json(nullptr);
      if (dp.profile) {
        dom["log_t_upper"] = dp.log_t_upper;
        dom["t_upper"] = dp.t_upper ? json(*dp.t_upper) : json(nullptr);
      }
      bounds["dominant_profile"] = dom;
    }
    bounds["bottleneck"] = bottleneck_json(kernel, pi, binary);
    r["bounds"] = bounds;
    results.push_back(r);
  }
  root["results"] = results;
  if (options.format == RunOptions::Format::csv) return csv;
  return dump(root);
}

std::string run_observables(const Game& game, const RunOptions& options) {
  validate_common(options);
  const Limits limits = limits_for(options);
  const auto* lig = dynamic_cast<const LocalInteractionGame*>(&game);
  if (!lig) {
    throw InputError("observable analysis needs an edge-structured game");
  }
  const ProfileSpace& space = game.space();
  space.require_within(limits.matrix_cap, "observable analysis");

  json root;
  root["command"] = "observables";
  root["game"] = game_json(game);

  BipartitionCertificate cert = bipartiting_weight(*lig, limits);
  json bip;
  bip["exact"] = cert.exact;
  bip["removed_weight"] = cert.removed_weight;
  bip["alpha"] = 2.0 * cert.removed_weight;
  json removed = json::array();
  for (const auto& [u, v] : cert.removed_edges) removed.push_back(json::array({u, v}));
  bip["removed_edges"] = removed;
  json left = json::array();
  for (int i = 0; i < space.players(); ++i) {
    if (cert.sides.in_left[std::size_t(i)]) left.push_back(i);
  }
  bip["left_players"] = left;
  root["bipartition"] = bip;

  std::vector<Observable> observables;
  if (is_binary(space)) {
    observables.push_back(diff_observable(space, limits));
    observables.push_back(monoc_observable(*lig, limits));
  }
  if (!options.observable_csv.empty()) {
    observables.push_back(parse_observable_csv(options.observable_csv, space, limits));
  }
  if (observables.empty()) {
    throw InputError(
        "no applicable observable: built-ins need binary strategies; supply a table");
  }

  json results = json::array();
  for (double beta : options.betas) {
    json r;
    r["beta"] = beta;
    json per_obs = json::array();
    for (const Observable& obs : observables) {
      InvarianceGap gap = invariance_gap(*lig, obs, beta, limits);
      json o;
      o["name"] = obs.name;
      o["one_logit_expectation"] = gap.one_logit_expectation;
      o["all_logit_expectation"] = gap.all_logit_expectation;
      o["alpha"] = gap.alpha;
      o["decomposition_defect"] = gap.observable_defect;
      switch (gap.status) {
        case InvarianceGap::Status::equal_pass: o["status"] = "equal_pass"; break;
        case InvarianceGap::Status::equal_fail: o["status"] = "equal_fail"; break;
        case InvarianceGap::Status::sandwich_pass: o["status"] = "sandwich_pass"; break;
        case InvarianceGap::Status::sandwich_fail: o["status"] = "sandwich_fail"; break;
        case InvarianceGap::Status::not_applicable: o["status"] = "not_applicable"; break;
      }
      per_obs.push_back(o);
    }
    r["observables"] = per_obs;
    results.push_back(r);
  }
  root["results"] = results;
  return dump(root);
}

std::string run_simulate(const Game& game, const RunOptions& options) {
  validate_common(options);
  if (options.steps < 1) throw InputError("steps must be at least 1");
  const Limits limits = limits_for(options);
  const ProfileSpace& space = game.space();
  const auto* lig = dynamic_cast<const LocalInteractionGame*>(&game);
  const bool binary = is_binary(space);
  const bool track_occupancy =
      space.enumerable() && space.count() <= limits.matrix_cap;
  const bool k_symmetric =
      track_occupancy ? k_symmetry_passes(game, limits) : false;

  json root;
  root["command"] = "simulate";
  root["game"] = game_json(game);
  root["kernel"] = kind_name(options.kind);
  root["steps"] = options.steps;
  root["seed"] = options.seed;

  json results = json::array();
  for (std::size_t bi = 0; bi < options.betas.size(); ++bi) {
    const double beta = options.betas[bi];
    json r;
    r["beta"] = beta;

    SplitRng rng(options.seed, std::uint64_t(bi));
    Profile x(std::size_t(space.players()), 0);
    const std::uint64_t burn_in = options.steps / 10;
    r["burn_in"] = burn_in;

    std::vector<double> occupancy;
    if (track_occupancy) occupancy.assign(space.count(), 0.0);

    std::vector<double> diff_samples, monoc_samples;
    const std::uint64_t kept = options.steps - burn_in;
    if (binary) {
      diff_samples.reserve(kept);
      if (lig) monoc_samples.reserve(kept);
    }

    for (std::uint64_t t = 0; t < options.steps; ++t) {
      x = simulate_step(game, x, beta, options.kind, rng);
      if (t < burn_in) continue;
      if (track_occupancy) occupancy[space.encode(x)] += 1.0;
      if (binary) {
        diff_samples.push_back(double(profile_diff(x)));
        if (lig) monoc_samples.push_back(profile_monoc(*lig, x));
      }
    }
    r["final_profile"] = json(x);

    auto batch_stats = [&](const std::vector<double>& samples, const char* name) {
      json s;
      s["name"] = name;
      s["samples"] = samples.size();
      const double mean =
          std::accumulate(samples.begin(), samples.end(), 0.0) / double(samples.size());
      const std::size_t batches = std::min<std::size_t>(32, samples.size());
      const std::size_t batch_size = samples.size() / batches;
      std::vector<double> means(batches, 0.0);
      for (std::size_t b = 0; b < batches; ++b) {
        for (std::size_t i = 0; i < batch_size; ++i) {
          means[b] += samples[b * batch_size + i];
        }
        means[b] /= double(batch_size);
      }
      const double used_mean =
          std::accumulate(means.begin(), means.end(), 0.0) / double(batches);
      s["mean"] = mean;
      if (batches >= 8) {
        double var = 0.0;
        for (double m : means) var += (m - used_mean) * (m - used_mean);
        var /= double(batches - 1);
        s["half_width_95"] = 1.96 * std::sqrt(var / double(batches));
      } else {
        s["half_width_95"] = nullptr;
      }
      return s;
    };
    json obs = json::array();
    if (binary && !diff_samples.empty()) {
      obs.push_back(batch_stats(diff_samples, "diff"));
      if (lig) obs.push_back(batch_stats(monoc_samples, "monoc"));
    }
    r["observable_means"] = obs;

    if (track_occupancy && kept > 0) {
      for (double& c : occupancy) c /= double(kept);
      TransitionKernel kernel = options.kind == KernelKind::one_logit
                                    ? one_logit_kernel(game, beta, limits)
                                    : all_logit_kernel(game, beta, limits);
      std::string method;
      Distribution pi = reference_stationary(game, kernel, k_symmetric, limits, &method);
      json occ;
      occ["tv_to_stationary"] = total_variation(occupancy, pi.probs);
      occ["stationary_method"] = method;
      r["occupancy"] = occ;
    } else {
      r["occupancy"] = nullptr;
    }
    results.push_back(r);
  }
  root["results"] = results;
  return dump(root);
}

std::string run_curie_weiss(const std::vector<int>& player_counts,
                            const RunOptions& options) {
  validate_common(options);
  if (player_counts.empty()) throw InputError("at least one player count is required");
  const Limits limits = limits_for(options);

  json root;
  root["command"] = "curie_weiss";
  root["epsilon"] = options.epsilon;
  root["t_cap"] = options.t_cap;

  std::string csv =
      "n,beta,regime,log_lower,log_upper_general,log_upper_highbeta,highbeta_applicable,"
      "estimate,t_mix\n";
  json results = json::array();
  for (int n : player_counts) {
    for (double beta : options.betas) {
      CwBounds b = cw_bounds(n, beta);
      json r;
      r["n"] = n;
      r["beta"] = beta;
      json bounds;
      bounds["log_lower"] = b.log_lower;
      bounds["log_upper_general"] = b.log_upper_general;
      bounds["log_upper_highbeta"] =
          b.highbeta_applicable ? json(b.log_upper_highbeta) : json(nullptr);
      bounds["highbeta_applicable"] = b.highbeta_applicable;
      r["bounds"] = bounds;
      r["regime"] = b.regime;

      // Exact estimate: the full chain when it fits, else its spin-count
      // projection (exactly lumpable, so this is a lower bound on the full
      // chain's mixing time).
      json est;
      std::string est_kind = "none";
      std::optional<std::int64_t> t_mix;
      bool cap_exceeded = false;
      double tv_at_cap = 0.0;
      const bool full_fits = n < 63 && (std::uint64_t(1) << n) <= limits.mixing_cap;
      MixingOptions mo;
      mo.epsilon = options.epsilon;
      mo.t_cap = options.t_cap;
      if (full_fits) {
        est_kind = "full_chain";
        LocalInteractionGame game = curie_weiss_game(n, limits);
        TransitionKernel kernel = all_logit_kernel(game, beta, limits);
        Distribution pi = all_logit_stationary_closed_form(game, beta, limits);
        MixingResult mr = exact_mixing_time(kernel, pi, mo, limits);
        t_mix = mr.t_mix;
        cap_exceeded = mr.cap_exceeded;
        tv_at_cap = mr.tv_at_cap;
      } else if (std::uint64_t(n) + 1 <= limits.mixing_cap) {
        est_kind = "spin_count_chain";
        MagnetizationChain chain = cw_lumped_kernel(n, beta, limits);
        TransitionKernel kernel{std::move(chain.kernel), beta, KernelKind::all_logit};
        Distribution pi;
        {
          std::vector<double> probs = cw_lumped_stationary(n, beta);
          std::vector<double> logw(probs.size());
          for (std::size_t i = 0; i < probs.size(); ++i) logw[i] = std::log(probs[i]);
          pi = distribution_from_log_weights(std::move(logw));
        }
        MixingResult mr = exact_mixing_time(kernel, pi, mo, limits);
        t_mix = mr.t_mix;
        cap_exceeded = mr.cap_exceeded;
        tv_at_cap = mr.tv_at_cap;
      }
      est["kind"] = est_kind;
      est["t_mix"] = t_mix ? json(*t_mix) : json(nullptr);
      est["cap_exceeded"] = cap_exceeded;
      if (cap_exceeded) est["tv_at_cap"] = tv_at_cap;
      r["estimate"] = est;
      results.push_back(r);

      csv += std::to_string(n);
      csv += ',';
      csv += format_double(beta);
      csv += ',';
      csv += b.regime;
      csv += ',';
      csv += format_double(b.log_lower);
      csv += ',';
      csv += format_double(b.log_upper_general);
      csv += ',';
      csv += b.highbeta_applicable ? format_double(b.log_upper_highbeta) : "";
      csv += ',';
      csv += b.highbeta_applicable ? "1" : "0";
      csv += ',';
      csv += est_kind;
      csv += ',';
      csv += t_mix ? std::to_string(*t_mix) : "";
      csv += '\n';
    }
  }
  root["results"] = results;
  if (options.format == RunOptions::Format::csv) return csv;
  return dump(root);
}

std::string kernel_csv(const Game& game, double beta, KernelKind kind,
                       const RunOptions& options) {
  const Limits limits = limits_for(options);
  TransitionKernel kernel = kind == KernelKind::one_logit
                                ? one_logit_kernel(game, beta, limits)
                                : all_logit_kernel(game, beta, limits);
  std::string out = "# transition kernel kind=";
  out += kind_name(kind);
  out += " beta=";
  out += format_double(beta);
  out += " states=";
  out += std::to_string(kernel.p.rows);
  out += '\n';
  for (std::size_t r = 0; r < kernel.p.rows; ++r) {
    for (std::size_t c = 0; c < kernel.p.cols; ++c) {
      if (c) out += ',';
      out += format_double(kernel.p(r, c));
    }
    out += '\n';
  }
  return out;
}

}  // namespace logitlab
