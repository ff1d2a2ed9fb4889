// Command-line driver. All analysis happens behind the C API; this file
// only parses arguments, builds the game handle, and writes the report.

#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "logitlab/capi.h"

namespace {

struct Args {
  std::string game_path;
  std::string potential_path;
  int complete_coordination = 0;
  std::vector<double> betas;
  double epsilon = 0.25;
  std::uint64_t seed = 1;
  std::uint64_t steps = 100'000;
  std::string kernel = "all";
  std::int64_t t_cap = std::int64_t(1) << 40;
  std::uint64_t cap_states = 0;
  std::string observable_path;
  std::string format = "json";
  std::string out_path;
  std::vector<int> players;  // curie-weiss only
};

void add_game_source(CLI::App* cmd, Args& args) {
  auto* game = cmd->add_option("--game", args.game_path,
                               "edge-structured game spec (JSON file)");
  game->check(CLI::ExistingFile);
  auto* pot = cmd->add_option("--potential-table", args.potential_path,
                              "raw potential table (JSON file)");
  pot->check(CLI::ExistingFile);
  auto* cc = cmd->add_option(
      "--complete-coordination", args.complete_coordination,
      "built-in benchmark: n players, complete graph, unit coordination edges");
  cc->check(CLI::PositiveNumber);
  game->excludes(pot)->excludes(cc);
  pot->excludes(cc);
}

void add_common(CLI::App* cmd, Args& args) {
  cmd->add_option("--beta", args.betas, "inverse temperature (repeatable)");
  cmd->add_option("--epsilon", args.epsilon, "mixing threshold in (0, 1)");
  cmd->add_option("--t-cap", args.t_cap, "mixing-time search cap");
  cmd->add_option("--cap-states", args.cap_states,
                  "override the state-count budgets");
  cmd->add_option("--format", args.format, "json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--out", args.out_path, "write the report here (default stdout)");
}

int fail_with(lg_status status) {
  std::cerr << "error: " << lg_last_error() << "\n";
  return int(status);
}

int emit(const Args& args, char* text) {
  if (args.out_path.empty()) {
    std::fwrite(text, 1, std::strlen(text), stdout);
  } else {
    std::ofstream out(args.out_path, std::ios::binary);
    if (!out) {
      lg_string_free(text);
      std::cerr << "error: cannot write " << args.out_path << "\n";
      return int(LG_INPUT_ERROR);
    }
    out << text;
  }
  lg_string_free(text);
  return 0;
}

lg_status build_game(const Args& args, lg_game** game) {
  if (!args.game_path.empty()) return lg_game_from_spec_file(args.game_path.c_str(), game);
  if (!args.potential_path.empty()) {
    return lg_game_from_potential_file(args.potential_path.c_str(), game);
  }
  if (args.complete_coordination > 0) {
    return lg_game_complete_coordination(args.complete_coordination, game);
  }
  return LG_INPUT_ERROR;
}

lg_options build_options(const Args& args) {
  lg_options options;
  lg_options_init(&options);
  if (!args.betas.empty()) {
    options.betas = args.betas.data();
    options.beta_count = args.betas.size();
  }
  options.epsilon = args.epsilon;
  options.seed = args.seed;
  options.steps = args.steps;
  options.kind = args.kernel == "one" ? LG_ONE_LOGIT : LG_ALL_LOGIT;
  options.t_cap = args.t_cap;
  options.cap_states = args.cap_states;
  options.format = args.format == "csv" ? LG_FORMAT_CSV : LG_FORMAT_JSON;
  if (!args.observable_path.empty()) {
    options.observable_csv = args.observable_path.c_str();
  }
  return options;
}

using Command = lg_status (*)(const lg_game*, const lg_options*, char**);

int run_game_command(const Args& args, Command command) {
  if (args.game_path.empty() && args.potential_path.empty() &&
      args.complete_coordination == 0) {
    std::cerr << "error: one of --game, --potential-table, "
                 "--complete-coordination is required\n";
    return int(LG_INPUT_ERROR);
  }
  lg_game* game = nullptr;
  lg_status status = build_game(args, &game);
  if (status != LG_OK) return fail_with(status);
  lg_options options = build_options(args);
  char* text = nullptr;
  status = command(game, &options, &text);
  lg_game_free(game);
  if (status != LG_OK) return fail_with(status);
  return emit(args, text);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact analysis of logit revision dynamics on finite games"};
  app.require_subcommand(1);
  Args args;

  auto* analyze = app.add_subcommand(
      "analyze", "reversibility certificate, exactness and decomposition checks");
  auto* stationary = app.add_subcommand(
      "stationary", "stationary distributions and normalizing constants");
  auto* mixing =
      app.add_subcommand("mixing", "exact mixing time, TV curve, and bounds");
  auto* observables = app.add_subcommand(
      "observables", "stationary expectations under both revision disciplines");
  auto* simulate =
      app.add_subcommand("simulate", "Monte Carlo trajectory with occupancy check");
  auto* kernel = app.add_subcommand("kernel", "dense transition matrix as CSV");
  auto* curie = app.add_subcommand(
      "curie-weiss", "mean-field benchmark: bounds, regimes, exact estimates");

  for (CLI::App* cmd : {analyze, stationary, mixing, observables, simulate, kernel}) {
    add_game_source(cmd, args);
    add_common(cmd, args);
  }
  add_common(curie, args);
  curie->add_option("--players", args.players, "player counts (repeatable)")
      ->required();
  for (CLI::App* cmd : {mixing, simulate, kernel}) {
    cmd->add_option("--kernel", args.kernel, "one or all (default all)")
        ->check(CLI::IsMember({"one", "all"}));
  }
  simulate->add_option("--steps", args.steps, "trajectory length");
  simulate->add_option("--seed", args.seed, "generator seed");
  observables->add_option("--observable", args.observable_path,
                          "extra observable table (CSV: index,value)")
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return int(LG_INPUT_ERROR);
  }

  if (analyze->parsed()) return run_game_command(args, lg_cmd_analyze);
  if (stationary->parsed()) return run_game_command(args, lg_cmd_stationary);
  if (mixing->parsed()) return run_game_command(args, lg_cmd_mixing);
  if (observables->parsed()) return run_game_command(args, lg_cmd_observables);
  if (simulate->parsed()) return run_game_command(args, lg_cmd_simulate);
  if (kernel->parsed()) return run_game_command(args, lg_cmd_kernel);
  if (curie->parsed()) {
    lg_options options = build_options(args);
    char* text = nullptr;
    lg_status status =
        lg_cmd_curie_weiss(args.players.data(), args.players.size(), &options, &text);
    if (status != LG_OK) return fail_with(status);
    return emit(args, text);
  }
  return int(LG_INPUT_ERROR);
}
