#include "logitlab/capi.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>
#include <vector>

#include "logitlab/curie_weiss.hpp"
#include "logitlab/errors.hpp"
#include "logitlab/game.hpp"
#include "logitlab/game_json.hpp"
#include "logitlab/reports.hpp"

using namespace logitlab;

struct lg_game {
  std::unique_ptr<Game> game;
};

namespace {

thread_local std::string t_last_error;

lg_status fail(const std::exception& e) {
  t_last_error = e.what();
  return lg_status(int(status_of(e)));
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

RunOptions convert(const lg_options* o) {
  RunOptions r;
  if (!o) return r;
  if (o->betas && o->beta_count > 0) {
    r.betas.assign(o->betas, o->betas + o->beta_count);
  }
  r.epsilon = o->epsilon;
  r.seed = o->seed;
  r.steps = o->steps;
  r.kind = o->kind == LG_ONE_LOGIT ? KernelKind::one_logit : KernelKind::all_logit;
  r.t_cap = o->t_cap;
  r.cap_states = o->cap_states;
  r.format = o->format == LG_FORMAT_CSV ? RunOptions::Format::csv
                                        : RunOptions::Format::json;
  if (o->observable_csv) r.observable_csv = o->observable_csv;
  return r;
}

template <typename F>
lg_status run_command(const lg_game* game, char** out, F&& body) {
  if (!out) return LG_INPUT_ERROR;
  *out = nullptr;
  try {
    if (!game || !game->game) throw InputError("null game handle");
    *out = copy_out(body(*game->game));
    return LG_OK;
  } catch (const std::exception& e) {
    return fail(e);
  }
}

template <typename F>
lg_status make_game(lg_game** out, F&& body) {
  if (!out) return LG_INPUT_ERROR;
  *out = nullptr;
  try {
    *out = new lg_game{body()};
    return LG_OK;
  } catch (const std::exception& e) {
    return fail(e);
  }
}

}  // namespace

extern "C" {

void lg_options_init(lg_options* options) {
  if (!options) return;
  options->betas = nullptr;
  options->beta_count = 0;
  options->epsilon = 0.25;
  options->seed = 1;
  options->steps = 100'000;
  options->kind = LG_ALL_LOGIT;
  options->t_cap = int64_t(1) << 40;
  options->cap_states = 0;
  options->format = LG_FORMAT_JSON;
  options->observable_csv = nullptr;
}

lg_status lg_game_from_spec_json(const char* text, lg_game** out) {
  return make_game(out, [&]() -> std::unique_ptr<Game> {
    if (!text) throw InputError("null game text");
    return game_from_spec_json(text);
  });
}

lg_status lg_game_from_spec_file(const char* path, lg_game** out) {
  return make_game(out, [&]() -> std::unique_ptr<Game> {
    if (!path) throw InputError("null path");
    return game_from_spec_json(read_text_file(path));
  });
}

lg_status lg_game_from_potential_json(const char* text, lg_game** out) {
  return make_game(out, [&]() -> std::unique_ptr<Game> {
    if (!text) throw InputError("null game text");
    return game_from_potential_json(text);
  });
}

lg_status lg_game_from_potential_file(const char* path, lg_game** out) {
  return make_game(out, [&]() -> std::unique_ptr<Game> {
    if (!path) throw InputError("null path");
    return game_from_potential_json(read_text_file(path));
  });
}

lg_status lg_game_complete_coordination(int players, lg_game** out) {
  return make_game(out, [&]() -> std::unique_ptr<Game> {
    return std::make_unique<LocalInteractionGame>(curie_weiss_game(players));
  });
}

void lg_game_free(lg_game* game) { delete game; }

lg_status lg_cmd_analyze(const lg_game* game, const lg_options* options, char** out) {
  return run_command(game, out,
                     [&](const Game& g) { return run_analyze(g, convert(options)); });
}

lg_status lg_cmd_stationary(const lg_game* game, const lg_options* options, char** out) {
  return run_command(game, out,
                     [&](const Game& g) { return run_stationary(g, convert(options)); });
}

lg_status lg_cmd_mixing(const lg_game* game, const lg_options* options, char** out) {
  return run_command(game, out,
                     [&](const Game& g) { return run_mixing(g, convert(options)); });
}

lg_status lg_cmd_observables(const lg_game* game, const lg_options* options, char** out) {
  return run_command(game, out, [&](const Game& g) {
    return run_observables(g, convert(options));
  });
}

lg_status lg_cmd_simulate(const lg_game* game, const lg_options* options, char** out) {
  return run_command(game, out,
                     [&](const Game& g) { return run_simulate(g, convert(options)); });
}

lg_status lg_cmd_kernel(const lg_game* game, const lg_options* options, char** out) {
  return run_command(game, out, [&](const Game& g) {
    RunOptions r = convert(options);
    if (r.betas.empty()) throw InputError("at least one beta is required");
    return kernel_csv(g, r.betas.front(), r.kind, r);
  });
}

lg_status lg_cmd_curie_weiss(const int* player_counts, size_t count,
                             const lg_options* options, char** out) {
  if (!out) return LG_INPUT_ERROR;
  *out = nullptr;
  try {
    if (!player_counts || count == 0) {
      throw InputError("at least one player count is required");
    }
    std::vector<int> ns(player_counts, player_counts + count);
    *out = copy_out(run_curie_weiss(ns, convert(options)));
    return LG_OK;
  } catch (const std::exception& e) {
    return fail(e);
  }
}

const char* lg_last_error(void) { return t_last_error.c_str(); }

void lg_string_free(char* s) { std::free(s); }

}  // extern "C"
