#ifndef LOGITLAB_CAPI_H
#define LOGITLAB_CAPI_H

/* C interface of the analysis library. Every entry point returns an
 * lg_status; results are handed back as heap-allocated UTF-8 strings
 * (JSON or CSV documents) that the caller releases with lg_string_free.
 * The last error message of the calling thread is available through
 * lg_last_error. No callbacks, no global state beyond that message. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define LG_API __declspec(dllexport)
#else
#define LG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lg_status {
  LG_OK = 0,
  LG_INPUT_ERROR = 2,    /* malformed input or invalid parameter */
  LG_CAP_EXCEEDED = 3,   /* problem size beyond the configured budget */
  LG_INTERNAL_ERROR = 4, /* internal consistency check failed */
} lg_status;

typedef enum lg_kernel_kind {
  LG_ONE_LOGIT = 0,
  LG_ALL_LOGIT = 1,
} lg_kernel_kind;

typedef enum lg_format {
  LG_FORMAT_JSON = 0,
  LG_FORMAT_CSV = 1,
} lg_format;

/* Opaque game handle. */
typedef struct lg_game lg_game;

/* Options for the report-producing commands. Zero-initialize, then set the
 * fields you need; lg_options_init fills in the defaults. */
typedef struct lg_options {
  const double* betas; /* at least one */
  size_t beta_count;
  double epsilon;       /* mixing threshold, in (0, 1) */
  uint64_t seed;        /* simulation seed */
  uint64_t steps;       /* simulation length */
  int kind;             /* lg_kernel_kind */
  int64_t t_cap;        /* mixing-time search cap */
  uint64_t cap_states;  /* overrides the state-count budgets when > 0 */
  int format;           /* lg_format */
  const char* observable_csv; /* optional path to an extra observable table */
} lg_options;

LG_API void lg_options_init(lg_options* options);

/* Constructors. On success *out is a handle to release with lg_game_free. */
LG_API lg_status lg_game_from_spec_json(const char* text, lg_game** out);
LG_API lg_status lg_game_from_spec_file(const char* path, lg_game** out);
LG_API lg_status lg_game_from_potential_json(const char* text, lg_game** out);
LG_API lg_status lg_game_from_potential_file(const char* path, lg_game** out);
LG_API lg_status lg_game_complete_coordination(int players, lg_game** out);
LG_API void lg_game_free(lg_game* game);

/* Commands. *out receives a heap string (release with lg_string_free). */
LG_API lg_status lg_cmd_analyze(const lg_game* game, const lg_options* options,
                                char** out);
LG_API lg_status lg_cmd_stationary(const lg_game* game, const lg_options* options,
                                   char** out);
LG_API lg_status lg_cmd_mixing(const lg_game* game, const lg_options* options,
                               char** out);
LG_API lg_status lg_cmd_observables(const lg_game* game, const lg_options* options,
                                    char** out);
LG_API lg_status lg_cmd_simulate(const lg_game* game, const lg_options* options,
                                 char** out);
LG_API lg_status lg_cmd_kernel(const lg_game* game, const lg_options* options,
                               char** out);
LG_API lg_status lg_cmd_curie_weiss(const int* player_counts, size_t count,
                                    const lg_options* options, char** out);

/* Message describing the calling thread's most recent failure. Owned by the
 * library; valid until the thread's next failing call. */
LG_API const char* lg_last_error(void);

LG_API void lg_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* LOGITLAB_CAPI_H */
