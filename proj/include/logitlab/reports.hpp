#ifndef LOGITLAB_REPORTS_HPP
#define LOGITLAB_REPORTS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "logitlab/dynamics.hpp"
#include "logitlab/game.hpp"

namespace logitlab {

// Options shared by the report-producing commands. Every run with the same
// options and inputs produces byte-identical output: numbers are printed
// with 17 significant digits, object keys are sorted, and nothing
// environment-dependent (time, paths, addresses) enters a report.
struct RunOptions {
  std::vector<double> betas = {1.0};
  double epsilon = 0.25;
  std::uint64_t seed = 1;
  std::uint64_t steps = 100'000;             // simulate only
  KernelKind kind = KernelKind::all_logit;   // simulate / mixing kernel choice
  std::int64_t t_cap = std::int64_t(1) << 40;
  std::uint64_t cap_states = 0;              // 0 keeps the default caps
  enum class Format { json, csv } format = Format::json;
  std::string observable_csv;                // optional extra observable table
};

Limits limits_for(const RunOptions& options);

// Each command renders one self-contained document (JSON, or CSV where a
// tabular form exists). All throw InputError / CapExceeded / InternalError
// per the shared status contract.
std::string run_analyze(const Game& game, const RunOptions& options);
std::string run_stationary(const Game& game, const RunOptions& options);
std::string run_mixing(const Game& game, const RunOptions& options);
std::string run_observables(const Game& game, const RunOptions& options);
std::string run_simulate(const Game& game, const RunOptions& options);
std::string run_curie_weiss(const std::vector<int>& player_counts,
                            const RunOptions& options);

// Dense kernel as CSV: a comment header carrying beta/kind/state count,
// then one row per state.
std::string kernel_csv(const Game& game, double beta, KernelKind kind,
                       const RunOptions& options);

// Shortest text that round-trips the double through 17 significant digits.
std::string format_double(double v);

}  // namespace logitlab

#endif  // LOGITLAB_REPORTS_HPP
