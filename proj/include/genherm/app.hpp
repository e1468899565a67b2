#pragma once

// Command implementations behind the genherm executable. Each command writes
// to the given stream and returns the process exit code.

#include <cstdlib>
#include <functional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "genherm/rational.hpp"

namespace genherm::app {

inline constexpr int exit_ok = 0;
inline constexpr int exit_verification = 1;
inline constexpr int exit_usage = 2;
inline constexpr int exit_io = 3;

const char* version();

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Format { json, csv, human };

const char* to_string(Format f);
Format parse_format(std::string_view text);

struct RunConfig {
  int n_max = 24;
  std::vector<Rational> mu_list;
  int series_order = 12;
  int root_digits = 12;
  int quad_precision_bits = 192;
  int parallelism = 1;
  Format output_format = Format::human;
};

std::vector<Rational> default_mu_grid();
RunConfig default_config();

/// Comma-separated exact rationals, each > -1/2.
std::vector<Rational> parse_mu_list(std::string_view text);

/// GENHERM_PRECISION and GENHERM_JOBS replace the precision and worker defaults.
using EnvLookup = std::function<const char*(const char*)>;
void apply_environment(RunConfig& config, const EnvLookup& lookup = [](const char* k) { return std::getenv(k); });

/// Throws UsageError on any out-of-range field.
void validate(const RunConfig& config);

int cmd_transform(int n, const Rational& mu, const RunConfig& config, std::ostream& out);
int cmd_zeros(int n, const Rational& mu, const RunConfig& config, std::ostream& out);
/// suite: orthopoly, mellin, critline, oracle or all (the three exact suites).
int cmd_verify(const std::string& suite, const RunConfig& config, std::ostream& out);

struct TableResult {
  std::string text;
  bool all_certified = true;
};

/// Zeros of every index n <= n_max for every mu, one row per root, ordered by (n, mu).
TableResult render_table(const RunConfig& config);
/// Writes to out_path, or to `out` when the path is empty or "-".
int cmd_table(const RunConfig& config, const std::string& out_path, std::ostream& out);

}  // namespace genherm::app
