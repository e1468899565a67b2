#include <charconv>
#include <thread>

#include "genherm/app.hpp"

#ifndef GENHERM_VERSION
#define GENHERM_VERSION "0.0.0"
#endif

namespace genherm::app {

namespace {

int parse_positive_int(std::string_view text, const char* what) {
  int v = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || end != text.data() + text.size()) {
    throw UsageError(std::string(what) + ": not an integer: '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

const char* version() { return GENHERM_VERSION; }

const char* to_string(Format f) {
  switch (f) {
    case Format::json:
      return "json";
    case Format::csv:
      return "csv";
    case Format::human:
      return "human";
  }
  return "human";
}

Format parse_format(std::string_view text) {
  if (text == "json") return Format::json;
  if (text == "csv") return Format::csv;
  if (text == "human") return Format::human;
  throw UsageError("unknown format '" + std::string(text) + "' (json, csv, human)");
}

std::vector<Rational> default_mu_grid() {
  return {Rational(-1, 4), Rational(0), Rational(1, 3), Rational(1, 2), Rational(1), Rational(7, 2)};
}

RunConfig default_config() {
  RunConfig c;
  c.mu_list = default_mu_grid();
  c.parallelism = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  return c;
}

std::vector<Rational> parse_mu_list(std::string_view text) {
  std::vector<Rational> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item = text.substr(start, comma == std::string_view::npos ? comma : comma - start);
    Rational mu;
    try {
      mu = Rational::parse(item);
    } catch (const std::exception& e) {
      throw UsageError(std::string("--mu: ") + e.what());
    }
    if (mu <= Rational(-1, 2)) throw UsageError("--mu: " + mu.str() + " is not above -1/2");
    out.push_back(mu);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

void apply_environment(RunConfig& config, const EnvLookup& lookup) {
  if (const char* p = lookup("GENHERM_PRECISION"); p && *p) config.quad_precision_bits = parse_positive_int(p, "GENHERM_PRECISION");
  if (const char* j = lookup("GENHERM_JOBS"); j && *j) config.parallelism = parse_positive_int(j, "GENHERM_JOBS");
}

void validate(const RunConfig& config) {
  if (config.n_max < 0) throw UsageError("--nmax must be >= 0");
  if (config.mu_list.empty()) throw UsageError("--mu: empty list");
  for (const auto& mu : config.mu_list) {
    if (mu <= Rational(-1, 2)) throw UsageError("--mu: " + mu.str() + " is not above -1/2");
  }
  if (config.series_order < 0) throw UsageError("--order must be >= 0");
  if (config.root_digits < 1) throw UsageError("--digits must be >= 1");
  if (config.quad_precision_bits < 128) throw UsageError("--precision must be >= 128 bits");
  if (config.parallelism < 1) throw UsageError("--jobs must be >= 1");
}

}  // namespace genherm::app
