#include <CLI11.hpp>

#include <iostream>
#include <optional>

#include "genherm/app.hpp"

namespace {

using genherm::Rational;
namespace app = genherm::app;

struct Flags {
  std::string mu;
  std::string format;
  std::string out;
  std::string suite = "all";
  int n = 0;
  std::optional<int> n_max;
  std::optional<int> order;
  std::optional<int> digits;
  std::optional<int> precision;
  std::optional<int> jobs;
};

app::RunConfig resolve(const Flags& f, app::Format default_format) {
  app::RunConfig c = app::default_config();
  app::apply_environment(c);
  if (!f.mu.empty()) c.mu_list = app::parse_mu_list(f.mu);
  if (f.n_max) c.n_max = *f.n_max;
  if (f.order) c.series_order = *f.order;
  if (f.digits) c.root_digits = *f.digits;
  if (f.precision) c.quad_precision_bits = *f.precision;
  if (f.jobs) c.parallelism = *f.jobs;
  c.output_format = f.format.empty() ? default_format : app::parse_format(f.format);
  app::validate(c);
  return c;
}

Rational single_mu(const app::RunConfig& c) {
  if (c.mu_list.size() != 1) throw app::UsageError("--mu takes exactly one value here");
  return c.mu_list.front();
}

void add_common(CLI::App* cmd, Flags& f) {
  cmd->add_option("--format", f.format, "json, csv or human");
  cmd->add_option("--digits", f.digits, "decimals for root values");
  cmd->add_option("--jobs", f.jobs, "worker threads (env GENHERM_JOBS)");
  cmd->add_option("--precision", f.precision, "oracle working precision in bits (env GENHERM_PRECISION)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Exact generalized Hermite polynomials, Mellin transforms and critical-line zeros"};
  cli.set_version_flag("--version", std::string("genherm ") + app::version());
  cli.require_subcommand(1);
  Flags f;

  auto* transform = cli.add_subcommand("transform", "closed-form Mellin transform and its polynomial factor");
  transform->add_option("--n", f.n, "index")->required();
  transform->add_option("--mu", f.mu, "parameter as an exact rational p/q")->required();
  add_common(transform, f);

  auto* zeros = cli.add_subcommand("zeros", "certified zeros of the polynomial factor on Re s = 1/2");
  zeros->add_option("--n", f.n, "index")->required();
  zeros->add_option("--mu", f.mu, "parameter as an exact rational p/q")->required();
  add_common(zeros, f);

  auto* verify = cli.add_subcommand("verify", "run identity and certification suites over a grid");
  verify->add_option("--suite", f.suite, "orthopoly, mellin, critline, oracle or all");
  verify->add_option("--nmax", f.n_max, "largest index");
  verify->add_option("--mu", f.mu, "comma-separated exact rationals");
  verify->add_option("--order", f.order, "series order for generating functions");
  add_common(verify, f);

  auto* table = cli.add_subcommand("table", "bulk zeros table over n <= nmax and the mu grid");
  table->add_option("--nmax", f.n_max, "largest index");
  table->add_option("--mu", f.mu, "comma-separated exact rationals");
  table->add_option("--out", f.out, "output file (stdout when omitted)");
  add_common(table, f);

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? 0 : app::exit_usage;
  }

  try {
    if (transform->parsed()) {
      const auto c = resolve(f, app::Format::human);
      return app::cmd_transform(f.n, single_mu(c), c, std::cout);
    }
    if (zeros->parsed()) {
      const auto c = resolve(f, app::Format::human);
      return app::cmd_zeros(f.n, single_mu(c), c, std::cout);
    }
    if (verify->parsed()) return app::cmd_verify(f.suite, resolve(f, app::Format::human), std::cout);
    if (table->parsed()) return app::cmd_table(resolve(f, app::Format::csv), f.out, std::cout);
  } catch (const app::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return app::exit_usage;
  } catch (const app::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return app::exit_io;
  }
  return app::exit_usage;
}
