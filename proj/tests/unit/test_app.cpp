#include <doctest.h>

#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

#include "genherm/app.hpp"
#include "genherm/pool.hpp"

using namespace genherm;
using namespace genherm::app;

TEST_CASE("mu lists parse as exact rationals above -1/2") {
  const auto mus = parse_mu_list("0,1/3,-1/4,7/2");
  REQUIRE(mus.size() == 4);
  CHECK(mus[1] == Rational(1, 3));
  CHECK(mus[2] == Rational(-1, 4));
  CHECK_THROWS_AS(parse_mu_list("0.5"), UsageError);
  CHECK_THROWS_AS(parse_mu_list("-1/2"), UsageError);
  CHECK_THROWS_AS(parse_mu_list("-3/4"), UsageError);
  CHECK_THROWS_AS(parse_mu_list("1/3,"), UsageError);
  CHECK_THROWS_AS(parse_mu_list(""), UsageError);
  CHECK_THROWS_AS(parse_mu_list("1/0"), UsageError);
}

TEST_CASE("defaults") {
  const RunConfig c = default_config();
  CHECK(c.n_max == 24);
  CHECK(c.series_order == 12);
  CHECK(c.mu_list == default_mu_grid());
  CHECK(c.mu_list.size() == 6);
  CHECK(c.parallelism >= 1);
  CHECK_NOTHROW(validate(c));
}

TEST_CASE("environment overrides precision and jobs") {
  RunConfig c = default_config();
  std::map<std::string, const char*> env{{"GENHERM_PRECISION", "320"}, {"GENHERM_JOBS", "3"}};
  auto lookup = [&](const char* k) -> const char* {
    const auto it = env.find(k);
    return it == env.end() ? nullptr : it->second;
  };
  apply_environment(c, lookup);
  CHECK(c.quad_precision_bits == 320);
  CHECK(c.parallelism == 3);

  env["GENHERM_JOBS"] = "3x";
  CHECK_THROWS_AS(apply_environment(c, lookup), UsageError);
  env["GENHERM_JOBS"] = "";
  RunConfig d = default_config();
  const int before = d.parallelism;
  env["GENHERM_PRECISION"] = "";
  apply_environment(d, lookup);
  CHECK(d.parallelism == before);
}

TEST_CASE("validation rejects out-of-range fields") {
  RunConfig c = default_config();
  c.root_digits = 0;
  CHECK_THROWS_AS(validate(c), UsageError);
  c = default_config();
  c.n_max = -1;
  CHECK_THROWS_AS(validate(c), UsageError);
  c = default_config();
  c.quad_precision_bits = 64;
  CHECK_THROWS_AS(validate(c), UsageError);
  c = default_config();
  c.parallelism = 0;
  CHECK_THROWS_AS(validate(c), UsageError);
  CHECK(parse_format("csv") == Format::csv);
  CHECK_THROWS_AS(parse_format("xml"), UsageError);
}

TEST_CASE("pool results keep task order") {
  for (int jobs : {1, 2, 8}) {
    const auto out = parallel_map(100, jobs, [](std::size_t i) { return static_cast<int>(i * i); });
    REQUIRE(out.size() == 100);
    for (std::size_t i = 0; i < out.size(); ++i) CHECK(out[i] == static_cast<int>(i * i));
  }
  CHECK(parallel_map(0, 4, [](std::size_t i) { return i; }).empty());
}

TEST_CASE("pool rethrows the first failing task") {
  auto task = [](std::size_t i) -> int {
    if (i == 7) throw std::runtime_error("seven");
    if (i == 9) throw std::logic_error("nine");
    return 0;
  };
  for (int jobs : {1, 4}) {
    try {
      parallel_map(20, jobs, task);
      FAIL("no exception");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()) == "seven");
    }
  }
}

TEST_CASE("transform rendering") {
  RunConfig c = default_config();
  std::ostringstream os;
  CHECK(cmd_transform(0, Rational(0), c, os) == exit_ok);
  CHECK(os.str().find("2^{s/2-1}·Γ(s/2)·[1]") != std::string::npos);
  os.str("");
  CHECK(cmd_transform(2, Rational(1, 3), c, os) == exit_ok);
  CHECK(os.str().find("(3/5)(1 - 2s)") != std::string::npos);
  os.str("");
  CHECK(cmd_transform(4, Rational(0), c, os) == exit_ok);
  CHECK(os.str().find("4/3*s^2 - 4/3*s + 1") != std::string::npos);
  CHECK_THROWS_AS(cmd_transform(-1, Rational(0), c, os), UsageError);
}

TEST_CASE("zeros exit code and csv") {
  RunConfig c = default_config();
  c.output_format = Format::csv;
  c.root_digits = 8;
  std::ostringstream os;
  CHECK(cmd_zeros(4, Rational(0), c, os) == exit_ok);
  CHECK(os.str() == "n,mu,t,digits\n4,0,-0.70710678,8\n4,0,0.70710678,8\n");
}

TEST_CASE("table is independent of the worker count") {
  RunConfig c = default_config();
  c.n_max = 16;
  c.output_format = Format::csv;
  c.parallelism = 1;
  const TableResult serial = render_table(c);
  c.parallelism = 6;
  const TableResult threaded = render_table(c);
  CHECK(serial.all_certified);
  CHECK(serial.text == threaded.text);
  c.output_format = Format::json;
  const std::string json1 = render_table(c).text;
  c.parallelism = 1;
  CHECK(render_table(c).text == json1);
}

TEST_CASE("table write failure is an I/O error") {
  RunConfig c = default_config();
  c.n_max = 2;
  c.output_format = Format::csv;
  std::ostringstream os;
  CHECK_THROWS_AS(cmd_table(c, "/nonexistent-dir/out.csv", os), IoError);
  CHECK(cmd_table(c, "-", os) == exit_ok);
  CHECK(os.str().rfind("n,mu,t,digits\n", 0) == 0);
}

TEST_CASE("verify on a trivial grid") {
  RunConfig c = default_config();
  c.n_max = 0;
  c.output_format = Format::json;
  std::ostringstream os;
  CHECK(cmd_verify("mellin", c, os) == exit_ok);
  CHECK(os.str().find("\"failed\": 0") != std::string::npos);
  CHECK_THROWS_AS(cmd_verify("everything", c, os), UsageError);
}
