#include <chrono>
#include <functional>
#include <map>

#include "genherm/app.hpp"
#include "genherm/critline.hpp"
#include "genherm/mellin.hpp"
#include "genherm/oracle.hpp"
#include "genherm/orthopoly.hpp"
#include "genherm/pool.hpp"
#include "render.hpp"

namespace genherm::app {

namespace {

struct Task {
  std::string suite;
  std::function<Report()> run;
};

void add_orthopoly(std::vector<Task>& tasks, const RunConfig& c) {
  for (const auto& mu : c.mu_list) {
    const std::vector<Rational> one{mu};
    tasks.push_back({"orthopoly", [=] { return construction_check(c.n_max, one); }});
    tasks.push_back({"orthopoly", [=] { return f20_form_check(c.n_max, one); }});
    tasks.push_back({"orthopoly", [=] { return genfun_check(mu, c.series_order); }});
    tasks.push_back({"orthopoly", [=] { return orthogonality_check(c.n_max, one); }});
  }
  // convolution identities pair parameters across the grid
  tasks.push_back({"orthopoly", [=] { return identity_suite(c.mu_list, c.n_max, c.series_order); }});
}

void add_mellin(std::vector<Task>& tasks, const RunConfig& c) {
  const int half = c.n_max / 2;
  for (const auto& mu : c.mu_list) {
    const std::vector<Rational> one{mu};
    tasks.push_back({"mellin", [=] { return functional_equation_suite(c.n_max, one); }});
    tasks.push_back({"mellin", [=] { return recursion_check(c.n_max, mu); }});
    tasks.push_back({"mellin", [=] { return genfn_transform_check(mu, c.series_order); }});
    tasks.push_back({"mellin", [=] { return reciprocity_check(half, half, mu); }});
    tasks.push_back({"mellin", [=] {
                       Report r("mellin.difference_equation");
                       for (int m = 0; m <= c.n_max; ++m) r.append(difference_equation_check(m, mu));
                       return r;
                     }});
    tasks.push_back({"mellin", [=] { return pfaff_half_check(half, mu); }});
    tasks.push_back({"mellin", [=] { return hermite_reduction_check(c.n_max, one); }});
  }
}

void add_critline(std::vector<Task>& tasks, const RunConfig& c) {
  for (const auto& mu : c.mu_list) {
    const std::vector<Rational> one{mu};
    tasks.push_back({"critline", [=] { return certify_suite(c.n_max, one); }});
    tasks.push_back({"critline", [=] { return interlacing_suite(c.n_max / 2 - 1, one); }});
    tasks.push_back({"critline", [=] { return meixner_pollaczek_suite(c.n_max / 2, one); }});
  }
}

void add_oracle(std::vector<Task>& tasks, const RunConfig& c) {
  for (const auto& mu : c.mu_list) {
    const std::vector<Rational> one{mu};
    tasks.push_back({"oracle", [=] {
                       return quadrature_suite(std::min(c.n_max, 8), one, static_cast<mpfr_prec_t>(c.quad_precision_bits));
                     }});
  }
}

struct Counts {
  int checks = 0;
  int passed = 0;
  int failed = 0;
  int skipped = 0;

  void add(const Report& r) {
    checks += static_cast<int>(r.records().size());
    passed += r.count(Outcome::pass);
    failed += r.count(Outcome::fail);
    skipped += r.count(Outcome::skipped);
  }
  Json json() const { return {{"checks", checks}, {"passed", passed}, {"failed", failed}, {"skipped", skipped}}; }
};

}  // namespace

int cmd_verify(const std::string& suite, const RunConfig& config, std::ostream& out) {
  std::vector<Task> tasks;
  if (suite == "orthopoly" || suite == "all") add_orthopoly(tasks, config);
  if (suite == "mellin" || suite == "all") add_mellin(tasks, config);
  if (suite == "critline" || suite == "all") add_critline(tasks, config);
  if (suite == "oracle") add_oracle(tasks, config);
  if (tasks.empty()) throw UsageError("unknown suite '" + suite + "' (orthopoly, mellin, critline, oracle, all)");

  const auto start = std::chrono::steady_clock::now();
  const std::vector<Report> reports =
      parallel_map(tasks.size(), config.parallelism, [&](std::size_t i) { return tasks[i].run(); });
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  // groups in first-seen order
  std::vector<std::string> group_order;
  std::map<std::string, Counts> groups;
  Counts total;
  for (const auto& r : reports) {
    if (!groups.count(r.suite())) group_order.push_back(r.suite());
    groups[r.suite()].add(r);
    total.add(r);
  }

  switch (config.output_format) {
    case Format::json: {
      Json j;
      j["tool"] = "genherm";
      j["version"] = version();
      j["suite"] = suite;
      Json mus = Json::array();
      for (const auto& mu : config.mu_list) mus.push_back(mu.str());
      j["config"] = {{"n_max", config.n_max},
                     {"mu", mus},
                     {"series_order", config.series_order},
                     {"root_digits", config.root_digits},
                     {"precision_bits", config.quad_precision_bits},
                     {"jobs", config.parallelism}};
      j["summary"] = total.json();
      j["wall_clock_seconds"] = seconds;
      Json gs = Json::array();
      for (const auto& g : group_order) {
        Json e = groups[g].json();
        e["name"] = g;
        gs.push_back(e);
      }
      j["groups"] = gs;
      Json recs = Json::array();
      for (const auto& r : reports) {
        for (const auto& rec : r.records()) {
          recs.push_back({{"group", r.suite()},
                          {"id", rec.id},
                          {"params", rec.params},
                          {"outcome", to_string(rec.outcome)},
                          {"witness", rec.witness}});
        }
      }
      j["records"] = recs;
      out << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      out << "group,id,params,outcome,witness\n";
      for (const auto& r : reports) {
        for (const auto& rec : r.records()) {
          out << csv_field(r.suite()) << "," << csv_field(rec.id) << "," << csv_field(rec.params) << ","
              << to_string(rec.outcome) << "," << csv_field(rec.witness) << "\n";
        }
      }
      break;
    case Format::human:
      out << "genherm " << version() << " verify --suite " << suite << " (n_max " << config.n_max << ", "
          << config.mu_list.size() << " mu values, " << config.parallelism << " jobs)\n";
      for (const auto& g : group_order) {
        const Counts& c = groups[g];
        out << "  " << (c.failed ? "FAIL " : "ok   ") << g << ": " << c.passed << "/" << c.checks << " passed";
        if (c.skipped) out << ", " << c.skipped << " skipped";
        out << "\n";
      }
      for (const auto& r : reports) {
        for (const auto& rec : r.records()) {
          if (rec.outcome == Outcome::fail) out << "  failed " << rec.id << " [" << rec.params << "]: " << rec.witness << "\n";
        }
      }
      out << total.checks << " checks, " << total.passed << " passed, " << total.failed << " failed, " << total.skipped
          << " skipped in " << seconds << " s\n";
      break;
  }
  return total.failed == 0 ? exit_ok : exit_verification;
}

}  // namespace genherm::app
