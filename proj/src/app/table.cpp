#include <fstream>
#include <sstream>

#include "genherm/app.hpp"
#include "genherm/critline.hpp"
#include "genherm/oracle.hpp"
#include "genherm/pool.hpp"
#include "render.hpp"

namespace genherm::app {

namespace {

struct Cell {
  int n = 0;
  Rational mu;
  bool certified = false;
  std::vector<std::string> t;
};

}  // namespace

TableResult render_table(const RunConfig& config) {
  if (config.output_format == Format::human) throw UsageError("table supports --format csv or json");
  const std::size_t per_n = config.mu_list.size();
  const std::size_t count = static_cast<std::size_t>(config.n_max + 1) * per_n;
  const std::vector<Cell> cells = parallel_map(count, config.parallelism, [&](std::size_t i) {
    Cell c;
    c.n = static_cast<int>(i / per_n);
    c.mu = config.mu_list[i % per_n];
    const CriticalLineCertificate cert = certify(c.n, c.mu);
    c.certified = cert.all_on_line;
    if (cert.squarefree) c.t = decimal_roots(cert, config.root_digits);
    return c;
  });

  TableResult result;
  std::ostringstream os;
  if (config.output_format == Format::csv) {
    os << "n,mu,t,digits\n";
    for (const auto& c : cells) {
      result.all_certified = result.all_certified && c.certified;
      for (const auto& t : c.t) os << c.n << "," << csv_field(c.mu.str()) << "," << t << "," << config.root_digits << "\n";
    }
  } else {
    Json j;
    j["tool"] = "genherm";
    j["version"] = version();
    j["n_max"] = config.n_max;
    Json mus = Json::array();
    for (const auto& mu : config.mu_list) mus.push_back(mu.str());
    j["mu"] = mus;
    j["digits"] = config.root_digits;
    j["columns"] = {"n", "mu", "t", "digits"};
    Json rows = Json::array();
    Json uncertified = Json::array();
    for (const auto& c : cells) {
      result.all_certified = result.all_certified && c.certified;
      if (!c.certified) uncertified.push_back({{"n", c.n}, {"mu", c.mu.str()}});
      for (const auto& t : c.t) rows.push_back({{"n", c.n}, {"mu", c.mu.str()}, {"t", t}, {"digits", config.root_digits}});
    }
    j["rows"] = rows;
    j["uncertified"] = uncertified;
    os << j.dump(2) << "\n";
  }
  result.text = os.str();
  return result;
}

int cmd_table(const RunConfig& config, const std::string& out_path, std::ostream& out) {
  const TableResult table = render_table(config);
  if (out_path.empty() || out_path == "-") {
    out << table.text;
  } else {
    std::ofstream file(out_path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + out_path + "' for writing");
    file << table.text;
    file.close();
    if (!file) throw IoError("write to '" + out_path + "' failed");
  }
  return table.all_certified ? exit_ok : exit_verification;
}

}  // namespace genherm::app
