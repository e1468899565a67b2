#pragma once

// Check records shared by every verification routine.

#include <string>
#include <vector>

namespace genherm {

enum class Outcome { pass, fail, skipped };

const char* to_string(Outcome o);

struct CheckRecord {
  std::string id;      // identity identifier, e.g. "recursion.odd"
  std::string params;  // e.g. "m=3 mu=1/3"
  Outcome outcome = Outcome::pass;
  std::string witness;  // exact rendering of the offending difference, or the skip reason
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  const std::string& suite() const { return suite_; }
  const std::vector<CheckRecord>& records() const { return records_; }

  void add(CheckRecord rec) { records_.push_back(std::move(rec)); }
  /// Records a pass, or a failure carrying `witness`.
  void check(std::string id, std::string params, bool ok, std::string witness = {});
  void skip(std::string id, std::string params, std::string reason);
  void append(const Report& other);

  int count(Outcome o) const;
  bool all_passed() const { return count(Outcome::fail) == 0; }

 private:
  std::string suite_;
  std::vector<CheckRecord> records_;
};

}  // namespace genherm
