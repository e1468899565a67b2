#include "genherm/report.hpp"

#include <algorithm>

namespace genherm {

const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::pass:
      return "pass";
    case Outcome::fail:
      return "fail";
    case Outcome::skipped:
      return "skipped";
  }
  return "unknown";
}

void Report::check(std::string id, std::string params, bool ok, std::string witness) {
  records_.push_back({std::move(id), std::move(params), ok ? Outcome::pass : Outcome::fail,
                      ok ? std::string() : std::move(witness)});
}

void Report::skip(std::string id, std::string params, std::string reason) {
  records_.push_back({std::move(id), std::move(params), Outcome::skipped, std::move(reason)});
}

void Report::append(const Report& other) {
  records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

int Report::count(Outcome o) const {
  return static_cast<int>(std::count_if(records_.begin(), records_.end(),
                                        [o](const CheckRecord& r) { return r.outcome == o; }));
}

}  // namespace genherm
