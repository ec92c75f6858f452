#ifndef PPLATEAU_REPORT_HPP
#define PPLATEAU_REPORT_HPP

#include <algorithm>
#include <string>
#include <vector>

namespace pplateau {

struct Issue {
  enum class Severity { error, warning };
  Severity severity = Severity::error;
  std::string kind;  // short machine-readable tag, e.g. "boundary-squared"
  std::string message;
};

/// Validation output; an empty report means every check passed.
using Report = std::vector<Issue>;

inline bool has_errors(const Report& r) {
  return std::any_of(r.begin(), r.end(),
                     [](const Issue& i) { return i.severity == Issue::Severity::error; });
}

inline bool has_kind(const Report& r, const std::string& kind) {
  return std::any_of(r.begin(), r.end(), [&](const Issue& i) { return i.kind == kind; });
}

}  // namespace pplateau

#endif
