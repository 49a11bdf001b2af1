#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ssf/spaceform.hpp"

namespace ssf {

/// Serializable summary of one classification run. Field names follow the
/// JSON schema emitted by `ssf classify --format json`.
struct Report {
  int n = 0;
  std::string group;
  std::size_t order = 0;
  std::string verdict;
  std::optional<std::string> theorem;
  std::optional<std::vector<std::string>> witness;
  bool orientable = true;
  bool spin = true;
  std::optional<bool> pin_plus;
  std::optional<bool> pin_minus;
  std::string psc;  // "yes" | "no" | "needs_alpha"
  std::size_t classes_considered = 0;
  std::vector<TraceStep> trace;

  bool operator==(const Report&) const = default;
};

/// `group_name` is echoed as given (spec string or file path).
Report make_report(const SpaceFormInstance& inst, const std::string& group_name,
                   const Verdict& verdict);

/// Compact single-line JSON with fields in schema order.
std::string to_json(const Report& r);
/// Throws ParseError on malformed input or schema mismatch.
Report report_from_json(const std::string& text);

/// Human-readable rendering of the case trace.
std::string to_text(const Report& r);

}  // namespace ssf
