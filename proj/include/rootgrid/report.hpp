#ifndef ROOTGRID_REPORT_HPP
#define ROOTGRID_REPORT_HPP

#include <string>
#include <utility>
#include <vector>

namespace rootgrid {

struct Violation {
  std::string rule;     // stable machine-readable name, e.g. "pairwise-vertex-disjoint"
  std::string subject;  // offending item, e.g. "[1,2]"
  std::string detail;

  bool operator==(const Violation&) const = default;
};

/// Every violated rule, not only the first one found. Empty means valid.
struct ValidationReport {
  std::vector<Violation> violations;

  [[nodiscard]] bool ok() const { return violations.empty(); }
  [[nodiscard]] bool has(const std::string& rule) const {
    for (const auto& v : violations) {
      if (v.rule == rule) return true;
    }
    return false;
  }
  void add(std::string rule, std::string subject, std::string detail = {}) {
    violations.push_back({std::move(rule), std::move(subject), std::move(detail)});
  }
  void append(const ValidationReport& other) {
    violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  }
};

}  // namespace rootgrid

#endif  // ROOTGRID_REPORT_HPP
