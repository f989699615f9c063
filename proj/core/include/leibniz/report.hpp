#pragma once

#include <string>
#include <vector>

#include "leibniz/word.hpp"

namespace leibniz {

struct CheckRecord {
  std::string name;
  Multidegree multidegree; ///< empty when not applicable
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct VerificationReport {
  std::string algebra;
  std::string field;
  std::string alpha; ///< empty = null
  std::vector<CheckRecord> checks;
  bool overall() const {
    for (auto &c : checks)
      if (!c.pass)
        return false;
    return true;
  }
};

enum class ReportFormat { Json, Csv, Text };

ReportFormat parse_format(const std::string &name);

/// Deterministic serialization; runtime_ms is written as given (the CLI pins
/// it to zero so identical configs produce byte-identical reports).
std::string emit_report(const VerificationReport &r, ReportFormat format,
                        long runtime_ms = 0);

} // namespace leibniz
