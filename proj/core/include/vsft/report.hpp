#pragma once

#include "vsft/sftcheck.hpp"

#include <string>

namespace vsft {

inline constexpr const char* kReportSchema = "vsft-report/1";

struct ReportLine {
  VerificationReport report;
  std::string expected;
  bool as_expected = false;
  double wall_ms = 0;
};

/// One JSON object per line. Wall time sits under "timing", which the
/// determinism check strips; everything else depends only on inputs and seed.
std::string to_machine_line(const ReportLine& line, bool include_timing = true);
std::string to_text(const ReportLine& line);

}  // namespace vsft
