#pragma once

#include <vsft/modelfile.hpp>
#include <vsft/report.hpp>

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace vsft::cli {

enum ExitCode : int {
  kAllExpected = 0,
  kUnexpectedVerdict = 1,
  kInconclusive = 2,
  kInputError = 3,
};

enum class Format { Text, Machine };

struct RunOptions {
  CheckOptions check;
  SearchBudget search;
  std::optional<Rational> degree_cap;
  /// Catalog parameter overrides (--truncation-*), applied where understood.
  std::map<std::string, std::int64_t> truncation;
  Format format = Format::Text;
  unsigned jobs = 0;  // 0: hardware concurrency
  bool timing = true;
};

/// Budget defaults for a named profile: "small", "default", "large".
/// Throws std::invalid_argument on other names.
RunOptions profile_options(const std::string& profile);

/// Runs claims on a work pool; lines come back in input order.
std::vector<ReportLine> run_records(const std::vector<ClaimRecord>& records, const RunOptions& opts);
/// 1 if any verdict is unexpected (other than Inconclusive), else 2 if any
/// unexpected Inconclusive, else 0.
int exit_code_for(const std::vector<ReportLine>& lines);
void print_lines(const std::vector<ReportLine>& lines, const RunOptions& opts, std::ostream& out);

int cmd_verify(const std::filesystem::path& claim_file, const RunOptions& opts, std::ostream& out, std::ostream& err);
int cmd_example(const std::string& name, const RunOptions& opts, std::ostream& out, std::ostream& err);
int cmd_nt(const std::string& sub, const std::vector<std::string>& args, std::ostream& out, std::ostream& err);
int cmd_export(const std::string& name, const RunOptions& opts, bool claims, std::ostream& out, std::ostream& err);

/// Full command line entry point; reads VSFT_BUDGET_PROFILE for defaults.
int run(int argc, char** argv, std::ostream& out, std::ostream& err);

}  // namespace vsft::cli
