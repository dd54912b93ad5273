#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "archimax/check_report.hpp"

namespace archimax {

struct CurveRow {
  double x;
  std::string ratio_name;
  double value;

  bool operator==(const CurveRow& other) const;
};

inline constexpr const char* kCurvesHeader = "x,ratio_name,value";
inline constexpr const char* kReportHeader = "check,verdict,witness,value,tolerance,grid,seed,notes";

void write_curves_csv(std::ostream& out, const std::vector<CurveRow>& rows);
std::vector<CurveRow> read_curves_csv(std::istream& in);

/// One flattened report line. Nested parts become rows named "parent/part".
struct ReportRow {
  std::string command;
  std::string instance;
  std::string check;
  std::string verdict;
  std::string witness;  // point coordinates joined by ';', then '|' and the witness values
  std::string value;    // metric
  std::string tolerance;
  std::string grid;
  std::string seed;
  std::string notes;

  bool operator==(const ReportRow& other) const = default;
};

std::vector<ReportRow> flatten_report(const CheckReport& report, const std::string& command,
                                      const std::string& instance);

/// CSV rows omit command and instance; those go in the JSONL form.
void write_report_csv(std::ostream& out, const std::vector<ReportRow>& rows);
std::vector<ReportRow> read_report_csv(std::istream& in);

void write_report_jsonl(std::ostream& out, const std::vector<ReportRow>& rows);
std::vector<ReportRow> read_report_jsonl(std::istream& in);

}  // namespace archimax
