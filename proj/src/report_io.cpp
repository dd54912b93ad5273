#include "archimax/report_io.hpp"

#include <cmath>
#include <istream>
#include <json.hpp>
#include <ostream>
#include <stdexcept>

#include "archimax/format.hpp"

namespace archimax {

bool CurveRow::operator==(const CurveRow& other) const {
  // Bitwise-equal doubles, with NaN equal to NaN.
  const auto same = [](double a, double b) { return a == b || (std::isnan(a) && std::isnan(b)); };
  return same(x, other.x) && ratio_name == other.ratio_name && same(value, other.value);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

// Splits one CSV record; quoted fields may not span lines.
std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          cur += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (quoted) throw std::runtime_error("csv: unterminated quoted field");
  fields.push_back(std::move(cur));
  return fields;
}

void expect_header(std::istream& in, const char* header) {
  std::string line;
  if (!std::getline(in, line) || line != header) {
    throw std::runtime_error(std::string("csv: expected header '") + header + "'");
  }
}

std::string join(const Eigen::VectorXd& v) {
  std::string s;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i > 0) s += ';';
    s += format_double(v[i]);
  }
  return s;
}

void flatten_into(const CheckReport& r, const std::string& prefix, const std::string& command,
                  const std::string& instance, std::vector<ReportRow>& out) {
  ReportRow row;
  row.command = command;
  row.instance = instance;
  row.check = prefix.empty() ? r.check : prefix + "/" + r.check;
  row.verdict = std::string(to_string(r.verdict));
  if (r.witness) row.witness = join(r.witness->point) + "|" + join(r.witness->values);
  row.value = format_double(r.metric);
  row.tolerance = format_double(r.tolerance);
  if (r.grid) row.grid = r.grid->to_string();
  if (r.seed) row.seed = std::to_string(*r.seed);
  row.notes = r.notes;
  out.push_back(row);
  for (const CheckReport& part : r.parts) flatten_into(part, row.check, command, instance, out);
}

}  // namespace

void write_curves_csv(std::ostream& out, const std::vector<CurveRow>& rows) {
  out << kCurvesHeader << '\n';
  for (const CurveRow& r : rows) {
    out << format_double(r.x) << ',' << csv_field(r.ratio_name) << ',' << format_double(r.value) << '\n';
  }
}

std::vector<CurveRow> read_curves_csv(std::istream& in) {
  expect_header(in, kCurvesHeader);
  std::vector<CurveRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 3) throw std::runtime_error("curves csv: expected 3 fields in '" + line + "'");
    rows.push_back({parse_double(f[0]), f[1], parse_double(f[2])});
  }
  return rows;
}

std::vector<ReportRow> flatten_report(const CheckReport& report, const std::string& command,
                                      const std::string& instance) {
  std::vector<ReportRow> rows;
  flatten_into(report, "", command, instance, rows);
  return rows;
}

void write_report_csv(std::ostream& out, const std::vector<ReportRow>& rows) {
  out << kReportHeader << '\n';
  for (const ReportRow& r : rows) {
    out << csv_field(r.check) << ',' << csv_field(r.verdict) << ',' << csv_field(r.witness) << ','
        << csv_field(r.value) << ',' << csv_field(r.tolerance) << ',' << csv_field(r.grid) << ','
        << csv_field(r.seed) << ',' << csv_field(r.notes) << '\n';
  }
}

std::vector<ReportRow> read_report_csv(std::istream& in) {
  expect_header(in, kReportHeader);
  std::vector<ReportRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv(line);
    if (f.size() != 8) throw std::runtime_error("report csv: expected 8 fields in '" + line + "'");
    ReportRow r;
    r.check = f[0];
    r.verdict = f[1];
    r.witness = f[2];
    r.value = f[3];
    r.tolerance = f[4];
    r.grid = f[5];
    r.seed = f[6];
    r.notes = f[7];
    rows.push_back(std::move(r));
  }
  return rows;
}

void write_report_jsonl(std::ostream& out, const std::vector<ReportRow>& rows) {
  for (const ReportRow& r : rows) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    j["instance"] = r.instance;
    j["check"] = r.check;
    j["verdict"] = r.verdict;
    j["witness"] = r.witness;
    j["value"] = r.value;
    j["tolerance"] = r.tolerance;
    j["grid"] = r.grid;
    j["seed"] = r.seed;
    j["notes"] = r.notes;
    out << j.dump() << '\n';
  }
}

std::vector<ReportRow> read_report_jsonl(std::istream& in) {
  std::vector<ReportRow> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto j = nlohmann::json::parse(line);
    ReportRow r;
    r.command = j.at("command").get<std::string>();
    r.instance = j.at("instance").get<std::string>();
    r.check = j.at("check").get<std::string>();
    r.verdict = j.at("verdict").get<std::string>();
    r.witness = j.at("witness").get<std::string>();
    r.value = j.at("value").get<std::string>();
    r.tolerance = j.at("tolerance").get<std::string>();
    r.grid = j.at("grid").get<std::string>();
    r.seed = j.at("seed").get<std::string>();
    r.notes = j.at("notes").get<std::string>();
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace archimax
