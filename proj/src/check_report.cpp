#include "archimax/check_report.hpp"

#include <utility>

namespace archimax {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

CheckReport CheckReport::pass(std::string check, double tolerance) {
  CheckReport r;
  r.check = std::move(check);
  r.tolerance = tolerance;
  return r;
}

CheckReport CheckReport::fail(std::string check, double tolerance, Witness witness, std::string notes) {
  CheckReport r;
  r.check = std::move(check);
  r.verdict = Verdict::Fail;
  r.tolerance = tolerance;
  r.witness = std::move(witness);
  r.notes = std::move(notes);
  return r;
}

CheckReport CheckReport::inconclusive(std::string check, double tolerance, std::string notes) {
  CheckReport r;
  r.check = std::move(check);
  r.verdict = Verdict::Inconclusive;
  r.tolerance = tolerance;
  r.notes = std::move(notes);
  return r;
}

void CheckReport::add_note(std::string_view note) {
  if (!notes.empty()) notes += "; ";
  notes += note;
}

}  // namespace archimax
