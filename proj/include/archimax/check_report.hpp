#pragma once

#include <Eigen/Core>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "archimax/grid.hpp"

namespace archimax {

enum class Verdict { Pass, Fail, Inconclusive };

std::string_view to_string(Verdict v);

/// Where a check went wrong: the evaluation point and the values seen there.
struct Witness {
  Eigen::VectorXd point;
  Eigen::VectorXd values;
};

/// Outcome of one checker. A Fail always carries a witness.
struct CheckReport {
  std::string check;
  Verdict verdict = Verdict::Pass;
  std::optional<Witness> witness;
  std::optional<Grid> grid;
  double tolerance = 0.0;
  // Largest violation, deviation or margin the checker measured (NaN if not applicable).
  double metric = std::nan("");
  std::optional<unsigned long long> seed;
  std::string notes;
  std::vector<CheckReport> parts;

  bool passed() const { return verdict == Verdict::Pass; }

  static CheckReport pass(std::string check, double tolerance);
  static CheckReport fail(std::string check, double tolerance, Witness witness, std::string notes = {});
  static CheckReport inconclusive(std::string check, double tolerance, std::string notes);

  void add_note(std::string_view note);
};

}  // namespace archimax
