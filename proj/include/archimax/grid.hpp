#pragma once

#include <Eigen/Core>
#include <string>

namespace archimax {

enum class Spacing { Linear, Log };

/// Evaluation grid over [lo, hi]; Log spacing is geometric and needs lo > 0.
struct Grid {
  double lo = 0.0;
  double hi = 1.0;
  int count = 2;
  Spacing spacing = Spacing::Linear;

  /// Throws std::invalid_argument unless lo < hi, count >= 2 and Log has lo > 0.
  static Grid make(double lo, double hi, int count, Spacing spacing = Spacing::Linear);
  static Grid linear(double lo, double hi, int count) { return make(lo, hi, count, Spacing::Linear); }
  static Grid log(double lo, double hi, int count) { return make(lo, hi, count, Spacing::Log); }

  /// Parses "lo:hi:count:lin|log".
  static Grid parse(const std::string& text);

  void validate() const;
  Eigen::VectorXd points() const;
  std::string to_string() const;
};

/// Interior grid on (0, 1) used for Uniform(0, 1) supports; endpoints carry 0/0 ratios.
inline Grid unit_interval_grid(int count) { return Grid::linear(1e-6, 1.0 - 1e-6, count); }

}  // namespace archimax
