#pragma once

#include <memory>
#include <string>
#include <vector>

namespace archimax {

/// Baseline survival function B(x) of a proportional-hazards model.
/// Shipped: exponential exp(-x), Weibull exp(-x^k), and tabulated values joined by
/// monotone (Fritsch-Carlson) cubic interpolation.
class ScalarSurvival {
 public:
  static ScalarSurvival exponential();
  static ScalarSurvival weibull(double shape);
  /// x strictly increasing, survival non-increasing in [0, 1] with survival.front() == 1.
  static ScalarSurvival tabulated(std::vector<double> x, std::vector<double> survival);
  /// "exp" or "weibull:k".
  static ScalarSurvival parse(const std::string& text);

  double lower() const { return lower_; }
  double upper() const { return upper_; }
  std::string name() const;

  double survival(double x) const;
  /// log B(x), exact for the closed-form baselines.
  double log_survival(double x) const;
  /// -dB/dx.
  double density(double x) const;

  bool operator==(const ScalarSurvival& other) const;

 private:
  enum class Kind { Exponential, Weibull, Tabulated };
  struct Table {
    std::vector<double> x, y, slope;
  };

  ScalarSurvival(Kind kind, double shape, double lower, double upper);
  void require_support(double x) const;

  Kind kind_;
  double shape_;
  double lower_;
  double upper_;
  std::shared_ptr<const Table> table_;
};

}  // namespace archimax
