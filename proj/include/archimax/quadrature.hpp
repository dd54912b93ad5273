#pragma once

#include <functional>
#include <stdexcept>
#include <string>

namespace archimax {

struct QuadratureSpec {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_depth = 40;
  int max_evaluations = 2'000'000;
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
};

class QuadratureError : public std::runtime_error {
 public:
  QuadratureError(const std::string& what, QuadratureResult partial)
      : std::runtime_error(what), partial_(partial) {}
  const QuadratureResult& partial() const { return partial_; }

 private:
  QuadratureResult partial_;
};

/// Adaptive Gauss-Kronrod (7/15) integration of f over the finite interval [a, b].
/// Throws QuadratureError when the tolerance cannot be met within the budget.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec = {});

}  // namespace archimax
