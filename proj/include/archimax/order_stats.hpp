#pragma once

#include <string>

#include "archimax/copula.hpp"
#include "archimax/survival.hpp"

namespace archimax {

/// Common marginal law of an exchangeable sample.
class Margin {
 public:
  static Margin uniform01();
  static Margin exponential(double rate);
  /// Survival function baseline(x)^exponent.
  static Margin phr_power(ScalarSurvival baseline, double exponent);

  double lower() const;
  double upper() const;
  std::string name() const;

  double cdf(double x) const;
  double sf(double x) const;
  double pdf(double x) const;

 private:
  enum class Kind { Uniform01, Exponential, PhrPower };
  Margin(Kind kind, double parameter, ScalarSurvival baseline);
  void require_support(double x) const;

  Kind kind_;
  double parameter_;
  ScalarSurvival baseline_;
};

/// n exchangeable variables with margin F. For maxima the copula joins the CDFs; for
/// minima the same Archimax form is used as the survival copula. Only the diagonal
/// phi(k psi(v) A_k) is evaluated, so any k is available.
struct ExchangeableSample {
  Margin margin;
  ArchimaxCopula copula;
  int n;

  ExchangeableSample(Margin margin, ArchimaxCopula copula, int n);
};

/// Which order statistic a density/distribution refers to.
struct OrderStat {
  enum class Kind { Max, SecondMax, Min, SecondMin };
  Kind kind;
  int k;

  static OrderStat max(int k) { return {Kind::Max, k}; }            // X_{k:k}
  static OrderStat second_max(int n) { return {Kind::SecondMax, n}; }  // X_{n-1:n}
  static OrderStat min(int k) { return {Kind::Min, k}; }            // X_{1:k}
  static OrderStat second_min(int n) { return {Kind::SecondMin, n}; }  // X_{2:n}

  std::string label() const;
};

/// Accumulates clamp events of the second-extreme formulas, which can dip below 0 or
/// above 1 by rounding near the support endpoints.
struct ClampDiagnostics {
  int events = 0;
  double max_magnitude = 0.0;
};

/// Clamps larger than this are treated as a formula failure and throw std::runtime_error.
inline constexpr double kMaxClamp = 1e-9;

double cdf_max(const ExchangeableSample& s, int k, double x);
double sf_max(const ExchangeableSample& s, int k, double x);
double cdf_second_max(const ExchangeableSample& s, int n, double x, ClampDiagnostics* diag = nullptr);
double sf_second_max(const ExchangeableSample& s, int n, double x, ClampDiagnostics* diag = nullptr);
double sf_min(const ExchangeableSample& s, int k, double x);
double cdf_min(const ExchangeableSample& s, int k, double x);
double sf_second_min(const ExchangeableSample& s, int n, double x, ClampDiagnostics* diag = nullptr);
double cdf_second_min(const ExchangeableSample& s, int n, double x, ClampDiagnostics* diag = nullptr);

double cdf_order_stat(const ExchangeableSample& s, OrderStat which, double x, ClampDiagnostics* diag = nullptr);
double sf_order_stat(const ExchangeableSample& s, OrderStat which, double x, ClampDiagnostics* diag = nullptr);
/// Chain-rule density with analytic phi' and psi'.
double pdf_order_stat(const ExchangeableSample& s, OrderStat which, double x);

}  // namespace archimax
