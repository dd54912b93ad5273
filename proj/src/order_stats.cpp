#include "archimax/order_stats.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "archimax/format.hpp"
#include "archimax/log.hpp"

namespace archimax {

Margin::Margin(Kind kind, double parameter, ScalarSurvival baseline)
    : kind_(kind), parameter_(parameter), baseline_(std::move(baseline)) {}

Margin Margin::uniform01() { return Margin(Kind::Uniform01, 1.0, ScalarSurvival::exponential()); }

Margin Margin::exponential(double rate) {
  if (!(std::isfinite(rate) && rate > 0.0)) throw std::invalid_argument("exponential margin: rate must be > 0");
  return Margin(Kind::Exponential, rate, ScalarSurvival::exponential());
}

Margin Margin::phr_power(ScalarSurvival baseline, double exponent) {
  if (!(std::isfinite(exponent) && exponent > 0.0)) throw std::invalid_argument("phr margin: exponent must be > 0");
  return Margin(Kind::PhrPower, exponent, std::move(baseline));
}

double Margin::lower() const { return kind_ == Kind::PhrPower ? baseline_.lower() : 0.0; }

double Margin::upper() const {
  switch (kind_) {
    case Kind::Uniform01: return 1.0;
    case Kind::Exponential: return INFINITY;
    case Kind::PhrPower: return baseline_.upper();
  }
  return std::nan("");
}

std::string Margin::name() const {
  switch (kind_) {
    case Kind::Uniform01: return "uniform01";
    case Kind::Exponential: return "exponential(" + format_double(parameter_) + ")";
    case Kind::PhrPower: return baseline_.name() + "^" + format_double(parameter_);
  }
  return "?";
}

void Margin::require_support(double x) const {
  if (!(x >= lower() && x <= upper())) {
    throw std::domain_error("margin " + name() + ": x=" + format_double(x) + " outside support");
  }
}

double Margin::cdf(double x) const {
  require_support(x);
  switch (kind_) {
    case Kind::Uniform01: return x;
    case Kind::Exponential: return -std::expm1(-parameter_ * x);
    case Kind::PhrPower: return -std::expm1(parameter_ * baseline_.log_survival(x));
  }
  return std::nan("");
}

double Margin::sf(double x) const {
  require_support(x);
  switch (kind_) {
    case Kind::Uniform01: return 1.0 - x;
    case Kind::Exponential: return std::exp(-parameter_ * x);
    case Kind::PhrPower: return std::exp(parameter_ * baseline_.log_survival(x));
  }
  return std::nan("");
}

double Margin::pdf(double x) const {
  require_support(x);
  switch (kind_) {
    case Kind::Uniform01: return 1.0;
    case Kind::Exponential: return parameter_ * std::exp(-parameter_ * x);
    case Kind::PhrPower: {
      const double b = baseline_.survival(x);
      return parameter_ * std::pow(b, parameter_ - 1.0) * baseline_.density(x);
    }
  }
  return std::nan("");
}

ExchangeableSample::ExchangeableSample(Margin m, ArchimaxCopula c, int size)
    : margin(std::move(m)), copula(std::move(c)), n(size) {
  if (size < 2) throw std::invalid_argument("exchangeable sample: n must be >= 2");
}

std::string OrderStat::label() const {
  switch (kind) {
    case Kind::Max: return "X" + std::to_string(k) + ":" + std::to_string(k);
    case Kind::SecondMax: return "X" + std::to_string(k - 1) + ":" + std::to_string(k);
    case Kind::Min: return "X1:" + std::to_string(k);
    case Kind::SecondMin: return "X2:" + std::to_string(k);
  }
  return "?";
}

namespace {

void require_k(int k, const char* where) {
  if (k < 2) throw std::invalid_argument(std::string(where) + ": k must be >= 2, got " + std::to_string(k));
}

// Diagonal term D_k(v) = phi(k psi(v) A_k) and its complement, given v and 1 - v.
struct Diag {
  double value;
  double complement;
};

Diag diag_term(const ArchimaxCopula& c, int k, double v, double v_complement) {
  if (k == 1) return {v, v_complement};
  if (v <= 0.0) return {0.0, 1.0};
  const double t = k * c.generator().psi(std::clamp(v, kUnitClip, 1.0)) * c.tail().diagonal_A(k);
  return {c.generator().phi(t), c.generator().one_minus_phi(t)};
}

// d D_k(v(x)) / dx given v and dv/dx.
double diag_derivative(const ArchimaxCopula& c, int k, double v, double dv) {
  if (k == 1) return dv;
  if (dv == 0.0) return 0.0;
  const double vc = std::clamp(v, kUnitClip, 1.0);
  const double a = k * c.tail().diagonal_A(k);
  const double t = a * c.generator().psi(vc);
  if (t <= 0.0) throw std::domain_error("order statistic density undefined at the support boundary");
  return c.generator().phi_d1(t) * a * c.generator().psi_d1(vc) * dv;
}

double clamp_probability(double value, ClampDiagnostics* diag, const char* where) {
  const double clamped = std::clamp(value, 0.0, 1.0);
  const double magnitude = std::abs(value - clamped);
  if (magnitude > 0.0) {
    if (diag != nullptr) {
      ++diag->events;
      diag->max_magnitude = std::max(diag->max_magnitude, magnitude);
    }
    log::debug(std::string(where) + ": clamped " + format_double(value));
    if (magnitude > kMaxClamp) {
      throw std::runtime_error(std::string(where) + ": clamp of " + format_double(magnitude) + " exceeds 1e-9");
    }
  }
  return clamped;
}

// n D_{n-1} - (n-1) D_n and its complement n (1 - D_{n-1}) - (n-1)(1 - D_n).
Diag second_extreme(const ArchimaxCopula& c, int n, double v, double vc) {
  const Diag a = diag_term(c, n - 1, v, vc);
  const Diag b = diag_term(c, n, v, vc);
  return {n * a.value - (n - 1) * b.value, n * a.complement - (n - 1) * b.complement};
}

}  // namespace

double cdf_max(const ExchangeableSample& s, int k, double x) {
  require_k(k, "cdf_max");
  return diag_term(s.copula, k, s.margin.cdf(x), s.margin.sf(x)).value;
}

double sf_max(const ExchangeableSample& s, int k, double x) {
  require_k(k, "sf_max");
  return diag_term(s.copula, k, s.margin.cdf(x), s.margin.sf(x)).complement;
}

double cdf_second_max(const ExchangeableSample& s, int n, double x, ClampDiagnostics* diag) {
  require_k(n, "cdf_second_max");
  return clamp_probability(second_extreme(s.copula, n, s.margin.cdf(x), s.margin.sf(x)).value, diag,
                           "cdf_second_max");
}

double sf_second_max(const ExchangeableSample& s, int n, double x, ClampDiagnostics* diag) {
  require_k(n, "sf_second_max");
  return clamp_probability(second_extreme(s.copula, n, s.margin.cdf(x), s.margin.sf(x)).complement, diag,
                           "sf_second_max");
}

double sf_min(const ExchangeableSample& s, int k, double x) {
  require_k(k, "sf_min");
  return diag_term(s.copula, k, s.margin.sf(x), s.margin.cdf(x)).value;
}

double cdf_min(const ExchangeableSample& s, int k, double x) {
  require_k(k, "cdf_min");
  return diag_term(s.copula, k, s.margin.sf(x), s.margin.cdf(x)).complement;
}

double sf_second_min(const ExchangeableSample& s, int n, double x, ClampDiagnostics* diag) {
  require_k(n, "sf_second_min");
  return clamp_probability(second_extreme(s.copula, n, s.margin.sf(x), s.margin.cdf(x)).value, diag,
                           "sf_second_min");
}

double cdf_second_min(const ExchangeableSample& s, int n, double x, ClampDiagnostics* diag) {
  require_k(n, "cdf_second_min");
  return clamp_probability(second_extreme(s.copula, n, s.margin.sf(x), s.margin.cdf(x)).complement, diag,
                           "cdf_second_min");
}

double cdf_order_stat(const ExchangeableSample& s, OrderStat which, double x, ClampDiagnostics* diag) {
  switch (which.kind) {
    case OrderStat::Kind::Max: return cdf_max(s, which.k, x);
    case OrderStat::Kind::SecondMax: return cdf_second_max(s, which.k, x, diag);
    case OrderStat::Kind::Min: return cdf_min(s, which.k, x);
    case OrderStat::Kind::SecondMin: return cdf_second_min(s, which.k, x, diag);
  }
  return std::nan("");
}

double sf_order_stat(const ExchangeableSample& s, OrderStat which, double x, ClampDiagnostics* diag) {
  switch (which.kind) {
    case OrderStat::Kind::Max: return sf_max(s, which.k, x);
    case OrderStat::Kind::SecondMax: return sf_second_max(s, which.k, x, diag);
    case OrderStat::Kind::Min: return sf_min(s, which.k, x);
    case OrderStat::Kind::SecondMin: return sf_second_min(s, which.k, x, diag);
  }
  return std::nan("");
}

double pdf_order_stat(const ExchangeableSample& s, OrderStat which, double x) {
  require_k(which.k, "pdf_order_stat");
  const double f = s.margin.pdf(x);
  const ArchimaxCopula& c = s.copula;
  const int k = which.k;
  double d = 0.0;
  switch (which.kind) {
    case OrderStat::Kind::Max:
      d = diag_derivative(c, k, s.margin.cdf(x), f);
      break;
    case OrderStat::Kind::SecondMax: {
      const double v = s.margin.cdf(x);
      d = k * diag_derivative(c, k - 1, v, f) - (k - 1) * diag_derivative(c, k, v, f);
      break;
    }
    case OrderStat::Kind::Min:
      d = -diag_derivative(c, k, s.margin.sf(x), -f);
      break;
    case OrderStat::Kind::SecondMin: {
      const double v = s.margin.sf(x);
      d = -(k * diag_derivative(c, k - 1, v, -f) - (k - 1) * diag_derivative(c, k, v, -f));
      break;
    }
  }
  return std::max(d, 0.0);
}

}  // namespace archimax
