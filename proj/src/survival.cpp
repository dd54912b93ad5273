#include "archimax/survival.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "archimax/format.hpp"

namespace archimax {

ScalarSurvival::ScalarSurvival(Kind kind, double shape, double lower, double upper)
    : kind_(kind), shape_(shape), lower_(lower), upper_(upper) {}

ScalarSurvival ScalarSurvival::exponential() { return ScalarSurvival(Kind::Exponential, 1.0, 0.0, INFINITY); }

ScalarSurvival ScalarSurvival::weibull(double shape) {
  if (!(std::isfinite(shape) && shape > 0.0)) throw std::invalid_argument("weibull shape must be > 0");
  return ScalarSurvival(Kind::Weibull, shape, 0.0, INFINITY);
}

ScalarSurvival ScalarSurvival::tabulated(std::vector<double> x, std::vector<double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw std::invalid_argument("tabulated survival: need >= 2 points and equal lengths");
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!std::isfinite(x[i]) || !(y[i] >= 0.0 && y[i] <= 1.0)) {
      throw std::invalid_argument("tabulated survival: values must be finite with survival in [0, 1]");
    }
    if (i > 0 && !(x[i] > x[i - 1])) throw std::invalid_argument("tabulated survival: x must be strictly increasing");
    if (i > 0 && y[i] > y[i - 1]) {
      throw std::invalid_argument("tabulated survival: not monotone at x=" + format_double(x[i]));
    }
  }
  if (y.front() != 1.0) throw std::invalid_argument("tabulated survival: first value must be 1");

  // Fritsch-Carlson slopes keep the interpolant monotone.
  const std::size_t n = x.size();
  std::vector<double> delta(n - 1), m(n);
  for (std::size_t i = 0; i + 1 < n; ++i) delta[i] = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
  m[0] = delta[0];
  m[n - 1] = delta[n - 2];
  for (std::size_t i = 1; i + 1 < n; ++i) {
    m[i] = (delta[i - 1] * delta[i] <= 0.0) ? 0.0 : 0.5 * (delta[i - 1] + delta[i]);
  }
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (delta[i] == 0.0) {
      m[i] = m[i + 1] = 0.0;
      continue;
    }
    const double a = m[i] / delta[i];
    const double b = m[i + 1] / delta[i];
    const double r = a * a + b * b;
    if (r > 9.0) {
      const double tau = 3.0 / std::sqrt(r);
      m[i] = tau * a * delta[i];
      m[i + 1] = tau * b * delta[i];
    }
  }
  ScalarSurvival s(Kind::Tabulated, 0.0, x.front(), x.back());
  s.table_ = std::make_shared<const Table>(Table{std::move(x), std::move(y), std::move(m)});
  return s;
}

ScalarSurvival ScalarSurvival::parse(const std::string& text) {
  if (text == "exp") return exponential();
  const std::string prefix = "weibull:";
  if (text.rfind(prefix, 0) == 0) return weibull(parse_double(text.substr(prefix.size())));
  throw std::invalid_argument("baseline must be exp or weibull:k, got '" + text + "'");
}

std::string ScalarSurvival::name() const {
  switch (kind_) {
    case Kind::Exponential: return "exp";
    case Kind::Weibull: return "weibull:" + format_double(shape_);
    case Kind::Tabulated: return "tabulated(" + std::to_string(table_->x.size()) + ")";
  }
  return "?";
}

void ScalarSurvival::require_support(double x) const {
  if (!(x >= lower_ && x <= upper_)) {
    throw std::domain_error("baseline " + name() + ": x=" + format_double(x) + " outside support");
  }
}

double ScalarSurvival::log_survival(double x) const {
  require_support(x);
  switch (kind_) {
    case Kind::Exponential: return -x;
    case Kind::Weibull: return -std::pow(x, shape_);
    case Kind::Tabulated: return std::log(survival(x));
  }
  return std::nan("");
}

double ScalarSurvival::survival(double x) const {
  require_support(x);
  if (kind_ != Kind::Tabulated) return std::exp(log_survival(x));
  const Table& t = *table_;
  const auto it = std::upper_bound(t.x.begin(), t.x.end(), x);
  const std::size_t i = std::min<std::size_t>(std::max<std::ptrdiff_t>(it - t.x.begin() - 1, 0), t.x.size() - 2);
  const double h = t.x[i + 1] - t.x[i];
  const double s = (x - t.x[i]) / h;
  const double h00 = (1 + 2 * s) * (1 - s) * (1 - s);
  const double h10 = s * (1 - s) * (1 - s);
  const double h01 = s * s * (3 - 2 * s);
  const double h11 = s * s * (s - 1);
  return std::clamp(h00 * t.y[i] + h10 * h * t.slope[i] + h01 * t.y[i + 1] + h11 * h * t.slope[i + 1], 0.0, 1.0);
}

double ScalarSurvival::density(double x) const {
  require_support(x);
  switch (kind_) {
    case Kind::Exponential: return std::exp(-x);
    case Kind::Weibull:
      if (x == 0.0) return shape_ < 1.0 ? INFINITY : (shape_ == 1.0 ? 1.0 : 0.0);
      return shape_ * std::pow(x, shape_ - 1.0) * std::exp(-std::pow(x, shape_));
    case Kind::Tabulated: {
      const Table& t = *table_;
      const auto it = std::upper_bound(t.x.begin(), t.x.end(), x);
      const std::size_t i =
          std::min<std::size_t>(std::max<std::ptrdiff_t>(it - t.x.begin() - 1, 0), t.x.size() - 2);
      const double h = t.x[i + 1] - t.x[i];
      const double s = (x - t.x[i]) / h;
      const double d00 = 6 * s * s - 6 * s;
      const double d10 = 3 * s * s - 4 * s + 1;
      const double d01 = -6 * s * s + 6 * s;
      const double d11 = 3 * s * s - 2 * s;
      const double dy = (d00 * t.y[i] + d01 * t.y[i + 1]) / h + d10 * t.slope[i] + d11 * t.slope[i + 1];
      return std::max(-dy, 0.0);
    }
  }
  return std::nan("");
}

bool ScalarSurvival::operator==(const ScalarSurvival& other) const {
  if (kind_ != other.kind_) return false;
  switch (kind_) {
    case Kind::Exponential: return true;
    case Kind::Weibull: return shape_ == other.shape_;
    case Kind::Tabulated: return table_->x == other.table_->x && table_->y == other.table_->y;
  }
  return false;
}

}  // namespace archimax
