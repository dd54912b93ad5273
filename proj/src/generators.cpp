#include "archimax/generators.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "archimax/format.hpp"

namespace archimax {

namespace {

void require_t(double t, const char* where) {
  if (!(std::isfinite(t) && t >= 0.0)) {
    throw std::domain_error(std::string(where) + ": t must be finite and >= 0, got " + format_double(t));
  }
}

void require_positive_t(double t, const char* where) {
  if (!(std::isfinite(t) && t > 0.0)) {
    throw std::domain_error(std::string(where) + ": t must be finite and > 0, got " + format_double(t));
  }
}

void require_u(double u, const char* where) {
  if (!(u > 0.0 && u <= 1.0)) {
    throw std::domain_error(std::string(where) + ": u must lie in (0, 1], got " + format_double(u));
  }
}

// log(1 - exp(-t)) for t > 0, accurate at both ends.
double log1mexp(double t) {
  return t < std::log(2.0) ? std::log(-std::expm1(-t)) : std::log1p(-std::exp(-t));
}

double central_d1(const std::function<double(double)>& f, double t) {
  const double h = std::min(std::max(1e-6, 1e-6 * t), 0.5 * t);
  return (f(t + h) - f(t - h)) / (2.0 * h);
}

double central_d2(const std::function<double(double)>& f, double t) {
  const double h = std::min(std::max(1e-4, 1e-4 * t), 0.5 * t);
  return (f(t + h) - 2.0 * f(t) + f(t - h)) / (h * h);
}

}  // namespace

std::string_view to_string(Family f) {
  switch (f) {
    case Family::Gumbel: return "gumbel";
    case Family::Clayton: return "clayton";
    case Family::Joe: return "joe";
    case Family::ParetoType: return "pareto";
    case Family::UnitExponential: return "unitexp";
    case Family::Custom: return "custom";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  std::string v(name);
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
  if (v == "gumbel") return Family::Gumbel;
  if (v == "clayton") return Family::Clayton;
  if (v == "joe") return Family::Joe;
  if (v == "pareto" || v == "paretotype") return Family::ParetoType;
  if (v == "unitexp" || v == "exponential" || v == "independence") return Family::UnitExponential;
  throw std::invalid_argument("unknown generator family '" + std::string(name) + "'");
}

Generator::Generator(Family family, double theta, int dimension_hint)
    : family_(family), theta_(theta), dimension_hint_(dimension_hint) {
  if (dimension_hint < 2) throw std::invalid_argument("generator: dimension_hint must be >= 2");
  const bool finite = std::isfinite(theta);
  switch (family) {
    case Family::Gumbel:
    case Family::Joe:
      if (!finite || theta < 1.0) {
        throw std::invalid_argument(std::string(to_string(family)) + ": theta must be >= 1, got " +
                                    format_double(theta));
      }
      break;
    case Family::Clayton:
    case Family::ParetoType:
      if (!finite || theta <= 0.0) {
        throw std::invalid_argument(std::string(to_string(family)) + ": theta must be > 0, got " +
                                    format_double(theta));
      }
      break;
    case Family::UnitExponential:
    case Family::Custom:
      break;
  }
}

Generator Generator::gumbel(double theta, int hint) { return Generator(Family::Gumbel, theta, hint); }
Generator Generator::clayton(double alpha, int hint) { return Generator(Family::Clayton, alpha, hint); }
Generator Generator::joe(double theta, int hint) { return Generator(Family::Joe, theta, hint); }
Generator Generator::pareto_type(double theta, int hint) { return Generator(Family::ParetoType, theta, hint); }
Generator Generator::unit_exponential(int hint) { return Generator(Family::UnitExponential, 1.0, hint); }

Generator Generator::custom(CustomGenerator spec, int hint) {
  if (!spec.phi || !spec.psi) throw std::invalid_argument("custom generator needs phi and psi");
  Generator g(Family::Custom, std::nan(""), hint);
  g.custom_ = std::make_shared<const CustomGenerator>(std::move(spec));
  return g;
}

Generator Generator::make(Family family, double theta, int hint) {
  switch (family) {
    case Family::Gumbel: return gumbel(theta, hint);
    case Family::Clayton: return clayton(theta, hint);
    case Family::Joe: return joe(theta, hint);
    case Family::ParetoType: return pareto_type(theta, hint);
    case Family::UnitExponential: return unit_exponential(hint);
    case Family::Custom: break;
  }
  throw std::invalid_argument("Generator::make: custom generators need Generator::custom");
}

std::string Generator::name() const {
  if (family_ == Family::Custom) return custom_->name;
  if (family_ == Family::UnitExponential) return "unitexp";
  return std::string(to_string(family_)) + "(" + format_double(theta_) + ")";
}

double Generator::phi(double t) const {
  require_t(t, "phi");
  switch (family_) {
    case Family::Gumbel: return std::exp(-std::pow(t, 1.0 / theta_));
    case Family::Clayton: return std::exp(-std::log1p(theta_ * t) / theta_);
    case Family::Joe: return t == 0.0 ? 1.0 : -std::expm1(log1mexp(t) / theta_);
    case Family::ParetoType: return std::exp(-theta_ * std::log1p(t));
    case Family::UnitExponential: return std::exp(-t);
    case Family::Custom: return custom_->phi(t);
  }
  return std::nan("");
}

double Generator::one_minus_phi(double t) const {
  require_t(t, "one_minus_phi");
  switch (family_) {
    case Family::Gumbel: return -std::expm1(-std::pow(t, 1.0 / theta_));
    case Family::Clayton: return -std::expm1(-std::log1p(theta_ * t) / theta_);
    case Family::Joe: return t == 0.0 ? 0.0 : std::exp(log1mexp(t) / theta_);
    case Family::ParetoType: return -std::expm1(-theta_ * std::log1p(t));
    case Family::UnitExponential: return -std::expm1(-t);
    case Family::Custom: return 1.0 - custom_->phi(t);
  }
  return std::nan("");
}

double Generator::psi(double u) const {
  require_u(u, "psi");
  if (u == 1.0) return 0.0;
  switch (family_) {
    case Family::Gumbel: return std::pow(-std::log(u), theta_);
    case Family::Clayton: return std::expm1(-theta_ * std::log(u)) / theta_;
    case Family::Joe: {
      // (1 - u)^theta = exp(v); pick the form that keeps relative precision.
      const double v = theta_ * std::log1p(-u);
      return v < -std::log(2.0) ? -std::log1p(-std::exp(v)) : -std::log(-std::expm1(v));
    }
    case Family::ParetoType: return std::expm1(-std::log(u) / theta_);
    case Family::UnitExponential: return -std::log(u);
    case Family::Custom: return custom_->psi(u);
  }
  return std::nan("");
}

double Generator::phi_d1(double t) const {
  require_positive_t(t, "phi_d1");
  switch (family_) {
    case Family::Gumbel: {
      const double s = std::pow(t, 1.0 / theta_);
      return -s / (theta_ * t) * std::exp(-s);
    }
    case Family::Clayton: return -std::exp(-(1.0 / theta_ + 1.0) * std::log1p(theta_ * t));
    case Family::Joe: {
      const double w = -std::expm1(-t);
      return -std::pow(w, 1.0 / theta_ - 1.0) * std::exp(-t) / theta_;
    }
    case Family::ParetoType: return -theta_ * std::exp(-(theta_ + 1.0) * std::log1p(t));
    case Family::UnitExponential: return -std::exp(-t);
    case Family::Custom:
      if (custom_->phi_d1) return custom_->phi_d1(t);
      return central_d1(custom_->phi, t);
  }
  return std::nan("");
}

double Generator::phi_d2(double t) const {
  require_positive_t(t, "phi_d2");
  switch (family_) {
    case Family::Gumbel: {
      const double s = std::pow(t, 1.0 / theta_);
      return std::exp(-s) * s * (s + theta_ - 1.0) / (theta_ * theta_ * t * t);
    }
    case Family::Clayton: return (1.0 + theta_) * std::exp(-(1.0 / theta_ + 2.0) * std::log1p(theta_ * t));
    case Family::Joe: {
      const double e = std::exp(-t);
      const double w = -std::expm1(-t);
      return std::pow(w, 1.0 / theta_ - 2.0) * e * (1.0 - e / theta_) / theta_;
    }
    case Family::ParetoType: return theta_ * (theta_ + 1.0) * std::exp(-(theta_ + 2.0) * std::log1p(t));
    case Family::UnitExponential: return std::exp(-t);
    case Family::Custom:
      if (custom_->phi_d2) return custom_->phi_d2(t);
      if (custom_->phi_d1) return central_d1(custom_->phi_d1, t);
      return central_d2(custom_->phi, t);
  }
  return std::nan("");
}

double Generator::psi_d1(double u) const {
  require_u(u, "psi_d1");
  switch (family_) {
    case Family::Gumbel:
      if (u == 1.0) return theta_ == 1.0 ? -1.0 : 0.0;
      return -theta_ * std::pow(-std::log(u), theta_ - 1.0) / u;
    case Family::Clayton: return -std::exp(-(theta_ + 1.0) * std::log(u));
    case Family::Joe: {
      const double v = std::pow(1.0 - u, theta_);
      if (u == 1.0) return theta_ == 1.0 ? -1.0 : 0.0;
      return -theta_ * std::pow(1.0 - u, theta_ - 1.0) / (1.0 - v);
    }
    case Family::ParetoType: return -std::exp(-(1.0 / theta_ + 1.0) * std::log(u)) / theta_;
    case Family::UnitExponential: return -1.0 / u;
    case Family::Custom:
      if (custom_->psi_d1) return custom_->psi_d1(u);
      return 1.0 / phi_d1(psi(u));
  }
  return std::nan("");
}

double Generator::rh_ratio(double t) const { return t * phi_d1(t) / phi(t); }
double Generator::hr_ratio(double t) const { return t * phi_d1(t) / one_minus_phi(t); }
double Generator::lr_ratio(double t) const { return t * phi_d2(t) / phi_d1(t); }

// ---------------------------------------------------------------------------
// n-monotonicity

namespace {

constexpr int kJetOrder = 6;

// Truncated Taylor series c[0] + c[1] h + ... of a function around a point.
struct Jet {
  std::array<double, kJetOrder + 1> c{};

  static Jet variable(double t) {
    Jet j;
    j.c[0] = t;
    j.c[1] = 1.0;
    return j;
  }
  Jet scaled(double a) const {
    Jet r = *this;
    for (double& v : r.c) v *= a;
    return r;
  }
};

Jet jet_exp(const Jet& a) {
  Jet e;
  e.c[0] = std::exp(a.c[0]);
  for (int k = 1; k <= kJetOrder; ++k) {
    double acc = 0.0;
    for (int j = 1; j <= k; ++j) acc += j * a.c[j] * e.c[k - j];
    e.c[k] = acc / k;
  }
  return e;
}

// Series of a^p for a0 > 0; p0 supplied so callers can use a more accurate closed form.
Jet jet_pow(const Jet& a, double p, double p0) {
  Jet r;
  r.c[0] = p0;
  for (int k = 1; k <= kJetOrder; ++k) {
    double acc = 0.0;
    for (int j = 1; j <= k; ++j) acc += ((p + 1.0) * j - k) * a.c[j] * r.c[k - j];
    r.c[k] = acc / (k * a.c[0]);
  }
  return r;
}

// Exact derivatives phi^(k)(t), k = 0..kJetOrder, for the closed-form families.
std::array<double, kJetOrder + 1> phi_derivatives(Family family, double theta, double t) {
  const Jet x = Jet::variable(t);
  Jet phi;
  switch (family) {
    case Family::Gumbel:
      phi = jet_exp(jet_pow(x, 1.0 / theta, std::pow(t, 1.0 / theta)).scaled(-1.0));
      break;
    case Family::Clayton: {
      Jet base = x.scaled(theta);
      base.c[0] = 1.0 + theta * t;
      phi = jet_pow(base, -1.0 / theta, std::exp(-std::log1p(theta * t) / theta));
      break;
    }
    case Family::Joe: {
      // 1 - (1 - exp(-t))^(1/theta); theta = 1 is exp(-t), where the recurrence cancels badly.
      if (theta == 1.0) {
        phi = jet_exp(x.scaled(-1.0));
        break;
      }
      Jet q = jet_exp(x.scaled(-1.0)).scaled(-1.0);
      q.c[0] = -std::expm1(-t);
      const double log_q0 = log1mexp(t);
      phi = jet_pow(q, 1.0 / theta, std::exp(log_q0 / theta)).scaled(-1.0);
      phi.c[0] = -std::expm1(log_q0 / theta);
      break;
    }
    case Family::ParetoType: {
      Jet base = x;
      base.c[0] = 1.0 + t;
      phi = jet_pow(base, -theta, std::exp(-theta * std::log1p(t)));
      break;
    }
    case Family::UnitExponential:
      phi = jet_exp(x.scaled(-1.0));
      break;
    case Family::Custom:
      throw std::logic_error("no closed form for custom generators");
  }
  std::array<double, kJetOrder + 1> d{};
  double factorial = 1.0;
  for (int k = 0; k <= kJetOrder; ++k) {
    if (k > 0) factorial *= k;
    d[k] = phi.c[k] * factorial;
  }
  return d;
}

// k-th derivative at t. Custom generators use differences of phi'' above order 2.
double derivative(const Generator& g, int k, double t) {
  if (g.family() != Family::Custom) {
    if (k > kJetOrder) throw std::logic_error("derivative order above the jet order");
    return phi_derivatives(g.family(), g.theta(), t)[k];
  }
  switch (k) {
    case 0: return g.phi(t);
    case 1: return g.phi_d1(t);
    case 2: return g.phi_d2(t);
    case 3: {
      const double h = 1e-3 * t;
      return (g.phi_d2(t + h) - g.phi_d2(t - h)) / (2.0 * h);
    }
    case 4: {
      const double h = 1e-2 * t;
      return (g.phi_d2(t + h) - 2.0 * g.phi_d2(t) + g.phi_d2(t - h)) / (h * h);
    }
    default: break;
  }
  throw std::logic_error("derivative order above 4 for a custom generator");
}

}  // namespace

CheckReport check_n_monotone(const Generator& g, int n, const Grid& grid) {
  if (n < 2) throw std::invalid_argument("check_n_monotone: n must be >= 2");
  grid.validate();
  if (!(grid.lo > 0.0)) throw std::invalid_argument("check_n_monotone: grid must be strictly positive");
  constexpr double kSignTol = 1e-8;
  constexpr double kShapeTol = 1e-6;
  const Eigen::VectorXd t = grid.points();
  const int max_order = g.family() == Family::Custom ? 4 : kJetOrder;
  const int top = std::min(n - 2, max_order);

  CheckReport report = CheckReport::pass("n_monotone", kSignTol);
  report.grid = grid;
  if (n - 2 > max_order) {
    report.add_note("derivative orders above " + std::to_string(max_order) + " not checked");
  }

  for (int k = 1; k <= top; ++k) {
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    for (Eigen::Index i = 0; i < t.size(); ++i) {
      const double v = sign * derivative(g, k, t[i]);
      if (!std::isfinite(v)) {
        return CheckReport::inconclusive("n_monotone", kSignTol,
                                         "non-finite derivative of order " + std::to_string(k) + " at t=" +
                                             format_double(t[i]));
      }
      if (v < -kSignTol * (1.0 + std::abs(v))) {
        CheckReport r = CheckReport::fail("n_monotone", kSignTol,
                                          Witness{Eigen::VectorXd::Constant(1, t[i]), Eigen::VectorXd::Constant(1, v)},
                                          "(-1)^" + std::to_string(k) + " phi^(" + std::to_string(k) + ") < 0");
        r.grid = grid;
        r.metric = v;
        return r;
      }
    }
  }

  // The top derivative (-1)^m phi^(m) must be non-increasing and convex.
  const int m = top;
  const double sign = (m % 2 == 0) ? 1.0 : -1.0;
  Eigen::VectorXd top_values(t.size());
  for (Eigen::Index i = 0; i < t.size(); ++i) top_values[i] = sign * derivative(g, m, t[i]);

  for (Eigen::Index i = 0; i + 1 < t.size(); ++i) {
    const double a = top_values[i], b = top_values[i + 1];
    if (b > a + kShapeTol * (1.0 + std::abs(a) + std::abs(b))) {
      CheckReport r = CheckReport::fail("n_monotone", kShapeTol,
                                        Witness{Eigen::Vector2d(t[i], t[i + 1]), Eigen::Vector2d(a, b)},
                                        "order-" + std::to_string(m) + " derivative term increases");
      r.grid = grid;
      return r;
    }
  }
  for (Eigen::Index i = 0; i + 2 < t.size(); ++i) {
    const double s0 = (top_values[i + 1] - top_values[i]) / (t[i + 1] - t[i]);
    const double s1 = (top_values[i + 2] - top_values[i + 1]) / (t[i + 2] - t[i + 1]);
    // Slack scales with value noise over the local spacing.
    const double scale = (std::abs(top_values[i]) + std::abs(top_values[i + 1]) + std::abs(top_values[i + 2])) /
                         std::min(t[i + 1] - t[i], t[i + 2] - t[i + 1]);
    if (s1 < s0 - kShapeTol * (1.0 + scale)) {
      CheckReport r = CheckReport::fail(
          "n_monotone", kShapeTol,
          Witness{Eigen::Vector3d(t[i], t[i + 1], t[i + 2]),
                  Eigen::Vector3d(top_values[i], top_values[i + 1], top_values[i + 2])},
          "order-" + std::to_string(m) + " derivative term not convex");
      r.grid = grid;
      r.metric = s1 - s0;
      return r;
    }
  }
  return report;
}

// ---------------------------------------------------------------------------
// Radial representation

RadialLaw RadialLaw::point_mass(double r0) {
  if (!(std::isfinite(r0) && r0 > 0.0)) throw std::invalid_argument("point mass location must be > 0");
  RadialLaw law;
  law.cdf_ = [r0](double r) { return r >= r0 ? 1.0 : 0.0; };
  law.atom_ = r0;
  law.name_ = "point_mass(" + format_double(r0) + ")";
  return law;
}

RadialLaw RadialLaw::erlang(int shape, double rate) {
  if (shape < 1) throw std::invalid_argument("erlang shape must be >= 1");
  if (!(std::isfinite(rate) && rate > 0.0)) throw std::invalid_argument("erlang rate must be > 0");
  RadialLaw law;
  law.cdf_ = [shape, rate](double r) {
    if (r <= 0.0) return 0.0;
    const double z = rate * r;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < shape; ++k) {
      term *= z / k;
      sum += term;
    }
    return 1.0 - std::exp(-z) * sum;
  };
  law.name_ = "erlang(" + std::to_string(shape) + "," + format_double(rate) + ")";
  return law;
}

RadialLaw RadialLaw::from_cdf(std::function<double(double)> cdf, std::string name) {
  if (!cdf) throw std::invalid_argument("radial law needs a cdf");
  RadialLaw law;
  law.cdf_ = std::move(cdf);
  law.name_ = std::move(name);
  return law;
}

double RadialLaw::quantile(double p) const {
  if (atom_) return *atom_;
  double hi = 1.0;
  while (cdf_(hi) < p) {
    hi *= 2.0;
    if (hi > 1e15) {
      throw QuadratureError("radial law: quantile " + format_double(p) + " beyond 1e15", {});
    }
  }
  double lo = 0.0;
  for (int i = 0; i < 200 && hi - lo > 1e-13 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (cdf_(mid) >= p) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double williamson_phi(const RadialLaw& radial, int n, double x, const QuadratureSpec& quadrature) {
  if (n < 2) throw std::invalid_argument("williamson_phi: n must be >= 2");
  require_t(x, "williamson_phi");
  if (x == 0.0) return 1.0 - radial.cdf(0.0);
  if (const auto r0 = radial.atom()) {
    return *r0 > x ? std::pow(1.0 - x / *r0, n - 1) : 0.0;
  }
  const double r_max = radial.quantile(1.0 - 1e-10);
  if (r_max <= x) return 0.0;
  // Integration by parts: int g dF = int g'(r) (1 - F(r)) dr with g(r) = (1 - x/r)^(n-1), g(x) = 0.
  const auto integrand = [&](double r) {
    const double base = 1.0 - x / r;
    return (n - 1) * std::pow(base, n - 2) * x / (r * r) * (1.0 - radial.cdf(r));
  };
  const QuadratureResult res = integrate(integrand, x, r_max, quadrature);
  return std::clamp(res.value, 0.0, 1.0);
}

}  // namespace archimax
