#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "archimax/check_report.hpp"
#include "archimax/grid.hpp"
#include "archimax/quadrature.hpp"

namespace archimax {

enum class Family { Gumbel, Clayton, Joe, ParetoType, UnitExponential, Custom };

std::string_view to_string(Family f);
/// Accepts gumbel, clayton, joe, pareto (or paretotype), unitexp (or exponential).
Family parse_family(std::string_view name);

/// User-supplied generator, used for test doubles and ad hoc families.
/// Missing derivatives are replaced by central differences.
struct CustomGenerator {
  std::string name = "custom";
  std::function<double(double)> phi;
  std::function<double(double)> psi;
  std::function<double(double)> phi_d1;
  std::function<double(double)> phi_d2;
  std::function<double(double)> psi_d1;
};

/// Archimedean generator phi: [0, inf) -> [0, 1] with pseudo-inverse psi.
///
/// Closed forms:
///   Gumbel          phi(t) = exp(-t^(1/theta)),        theta >= 1
///   Clayton         phi(t) = (1 + theta t)^(-1/theta),  theta > 0
///   Joe             phi(t) = 1 - (1 - e^-t)^(1/theta), theta >= 1
///   ParetoType      phi(t) = (1 + t)^(-theta),          theta > 0
///   UnitExponential phi(t) = exp(-t)
///
/// Parameters are validated at construction. Values are immutable and cheap to copy.
class Generator {
 public:
  static Generator gumbel(double theta, int dimension_hint = 2);
  static Generator clayton(double alpha, int dimension_hint = 2);
  static Generator joe(double theta, int dimension_hint = 2);
  static Generator pareto_type(double theta, int dimension_hint = 2);
  static Generator unit_exponential(int dimension_hint = 2);
  static Generator custom(CustomGenerator spec, int dimension_hint = 2);
  /// Dispatch on family; theta is ignored for UnitExponential.
  static Generator make(Family family, double theta, int dimension_hint = 2);

  Family family() const { return family_; }
  double theta() const { return theta_; }
  int dimension_hint() const { return dimension_hint_; }
  std::string name() const;

  /// Requires finite t >= 0.
  double phi(double t) const;
  /// 1 - phi(t) without cancellation for small t.
  double one_minus_phi(double t) const;
  /// Requires 0 < u <= 1; psi(1) = 0.
  double psi(double u) const;
  /// Requires t > 0.
  double phi_d1(double t) const;
  double phi_d2(double t) const;
  /// d psi / du, requires 0 < u <= 1.
  double psi_d1(double u) const;

  // Criterion functions of the sample-extreme ordering theorems.
  double rh_ratio(double t) const;  // t phi'(t) / phi(t)
  double hr_ratio(double t) const;  // t phi'(t) / (1 - phi(t))
  double lr_ratio(double t) const;  // t phi''(t) / phi'(t)

 private:
  Generator(Family family, double theta, int dimension_hint);

  Family family_;
  double theta_;
  int dimension_hint_;
  std::shared_ptr<const CustomGenerator> custom_;
};

/// Numerical p-monotonicity diagnostic: sign pattern of derivatives up to order
/// min(n-2, 4) plus convexity of the top one on the grid.
CheckReport check_n_monotone(const Generator& g, int n, const Grid& grid);

/// Law of the radial part R > 0, given by its CDF; point masses are kept exact.
class RadialLaw {
 public:
  static RadialLaw point_mass(double r0);
  /// Gamma(shape, rate) with integer shape; its Williamson n-transform with n = shape is exp(-rate x).
  static RadialLaw erlang(int shape, double rate = 1.0);
  static RadialLaw from_cdf(std::function<double(double)> cdf, std::string name = "custom");

  double cdf(double r) const { return cdf_(r); }
  std::optional<double> atom() const { return atom_; }
  const std::string& name() const { return name_; }
  /// Smallest r (to bisection accuracy) with cdf(r) >= p.
  double quantile(double p) const;

 private:
  RadialLaw() = default;
  std::function<double(double)> cdf_;
  std::optional<double> atom_;
  std::string name_;
};

/// Williamson-type radial representation phi(x) = int_x^inf (1 - x/r)^(n-1) dF(r).
/// Integrated on (x, R_max) with R_max the 1 - 1e-10 quantile; point masses use the closed form.
double williamson_phi(const RadialLaw& radial, int n, double x, const QuadratureSpec& quadrature = {});

}  // namespace archimax
