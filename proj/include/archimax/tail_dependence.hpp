#pragma once

#include <Eigen/Core>
#include <functional>
#include <memory>
#include <string>
#include <string_view>

#include "archimax/check_report.hpp"

namespace archimax {

enum class TailKind { Logistic, Max, Sum, Custom };

std::string_view to_string(TailKind k);
/// Accepts logistic, max, sum.
TailKind parse_tail_kind(std::string_view name);

/// Stable tail dependence function ell on R_+^n.
///   Logistic(theta): (sum x_i^theta)^(1/theta), theta >= 1
///   Max:             max_i x_i   (comonotone)
///   Sum:             sum_i x_i   (Archimedean case)
/// Custom wraps an arbitrary function and exists for test doubles; it is not validated.
class TailDependence {
 public:
  static TailDependence logistic(double theta, int dimension);
  static TailDependence max(int dimension);
  static TailDependence sum(int dimension);
  static TailDependence custom(std::function<double(const Eigen::VectorXd&)> ell, int dimension,
                               std::string name = "custom");
  static TailDependence make(TailKind kind, double theta, int dimension);

  TailKind kind() const { return kind_; }
  double theta() const { return theta_; }
  int dimension() const { return dimension_; }
  std::string name() const;
  /// Same family in another dimension (custom tails keep their function).
  TailDependence with_dimension(int dimension) const;
  /// Same kind and parameter; dimension is not compared.
  bool same_family(const TailDependence& other) const;

  /// Requires len(x) == dimension and x >= 0.
  double ell(const Eigen::Ref<const Eigen::VectorXd>& x) const;
  /// Pickands function A(w) = ell(w) on the unit simplex; result checked against [1/n, 1].
  double pickands(const Eigen::Ref<const Eigen::VectorXd>& w) const;
  /// A_k = A(1/k, ..., 1/k) for the k-variate member of the family; A_1 = 1.
  double diagonal_A(int k) const;

 private:
  TailDependence(TailKind kind, double theta, int dimension);

  double eval(const Eigen::Ref<const Eigen::VectorXd>& x) const;

  TailKind kind_;
  double theta_;
  int dimension_;
  std::shared_ptr<const std::function<double(const Eigen::VectorXd&)>> custom_;
  std::string custom_name_;
};

/// Randomised check of homogeneity, unit normalisation and the alternating-sign
/// box inequality for |J| in {1, 2}.
CheckReport check_stdf_axioms(const TailDependence& td, int trials, unsigned long long seed);

}  // namespace archimax
