#pragma once

#include <Eigen/Core>

#include "archimax/check_report.hpp"
#include "archimax/generators.hpp"
#include "archimax/tail_dependence.hpp"

namespace archimax {

/// Smallest argument passed to psi; strict generators have psi(0) = inf.
inline constexpr double kUnitClip = 1e-12;

/// Archimax copula C(u) = phi(ell(psi(u_1), ..., psi(u_n))).
class ArchimaxCopula {
 public:
  /// Throws std::invalid_argument if tail.dimension() != dimension or dimension < 2.
  /// Logs a warning (never rejects) when dimension exceeds the generator's dimension_hint.
  ArchimaxCopula(Generator generator, TailDependence tail, int dimension);
  /// Dimension taken from the tail.
  ArchimaxCopula(Generator generator, TailDependence tail);

  const Generator& generator() const { return generator_; }
  const TailDependence& tail() const { return tail_; }
  int dimension() const { return dimension_; }
  std::string name() const;

  /// u in [0, 1]^n. Any exact zero gives 0; other coordinates are clipped to [1e-12, 1].
  double cdf(const Eigen::Ref<const Eigen::VectorXd>& u) const;
  /// The same functional form used as the survival copula of the lifetimes.
  double survival_cdf(const Eigen::Ref<const Eigen::VectorXd>& u) const { return cdf(u); }
  /// phi[ ||psi(u)|| * A(psi(u) / ||psi(u)||) ], the Pickands-form evaluation.
  double cdf_pickands_form(const Eigen::Ref<const Eigen::VectorXd>& u) const;
  /// phi(k psi(v) A_k): the k-variate copula on the diagonal (v, ..., v).
  double diagonal(double v, int k) const;

 private:
  Eigen::VectorXd psi_vector(const Eigen::Ref<const Eigen::VectorXd>& u) const;

  Generator generator_;
  TailDependence tail_;
  int dimension_;
};

/// phi(sum psi(u_i)) evaluated directly; requires a Sum tail.
double archimedean_reduction(const ArchimaxCopula& c, const Eigen::Ref<const Eigen::VectorXd>& u);
/// exp(-ell(-ln u_1, ..., -ln u_n)); requires the UnitExponential generator.
double extreme_value_reduction(const ArchimaxCopula& c, const Eigen::Ref<const Eigen::VectorXd>& u);

/// Groundedness, uniform margins and the n-increasing rectangle inequality on random boxes.
/// The rectangle check runs only for dimension <= 4 (2^n corners per box).
CheckReport check_copula_axioms(const ArchimaxCopula& c, int trials, unsigned long long seed);

/// max(sum u - n + 1, 0) <= C(u) <= min(u) on random points, tolerance 1e-12.
CheckReport check_frechet_bounds(const ArchimaxCopula& c, int trials, unsigned long long seed);

/// [C(u^(1/k))]^k == C(u) within 1e-10. For non-extreme-value generators the verdict is
/// Inconclusive and metric carries the largest deviation found.
CheckReport max_stability_check(const ArchimaxCopula& c, int k, int trials, unsigned long long seed);

}  // namespace archimax
