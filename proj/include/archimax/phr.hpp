#pragma once

#include <Eigen/Core>
#include <vector>

#include "archimax/check_report.hpp"
#include "archimax/copula.hpp"
#include "archimax/grid.hpp"
#include "archimax/survival.hpp"

namespace archimax {

/// Component i has survival baseline(x)^exponents[i]; components are joined by `copula`.
struct PhrModel {
  ScalarSurvival baseline;
  Eigen::VectorXd exponents;
  ArchimaxCopula copula;

  PhrModel(ScalarSurvival baseline, Eigen::VectorXd exponents, ArchimaxCopula copula);
  int size() const { return static_cast<int>(exponents.size()); }
};

/// CDF of the sample maximum. The Pickands value is taken at the actual normalized point,
/// so unequal exponents are handled exactly.
double phr_max_cdf(const PhrModel& m, double x);

/// {1/n, (1 + 1/n) / 2, 1}.
std::vector<double> default_a_values(int n);

inline Grid default_lemma_grid() { return Grid::log(1e-3, 1e2, 80); }

/// With h = psi2(phi1(.)): (1) h(s + t) >= h(s) + h(t) on the triangle s <= t of the grid,
/// (2) h(A t) >= A h(t) for each A in a_values. parts holds one report per condition.
CheckReport lemma_a1_conditions(const Generator& g1, const Generator& g2, const std::vector<double>& a_values,
                                const Grid& grid = default_lemma_grid());

/// C1(u) <= C2(u) at random points of [0.01, 0.99]^d, where Ci joins gi with `tail`.
CheckReport lemma_a1_dominance(const Generator& g1, const Generator& g2, const TailDependence& tail, int trials,
                               unsigned long long seed);

/// Compares X (model `x_model`, exponents alpha, generator phi1) with Y (`y_model`, beta, phi2).
/// Hypotheses: beta weakly super-majorized by alpha and the generator-pair conditions.
/// Conclusion: F_Y >= F_X on the grid. Failing hypotheses give Inconclusive.
CheckReport theorem31_check(const PhrModel& x_model, const PhrModel& y_model, const Grid& grid);

}  // namespace archimax
