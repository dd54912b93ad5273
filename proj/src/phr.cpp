#include "archimax/phr.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "archimax/format.hpp"
#include "archimax/vector_orders.hpp"

namespace archimax {

namespace {

constexpr double kPairTol = 1e-9;
constexpr double kDominanceTol = 1e-12;
constexpr double kConclusionTol = 1e-12;

}  // namespace

PhrModel::PhrModel(ScalarSurvival b, Eigen::VectorXd e, ArchimaxCopula c)
    : baseline(std::move(b)), exponents(std::move(e)), copula(std::move(c)) {
  if (exponents.size() < 2) throw std::invalid_argument("PhrModel: need at least two exponents");
  if (!((exponents.array() > 0.0).all() && exponents.allFinite())) {
    throw std::invalid_argument("PhrModel: exponents must be finite and > 0");
  }
  if (copula.dimension() != exponents.size()) {
    throw std::invalid_argument("PhrModel: copula dimension " + std::to_string(copula.dimension()) +
                                " does not match " + std::to_string(exponents.size()) + " exponents");
  }
}

double phr_max_cdf(const PhrModel& m, double x) {
  const double log_b = m.baseline.log_survival(x);
  Eigen::VectorXd u(m.size());
  for (int i = 0; i < m.size(); ++i) u[i] = -std::expm1(m.exponents[i] * log_b);
  return m.copula.cdf(u);
}

std::vector<double> default_a_values(int n) {
  if (n < 2) throw std::invalid_argument("default_a_values: n must be >= 2");
  const double inv = 1.0 / n;
  return {inv, 0.5 * (1.0 + inv), 1.0};
}

CheckReport lemma_a1_conditions(const Generator& g1, const Generator& g2, const std::vector<double>& a_values,
                                const Grid& grid) {
  grid.validate();
  if (!(grid.lo > 0.0)) throw std::invalid_argument("lemma_a1_conditions: grid must lie in (0, inf)");
  for (double a : a_values) {
    if (!(a > 0.0 && a <= 1.0)) throw std::invalid_argument("lemma_a1_conditions: A values must lie in (0, 1]");
  }
  const auto h = [&](double t) { return g2.psi(g1.phi(t)); };
  const Eigen::VectorXd t = grid.points();

  CheckReport report = CheckReport::pass("lemma_a1_conditions", kPairTol);
  report.grid = grid;
  report.add_note("desk-scale numeric evidence on a finite grid, not a proof");
  try {
    CheckReport super = CheckReport::pass("superadditivity", kPairTol);
    super.grid = grid;
    double worst = INFINITY;
    for (Eigen::Index i = 0; i < t.size() && super.passed(); ++i) {
      for (Eigen::Index j = i; j < t.size(); ++j) {
        const double lhs = h(t[i] + t[j]);
        const double rhs = h(t[i]) + h(t[j]);
        const double margin = lhs - rhs;
        worst = std::min(worst, margin);
        if (margin < -kPairTol * (1.0 + std::abs(rhs))) {
          Eigen::VectorXd point(2), values(2);
          point << t[i], t[j];
          values << lhs, rhs;
          super = CheckReport::fail("superadditivity", kPairTol, Witness{point, values}, "h(s+t) < h(s) + h(t)");
          super.grid = grid;
          break;
        }
      }
    }
    super.metric = worst;

    CheckReport scaling = CheckReport::pass("scaling", kPairTol);
    scaling.grid = grid;
    worst = INFINITY;
    for (double a : a_values) {
      if (!scaling.passed()) break;
      for (double ti : t) {
        const double lhs = h(a * ti);
        const double rhs = a * h(ti);
        worst = std::min(worst, lhs - rhs);
        if (lhs - rhs < -kPairTol * (1.0 + std::abs(rhs))) {
          Eigen::VectorXd point(2), values(2);
          point << a, ti;
          values << lhs, rhs;
          scaling = CheckReport::fail("scaling", kPairTol, Witness{point, values}, "h(A t) < A h(t)");
          scaling.grid = grid;
          break;
        }
      }
    }
    scaling.metric = worst;

    if (!super.passed()) {
      report.verdict = Verdict::Fail;
      report.witness = super.witness;
    } else if (!scaling.passed()) {
      report.verdict = Verdict::Fail;
      report.witness = scaling.witness;
    }
    report.metric = std::min(super.metric, scaling.metric);
    report.parts = {std::move(super), std::move(scaling)};
  } catch (const std::domain_error& e) {
    CheckReport r = CheckReport::inconclusive("lemma_a1_conditions", kPairTol, e.what());
    r.grid = grid;
    return r;
  }
  return report;
}

CheckReport lemma_a1_dominance(const Generator& g1, const Generator& g2, const TailDependence& tail, int trials,
                               unsigned long long seed) {
  if (trials < 1) throw std::invalid_argument("lemma_a1_dominance: trials must be >= 1");
  const ArchimaxCopula c1(g1, tail), c2(g2, tail);
  const int d = tail.dimension();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.01, 0.99);

  CheckReport report = CheckReport::pass("lemma_a1_dominance", kDominanceTol);
  report.seed = seed;
  double worst = INFINITY;
  Eigen::VectorXd u(d);
  for (int trial = 0; trial < trials; ++trial) {
    for (int i = 0; i < d; ++i) u[i] = unif(rng);
    const double a = c1.cdf(u), b = c2.cdf(u);
    worst = std::min(worst, b - a);
    if (a > b + kDominanceTol) {
      Eigen::VectorXd values(2);
      values << a, b;
      CheckReport r = CheckReport::fail("lemma_a1_dominance", kDominanceTol, Witness{u, values}, "C1(u) > C2(u)");
      r.seed = seed;
      r.metric = b - a;
      return r;
    }
  }
  report.metric = worst;
  return report;
}

CheckReport theorem31_check(const PhrModel& x_model, const PhrModel& y_model, const Grid& grid) {
  grid.validate();
  if (!(x_model.baseline == y_model.baseline)) throw std::invalid_argument("theorem31_check: baselines differ");
  const TailDependence& tx = x_model.copula.tail();
  const TailDependence& ty = y_model.copula.tail();
  if (!tx.same_family(ty)) throw std::invalid_argument("theorem31_check: tail dependence functions differ");
  if (x_model.size() != y_model.size()) throw std::invalid_argument("theorem31_check: model sizes differ");
  const int n = x_model.size();

  CheckReport report;
  report.check = "theorem31";
  report.tolerance = kConclusionTol;
  report.grid = grid;

  CheckReport majorization = CheckReport::pass("beta_weakly_supermajorized_by_alpha", kMajorizationTol);
  if (!weak_super_majorize(y_model.exponents, x_model.exponents)) {
    Eigen::VectorXd point(2 * n);
    point << y_model.exponents, x_model.exponents;
    majorization = CheckReport::fail("beta_weakly_supermajorized_by_alpha", kMajorizationTol,
                                     Witness{point, Eigen::VectorXd()}, "point holds beta then alpha");
  }

  std::vector<double> a_values = default_a_values(n);
  for (int k = 2; k <= n; ++k) a_values.push_back(tx.diagonal_A(k));
  CheckReport generators =
      lemma_a1_conditions(x_model.copula.generator(), y_model.copula.generator(), a_values);

  const bool hypotheses = majorization.passed() && generators.passed();

  CheckReport conclusion = CheckReport::pass("F_Y>=F_X", kConclusionTol);
  conclusion.grid = grid;
  double worst = INFINITY;
  for (double xi : grid.points()) {
    const double fx = phr_max_cdf(x_model, xi);
    const double fy = phr_max_cdf(y_model, xi);
    worst = std::min(worst, fy - fx);
    if (fy < fx - kConclusionTol && conclusion.passed()) {
      Eigen::VectorXd point(1), values(2);
      point << xi;
      values << fx, fy;
      conclusion = CheckReport::fail("F_Y>=F_X", kConclusionTol, Witness{point, values}, "F_Y(x) < F_X(x)");
      conclusion.grid = grid;
    }
  }
  conclusion.metric = worst;
  report.metric = worst;

  if (!hypotheses) {
    report.verdict = Verdict::Inconclusive;
    report.notes = "hypotheses not satisfied; the comparison is not covered";
  } else if (!conclusion.passed()) {
    report.verdict = Verdict::Fail;
    report.witness = conclusion.witness;
  } else {
    report.verdict = Verdict::Pass;
    report.notes = "min margin " + format_double(worst);
  }
  report.parts = {std::move(majorization), std::move(generators), std::move(conclusion)};
  return report;
}

}  // namespace archimax
