#include <doctest.h>

#include <cmath>
#include <random>

#include "archimax/tail_dependence.hpp"

using namespace archimax;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> v) {
  Eigen::VectorXd x(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double d : v) x[i++] = d;
  return x;
}

}  // namespace

TEST_CASE("stdf values") {
  const TailDependence lg = TailDependence::logistic(4.0, 4);
  CHECK(lg.ell(vec({1, 0, 0, 0})) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(lg.ell(vec({1, 1, 1, 1})) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(lg.ell(Eigen::VectorXd::Zero(4)) == 0.0);
  CHECK(TailDependence::max(3).ell(vec({0.2, 0.7, 0.3})) == 0.7);
  CHECK(TailDependence::sum(3).ell(vec({0.2, 0.7, 0.3})) == doctest::Approx(1.2).epsilon(1e-15));
  CHECK_THROWS_AS(lg.ell(vec({1, 0, 0})), std::invalid_argument);
  CHECK_THROWS(lg.ell(vec({1, -0.1, 0, 0})));
  CHECK_THROWS_AS(TailDependence::logistic(0.5, 2), std::invalid_argument);
}

TEST_CASE("Pickands function") {
  CHECK(TailDependence::sum(3).pickands(vec({0.2, 0.3, 0.5})) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(TailDependence::logistic(4.0, 4).pickands(vec({0.25, 0.25, 0.25, 0.25})) ==
        doctest::Approx(std::pow(4.0, -0.75)).epsilon(1e-14));
  CHECK(TailDependence::max(2).pickands(vec({0.5, 0.5})) == 0.5);
  CHECK_THROWS(TailDependence::sum(2).pickands(vec({0.5, 0.6})));
}

TEST_CASE("diagonal values") {
  CHECK(TailDependence::logistic(4.0, 4).diagonal_A(4) == doctest::Approx(std::pow(4.0, -0.75)).epsilon(1e-15));
  CHECK(TailDependence::sum(2).diagonal_A(7) == 1.0);
  CHECK(TailDependence::logistic(1.0, 3).diagonal_A(3) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(TailDependence::max(2).diagonal_A(5) == doctest::Approx(0.2).epsilon(1e-15));
  for (double theta : {1.5, 2.0, 4.0, 9.0}) {
    const TailDependence td = TailDependence::logistic(theta, 2);
    for (int n = 2; n < 8; ++n) CHECK(td.diagonal_A(n + 1) <= td.diagonal_A(n));
  }
  const TailDependence one = TailDependence::logistic(1.0, 2);
  for (int n = 2; n <= 8; ++n) CHECK(one.diagonal_A(n) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("stdf axiom checker") {
  CHECK(check_stdf_axioms(TailDependence::logistic(2.5, 3), 500, 42).passed());
  const CheckReport sum = check_stdf_axioms(TailDependence::sum(4), 500, 42);
  CHECK(sum.passed());
  CHECK(std::abs(sum.metric) <= 1e-12);
  CHECK(check_stdf_axioms(TailDependence::max(3), 500, 42).passed());

  const TailDependence squares = TailDependence::custom(
      [](const Eigen::VectorXd& x) { return x.squaredNorm(); }, 3, "sum_of_squares");
  const CheckReport bad = check_stdf_axioms(squares, 200, 42);
  CHECK(bad.verdict == Verdict::Fail);
  CHECK(bad.witness.has_value());
}

TEST_CASE("stdf bounds, Pickands range and polar consistency") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int dim : {2, 3, 5}) {
    for (const TailDependence& td : {TailDependence::logistic(1.7, dim), TailDependence::logistic(6.0, dim),
                                     TailDependence::max(dim), TailDependence::sum(dim)}) {
      for (int i = 0; i < 1000; ++i) {
        Eigen::VectorXd x(dim);
        for (int j = 0; j < dim; ++j) x[j] = 3.0 * unit(rng);
        const double l = td.ell(x);
        CHECK(l >= x.maxCoeff() - 1e-12);
        CHECK(l <= x.sum() + 1e-12);
        const Eigen::VectorXd w = x / x.sum();
        const double a = td.pickands(w);
        CHECK(a >= 1.0 / dim - 1e-12);
        CHECK(a <= 1.0 + 1e-12);
        CHECK(std::abs(l - x.sum() * a) <= 1e-12 * l);
      }
    }
  }
}
