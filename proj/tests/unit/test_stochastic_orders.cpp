#include <doctest.h>

#include <cmath>
#include <random>

#include "archimax/stochastic_orders.hpp"
#include "archimax/theorems.hpp"
#include "archimax/vector_orders.hpp"

using namespace archimax;

namespace {

const Grid kCriterionGrid = Grid::log(1e-4, 1e2, 500);

Eigen::VectorXd vec(std::initializer_list<double> v) {
  Eigen::VectorXd x(static_cast<Eigen::Index>(v.size()));
  Eigen::Index i = 0;
  for (double d : v) x[i++] = d;
  return x;
}

ExchangeableSample sample(const Generator& g, const TailDependence& t, int n) {
  return ExchangeableSample(Margin::uniform01(), ArchimaxCopula(g, t.with_dimension(n + 1)), n);
}

}  // namespace

TEST_CASE("generator criteria") {
  CHECK(criterion_rh(Generator::gumbel(4.0), kCriterionGrid, 1e-10).passed());
  CHECK(criterion_rh(Generator::pareto_type(4.0), kCriterionGrid, 1e-10).passed());
  CHECK(criterion_rh(Generator::unit_exponential(), kCriterionGrid).passed());
  CHECK(criterion_hr(Generator::gumbel(8.0), kCriterionGrid).passed());
  CHECK(criterion_hr(Generator::pareto_type(8.0), kCriterionGrid).passed());
  CHECK(criterion_hr(Generator::unit_exponential(), kCriterionGrid).passed());
  CHECK(criterion_lr(Generator::gumbel(5.0), kCriterionGrid).passed());
  CHECK(criterion_lr(Generator::pareto_type(5.0), kCriterionGrid).passed());
  CHECK(criterion_lr(Generator::unit_exponential(), kCriterionGrid).passed());
}

TEST_CASE("criteria detect a generator that violates them") {
  // Mixture 0.5 e^{-t} + 0.5 e^{-10 t}: completely monotone, t phi'/phi decreasing, t phi''/phi' not.
  CustomGenerator c;
  c.name = "exp_mixture";
  c.phi = [](double t) { return 0.5 * std::exp(-t) + 0.5 * std::exp(-10.0 * t); };
  c.phi_d1 = [](double t) { return -0.5 * std::exp(-t) - 5.0 * std::exp(-10.0 * t); };
  c.phi_d2 = [](double t) { return 0.5 * std::exp(-t) + 50.0 * std::exp(-10.0 * t); };
  c.psi = [phi = c.phi](double u) {
    double lo = 0.0, hi = 1.0;
    while (phi(hi) > u) hi *= 2.0;
    for (int i = 0; i < 200; ++i) {
      const double mid = 0.5 * (lo + hi);
      (phi(mid) > u ? lo : hi) = mid;
    }
    return 0.5 * (lo + hi);
  };
  const Generator g = Generator::custom(c);
  CHECK(criterion_rh(g, kCriterionGrid).passed());
  const CheckReport lr = criterion_lr(g, kCriterionGrid);
  CHECK(lr.verdict == Verdict::Fail);
  CHECK(lr.witness.has_value());
}

TEST_CASE("verify_order fixtures") {
  const Grid g = unit_interval_grid(400);
  const auto sf44 = [](double x) { return 1.0 - std::pow(x, 4); };
  const auto sf55 = [](double x) { return 1.0 - std::pow(x, 5); };
  CHECK(verify_order(sf44, sf55, Order::Hr, g).passed());
  CHECK(verify_order(sf44, sf55, Order::St, g).passed());
  const auto f44 = [](double x) { return 4 * std::pow(x, 3); };
  const auto f55 = [](double x) { return 5 * std::pow(x, 4); };
  CHECK(verify_order(f44, f55, Order::Lr, g).passed());
  const CheckReport reversed = verify_order(f55, f44, Order::Lr, g);
  CHECK(reversed.verdict == Verdict::Fail);
  CHECK(reversed.witness.has_value());
  for (Order o : {Order::St, Order::Hr, Order::Rh, Order::Lr}) CHECK(verify_order(sf44, sf44, o, g).passed());

  const auto zero = [](double) { return 0.0; };
  const CheckReport skipped = verify_order(zero, zero, Order::Rh, g);
  CHECK(skipped.passed());
  CHECK(skipped.notes.find("skipped") != std::string::npos);
}

TEST_CASE("hr and rh each imply st") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> p(0.3, 6.0);
  const Grid g = unit_interval_grid(200);
  for (int i = 0; i < 200; ++i) {
    const double a = p(rng), b = p(rng);
    // Survival (1 - x^a) and CDF x^a of power laws on [0, 1].
    const auto sa = [a](double x) { return 1.0 - std::pow(x, a); };
    const auto sb = [b](double x) { return 1.0 - std::pow(x, b); };
    const auto fa = [a](double x) { return std::pow(x, a); };
    const auto fb = [b](double x) { return std::pow(x, b); };
    const bool st = verify_order(sa, sb, Order::St, g).passed();
    if (verify_order(sa, sb, Order::Hr, g).passed()) CHECK(st);
    if (verify_order(fa, fb, Order::Rh, g).passed()) CHECK(st);
  }
}

TEST_CASE("theorem checks on the paper instances") {
  const Grid grid = unit_interval_grid(400);
  CHECK(theorem41_check(sample(Generator::gumbel(4.0), TailDependence::logistic(4.0, 2), 4), 4, Order::Rh, grid)
            .passed());
  CHECK(theorem41_check(sample(Generator::gumbel(8.0), TailDependence::logistic(8.0, 2), 4), 4, Order::Hr, grid)
            .passed());
  CHECK(theorem41_check(sample(Generator::unit_exponential(), TailDependence::sum(2), 3), 3, Order::Lr, grid)
            .passed());
  CHECK(theorem51_check(sample(Generator::pareto_type(4.0), TailDependence::logistic(4.0, 2), 4), 4, Order::Hr,
                        grid)
            .passed());
  CHECK(theorem51_check(sample(Generator::pareto_type(8.0), TailDependence::logistic(8.0, 2), 4), 4, Order::Rh,
                        grid)
            .passed());
  const CheckReport r = theorem51_check(sample(Generator::pareto_type(5.0), TailDependence::logistic(5.0, 2), 4),
                                        4, Order::Lr, grid);
  CHECK(r.passed());
  REQUIRE(r.parts.size() == 3);
  for (const CheckReport& part : r.parts) CHECK(part.passed());
}

TEST_CASE("criterion and empirical verdicts agree on every shipped instance") {
  const Grid grid = unit_interval_grid(200);
  for (int n = 2; n <= 6; ++n) {
    for (const Generator& g : {Generator::gumbel(1.0), Generator::gumbel(3.0), Generator::clayton(0.5),
                               Generator::clayton(4.0), Generator::joe(1.5), Generator::joe(6.0),
                               Generator::pareto_type(0.5), Generator::pareto_type(5.0),
                               Generator::unit_exponential()}) {
      for (const TailDependence& t :
           {TailDependence::logistic(2.0, 2), TailDependence::logistic(7.0, 2), TailDependence::sum(2)}) {
        const ExchangeableSample s = sample(g, t, n);
        for (Order part : {Order::Rh, Order::Hr, Order::Lr}) {
          CAPTURE(s.copula.name());
          CAPTURE(n);
          CAPTURE(to_string(part));
          CHECK(theorem41_check(s, n, part, grid).passed());
          CHECK(theorem51_check(s, n, part, grid).passed());
        }
      }
    }
  }
}

TEST_CASE("majorization predicates") {
  CHECK(majorize(vec({1, 1, 1}), vec({0, 1, 2})));
  CHECK_FALSE(majorize(vec({0, 1, 2}), vec({1, 1, 1})));
  CHECK(weak_super_majorize(vec({1.5, 1.5}), vec({1, 2})));
  CHECK_FALSE(weak_super_majorize(vec({0.5, 0.5}), vec({2, 1})));
  CHECK(weak_sub_majorize(vec({1.5, 1.5}), vec({1, 2})));
  CHECK(p_smaller(vec({2, 2}), vec({1, 4})));
  CHECK(weak_super_majorize(vec({std::log(2.0), std::log(2.0)}), vec({std::log(1.0), std::log(4.0)})));
  CHECK_THROWS_AS(majorize(vec({1, 2}), vec({1, 2, 3})), std::invalid_argument);
  CHECK_THROWS_AS(p_smaller(vec({1, 0}), vec({1, 2})), std::invalid_argument);
}

TEST_CASE("majorization properties on random pairs") {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> pos(0.1, 5.0);
  std::uniform_int_distribution<int> len(2, 6);
  for (int i = 0; i < 500; ++i) {
    const int n = len(rng);
    Eigen::VectorXd a(n), b(n);
    for (int j = 0; j < n; ++j) {
      a[j] = pos(rng);
      b[j] = pos(rng);
    }
    // Make some pairs comparable so both branches are exercised.
    if (i % 3 == 0) b = Eigen::VectorXd::Constant(n, a.prod() > 0 ? std::exp(a.array().log().mean()) : 1.0);
    CHECK(p_smaller(b, a) == weak_super_majorize(b.array().log().matrix(), a.array().log().matrix()));
    Eigen::VectorXd m = Eigen::VectorXd::Constant(n, a.mean());
    if (i % 2 == 1) m = 0.5 * (a + Eigen::VectorXd::Constant(n, a.mean()));
    CHECK(majorize(m, a));
    if (majorize(b, a)) {
      CHECK(weak_super_majorize(b, a));
      CHECK(weak_sub_majorize(b, a));
    }
    if (majorize(m, a)) {
      CHECK(weak_super_majorize(m, a));
      CHECK(weak_sub_majorize(m, a));
    }
  }
}

TEST_CASE("Schur-convexity probe") {
  CHECK(schur_convex_probe([](const Eigen::VectorXd& x) { return x.maxCoeff(); }, 4, 500, 1).passed());
  CHECK(schur_convex_probe([](const Eigen::VectorXd& x) { return x.array().exp().sum(); }, 4, 500, 1).passed());
  const CheckReport r = schur_convex_probe([](const Eigen::VectorXd& x) { return -x.maxCoeff(); }, 4, 500, 1);
  CHECK(r.verdict == Verdict::Fail);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->point.size() == 8);
}
