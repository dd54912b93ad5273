#include "archimax/stochastic_orders.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "archimax/format.hpp"

namespace archimax {

std::string_view to_string(Order o) {
  switch (o) {
    case Order::St: return "st";
    case Order::Hr: return "hr";
    case Order::Rh: return "rh";
    case Order::Lr: return "lr";
  }
  return "?";
}

Order parse_order(std::string_view name) {
  std::string v(name);
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
  if (v == "st") return Order::St;
  if (v == "hr") return Order::Hr;
  if (v == "rh") return Order::Rh;
  if (v == "lr") return Order::Lr;
  throw std::invalid_argument("unknown order '" + std::string(name) + "' (expected st|hr|rh|lr)");
}

namespace {

CheckReport check_monotone(const std::string& name, const Eigen::VectorXd& t, const Eigen::VectorXd& v, double tol,
                           bool increasing) {
  CheckReport report = CheckReport::pass(name, tol);
  double worst = 0.0;
  for (Eigen::Index i = 1; i < v.size(); ++i) {
    const double step = increasing ? v[i] - v[i - 1] : v[i - 1] - v[i];
    const double slack = tol * (1.0 + std::abs(v[i - 1]));
    worst = std::min(worst, step);
    if (step < -slack) {
      Eigen::VectorXd point(2), values(2);
      point << t[i - 1], t[i];
      values << v[i - 1], v[i];
      CheckReport r = CheckReport::fail(name, tol, Witness{point, values},
                                        increasing ? "sequence decreases between the witness points"
                                                   : "sequence increases between the witness points");
      r.metric = step;
      return r;
    }
  }
  report.metric = worst;
  return report;
}

CheckReport criterion(const std::string& name, const Generator& g, const Grid& grid, double tol, bool increasing,
                      double (Generator::*ratio)(double) const) {
  grid.validate();
  if (!(grid.lo > 0.0)) throw std::invalid_argument(name + ": grid must lie in (0, inf)");
  const Eigen::VectorXd t = grid.points();
  Eigen::VectorXd v(t.size());
  for (Eigen::Index i = 0; i < t.size(); ++i) {
    v[i] = (g.*ratio)(t[i]);
    if (!std::isfinite(v[i])) {
      CheckReport r = CheckReport::inconclusive(
          name, tol, "ratio not finite at t=" + format_double(t[i]) + " (vanishing denominator)");
      r.grid = grid;
      return r;
    }
  }
  CheckReport r = check_monotone(name, t, v, tol, increasing);
  r.grid = grid;
  return r;
}

}  // namespace

CheckReport check_non_increasing(const std::string& name, const Eigen::VectorXd& t, const Eigen::VectorXd& values,
                                 double tol) {
  return check_monotone(name, t, values, tol, false);
}

CheckReport check_non_decreasing(const std::string& name, const Eigen::VectorXd& t, const Eigen::VectorXd& values,
                                 double tol) {
  return check_monotone(name, t, values, tol, true);
}

CheckReport criterion_rh(const Generator& g, const Grid& grid, double tol) {
  return criterion("criterion_rh", g, grid, tol, false, &Generator::rh_ratio);
}

CheckReport criterion_hr(const Generator& g, const Grid& grid, double tol) {
  return criterion("criterion_hr", g, grid, tol, true, &Generator::hr_ratio);
}

CheckReport criterion_lr(const Generator& g, const Grid& grid, double tol) {
  for (double t : grid.points()) {
    if (t > 0.0 && g.phi_d1(t) == 0.0) {
      CheckReport r = CheckReport::inconclusive("criterion_lr", tol, "phi'(t) = 0 at t=" + format_double(t));
      r.grid = grid;
      return r;
    }
  }
  return criterion("criterion_lr", g, grid, tol, false, &Generator::lr_ratio);
}

CheckReport verify_order(const ScalarFunction& fa, const ScalarFunction& fb, Order order, const Grid& grid,
                         double tol) {
  grid.validate();
  const std::string name = "order_" + std::string(to_string(order));
  const Eigen::VectorXd x = grid.points();

  if (order == Order::St) {
    CheckReport report = CheckReport::pass(name, tol);
    report.grid = grid;
    double worst = INFINITY;
    for (double xi : x) {
      const double a = fa(xi), b = fb(xi);
      worst = std::min(worst, b - a);
      if (b < a - tol * (1.0 + std::abs(a))) {
        Eigen::VectorXd point(1), values(2);
        point << xi;
        values << a, b;
        CheckReport r = CheckReport::fail(name, tol, Witness{point, values}, "survival of b below survival of a");
        r.grid = grid;
        r.metric = b - a;
        return r;
      }
    }
    report.metric = worst;
    return report;
  }

  std::vector<double> ts, rs;
  ts.reserve(x.size());
  rs.reserve(x.size());
  int skipped = 0;
  for (double xi : x) {
    const double a = fa(xi), b = fb(xi);
    if (a == 0.0 && b == 0.0) {
      ++skipped;
      continue;
    }
    const double ratio = b / a;
    if (!std::isfinite(ratio)) {
      CheckReport r = CheckReport::inconclusive(name, tol, "ratio not finite at x=" + format_double(xi));
      r.grid = grid;
      return r;
    }
    ts.push_back(xi);
    rs.push_back(ratio);
  }
  const Eigen::Map<const Eigen::VectorXd> tv(ts.data(), static_cast<Eigen::Index>(ts.size()));
  const Eigen::Map<const Eigen::VectorXd> rv(rs.data(), static_cast<Eigen::Index>(rs.size()));
  CheckReport r = check_monotone(name, tv, rv, tol, true);
  r.grid = grid;
  if (skipped > 0) r.add_note("skipped " + std::to_string(skipped) + " points where both values are 0");
  return r;
}

}  // namespace archimax
