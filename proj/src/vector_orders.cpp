#include "archimax/vector_orders.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace archimax {

namespace {

std::vector<double> sorted(const Eigen::VectorXd& v, bool descending) {
  std::vector<double> s(v.data(), v.data() + v.size());
  if (descending) {
    std::sort(s.begin(), s.end(), std::greater<>());
  } else {
    std::sort(s.begin(), s.end());
  }
  return s;
}

void require_same_length(const Eigen::VectorXd& b, const Eigen::VectorXd& a, const char* where) {
  if (b.size() != a.size()) {
    throw std::invalid_argument(std::string(where) + ": length mismatch " + std::to_string(b.size()) + " vs " +
                                std::to_string(a.size()));
  }
}

bool slack_ge(double lhs, double rhs) { return lhs >= rhs - kMajorizationTol * (1.0 + std::abs(rhs)); }

// Compares prefix sums: lhs_prefix >= rhs_prefix for every k.
bool prefix_dominates(const std::vector<double>& lhs, const std::vector<double>& rhs) {
  double sl = 0.0, sr = 0.0;
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    sl += lhs[i];
    sr += rhs[i];
    if (!slack_ge(sl, sr)) return false;
  }
  return true;
}

}  // namespace

bool weak_super_majorize(const Eigen::VectorXd& b, const Eigen::VectorXd& a) {
  require_same_length(b, a, "weak_super_majorize");
  return prefix_dominates(sorted(b, false), sorted(a, false));
}

bool weak_sub_majorize(const Eigen::VectorXd& b, const Eigen::VectorXd& a) {
  require_same_length(b, a, "weak_sub_majorize");
  return prefix_dominates(sorted(a, true), sorted(b, true));
}

bool majorize(const Eigen::VectorXd& b, const Eigen::VectorXd& a) {
  require_same_length(b, a, "majorize");
  const double sb = b.sum(), sa = a.sum();
  if (std::abs(sb - sa) > kMajorizationTol * (1.0 + std::abs(sa))) return false;
  return prefix_dominates(sorted(b, false), sorted(a, false));
}

bool p_smaller(const Eigen::VectorXd& b, const Eigen::VectorXd& a) {
  require_same_length(b, a, "p_smaller");
  if ((b.array() <= 0.0).any() || (a.array() <= 0.0).any()) {
    throw std::invalid_argument("p_smaller: entries must be strictly positive");
  }
  const std::vector<double> sb = sorted(b, false), sa = sorted(a, false);
  // Products compared in log space to avoid overflow.
  double lb = 0.0, la = 0.0;
  for (std::size_t i = 0; i < sb.size(); ++i) {
    lb += std::log(sb[i]);
    la += std::log(sa[i]);
    if (!slack_ge(lb, la)) return false;
  }
  return true;
}

CheckReport schur_convex_probe(const VectorFunction& f, int dimension, int trials, unsigned long long seed,
                               double tol) {
  if (dimension < 2) throw std::invalid_argument("schur_convex_probe: dimension must be >= 2");
  if (trials < 1) throw std::invalid_argument("schur_convex_probe: trials must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-2.0, 2.0);
  std::uniform_real_distribution<double> share(0.0, 1.0);
  std::uniform_int_distribution<int> index(0, dimension - 1);

  CheckReport report = CheckReport::pass("schur_convex", tol);
  report.seed = seed;
  double worst = -INFINITY;
  for (int trial = 0; trial < trials; ++trial) {
    Eigen::VectorXd y(dimension);
    for (int i = 0; i < dimension; ++i) y[i] = coord(rng);
    Eigen::VectorXd x = y;
    const int transfers = 1 + trial % 3;
    for (int m = 0; m < transfers; ++m) {
      int i = index(rng), j = index(rng);
      if (i == j) continue;
      if (x[i] < x[j]) std::swap(i, j);
      // Move part of the gap from the richer coordinate to the poorer one without overshooting.
      const double amount = 0.5 * share(rng) * (x[i] - x[j]);
      x[i] -= amount;
      x[j] += amount;
    }
    const double fx = f(x), fy = f(y);
    worst = std::max(worst, fx - fy);
    if (!(fx <= fy + tol)) {
      Eigen::VectorXd point(2 * dimension);
      point << x, y;
      Eigen::VectorXd values(2);
      values << fx, fy;
      CheckReport r = CheckReport::fail("schur_convex", tol, Witness{point, values},
                                        "f(x) > f(y) for x majorized by y; point holds x then y");
      r.seed = seed;
      r.metric = fx - fy;
      return r;
    }
  }
  report.metric = worst;
  return report;
}

}  // namespace archimax
