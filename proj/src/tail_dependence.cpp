#include "archimax/tail_dependence.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>
#include <stdexcept>

#include "archimax/format.hpp"

namespace archimax {

std::string_view to_string(TailKind k) {
  switch (k) {
    case TailKind::Logistic: return "logistic";
    case TailKind::Max: return "max";
    case TailKind::Sum: return "sum";
    case TailKind::Custom: return "custom";
  }
  return "?";
}

TailKind parse_tail_kind(std::string_view name) {
  std::string v(name);
  std::transform(v.begin(), v.end(), v.begin(), [](unsigned char c) { return std::tolower(c); });
  if (v == "logistic") return TailKind::Logistic;
  if (v == "max") return TailKind::Max;
  if (v == "sum") return TailKind::Sum;
  throw std::invalid_argument("unknown tail kind '" + std::string(name) + "'");
}

TailDependence::TailDependence(TailKind kind, double theta, int dimension)
    : kind_(kind), theta_(theta), dimension_(dimension) {
  if (dimension < 1) throw std::invalid_argument("tail dependence: dimension must be >= 1");
  if (kind == TailKind::Logistic && !(std::isfinite(theta) && theta >= 1.0)) {
    throw std::invalid_argument("logistic tail: theta must be >= 1, got " + format_double(theta));
  }
}

TailDependence TailDependence::logistic(double theta, int dimension) {
  return TailDependence(TailKind::Logistic, theta, dimension);
}
TailDependence TailDependence::max(int dimension) { return TailDependence(TailKind::Max, std::nan(""), dimension); }
TailDependence TailDependence::sum(int dimension) { return TailDependence(TailKind::Sum, std::nan(""), dimension); }

TailDependence TailDependence::custom(std::function<double(const Eigen::VectorXd&)> ell, int dimension,
                                      std::string name) {
  if (!ell) throw std::invalid_argument("custom tail needs a function");
  TailDependence td(TailKind::Custom, std::nan(""), dimension);
  td.custom_ = std::make_shared<const std::function<double(const Eigen::VectorXd&)>>(std::move(ell));
  td.custom_name_ = std::move(name);
  return td;
}

TailDependence TailDependence::make(TailKind kind, double theta, int dimension) {
  switch (kind) {
    case TailKind::Logistic: return logistic(theta, dimension);
    case TailKind::Max: return max(dimension);
    case TailKind::Sum: return sum(dimension);
    case TailKind::Custom: break;
  }
  throw std::invalid_argument("TailDependence::make: custom tails need TailDependence::custom");
}

std::string TailDependence::name() const {
  switch (kind_) {
    case TailKind::Logistic: return "logistic(" + format_double(theta_) + ")";
    case TailKind::Custom: return custom_name_;
    default: return std::string(to_string(kind_));
  }
}

TailDependence TailDependence::with_dimension(int dimension) const {
  TailDependence td = *this;
  if (dimension < 1) throw std::invalid_argument("tail dependence: dimension must be >= 1");
  td.dimension_ = dimension;
  return td;
}

bool TailDependence::same_family(const TailDependence& other) const {
  if (kind_ != other.kind_) return false;
  if (kind_ == TailKind::Logistic) return theta_ == other.theta_;
  if (kind_ == TailKind::Custom) return custom_ == other.custom_;
  return true;
}

double TailDependence::eval(const Eigen::Ref<const Eigen::VectorXd>& x) const {
  switch (kind_) {
    case TailKind::Sum: return x.sum();
    case TailKind::Max: return x.size() == 0 ? 0.0 : x.maxCoeff();
    case TailKind::Logistic: {
      if (x.size() == 0) return 0.0;
      const double m = x.maxCoeff();
      if (m == 0.0) return 0.0;
      if (std::isinf(m)) return m;
      // Scale by the largest component so x^theta cannot overflow.
      double acc = 0.0;
      for (Eigen::Index i = 0; i < x.size(); ++i) acc += std::pow(x[i] / m, theta_);
      return m * std::pow(acc, 1.0 / theta_);
    }
    case TailKind::Custom: return (*custom_)(Eigen::VectorXd(x));
  }
  return std::nan("");
}

double TailDependence::ell(const Eigen::Ref<const Eigen::VectorXd>& x) const {
  if (x.size() != dimension_) {
    throw std::invalid_argument("ell: expected dimension " + std::to_string(dimension_) + ", got " +
                                std::to_string(x.size()));
  }
  for (Eigen::Index i = 0; i < x.size(); ++i) {
    if (!(x[i] >= 0.0) || std::isnan(x[i])) throw std::domain_error("ell: components must be >= 0");
  }
  return eval(x);
}

double TailDependence::pickands(const Eigen::Ref<const Eigen::VectorXd>& w) const {
  if (w.size() != dimension_) {
    throw std::invalid_argument("pickands: expected dimension " + std::to_string(dimension_));
  }
  if ((w.array() < 0.0).any() || std::abs(w.sum() - 1.0) > 1e-12) {
    throw std::domain_error("pickands: argument is not on the unit simplex");
  }
  const double a = eval(w);
  const double n = static_cast<double>(dimension_);
  if (a < 1.0 / n - 1e-12 || a > 1.0 + 1e-12) {
    throw std::runtime_error("pickands: value " + format_double(a) + " outside [1/n, 1]");
  }
  return a;
}

double TailDependence::diagonal_A(int k) const {
  if (k < 1) throw std::invalid_argument("diagonal_A: k must be >= 1");
  if (k == 1) return 1.0;
  switch (kind_) {
    case TailKind::Sum: return 1.0;
    case TailKind::Max: return 1.0 / k;
    case TailKind::Logistic: return std::pow(static_cast<double>(k), 1.0 / theta_ - 1.0);
    case TailKind::Custom: return (*custom_)(Eigen::VectorXd::Constant(k, 1.0 / k));
  }
  return std::nan("");
}

CheckReport check_stdf_axioms(const TailDependence& td, int trials, unsigned long long seed) {
  if (trials < 1) throw std::invalid_argument("check_stdf_axioms: trials must be >= 1");
  constexpr double kTol = 1e-10;
  const int n = td.dimension();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(0.0, 2.0);
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  std::uniform_real_distribution<double> step(0.0, 1.0);
  std::uniform_int_distribution<int> index(0, n - 1);

  const auto finish = [&](CheckReport r) {
    r.seed = seed;
    return r;
  };

  // (b) unit vectors
  for (int j = 0; j < n; ++j) {
    const Eigen::VectorXd e = Eigen::VectorXd::Unit(n, j);
    const double v = td.ell(e);
    if (std::abs(v - 1.0) > kTol) {
      return finish(CheckReport::fail("stdf_axioms", kTol, Witness{e, Eigen::VectorXd::Constant(1, v)},
                                      "unit normalisation ell(e_j) != 1"));
    }
  }

  double worst = -INFINITY;
  for (int trial = 0; trial < trials; ++trial) {
    Eigen::VectorXd x(n);
    for (int i = 0; i < n; ++i) x[i] = coord(rng);

    // (a) homogeneity
    const double c = scale(rng);
    const double lhs = td.ell(c * x);
    const double rhs = c * td.ell(x);
    if (std::abs(lhs - rhs) > kTol * (1.0 + std::abs(rhs))) {
      Eigen::VectorXd point(n + 1);
      point << x, c;
      return finish(CheckReport::fail("stdf_axioms", kTol, Witness{point, Eigen::Vector2d(lhs, rhs)},
                                      "homogeneity ell(c x) != c ell(x); point = (x, c)"));
    }

    // (c) |J| = 1: ell(x) - ell(x + h e_i) <= 0
    const int i = index(rng);
    const double hi = std::max(step(rng), 1e-3);
    Eigen::VectorXd xi = x;
    xi[i] += hi;
    const double base = td.ell(x);
    const double first = base - td.ell(xi);
    const double slack1 = kTol * (1.0 + std::abs(base));
    worst = std::max(worst, first);
    if (first > slack1) {
      return finish(CheckReport::fail("stdf_axioms", kTol, Witness{x, Eigen::Vector2d(first, hi)},
                                      "box inequality |J|=1 violated at coordinate " + std::to_string(i)));
    }

    // (c) |J| = 2
    if (n >= 2) {
      int j = index(rng);
      while (j == i) j = index(rng);
      const double hj = std::max(step(rng), 1e-3);
      Eigen::VectorXd xj = x;
      xj[j] += hj;
      Eigen::VectorXd xij = xi;
      xij[j] += hj;
      const double second = base - td.ell(xi) - td.ell(xj) + td.ell(xij);
      worst = std::max(worst, second);
      if (second > slack1) {
        Eigen::VectorXd point(n + 2);
        point << x, hi, hj;
        return finish(CheckReport::fail("stdf_axioms", kTol, Witness{point, Eigen::VectorXd::Constant(1, second)},
                                        "box inequality |J|=2 violated; point = (x, h_i, h_j)"));
      }
    }
  }
  CheckReport r = CheckReport::pass("stdf_axioms", kTol);
  r.metric = worst;
  r.add_note("box inequality checked for |J| <= 2 only");
  return finish(r);
}

}  // namespace archimax
