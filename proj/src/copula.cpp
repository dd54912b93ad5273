#include "archimax/copula.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "archimax/format.hpp"
#include "archimax/log.hpp"

namespace archimax {

ArchimaxCopula::ArchimaxCopula(Generator generator, TailDependence tail, int dimension)
    : generator_(std::move(generator)), tail_(std::move(tail)), dimension_(dimension) {
  if (dimension < 2) throw std::invalid_argument("copula: dimension must be >= 2");
  if (tail_.dimension() != dimension) {
    throw std::invalid_argument("copula: tail dimension " + std::to_string(tail_.dimension()) +
                                " != copula dimension " + std::to_string(dimension));
  }
  if (dimension > generator_.dimension_hint()) {
    log::warn("copula " + name() + ": dimension " + std::to_string(dimension) + " exceeds generator dimension_hint " +
              std::to_string(generator_.dimension_hint()) + "; n-monotonicity is not guaranteed");
  }
}

ArchimaxCopula::ArchimaxCopula(Generator generator, TailDependence tail)
    : ArchimaxCopula(generator, tail, tail.dimension()) {}

std::string ArchimaxCopula::name() const { return generator_.name() + "+" + tail_.name(); }

Eigen::VectorXd ArchimaxCopula::psi_vector(const Eigen::Ref<const Eigen::VectorXd>& u) const {
  Eigen::VectorXd v(u.size());
  for (Eigen::Index i = 0; i < u.size(); ++i) v[i] = generator_.psi(std::clamp(u[i], kUnitClip, 1.0));
  return v;
}

namespace {

void check_point(const Eigen::Ref<const Eigen::VectorXd>& u, int dimension, const char* where) {
  if (u.size() != dimension) {
    throw std::invalid_argument(std::string(where) + ": expected dimension " + std::to_string(dimension) + ", got " +
                                std::to_string(u.size()));
  }
  for (Eigen::Index i = 0; i < u.size(); ++i) {
    if (!(u[i] >= 0.0 && u[i] <= 1.0)) {
      throw std::domain_error(std::string(where) + ": coordinates must lie in [0, 1]");
    }
  }
}

}  // namespace

double ArchimaxCopula::cdf(const Eigen::Ref<const Eigen::VectorXd>& u) const {
  check_point(u, dimension_, "cdf");
  if ((u.array() == 0.0).any()) return 0.0;
  return generator_.phi(tail_.ell(psi_vector(u)));
}

double ArchimaxCopula::cdf_pickands_form(const Eigen::Ref<const Eigen::VectorXd>& u) const {
  check_point(u, dimension_, "cdf_pickands_form");
  if ((u.array() == 0.0).any()) return 0.0;
  const Eigen::VectorXd p = psi_vector(u);
  const double norm = p.sum();
  if (norm == 0.0) return 1.0;
  Eigen::VectorXd w = p / norm;
  w /= w.sum();
  return generator_.phi(norm * tail_.pickands(w));
}

double ArchimaxCopula::diagonal(double v, int k) const {
  if (k < 1) throw std::invalid_argument("diagonal: k must be >= 1");
  if (!(v >= 0.0 && v <= 1.0)) throw std::domain_error("diagonal: v must lie in [0, 1]");
  if (v == 0.0) return 0.0;
  return generator_.phi(k * generator_.psi(std::max(v, kUnitClip)) * tail_.diagonal_A(k));
}

double archimedean_reduction(const ArchimaxCopula& c, const Eigen::Ref<const Eigen::VectorXd>& u) {
  if (c.tail().kind() != TailKind::Sum) {
    throw std::invalid_argument("archimedean_reduction: tail must be Sum, got " + c.tail().name());
  }
  check_point(u, c.dimension(), "archimedean_reduction");
  if ((u.array() == 0.0).any()) return 0.0;
  double s = 0.0;
  for (Eigen::Index i = 0; i < u.size(); ++i) s += c.generator().psi(std::max(u[i], kUnitClip));
  return c.generator().phi(s);
}

double extreme_value_reduction(const ArchimaxCopula& c, const Eigen::Ref<const Eigen::VectorXd>& u) {
  if (c.generator().family() != Family::UnitExponential) {
    throw std::invalid_argument("extreme_value_reduction: generator must be UnitExponential");
  }
  check_point(u, c.dimension(), "extreme_value_reduction");
  if ((u.array() == 0.0).any()) return 0.0;
  Eigen::VectorXd x(u.size());
  for (Eigen::Index i = 0; i < u.size(); ++i) x[i] = -std::log(std::max(u[i], kUnitClip));
  return std::exp(-c.tail().ell(x));
}

CheckReport check_copula_axioms(const ArchimaxCopula& c, int trials, unsigned long long seed) {
  if (trials < 1) throw std::invalid_argument("check_copula_axioms: trials must be >= 1");
  constexpr double kMarginTol = 1e-12;
  constexpr double kVolumeTol = 1e-10;
  const int n = c.dimension();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> index(0, n - 1);

  const auto finish = [&](CheckReport r) {
    r.seed = seed;
    return r;
  };

  const double top = c.cdf(Eigen::VectorXd::Ones(n));
  if (std::abs(top - 1.0) > kMarginTol) {
    return finish(CheckReport::fail("copula_axioms", kMarginTol,
                                    Witness{Eigen::VectorXd::Ones(n), Eigen::VectorXd::Constant(1, top)},
                                    "C(1, ..., 1) != 1"));
  }

  double worst_volume = INFINITY;
  for (int trial = 0; trial < trials; ++trial) {
    Eigen::VectorXd u(n);
    for (int i = 0; i < n; ++i) u[i] = unit(rng);

    Eigen::VectorXd grounded = u;
    grounded[index(rng)] = 0.0;
    const double g = c.cdf(grounded);
    if (g != 0.0) {
      return finish(CheckReport::fail("copula_axioms", kMarginTol, Witness{grounded, Eigen::VectorXd::Constant(1, g)},
                                      "groundedness violated"));
    }

    const int j = index(rng);
    Eigen::VectorXd margin = Eigen::VectorXd::Ones(n);
    margin[j] = u[j];
    const double m = c.cdf(margin);
    if (std::abs(m - u[j]) > kMarginTol) {
      return finish(CheckReport::fail("copula_axioms", kMarginTol, Witness{margin, Eigen::Vector2d(m, u[j])},
                                      "margin " + std::to_string(j) + " not uniform"));
    }

    if (n <= 4) {
      Eigen::VectorXd lo(n), hi(n);
      for (int i = 0; i < n; ++i) {
        const double a = unit(rng), b = unit(rng);
        lo[i] = std::min(a, b);
        hi[i] = std::max(a, b);
      }
      double volume = 0.0;
      Eigen::VectorXd corner(n);
      for (int mask = 0; mask < (1 << n); ++mask) {
        int lows = 0;
        for (int i = 0; i < n; ++i) {
          const bool low = (mask >> i) & 1;
          corner[i] = low ? lo[i] : hi[i];
          lows += low;
        }
        volume += ((lows % 2 == 0) ? 1.0 : -1.0) * c.cdf(corner);
      }
      worst_volume = std::min(worst_volume, volume);
      if (volume < -kVolumeTol) {
        Eigen::VectorXd box(2 * n);
        box << lo, hi;
        return finish(CheckReport::fail("copula_axioms", kVolumeTol, Witness{box, Eigen::VectorXd::Constant(1, volume)},
                                        "negative rectangle volume; point = (lo, hi)"));
      }
    }
  }
  CheckReport r = CheckReport::pass("copula_axioms", kVolumeTol);
  r.metric = worst_volume;
  if (n > 4) r.add_note("rectangle inequality skipped for dimension > 4");
  return finish(r);
}

CheckReport check_frechet_bounds(const ArchimaxCopula& c, int trials, unsigned long long seed) {
  if (trials < 1) throw std::invalid_argument("check_frechet_bounds: trials must be >= 1");
  constexpr double kTol = 1e-12;
  const int n = c.dimension();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double margin = INFINITY;
  for (int trial = 0; trial < trials; ++trial) {
    Eigen::VectorXd u(n);
    for (int i = 0; i < n; ++i) u[i] = unit(rng);
    const double value = c.cdf(u);
    const double lower = std::max(u.sum() - n + 1.0, 0.0);
    const double upper = u.minCoeff();
    margin = std::min({margin, value - lower, upper - value});
    if (value < lower - kTol || value > upper + kTol) {
      CheckReport r = CheckReport::fail("frechet_bounds", kTol, Witness{u, Eigen::Vector3d(lower, value, upper)});
      r.seed = seed;
      return r;
    }
  }
  CheckReport r = CheckReport::pass("frechet_bounds", kTol);
  r.metric = margin;
  r.seed = seed;
  return r;
}

CheckReport max_stability_check(const ArchimaxCopula& c, int k, int trials, unsigned long long seed) {
  if (k < 2) throw std::invalid_argument("max_stability_check: k must be >= 2");
  if (trials < 1) throw std::invalid_argument("max_stability_check: trials must be >= 1");
  constexpr double kTol = 1e-10;
  const int n = c.dimension();
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.01, 0.99);
  double worst = 0.0;
  Eigen::VectorXd worst_point;
  Eigen::Vector2d worst_values;
  for (int trial = 0; trial < trials; ++trial) {
    Eigen::VectorXd u(n);
    for (int i = 0; i < n; ++i) u[i] = unit(rng);
    const Eigen::VectorXd root = u.array().pow(1.0 / k);
    const double lhs = std::pow(c.cdf(root), k);
    const double rhs = c.cdf(u);
    const double dev = std::abs(lhs - rhs);
    if (dev >= worst) {
      worst = dev;
      worst_point = u;
      worst_values = Eigen::Vector2d(lhs, rhs);
    }
  }
  const bool ev = c.generator().family() == Family::UnitExponential;
  CheckReport r;
  if (!ev) {
    r = CheckReport::inconclusive("max_stability", kTol,
                                  "generator is not extreme-value; reporting measured deviation only");
    r.witness = Witness{worst_point, worst_values};
  } else if (worst > kTol) {
    r = CheckReport::fail("max_stability", kTol, Witness{worst_point, worst_values});
  } else {
    r = CheckReport::pass("max_stability", kTol);
  }
  r.metric = worst;
  r.seed = seed;
  r.add_note("k=" + std::to_string(k));
  return r;
}

}  // namespace archimax
