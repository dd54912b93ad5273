#pragma once

#include <Eigen/Core>
#include <functional>

#include "archimax/check_report.hpp"

namespace archimax {

inline constexpr double kMajorizationTol = 1e-12;

// Each predicate reads "b is ... than a". Length mismatch throws std::invalid_argument.

/// Ascending prefix sums of b dominate those of a.
bool weak_super_majorize(const Eigen::VectorXd& b, const Eigen::VectorXd& a);
/// Descending prefix sums of b are dominated by those of a.
bool weak_sub_majorize(const Eigen::VectorXd& b, const Eigen::VectorXd& a);
/// Equal totals and ascending prefix sums of b dominate those of a.
bool majorize(const Eigen::VectorXd& b, const Eigen::VectorXd& a);
/// Ascending prefix products of b dominate those of a. Entries must be > 0.
bool p_smaller(const Eigen::VectorXd& b, const Eigen::VectorXd& a);

using VectorFunction = std::function<double(const Eigen::VectorXd&)>;

/// Random pairs x majorized by y, built by Robin-Hood transfers from y; Pass iff f(x) <= f(y) + tol.
CheckReport schur_convex_probe(const VectorFunction& f, int dimension, int trials, unsigned long long seed,
                               double tol = 1e-12);

}  // namespace archimax
