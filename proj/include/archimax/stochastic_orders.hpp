#pragma once

#include <functional>
#include <string_view>

#include "archimax/check_report.hpp"
#include "archimax/generators.hpp"
#include "archimax/grid.hpp"

namespace archimax {

inline constexpr double kMonotoneTol = 1e-9;

enum class Order { St, Hr, Rh, Lr };

std::string_view to_string(Order o);
Order parse_order(std::string_view name);

using ScalarFunction = std::function<double(double)>;

/// Pass iff values are non-increasing along the sequence with slack tol * (1 + |v|).
CheckReport check_non_increasing(const std::string& name, const Eigen::VectorXd& t, const Eigen::VectorXd& values,
                                 double tol);
CheckReport check_non_decreasing(const std::string& name, const Eigen::VectorXd& t, const Eigen::VectorXd& values,
                                 double tol);

/// t phi'(t) / phi(t) non-increasing.
CheckReport criterion_rh(const Generator& g, const Grid& grid, double tol = kMonotoneTol);
/// t phi'(t) / (1 - phi(t)) non-decreasing.
CheckReport criterion_hr(const Generator& g, const Grid& grid, double tol = kMonotoneTol);
/// t phi''(t) / phi'(t) non-increasing.
CheckReport criterion_lr(const Generator& g, const Grid& grid, double tol = kMonotoneTol);

/// Checks a <= b in the given order. St and Hr take survival functions, Rh takes CDFs and
/// Lr takes densities. Points where both values vanish are skipped.
CheckReport verify_order(const ScalarFunction& fa, const ScalarFunction& fb, Order order, const Grid& grid,
                         double tol = kMonotoneTol);

}  // namespace archimax
