#pragma once

#include "archimax/check_report.hpp"
#include "archimax/grid.hpp"
#include "archimax/order_stats.hpp"
#include "archimax/stochastic_orders.hpp"

namespace archimax {

struct TheoremOptions {
  Grid criterion_grid = Grid::log(1e-4, 1e2, 500);
  double tolerance = kMonotoneTol;
};

/// Maxima: X_{n-1:n} <= X_{n:n} <= X_{n+1:n+1} in the order `part` (Rh, Hr or Lr), compared
/// with the matching generator criterion. Pass means all three verdicts agree; parts holds
/// the criterion report followed by the two empirical pair reports.
CheckReport theorem41_check(const ExchangeableSample& s, int n, Order part, const Grid& grid,
                            const TheoremOptions& options = {});

/// Minima: X_{1:n+1} <= X_{1:n} <= X_{2:n}. Hr pairs with the t phi'/phi criterion and Rh with
/// t phi'/(1 - phi).
CheckReport theorem51_check(const ExchangeableSample& s, int n, Order part, const Grid& grid,
                            const TheoremOptions& options = {});

}  // namespace archimax
