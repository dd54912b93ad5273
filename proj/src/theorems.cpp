#include "archimax/theorems.hpp"

#include <stdexcept>
#include <string>

namespace archimax {

namespace {

CheckReport run_criterion(const Generator& g, Order part, const TheoremOptions& o) {
  switch (part) {
    case Order::Rh: return criterion_rh(g, o.criterion_grid, o.tolerance);
    case Order::Hr: return criterion_hr(g, o.criterion_grid, o.tolerance);
    case Order::Lr: return criterion_lr(g, o.criterion_grid, o.tolerance);
    case Order::St: break;
  }
  throw std::invalid_argument("theorem check: part must be rh, hr or lr");
}

// Function of x for order statistic `which` in the representation `part` expects.
ScalarFunction representation(const ExchangeableSample& s, OrderStat which, Order part) {
  switch (part) {
    case Order::Rh: return [&s, which](double x) { return cdf_order_stat(s, which, x); };
    case Order::Hr:
    case Order::St: return [&s, which](double x) { return sf_order_stat(s, which, x); };
    case Order::Lr: return [&s, which](double x) { return pdf_order_stat(s, which, x); };
  }
  return {};
}

CheckReport concordance(std::string name, CheckReport crit, CheckReport lower, CheckReport upper, const Grid& grid,
                        double tol) {
  CheckReport report;
  report.check = std::move(name);
  report.tolerance = tol;
  report.grid = grid;
  report.notes = "criterion=" + std::string(to_string(crit.verdict)) +
                 " lower_pair=" + std::string(to_string(lower.verdict)) +
                 " upper_pair=" + std::string(to_string(upper.verdict));

  const bool any_inconclusive = crit.verdict == Verdict::Inconclusive || lower.verdict == Verdict::Inconclusive ||
                                upper.verdict == Verdict::Inconclusive;
  if (any_inconclusive) {
    report.verdict = Verdict::Inconclusive;
  } else if (crit.verdict == lower.verdict && crit.verdict == upper.verdict) {
    report.verdict = Verdict::Pass;
    report.metric = crit.passed() ? 1.0 : 0.0;
  } else {
    report.verdict = Verdict::Fail;
    for (const CheckReport* part : {&crit, &lower, &upper}) {
      if (part->witness) {
        report.witness = part->witness;
        break;
      }
    }
    report.add_note("criterion and empirical verdicts disagree");
  }
  report.parts = {std::move(crit), std::move(lower), std::move(upper)};
  return report;
}

void require_n(int n, const char* where) {
  if (n < 2) throw std::invalid_argument(std::string(where) + ": n must be >= 2");
}

}  // namespace

CheckReport theorem41_check(const ExchangeableSample& s, int n, Order part, const Grid& grid,
                            const TheoremOptions& options) {
  require_n(n, "theorem41_check");
  CheckReport crit = run_criterion(s.copula.generator(), part, options);
  CheckReport lower = verify_order(representation(s, OrderStat::second_max(n), part),
                                   representation(s, OrderStat::max(n), part), part, grid, options.tolerance);
  lower.check = "X" + std::to_string(n - 1) + ":" + std::to_string(n) + "<=X" + std::to_string(n) + ":" +
                std::to_string(n);
  CheckReport upper = verify_order(representation(s, OrderStat::max(n), part),
                                   representation(s, OrderStat::max(n + 1), part), part, grid, options.tolerance);
  upper.check = "X" + std::to_string(n) + ":" + std::to_string(n) + "<=X" + std::to_string(n + 1) + ":" +
                std::to_string(n + 1);
  return concordance("theorem41_" + std::string(to_string(part)), std::move(crit), std::move(lower),
                     std::move(upper), grid, options.tolerance);
}

CheckReport theorem51_check(const ExchangeableSample& s, int n, Order part, const Grid& grid,
                            const TheoremOptions& options) {
  require_n(n, "theorem51_check");
  Order criterion_kind = part;
  if (part == Order::Hr) criterion_kind = Order::Rh;
  if (part == Order::Rh) criterion_kind = Order::Hr;
  CheckReport crit = run_criterion(s.copula.generator(), criterion_kind, options);
  CheckReport lower = verify_order(representation(s, OrderStat::min(n + 1), part),
                                   representation(s, OrderStat::min(n), part), part, grid, options.tolerance);
  lower.check = "X1:" + std::to_string(n + 1) + "<=X1:" + std::to_string(n);
  CheckReport upper = verify_order(representation(s, OrderStat::min(n), part),
                                   representation(s, OrderStat::second_min(n), part), part, grid, options.tolerance);
  upper.check = "X1:" + std::to_string(n) + "<=X2:" + std::to_string(n);
  return concordance("theorem51_" + std::string(to_string(part)), std::move(crit), std::move(lower),
                     std::move(upper), grid, options.tolerance);
}

}  // namespace archimax
