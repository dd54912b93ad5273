#include "archimax/grid.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "archimax/format.hpp"

namespace archimax {

Grid Grid::make(double lo, double hi, int count, Spacing spacing) {
  Grid g{lo, hi, count, spacing};
  g.validate();
  return g;
}

void Grid::validate() const {
  if (!(std::isfinite(lo) && std::isfinite(hi)) || !(lo < hi)) {
    throw std::invalid_argument("grid: need finite lo < hi");
  }
  if (count < 2) throw std::invalid_argument("grid: count must be >= 2");
  if (spacing == Spacing::Log && !(lo > 0.0)) {
    throw std::invalid_argument("grid: log spacing needs lo > 0");
  }
}

Eigen::VectorXd Grid::points() const {
  validate();
  Eigen::VectorXd x(count);
  if (spacing == Spacing::Linear) {
    const double step = (hi - lo) / (count - 1);
    for (int i = 0; i < count; ++i) x[i] = lo + step * i;
  } else {
    const double a = std::log(lo);
    const double step = (std::log(hi) - a) / (count - 1);
    for (int i = 0; i < count; ++i) x[i] = std::exp(a + step * i);
  }
  x[0] = lo;
  x[count - 1] = hi;
  return x;
}

Grid Grid::parse(const std::string& text) {
  std::vector<std::string> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ':')) parts.push_back(item);
  if (parts.size() != 4) throw std::invalid_argument("grid: expected lo:hi:count:lin|log, got '" + text + "'");
  const double lo = parse_double(parts[0]);
  const double hi = parse_double(parts[1]);
  int count = 0;
  const auto [ptr, ec] = std::from_chars(parts[2].data(), parts[2].data() + parts[2].size(), count);
  if (ec != std::errc{} || ptr != parts[2].data() + parts[2].size()) {
    throw std::invalid_argument("grid: bad count '" + parts[2] + "'");
  }
  Spacing spacing;
  if (parts[3] == "lin") {
    spacing = Spacing::Linear;
  } else if (parts[3] == "log") {
    spacing = Spacing::Log;
  } else {
    throw std::invalid_argument("grid: spacing must be lin or log, got '" + parts[3] + "'");
  }
  return make(lo, hi, count, spacing);
}

std::string Grid::to_string() const {
  return format_double(lo) + ":" + format_double(hi) + ":" + std::to_string(count) + ":" +
         (spacing == Spacing::Linear ? "lin" : "log");
}

}  // namespace archimax
