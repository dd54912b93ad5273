#include "archimax/quadrature.hpp"

#include <array>
#include <cmath>
#include <sstream>

namespace archimax {

namespace {

constexpr std::array<double, 8> kNodes = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kKronrodWeights = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
// Gauss weights for the odd-indexed Kronrod nodes (1, 3, 5, 7).
constexpr std::array<double, 4> kGaussWeights = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double value;
  double error;
};

Panel kronrod15(const std::function<double(double)>& f, double a, double b) {
  const double center = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const double fc = f(center);
  double kronrod = fc * kKronrodWeights[7];
  double gauss = fc * kGaussWeights[3];
  for (int i = 0; i < 7; ++i) {
    const double dx = half * kNodes[i];
    const double sum = f(center - dx) + f(center + dx);
    kronrod += kKronrodWeights[i] * sum;
    if (i % 2 == 1) gauss += kGaussWeights[i / 2] * sum;
  }
  return {kronrod * half, std::abs((kronrod - gauss) * half)};
}

struct State {
  const std::function<double(double)>& f;
  const QuadratureSpec& spec;
  int evaluations = 0;
  bool exhausted = false;
};

Panel refine(State& st, double a, double b, Panel whole, double tol, int depth) {
  if (whole.error <= tol || depth >= st.spec.max_depth) {
    if (whole.error > tol) st.exhausted = true;
    return whole;
  }
  if (st.evaluations > st.spec.max_evaluations) {
    st.exhausted = true;
    return whole;
  }
  const double mid = 0.5 * (a + b);
  const Panel left = kronrod15(st.f, a, mid);
  const Panel right = kronrod15(st.f, mid, b);
  st.evaluations += 30;
  const Panel l = refine(st, a, mid, left, 0.5 * tol, depth + 1);
  const Panel r = refine(st, mid, b, right, 0.5 * tol, depth + 1);
  return {l.value + r.value, l.error + r.error};
}

}  // namespace

QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureSpec& spec) {
  if (!(std::isfinite(a) && std::isfinite(b))) {
    throw std::invalid_argument("integrate: interval endpoints must be finite");
  }
  if (a == b) return {};
  if (b < a) {
    QuadratureResult r = integrate(f, b, a, spec);
    r.value = -r.value;
    return r;
  }
  State st{f, spec};
  const Panel first = kronrod15(f, a, b);
  st.evaluations = 15;
  const double tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(first.value));
  const Panel total = refine(st, a, b, first, tol, 0);
  QuadratureResult result{total.value, total.error, st.evaluations};
  const double final_tol = std::max(spec.abs_tol, spec.rel_tol * std::abs(total.value));
  if (!std::isfinite(total.value) || (st.exhausted && total.error > final_tol)) {
    std::ostringstream os;
    os << "integrate: no convergence on [" << a << ", " << b << "]: estimate " << total.value
       << ", error " << total.error << ", evaluations " << st.evaluations;
    throw QuadratureError(os.str(), result);
  }
  return result;
}

}  // namespace archimax
