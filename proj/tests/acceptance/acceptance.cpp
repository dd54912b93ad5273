// Acceptance suite. Run with a criterion number to check one criterion, or without
// arguments to check all of them. Prints one PASS/FAIL line per criterion.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "archimax/copula.hpp"
#include "archimax/format.hpp"
#include "archimax/generators.hpp"
#include "archimax/order_stats.hpp"
#include "archimax/phr.hpp"
#include "archimax/quadrature.hpp"
#include "archimax/stochastic_orders.hpp"
#include "archimax/theorems.hpp"
#include "oracles.hpp"

using namespace archimax;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      if (!detail.empty()) detail += "; ";
      detail += what;
    }
  }
};

const Grid kCriterionGrid = Grid::log(1e-4, 1e2, 500);

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", v);
  return buf;
}

ExchangeableSample sample(const Generator& g, const TailDependence& t, int n) {
  return ExchangeableSample(Margin::uniform01(), ArchimaxCopula(g, t.with_dimension(n + 1)), n);
}

// Closed-form criterion curves of a generator family against the library ratios.
Outcome criterion_fixtures(Family family, const std::function<double(double, double)>& rh,
                           const std::function<double(double, double)>& hr,
                           const std::function<double(double, double)>& lr) {
  Outcome o;
  o.require(criterion_rh(Generator::make(family, 4.0), kCriterionGrid).passed(), "rh criterion at theta=4");
  o.require(criterion_hr(Generator::make(family, 8.0), kCriterionGrid).passed(), "hr criterion at theta=8");
  o.require(criterion_lr(Generator::make(family, 5.0), kCriterionGrid).passed(), "lr criterion at theta=5");
  double worst = 0.0;
  for (double theta : {4.0, 5.0, 8.0}) {
    const Generator g = Generator::make(family, theta);
    for (double t : {0.1, 1.0, 10.0}) {
      worst = std::max({worst, std::abs(g.rh_ratio(t) - rh(t, theta)), std::abs(g.hr_ratio(t) - hr(t, theta)),
                        std::abs(g.lr_ratio(t) - lr(t, theta))});
    }
  }
  o.require(worst <= 1e-10, "closed-form mismatch " + fmt(worst));
  if (o.pass) o.detail = "three criteria pass; max closed-form deviation " + fmt(worst);
  return o;
}

Outcome criterion1() {
  return criterion_fixtures(
      Family::Gumbel, [](double t, double th) { return -std::pow(t, 1 / th) / th; },
      [](double t, double th) { return -std::pow(t, 1 / th) / (th * std::expm1(std::pow(t, 1 / th))); },
      [](double t, double th) { return (1 - std::pow(t, 1 / th)) / th - 1; });
}

Outcome criterion2() {
  return criterion_fixtures(
      Family::ParetoType, [](double t, double th) { return th / (1 + t) - th; },
      [](double t, double th) { return t * th / (1 + t - std::pow(1 + t, th + 1)); },
      [](double t, double th) { return (1 + th) / (1 + t) - th - 1; });
}

Outcome criterion3() {
  Outcome o;
  const ExchangeableSample s = sample(Generator::unit_exponential(8), TailDependence::sum(2), 4);
  const Eigen::VectorXd xs = Grid::linear(0.01, 0.99, 100).points();
  double worst = 0.0;
  double prev_hr = -INFINITY;
  bool hr_increasing = true;
  for (double x : xs) {
    const double r1 = cdf_max(s, 5, x) / cdf_max(s, 4, x);
    const double r2 = cdf_max(s, 4, x) / cdf_second_max(s, 4, x);
    const double r3 = sf_max(s, 5, x) / sf_max(s, 4, x);
    const double r4 = pdf_order_stat(s, OrderStat::max(5), x) / pdf_order_stat(s, OrderStat::max(4), x);
    worst = std::max({worst, std::abs(r1 - x), std::abs(r2 - std::pow(x, 4) / (4 * std::pow(x, 3) - 3 * std::pow(x, 4))),
                      std::abs(r3 - (1 - std::pow(x, 5)) / (1 - std::pow(x, 4))), std::abs(r4 - 1.25 * x)});
    hr_increasing = hr_increasing && r3 >= prev_hr;
    prev_hr = r3;
  }
  o.require(worst <= 1e-12, "ratio deviation " + fmt(worst));
  o.require(hr_increasing, "survival ratio not increasing");
  if (o.pass) o.detail = "100 points, max deviation " + fmt(worst);
  return o;
}

Outcome criterion4() {
  Outcome o;
  const Grid grid = unit_interval_grid(400);
  int checks = 0, discordant = 0;
  std::string first;
  const auto run = [&](const ExchangeableSample& s, int n, bool maxima) {
    for (Order part : {Order::Rh, Order::Hr, Order::Lr}) {
      const CheckReport r = maxima ? theorem41_check(s, n, part, grid) : theorem51_check(s, n, part, grid);
      ++checks;
      const bool concordant_pass = r.passed() && r.parts.size() == 3 && r.parts[0].passed();
      if (!concordant_pass) {
        ++discordant;
        if (first.empty()) {
          first = s.copula.name() + " n=" + std::to_string(n) + (maxima ? " maxima " : " minima ") +
                  std::string(to_string(part)) + ": " + r.notes;
        }
      }
    }
  };
  for (double theta : {4.0, 8.0, 5.0}) {
    run(sample(Generator::gumbel(theta, 5), TailDependence::logistic(theta, 5), 4), 4, true);
    run(sample(Generator::pareto_type(theta, 5), TailDependence::logistic(theta, 5), 4), 4, false);
  }
  std::mt19937_64 rng(20240607);
  std::uniform_real_distribution<double> theta(1.0, 10.0);
  std::uniform_int_distribution<int> size(2, 5), family(0, 3);
  const Family families[] = {Family::Gumbel, Family::Clayton, Family::Joe, Family::ParetoType};
  for (int i = 0; i < 20; ++i) {
    const int n = size(rng);
    const Generator g = Generator::make(families[family(rng)], theta(rng), n + 1);
    const TailDependence t = TailDependence::logistic(theta(rng), n + 1);
    const ExchangeableSample s = sample(g, t, n);
    run(s, n, true);
    run(s, n, false);
  }
  o.require(discordant == 0, std::to_string(discordant) + " of " + std::to_string(checks) +
                                 " checks not a concordant pass; first: " + first);
  if (o.pass) o.detail = std::to_string(checks) + " theorem checks, 0 discordant";
  return o;
}

std::vector<Generator> shipped_generators(int n) {
  return {Generator::gumbel(2.0, n), Generator::clayton(1.5, n), Generator::joe(3.0, n),
          Generator::pareto_type(4.0, n), Generator::unit_exponential(n)};
}

std::vector<TailDependence> shipped_tails(int n) {
  return {TailDependence::logistic(3.0, n), TailDependence::max(n), TailDependence::sum(n)};
}

Outcome criterion5() {
  Outcome o;
  int instances = 0;
  double comonotone = 0.0;
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int n : {2, 3, 4}) {
    for (const Generator& g : shipped_generators(n)) {
      for (const TailDependence& t : shipped_tails(n)) {
        const ArchimaxCopula c(g, t);
        ++instances;
        o.require(check_copula_axioms(c, 500, 100 + instances).passed(), "axioms " + c.name());
        o.require(check_frechet_bounds(c, 1000, 200 + instances).passed(), "Frechet bounds " + c.name());
        if (t.kind() == TailKind::Max) {
          for (int i = 0; i < 1000; ++i) {
            Eigen::VectorXd u(n);
            for (int j = 0; j < n; ++j) u[j] = unit(rng);
            comonotone = std::max(comonotone, std::abs(c.cdf(u) - u.minCoeff()));
          }
        }
      }
    }
  }
  o.require(comonotone <= 1e-12, "comonotone deviation " + fmt(comonotone));
  if (o.pass) {
    o.detail = std::to_string(instances) + " instances valid; comonotone max deviation " + fmt(comonotone);
  }
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double arch = 0.0, ev = 0.0;
  for (int n : {2, 3, 4}) {
    for (const Generator& g : shipped_generators(n)) {
      const ArchimaxCopula sum(g, TailDependence::sum(n));
      for (int i = 0; i < 1000; ++i) {
        Eigen::VectorXd u(n);
        for (int j = 0; j < n; ++j) u[j] = unit(rng);
        arch = std::max(arch, std::abs(archimedean_reduction(sum, u) - sum.cdf(u)));
      }
    }
    for (const TailDependence& t : shipped_tails(n)) {
      const ArchimaxCopula c(Generator::unit_exponential(n), t);
      for (int i = 0; i < 1000; ++i) {
        Eigen::VectorXd u(n);
        for (int j = 0; j < n; ++j) u[j] = unit(rng);
        const Eigen::VectorXd e = -u.array().log();
        ev = std::max(ev, std::abs(std::exp(-t.ell(e)) - c.cdf(u)));
      }
      for (int k : {2, 5, 10}) {
        const CheckReport r = max_stability_check(c, k, 500, 60 + k);
        o.require(r.passed(), "max-stability " + c.name() + " k=" + std::to_string(k) + " dev " + fmt(r.metric));
      }
    }
  }
  const CheckReport clayton =
      max_stability_check(ArchimaxCopula(Generator::clayton(1.0), TailDependence::sum(2)), 2, 500, 66);
  o.require(arch <= 1e-12, "Archimedean path deviation " + fmt(arch));
  o.require(ev <= 1e-12, "extreme-value path deviation " + fmt(ev));
  o.require(clayton.verdict != Verdict::Pass && clayton.metric > 1e-3,
            "Clayton+sum max-stability deviation only " + fmt(clayton.metric));
  if (o.pass) {
    o.detail = "path deviations " + fmt(arch) + " / " + fmt(ev) + "; Clayton+sum deviation " + fmt(clayton.metric);
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  const Generator joe = Generator::joe(3.0, 3), gumbel = Generator::gumbel(1.0, 3);
  const CheckReport cond = lemma_a1_conditions(joe, gumbel, default_a_values(2));
  std::string cond_detail = std::string(to_string(cond.verdict));
  if (cond.parts.size() == 2) {
    cond_detail += " (superadditivity " + std::string(to_string(cond.parts[0].verdict)) + ", min margin " +
                   fmt(cond.parts[0].metric) + "; scaling " + std::string(to_string(cond.parts[1].verdict)) + ")";
  }
  o.require(cond.passed(), "pair conditions " + cond_detail);
  for (int n : {2, 3}) {
    const TailDependence tail = TailDependence::logistic(2.0, n);
    const CheckReport dom = lemma_a1_dominance(joe, gumbel, tail, 1000, 70 + n);
    o.require(dom.passed(), "C1<=C2 at n=" + std::to_string(n) + " " + std::string(to_string(dom.verdict)) +
                                " (min C2-C1 " + fmt(dom.metric) + ")");
    const CheckReport rev = lemma_a1_dominance(gumbel, joe, tail, 1000, 70 + n);
    o.require(rev.verdict == Verdict::Fail && rev.witness.has_value(),
              "reversed pair at n=" + std::to_string(n) + " " + std::string(to_string(rev.verdict)));
  }
  if (o.pass) o.detail = "conditions pass, dominance holds, reversed pair fails";
  return o;
}

Outcome criterion8() {
  Outcome o;
  const Generator g = Generator::gumbel(2.0);
  const Grid grid = Grid::linear(1e-3, 10.0, 400);
  std::string detail;
  for (const TailDependence& t : {TailDependence::logistic(2.0, 2), TailDependence::sum(2)}) {
    Eigen::VectorXd alpha(2), beta(2);
    alpha << 2.0, 1.0;
    beta << 1.5, 1.5;
    const PhrModel x(ScalarSurvival::exponential(), alpha, ArchimaxCopula(g, t));
    const PhrModel y(ScalarSurvival::exponential(), beta, ArchimaxCopula(g, t));
    const CheckReport r = theorem31_check(x, y, grid);
    const bool hypotheses = r.parts.size() == 3 && r.parts[0].passed() && r.parts[1].passed();
    o.require(hypotheses, t.name() + ": hypotheses not verified");
    o.require(r.passed() && r.metric >= 0.0, t.name() + ": " + std::string(to_string(r.verdict)) + " margin " +
                                                 fmt(r.metric));
    detail += (detail.empty() ? "" : "; ") + t.name() + " min margin " + fmt(r.metric);
  }
  if (o.pass) o.detail = detail;
  return o;
}

Outcome criterion9() {
  Outcome o;
  double iid = 0.0;
  for (int n = 2; n <= 6; ++n) {
    const ExchangeableSample s = sample(Generator::unit_exponential(8), TailDependence::sum(2), n);
    for (double x = 0.005; x < 1.0; x += 0.005) {
      iid = std::max({iid, std::abs(cdf_max(s, n, x) - oracle::iid_order_cdf(n, n, x)),
                      std::abs(cdf_second_max(s, n, x) - oracle::iid_order_cdf(n - 1, n, x)),
                      std::abs(cdf_min(s, n, x) - oracle::iid_order_cdf(1, n, x)),
                      std::abs(cdf_second_min(s, n, x) - oracle::iid_order_cdf(2, n, x))});
    }
  }
  o.require(iid <= 1e-12, "iid deviation " + fmt(iid));

  double deriv = 0.0;
  for (int fam = 0; fam < 5; ++fam) {
    const Family f = static_cast<Family>(fam);
    for (double theta : {1.0, 2.5, 7.0}) {
      const Generator g = Generator::make(f, theta);
      for (double t = 0.01; t <= 50.0; t *= 1.2) {
        const double h = 1e-5 * std::max(1.0, t);
        deriv = std::max(deriv, oracle::relative_error(
                                    g.phi_d1(t), oracle::five_point([&](double v) { return g.phi(v); }, t, h)));
        deriv = std::max(deriv, oracle::relative_error(
                                    g.phi_d2(t), oracle::five_point([&](double v) { return g.phi_d1(v); }, t, h)));
      }
      for (double u = 0.01; u < 0.995; u += 0.01) {
        deriv = std::max(deriv, oracle::relative_error(
                                    g.psi_d1(u), oracle::five_point([&](double v) { return g.psi(v); }, u, 1e-6)));
      }
    }
  }

  double mass = 0.0;
  int densities = 0;
  for (const Generator& g : shipped_generators(6)) {
    for (const TailDependence& t : {TailDependence::logistic(3.0, 6), TailDependence::sum(6)}) {
      for (int n : {2, 4}) {
        const ExchangeableSample s = sample(g, t, n);
        for (OrderStat w : {OrderStat::max(n), OrderStat::max(n + 1), OrderStat::second_max(n), OrderStat::min(n),
                            OrderStat::min(n + 1), OrderStat::second_min(n)}) {
          ++densities;
          mass = std::max(mass, std::abs(integrate([&](double x) { return pdf_order_stat(s, w, x); }, 0.0, 1.0).value -
                                         1.0));
          for (int i = 1; i < 20; ++i) {
            const double x = i / 20.0;
            const double fd = oracle::five_point([&](double y) { return cdf_order_stat(s, w, y); }, x, 1e-4);
            deriv = std::max(deriv, oracle::relative_error(pdf_order_stat(s, w, x), fd));
          }
        }
      }
    }
  }
  o.require(deriv <= 1e-6, "derivative relative error " + fmt(deriv));
  o.require(mass <= 1e-6, "density mass error " + fmt(mass));
  if (o.pass) {
    o.detail = "iid " + fmt(iid) + ", derivatives " + fmt(deriv) + ", " + std::to_string(densities) +
               " densities mass error " + fmt(mass);
  }
  return o;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

Outcome criterion10() {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / ("archimax_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  const std::vector<std::string> commands = {
      "check-copula --family gumbel --theta 2 --tail logistic --tail-theta 3 --n 3 --seed 11 --format csv",
      "check-copula --family clayton --theta 2 --tail sum --n 4 --seed 11 --format jsonl",
      "check-generator --family joe --theta 3 --seed 5 --format jsonl",
      "emit-curves --family gumbel --theta 4 --n 4 --seed 3",
      "theorem --theorem 3.1 --family gumbel --theta 2 --alpha 2,1 --beta 1.5,1.5 --format jsonl",
  };
  int i = 0;
  for (const std::string& cmd : commands) {
    std::string first;
    for (int rep = 0; rep < 2; ++rep) {
      const fs::path out = dir / ("run" + std::to_string(i) + "_" + std::to_string(rep));
      const std::string line = std::string("\"") + ARCHIMAX_CLI_PATH + "\" " + cmd + " --out \"" + out.string() +
                               "\" 2>/dev/null";
      const int status = std::system(line.c_str());
      o.require(status != -1 && WEXITSTATUS(status) == 0, "'" + cmd + "' exited " + std::to_string(status));
      const std::string bytes = slurp(out);
      o.require(!bytes.empty(), "'" + cmd + "' wrote nothing");
      if (rep == 0) {
        first = bytes;
      } else {
        o.require(bytes == first, "'" + cmd + "' differs between runs");
      }
    }
    ++i;
  }
  fs::remove_all(dir);
  if (o.pass) o.detail = std::to_string(commands.size()) + " commands byte-identical across repeated runs";
  return o;
}

struct Criterion {
  const char* name;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {"maxima generator criteria and closed forms", criterion1},
    {"minima generator criteria and closed forms", criterion2},
    {"independence ratio fixtures", criterion3},
    {"criterion/empirical concordance", criterion4},
    {"copula validity", criterion5},
    {"special-case reductions and max-stability", criterion6},
    {"generator-pair conditions and copula dominance", criterion7},
    {"PHR sample-maximum desk instance", criterion8},
    {"independent oracles", criterion9},
    {"CLI determinism", criterion10},
};

bool report(int index) {
  const Criterion& c = kCriteria[index - 1];
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << index << "  " << c.name << "  -- " << o.detail
            << std::endl;
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  constexpr int count = static_cast<int>(sizeof kCriteria / sizeof kCriteria[0]);
  if (argc > 1) {
    const int index = std::atoi(argv[1]);
    if (index < 1 || index > count) {
      std::cerr << "usage: archimax_acceptance [1-" << count << "]\n";
      return 2;
    }
    return report(index) ? 0 : 1;
  }
  bool all = true;
  for (int i = 1; i <= count; ++i) all = report(i) && all;
  return all ? 0 : 1;
}
