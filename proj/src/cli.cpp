#include "archimax/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "archimax/copula.hpp"
#include "archimax/format.hpp"
#include "archimax/generators.hpp"
#include "archimax/log.hpp"
#include "archimax/order_stats.hpp"
#include "archimax/phr.hpp"
#include "archimax/report_io.hpp"
#include "archimax/stochastic_orders.hpp"
#include "archimax/tail_dependence.hpp"
#include "archimax/theorems.hpp"
#include "archimax/vector_orders.hpp"

namespace archimax::cli {

namespace {

constexpr unsigned long long kDefaultSeed = 20240607ULL;
constexpr const char* kCriterionGrid = "1e-4:100:500:log";
constexpr const char* kUnitGrid = "1e-6:0.999999:400:lin";
constexpr const char* kPhrGrid = "1e-3:10:400:lin";

struct RunConfig {
  std::string command;
  std::string family = "gumbel";
  double theta = 1.0;
  std::string family2;
  std::optional<double> theta2;
  std::string tail = "logistic";
  std::optional<double> tail_theta;
  int n = 4;
  std::string grid;
  unsigned long long seed = kDefaultSeed;
  int trials = 500;
  std::string out;
  std::string format = "csv";
  std::string check = "all";
  std::string theorem = "4.1";
  std::string part = "rh";
  std::string alpha = "2,1";
  std::string beta = "1.5,1.5";
  std::string baseline = "exp";
};

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct UnwritableError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Eigen::VectorXd parse_vector(const std::string& text, const char* flag) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) values.push_back(parse_double(item));
  if (values.empty()) throw UsageError(std::string(flag) + ": empty list");
  return Eigen::Map<Eigen::VectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
}

Generator make_generator(const std::string& family, double theta, int hint) {
  return Generator::make(parse_family(family), theta, hint);
}

double tail_theta(const RunConfig& cfg) {
  if (cfg.tail_theta) return *cfg.tail_theta;
  return cfg.theta >= 1.0 ? cfg.theta : 1.0;
}

TailDependence make_tail(const RunConfig& cfg, int dimension) {
  return TailDependence::make(parse_tail_kind(cfg.tail), tail_theta(cfg), dimension);
}

Grid grid_or(const RunConfig& cfg, const char* fallback) {
  return Grid::parse(cfg.grid.empty() ? std::string(fallback) : cfg.grid);
}

// Output sink: the named file or the caller's stream.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (path.empty() || path == "-") return;
    file_ = std::make_unique<std::ofstream>(path, std::ios::binary | std::ios::trunc);
    if (!*file_) throw UnwritableError("cannot open '" + path + "' for writing");
    stream_ = file_.get();
  }
  std::ostream& stream() { return *stream_; }
  void finish(const std::string& path) {
    stream_->flush();
    if (!*stream_) throw UnwritableError("write to '" + path + "' failed");
  }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* stream_;
};

int exit_for(const std::vector<CheckReport>& reports) {
  bool inconclusive = false;
  for (const CheckReport& r : reports) {
    if (r.verdict == Verdict::Fail) return kFail;
    if (r.verdict == Verdict::Inconclusive) inconclusive = true;
  }
  return inconclusive ? kInconclusive : kPass;
}

int emit_reports(const RunConfig& cfg, const std::string& instance, std::vector<CheckReport> reports,
                 std::ostream& out) {
  std::vector<ReportRow> rows;
  for (CheckReport& r : reports) {
    if (!r.seed) r.seed = cfg.seed;
    auto flat = flatten_report(r, cfg.command, instance);
    rows.insert(rows.end(), flat.begin(), flat.end());
  }
  Sink sink(cfg.out, out);
  if (cfg.format == "jsonl") {
    write_report_jsonl(sink.stream(), rows);
  } else {
    write_report_csv(sink.stream(), rows);
  }
  sink.finish(cfg.out);
  return exit_for(reports);
}

int cmd_check_generator(const RunConfig& cfg, std::ostream& out) {
  const Generator g = make_generator(cfg.family, cfg.theta, cfg.n + 1);
  const Grid grid = grid_or(cfg, kCriterionGrid);
  std::vector<CheckReport> reports;
  if (cfg.check == "rh" || cfg.check == "all") reports.push_back(criterion_rh(g, grid));
  if (cfg.check == "hr" || cfg.check == "all") reports.push_back(criterion_hr(g, grid));
  if (cfg.check == "lr" || cfg.check == "all") reports.push_back(criterion_lr(g, grid));
  if (cfg.check == "all") reports.push_back(check_n_monotone(g, cfg.n + 1, grid));
  return emit_reports(cfg, g.name(), std::move(reports), out);
}

int cmd_check_copula(const RunConfig& cfg, std::ostream& out) {
  const Generator g = make_generator(cfg.family, cfg.theta, cfg.n);
  const TailDependence tail = make_tail(cfg, cfg.n);
  const ArchimaxCopula c(g, tail);
  std::vector<CheckReport> reports;
  reports.push_back(check_stdf_axioms(tail, cfg.trials, cfg.seed));
  reports.push_back(check_copula_axioms(c, cfg.trials, cfg.seed));
  reports.push_back(check_frechet_bounds(c, cfg.trials, cfg.seed));
  if (g.family() == Family::UnitExponential) reports.push_back(max_stability_check(c, 2, cfg.trials, cfg.seed));
  return emit_reports(cfg, c.name(), std::move(reports), out);
}

std::string pair_label(const std::string& a, const std::string& b) { return a + "_over_" + b; }

int cmd_emit_curves(const RunConfig& cfg, std::ostream& out) {
  if (cfg.format != "csv") throw UsageError("emit-curves writes CSV only");
  const int n = cfg.n;
  const Generator g = make_generator(cfg.family, cfg.theta, n + 1);
  const TailDependence tail = make_tail(cfg, n + 1);
  const ExchangeableSample s(Margin::uniform01(), ArchimaxCopula(g, tail), n);
  const Grid grid = grid_or(cfg, kUnitGrid);
  const Grid tgrid = Grid::parse(kCriterionGrid);
  const Eigen::VectorXd xs = grid.points();
  if (xs[0] < s.margin.lower() || xs[xs.size() - 1] > s.margin.upper()) {
    throw UsageError("grid must lie inside the unit interval");
  }

  const std::string N = std::to_string(n), N1 = std::to_string(n + 1), Nm = std::to_string(n - 1);
  const std::string max_n = N + N, max_n1 = N1 + N1, second_max = Nm + N;
  const std::string min_n = "1" + N, min_n1 = "1" + N1, second_min = "2" + N;

  struct Stat {
    std::string tag;
    OrderStat which;
  };
  const Stat Xmax_n{max_n, OrderStat::max(n)}, Xmax_n1{max_n1, OrderStat::max(n + 1)},
      Xsecond_max{second_max, OrderStat::second_max(n)}, Xmin_n{min_n, OrderStat::min(n)},
      Xmin_n1{min_n1, OrderStat::min(n + 1)}, Xsecond_min{second_min, OrderStat::second_min(n)};

  std::vector<CurveRow> rows;
  const auto criterion_curve = [&](const std::string& name, double (Generator::*ratio)(double) const) {
    for (double t : tgrid.points()) rows.push_back({t, name, (g.*ratio)(t)});
  };
  criterion_curve("criterion_rh", &Generator::rh_ratio);
  criterion_curve("criterion_hr", &Generator::hr_ratio);
  criterion_curve("criterion_lr", &Generator::lr_ratio);

  const auto value = [&](char kind, const Stat& st, double x) {
    switch (kind) {
      case 'F': return cdf_order_stat(s, st.which, x);
      case 'S': return sf_order_stat(s, st.which, x);
      default: return pdf_order_stat(s, st.which, x);
    }
  };
  const auto prefix = [](char kind) { return kind == 'F' ? std::string("F") : kind == 'S' ? "Sf" : "f"; };
  const auto ratio_curve = [&](char kind, const Stat& num, const Stat& den) {
    const std::string name = pair_label(prefix(kind) + num.tag, prefix(kind) + den.tag);
    for (double x : xs) rows.push_back({x, name, value(kind, num, x) / value(kind, den, x)});
  };
  for (char kind : {'F', 'S', 'f'}) {
    ratio_curve(kind, Xmax_n1, Xmax_n);
    ratio_curve(kind, Xmax_n, Xsecond_max);
  }
  for (char kind : {'S', 'F', 'f'}) {
    ratio_curve(kind, Xmin_n, Xmin_n1);
    ratio_curve(kind, Xsecond_min, Xmin_n);
  }
  for (const Stat* st : {&Xsecond_max, &Xmax_n, &Xmax_n1, &Xmin_n1, &Xmin_n, &Xsecond_min}) {
    for (double x : xs) rows.push_back({x, "hazard_" + st->tag, value('f', *st, x) / value('S', *st, x)});
  }
  for (const Stat* st : {&Xsecond_max, &Xmax_n, &Xmax_n1, &Xmin_n1, &Xmin_n, &Xsecond_min}) {
    for (double x : xs) rows.push_back({x, "reversed_hazard_" + st->tag, value('f', *st, x) / value('F', *st, x)});
  }

  Sink sink(cfg.out, out);
  write_curves_csv(sink.stream(), rows);
  sink.finish(cfg.out);
  return kPass;
}

int cmd_theorem(const RunConfig& cfg, std::ostream& out) {
  if (cfg.theorem == "3.1") {
    const Eigen::VectorXd alpha = parse_vector(cfg.alpha, "--alpha");
    const Eigen::VectorXd beta = parse_vector(cfg.beta, "--beta");
    if (alpha.size() != beta.size()) throw UsageError("--alpha and --beta must have the same length");
    const int n = static_cast<int>(alpha.size());
    const ScalarSurvival baseline = ScalarSurvival::parse(cfg.baseline);
    const Generator g1 = make_generator(cfg.family, cfg.theta, n);
    const Generator g2 = make_generator(cfg.family2.empty() ? cfg.family : cfg.family2,
                                        cfg.theta2.value_or(cfg.theta), n);
    const TailDependence tail = make_tail(cfg, n);
    const PhrModel x_model(baseline, alpha, ArchimaxCopula(g1, tail));
    const PhrModel y_model(baseline, beta, ArchimaxCopula(g2, tail));
    const std::string instance = "X:" + g1.name() + " Y:" + g2.name() + " tail:" + tail.name() +
                                 " baseline:" + baseline.name() + " alpha:" + cfg.alpha + " beta:" + cfg.beta;
    return emit_reports(cfg, instance, {theorem31_check(x_model, y_model, grid_or(cfg, kPhrGrid))}, out);
  }
  if (cfg.theorem != "4.1" && cfg.theorem != "5.1") throw UsageError("--theorem must be 3.1, 4.1 or 5.1");
  const Order part = parse_order(cfg.part);
  if (part == Order::St) throw UsageError("--part must be rh, hr or lr");
  const int n = cfg.n;
  const Generator g = make_generator(cfg.family, cfg.theta, n + 1);
  const TailDependence tail = make_tail(cfg, n + 1);
  const ExchangeableSample s(Margin::uniform01(), ArchimaxCopula(g, tail), n);
  const Grid grid = grid_or(cfg, kUnitGrid);
  TheoremOptions options;
  CheckReport report = cfg.theorem == "4.1" ? theorem41_check(s, n, part, grid, options)
                                            : theorem51_check(s, n, part, grid, options);
  const std::string instance = s.copula.name() + " margin:" + s.margin.name() + " n:" + std::to_string(n);
  return emit_reports(cfg, instance, {std::move(report)}, out);
}

void add_instance_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("--family", cfg.family, "generator family: gumbel|clayton|joe|pareto|unitexp")
      ->capture_default_str();
  sub->add_option("--theta", cfg.theta, "generator parameter")->capture_default_str();
  sub->add_option("--tail", cfg.tail, "tail dependence: logistic|max|sum")->capture_default_str();
  sub->add_option("--tail-theta", cfg.tail_theta, "logistic parameter (default: --theta when >= 1, else 1)");
  sub->add_option("--n", cfg.n, "sample size")->capture_default_str()->check(CLI::Range(2, 64));
}

void add_output_options(CLI::App* sub, RunConfig& cfg, bool with_format) {
  sub->add_option("--grid", cfg.grid, "grid lo:hi:count:lin|log");
  sub->add_option("--seed", cfg.seed, "random seed")->capture_default_str();
  sub->add_option("--out", cfg.out, "output path (default: stdout)");
  if (with_format) {
    sub->add_option("--format", cfg.format, "report format")
        ->capture_default_str()
        ->check(CLI::IsMember({"csv", "jsonl"}));
  }
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Archimax copula and order-statistic ordering checks", "archimax"};
  app.require_subcommand(1);

  CLI::App* gen = app.add_subcommand("check-generator", "run the generator criteria and n-monotonicity");
  add_instance_options(gen, cfg);
  add_output_options(gen, cfg, true);
  gen->add_option("--check", cfg.check, "criterion to run")
      ->capture_default_str()
      ->check(CLI::IsMember({"rh", "hr", "lr", "all"}));

  CLI::App* cop = app.add_subcommand("check-copula", "run copula and tail-function validity checks");
  add_instance_options(cop, cfg);
  add_output_options(cop, cfg, true);
  cop->add_option("--trials", cfg.trials, "random trials per check")->capture_default_str()->check(CLI::Range(1, 1000000));

  CLI::App* curves = app.add_subcommand("emit-curves", "write criterion, ratio and hazard curves as CSV");
  add_instance_options(curves, cfg);
  add_output_options(curves, cfg, true);

  CLI::App* thm = app.add_subcommand("theorem", "check an ordering theorem on one instance");
  add_instance_options(thm, cfg);
  add_output_options(thm, cfg, true);
  thm->add_option("--theorem", cfg.theorem, "3.1|4.1|5.1")
      ->capture_default_str()
      ->check(CLI::IsMember({"3.1", "4.1", "5.1"}));
  thm->add_option("--part", cfg.part, "rh|hr|lr")->capture_default_str()->check(CLI::IsMember({"rh", "hr", "lr"}));
  thm->add_option("--family2", cfg.family2, "second generator family (theorem 3.1; default --family)");
  thm->add_option("--theta2", cfg.theta2, "second generator parameter (theorem 3.1; default --theta)");
  thm->add_option("--alpha", cfg.alpha, "exponents of X, comma separated")->capture_default_str();
  thm->add_option("--beta", cfg.beta, "exponents of Y, comma separated")->capture_default_str();
  thm->add_option("--baseline", cfg.baseline, "baseline survival: exp|weibull:k")->capture_default_str();

  std::vector<std::string> storage;
  storage.reserve(args.size() + 1);
  storage.emplace_back("archimax");
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& s : storage) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  }

  try {
    if (gen->parsed()) {
      cfg.command = "check-generator";
      return cmd_check_generator(cfg, out);
    }
    if (cop->parsed()) {
      cfg.command = "check-copula";
      return cmd_check_copula(cfg, out);
    }
    if (curves->parsed()) {
      cfg.command = "emit-curves";
      return cmd_emit_curves(cfg, out);
    }
    cfg.command = "theorem";
    return cmd_theorem(cfg, out);
  } catch (const UnwritableError& e) {
    err << "error: " << e.what() << '\n';
    return kUnwritable;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    log::write(log::Level::Error, e.what());
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace archimax::cli
