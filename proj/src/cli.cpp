#include "gli/cli.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "gli/classic_lotto.hpp"
#include "gli/gli_core.hpp"
#include "gli/json_io.hpp"
#include "gli/simulation.hpp"
#include "gli/strategy_eval.hpp"

namespace gli::cli {
namespace {

// 17 significant digits round-trip every double.
std::string num(double value) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string opt_num(const std::optional<double>& value) { return value ? num(*value) : ""; }

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes a finished table to `path`, or to `out` for "-".
void emit_table(const std::string& path, const std::string& table, std::ostream& out) {
  if (path == "-") {
    out << table;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot open " + path + " for writing");
  file << table;
  file.flush();
  if (!file) throw IoError("failed writing " + path);
}

Json decomposition_json(const std::optional<Decomposition>& d) {
  if (!d) return nullptr;
  Json j{{"alpha", d->alpha}, {"x0", nullptr}, {"x1", nullptr}};
  if (d->x0) j["x0"] = *d->x0;
  if (d->x1) j["x1"] = *d->x1;
  return j;
}

struct PayoffArgs {
  double xa = 0.0, xb = 0.0, tau = 0.0;
  std::string format = "json";
};

int cmd_payoff(const PayoffArgs& a, std::ostream& out) {
  const GameParams params{a.xa, a.xb, a.tau};
  const GliSolution s = solve(params);
  if (a.format == "csv") {
    out << "x_a,x_b,tau,u_b,u_a,region,alpha,x0,x1\n";
    const auto& d = s.decomposition;
    out << num(a.xa) << ',' << num(a.xb) << ',' << num(a.tau) << ',' << num(s.u_b) << ','
        << num(s.u_a) << ',' << to_string(s.region) << ',' << (d ? num(d->alpha) : "") << ','
        << (d ? opt_num(d->x0) : "") << ',' << (d ? opt_num(d->x1) : "") << '\n';
    return kExitOk;
  }
  Json j{{"x_a", a.xa},
         {"x_b", a.xb},
         {"tau", a.tau},
         {"u_b", s.u_b},
         {"u_a", s.u_a},
         {"region", std::string(to_string(s.region))},
         {"decomposition", decomposition_json(s.decomposition)},
         {"g0_profile", nullptr}};
  if (s.g0_profile)
    j["g0_profile"] = Json{{"attacker", strategy_to_json(s.g0_profile->attacker)},
                           {"breaker", strategy_to_json(s.g0_profile->breaker)}};
  out << j.dump(2) << '\n';
  return kExitOk;
}

struct SweepArgs {
  double xa = 0.0, xb = 0.0, tau_min = 0.0, tau_max = 0.0;
  int steps = 401;
  std::string out = "-";
};

int cmd_sweep_tau(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  if (!(a.tau_max > a.tau_min)) throw UsageError("--tau-max must exceed --tau-min");
  const auto n = static_cast<std::size_t>(a.steps);
  std::vector<GliSolution> rows(n);
  std::vector<double> taus(n);
  for (std::size_t i = 0; i < n; ++i)
    taus[i] = i + 1 == n ? a.tau_max
                         : a.tau_min + (a.tau_max - a.tau_min) * static_cast<double>(i) /
                                           static_cast<double>(n - 1);
  const auto count = static_cast<std::ptrdiff_t>(n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    const auto k = static_cast<std::size_t>(i);
    GliSolution s;
    const GameParams p{a.xa, a.xb, taus[k]};
    s.region = classify_region(p);
    s.u_b = region_payoff(s.region, p);
    rows[k] = s;
  }

  const double classic = gl_payoff(a.xa, a.xb);
  std::ostringstream table;
  table << "tau,u_b,region,u_b_classic\n";
  std::size_t best = 0;
  for (std::size_t i = 0; i < n; ++i) {
    table << num(taus[i]) << ',' << num(rows[i].u_b) << ',' << to_string(rows[i].region) << ','
          << num(classic) << '\n';
    if (rows[i].u_b > rows[best].u_b) best = i;
  }
  emit_table(a.out, table.str(), out);
  std::ostream& summary = a.out == "-" ? err : out;
  summary << "argmax_tau=" << num(taus[best]) << " max_u_b=" << num(rows[best].u_b)
          << " u_b_classic=" << num(classic) << '\n';
  return kExitOk;
}

struct HeatmapArgs {
  double tau = 0.0, xa_max = 0.0, xb_max = 0.0;
  int steps = 101;
  std::string out = "-";
};

int cmd_heatmap(const HeatmapArgs& a, std::ostream& out) {
  if (!(a.xa_max > 0.0) || !(a.xb_max > 0.0))
    throw UsageError("--xa-max and --xb-max must be positive");
  const auto n = static_cast<std::size_t>(a.steps);
  auto axis = [n](double max, std::size_t i) {
    return i + 1 == n ? max : max * static_cast<double>(i) / static_cast<double>(n - 1);
  };
  std::vector<Region> regions(n * n);
  std::vector<double> values(n * n);
  const auto count = static_cast<std::ptrdiff_t>(n * n);
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t idx = 0; idx < count; ++idx) {
    const auto k = static_cast<std::size_t>(idx);
    const GameParams p{axis(a.xa_max, k / n), axis(a.xb_max, k % n), a.tau};
    regions[k] = classify_region(p);
    values[k] = region_payoff(regions[k], p);
  }
  std::ostringstream table;
  table << "xa,xb,region,u_b\n";
  for (std::size_t k = 0; k < n * n; ++k)
    table << num(axis(a.xa_max, k / n)) << ',' << num(axis(a.xb_max, k % n)) << ','
          << to_string(regions[k]) << ',' << num(values[k]) << '\n';
  emit_table(a.out, table.str(), out);
  return kExitOk;
}

struct VerifyArgs {
  int instances = 100;
  std::uint64_t seed = 0;
  double resolution = 1e-3;
  std::string out = "-";
  std::optional<double> xa, xb, tau;
};

// x_a, x_b uniform on (0, 20], tau uniform on (0, 30].
std::vector<GameParams> random_instances(int count, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<GameParams> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    GameParams p;
    p.x_a = 20.0 * (1.0 - uniform01(rng));
    p.x_b = 20.0 * (1.0 - uniform01(rng));
    p.tau = 30.0 * (1.0 - uniform01(rng));
    out.push_back(p);
  }
  return out;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
  std::vector<GameParams> instances;
  const int fixed = (a.xa ? 1 : 0) + (a.xb ? 1 : 0) + (a.tau ? 1 : 0);
  if (fixed == 3)
    instances.push_back(GameParams{*a.xa, *a.xb, *a.tau});
  else if (fixed != 0)
    throw UsageError("--xa, --xb and --tau must be given together");
  else
    instances = random_instances(a.instances, a.seed);

  const auto reports = verify_batch(instances, a.resolution);
  std::ostringstream table;
  table << "x_a,x_b,tau,region,closed_form,mp2_oracle,abs_diff,bound,info_gain,br_slack_g0\n";
  std::size_t failures = 0;
  double worst = 0.0;
  for (const auto& r : reports) {
    table << num(r.params.x_a) << ',' << num(r.params.x_b) << ',' << num(r.params.tau) << ','
          << to_string(r.region) << ',' << num(r.closed_form) << ',' << num(r.mp2_oracle) << ','
          << num(r.abs_diff) << ',' << num(r.abs_diff_bound) << ',' << num(r.info_gain) << ','
          << opt_num(r.br_slack_g0) << '\n';
    if (!r.passed()) ++failures;
    worst = std::max(worst, r.abs_diff);
  }
  emit_table(a.out, table.str(), out);
  std::ostream& summary = a.out == "-" ? err : out;
  summary << "instances=" << reports.size() << " failures=" << failures
          << " max_abs_diff=" << num(worst) << '\n';
  return failures == 0 ? kExitOk : kExitVerificationFailed;
}

struct SimulateArgs {
  double xa = 0.0, xb = 0.0, tau = 0.0;
  std::uint64_t n = 1'000'000;
  std::uint64_t seed = 0;
};

int cmd_simulate(const SimulateArgs& a, std::ostream& out) {
  const GameParams params{a.xa, a.xb, a.tau};
  const SimulationEstimate est = simulate(params, a.n, a.seed);
  const double closed = gli_payoff(params);
  Json j{{"x_a", a.xa},
         {"x_b", a.xb},
         {"tau", a.tau},
         {"n", a.n},
         {"seed", a.seed},
         {"mode", est.hybrid ? "hybrid" : "classic"},
         {"alpha", est.alpha},
         {"estimate", est.estimate},
         {"std_error", est.std_error},
         {"closed_form_u_b", closed}};
  out << j.dump(2) << '\n';
  return kExitOk;
}

constexpr const char* kSimulateHelp =
    "Monte Carlo estimate of the Breaker payoff. For tau > 0 the estimate is hybrid: "
    "with probability alpha* the round is credited the analytic above-threshold value "
    "1 - pi1(X1*) (no strategies are built for that sub-game); otherwise both allocations "
    "are drawn from the below-threshold equilibrium profile at X0*. For tau = 0 both "
    "allocations are drawn from the classic profile.";

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Equilibria of General Lotto games with a binary threshold sensor", "gli"};
  app.require_subcommand(1);

  PayoffArgs payoff;
  auto* p = app.add_subcommand("payoff", "Equilibrium payoff, region and decomposition");
  p->add_option("--xa", payoff.xa, "Attacker budget")->required()->check(CLI::NonNegativeNumber);
  p->add_option("--xb", payoff.xb, "Breaker budget")->required()->check(CLI::NonNegativeNumber);
  p->add_option("--tau", payoff.tau, "Sensor threshold")->required()->check(CLI::NonNegativeNumber);
  p->add_option("--format", payoff.format, "Output format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();

  SweepArgs sweep;
  auto* s = app.add_subcommand("sweep-tau", "Breaker payoff as a function of the threshold");
  s->add_option("--xa", sweep.xa)->required()->check(CLI::NonNegativeNumber);
  s->add_option("--xb", sweep.xb)->required()->check(CLI::NonNegativeNumber);
  s->add_option("--tau-min", sweep.tau_min)->check(CLI::NonNegativeNumber)->capture_default_str();
  s->add_option("--tau-max", sweep.tau_max)->required()->check(CLI::NonNegativeNumber);
  s->add_option("--steps", sweep.steps)
      ->check(CLI::Range(2, 10'000'000))
      ->capture_default_str();
  s->add_option("--out", sweep.out, "CSV path, '-' for standard output")->capture_default_str();

  HeatmapArgs heat;
  auto* h = app.add_subcommand("heatmap", "Region and payoff over an (x_a, x_b) grid");
  h->add_option("--tau", heat.tau)->required()->check(CLI::NonNegativeNumber);
  h->add_option("--xa-max", heat.xa_max)->required()->check(CLI::NonNegativeNumber);
  h->add_option("--xb-max", heat.xb_max)->required()->check(CLI::NonNegativeNumber);
  h->add_option("--steps", heat.steps)->check(CLI::Range(2, 10'000))->capture_default_str();
  h->add_option("--out", heat.out, "CSV path, '-' for standard output")->capture_default_str();

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Closed form vs. grid oracle on seeded random instances");
  v->add_option("--instances", verify.instances)
      ->check(CLI::Range(1, 100'000'000))
      ->capture_default_str();
  v->add_option("--seed", verify.seed)->capture_default_str();
  v->add_option("--resolution", verify.resolution)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  v->add_option("--out", verify.out, "CSV path, '-' for standard output")->capture_default_str();
  v->add_option("--xa", verify.xa, "Fixed instance instead of random ones")
      ->check(CLI::NonNegativeNumber);
  v->add_option("--xb", verify.xb)->check(CLI::NonNegativeNumber);
  v->add_option("--tau", verify.tau)->check(CLI::NonNegativeNumber);

  SimulateArgs sim;
  auto* m = app.add_subcommand("simulate", kSimulateHelp);
  m->add_option("--xa", sim.xa)->required()->check(CLI::NonNegativeNumber);
  m->add_option("--xb", sim.xb)->required()->check(CLI::NonNegativeNumber);
  m->add_option("--tau", sim.tau)->required()->check(CLI::NonNegativeNumber);
  m->add_option("--n", sim.n)->check(CLI::PositiveNumber)->capture_default_str();
  m->add_option("--seed", sim.seed)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (p->parsed()) return cmd_payoff(payoff, out);
    if (s->parsed()) return cmd_sweep_tau(sweep, out, err);
    if (h->parsed()) return cmd_heatmap(heat, out);
    if (v->parsed()) return cmd_verify(verify, out, err);
    if (m->parsed()) return cmd_simulate(sim, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace gli::cli
