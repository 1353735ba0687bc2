#include "cli/commands.hpp"

#include <charconv>
#include <cmath>
#include <utility>

#include "iqconc/assist/assist.hpp"
#include "iqconc/bases/bases.hpp"
#include "iqconc/parallel.hpp"
#include "iqconc/perc/percolation.hpp"
#include "iqconc/perc/strategy.hpp"
#include "iqconc/qcore/measures.hpp"
#include "iqconc/swap/swap.hpp"

namespace iqconc::cli {

namespace {

using F = OutputFormat;

// Lambdas typed on the command line carry ~10 digits; rescale them when the
// sum of squares is this close to 1 and let the core reject anything else.
constexpr double kInputNormSlack = 1e-6;
using K = ParamKind;

std::vector<ParamSpec> state_params() {
  return {
      {"l0", K::kNumber, "", "canonical lambda0"},
      {"l1", K::kNumber, "0", "canonical lambda1"},
      {"l2", K::kNumber, "0", "canonical lambda2"},
      {"l3", K::kNumber, "0", "canonical lambda3"},
      {"l4", K::kNumber, "", "canonical lambda4"},
      {"phi", K::kNumber, "0", "canonical phase"},
      {"a", K::kNumber, "", "slice family b|000>+b|100>+a|111> (replaces the lambdas)"},
      {"pair", K::kText, "BC", "target pair: AB, AC or BC"},
  };
}

std::vector<CommandSpec> build_specs() {
  std::vector<CommandSpec> specs;
  specs.push_back({Command::kBasesVerify, "bases", "verify", "orthonormality and completeness residuals",
                   F::kText, {F::kText, F::kJson},
                   {{"basis", K::kText, "gw", "ghz, gw, pauli-x, hat, real:<a>, complex:<a>,<b>"},
                    {"tol", K::kNumber, "1e-12", "residual tolerance"}}});
  specs.push_back({Command::kBasesStats, "bases", "stats", "average SCP and RoI of the basis elements",
                   F::kText, {F::kText, F::kJson},
                   {{"basis", K::kText, "gw", "basis label"}}});

  auto assist_params = state_params();
  assist_params.push_back({"basis", K::kText, "hat", "helper basis label"});
  specs.push_back({Command::kAssist, "assist", "", "assisted yield for a fixed helper basis",
                   F::kJson, {F::kJson, F::kText}, assist_params});
  specs.push_back({Command::kAssistOptimize, "assist", "optimize", "best helper qubit basis",
                   F::kJson, {F::kJson, F::kText}, state_params()});

  specs.push_back({Command::kSwapSweep, "swap", "sweep", "closed-form yields over phi1",
                   F::kCsv, {F::kCsv, F::kJson, F::kText},
                   {{"from", K::kNumber, "0", "first phi1"},
                    {"to", K::kNumber, "0.5", "last phi1"},
                    {"step", K::kNumber, "0.01", "phi1 spacing"}}});
  specs.push_back({Command::kSwapCrossover, "swap", "crossover", "crossover and peak advantage",
                   F::kJson, {F::kJson, F::kText}, {}});
  specs.push_back({Command::kSwapOutcomes, "swap", "outcomes", "per-outcome probabilities and E2",
                   F::kJson, {F::kJson, F::kCsv, F::kText},
                   {{"phi1", K::kNumber, "0.3", "smaller Schmidt weight"},
                    {"basis", K::kText, "gw", "three-qubit basis label"}}});

  const std::vector<ParamSpec> lattice_params = {
      {"lattice", K::kText, "triangular-site", "triangular-site or honeycomb-bond"},
      {"L", K::kInteger, "128", "linear size"},
      {"trials", K::kInteger, "500", "trials per p"},
      {"boundary", K::kText, "wrap-horizontal", "wrap-horizontal or open"},
  };
  specs.push_back({Command::kPercThreshold, "perc", "threshold", "bisection threshold estimate",
                   F::kCsv, {F::kCsv, F::kJson, F::kText}, lattice_params});
  auto curve_params = lattice_params;
  curve_params[1].default_value = "64";
  curve_params[2].default_value = "200";
  curve_params.push_back({"from", K::kNumber, "0.3", "first p"});
  curve_params.push_back({"to", K::kNumber, "0.7", "last p"});
  curve_params.push_back({"step", K::kNumber, "0.02", "p spacing"});
  specs.push_back({Command::kPercCurve, "perc", "curve", "spanning fraction over a p grid",
                   F::kCsv, {F::kCsv, F::kJson, F::kText}, curve_params});

  specs.push_back({Command::kReportTable1, "report", "table1", "strategy comparison numbers",
                   F::kJson, {F::kJson, F::kText}, {}});
  return specs;
}

class Params {
 public:
  explicit Params(const RunConfig& c) : config_(c) {}

  bool has(const std::string& name) const { return config_.parameters.count(name) > 0; }
  const std::string& text(const std::string& name) const {
    auto it = config_.parameters.find(name);
    if (it == config_.parameters.end()) throw UsageError("missing required flag --" + name);
    return it->second;
  }
  double number(const std::string& name) const { return parse_number("--" + name, text(name)); }
  int integer(const std::string& name) const {
    const long long v = parse_integer("--" + name, text(name));
    if (v < 0 || v > 1'000'000'000) throw UsageError("--" + name + ": value out of range");
    return static_cast<int>(v);
  }

 private:
  const RunConfig& config_;
};

std::pair<int, int> parse_pair(const std::string& pair) {
  if (pair == "AB") return {0, 1};
  if (pair == "AC") return {0, 2};
  if (pair == "BC") return {1, 2};
  throw UsageError("--pair: expected AB, AC or BC, got '" + pair + "'");
}

qcore::PureState assist_state(const Params& p) {
  if (p.has("a")) return assist::family_to_state(assist::SliceFamilyParam::from_a(p.number("a")));
  if (!p.has("l0") || !p.has("l4")) throw UsageError("missing required flag --l0/--l4 (or --a)");
  qcore::CanonicalThreeQubit c;
  c.lambda0 = p.number("l0");
  c.lambda1 = p.number("l1");
  c.lambda2 = p.number("l2");
  c.lambda3 = p.number("l3");
  c.lambda4 = p.number("l4");
  c.phi = p.number("phi");
  const double sum = c.lambda0 * c.lambda0 + c.lambda1 * c.lambda1 + c.lambda2 * c.lambda2 +
                     c.lambda3 * c.lambda3 + c.lambda4 * c.lambda4;
  if (std::abs(sum - 1.0) <= kInputNormSlack && sum > 0.0) {
    const double k = 1.0 / std::sqrt(sum);
    for (double* l : {&c.lambda0, &c.lambda1, &c.lambda2, &c.lambda3, &c.lambda4}) *l *= k;
  }
  return assist::canonical_to_state(c);
}

std::vector<double> grid(double from, double to, double step) {
  const auto count = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9)) + 1;
  std::vector<double> v;
  for (std::size_t k = 0; k < count; ++k) v.push_back(std::min(from + static_cast<double>(k) * step, to));
  return v;
}

CommandOutput bases_verify(const Params& p) {
  const auto basis = bases::basis_from_label(p.text("basis"));
  const double tol = p.number("tol");
  if (!(tol > 0.0)) throw UsageError("--tol: must be positive");
  const auto r = bases::verify_basis(basis, tol);
  CommandOutput out;
  out.results = {{"basis", basis.label()},
                 {"dim", basis.dim()},
                 {"orthonormality_residual", r.orthonormality_residual},
                 {"completeness_residual", r.completeness_residual},
                 {"tolerance", r.tolerance},
                 {"passed", r.passed}};
  out.verified = r.passed;
  return out;
}

CommandOutput bases_stats(const Params& p) {
  const auto basis = bases::basis_from_label(p.text("basis"));
  bases::require_valid_basis(basis);
  CommandOutput out;
  out.results["basis"] = basis.label();
  out.results["size"] = basis.size();
  Json elements = Json::array();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    const auto s = qcore::PureState::from_amplitudes(basis[i]);
    Json e = {{"index", i}};
    if (basis.num_qubits() == 3) e["scp"] = qcore::e2_pair(s, 0, 1);
    e["roi"] = qcore::roi(qcore::DensityMatrix::from_pure(s));
    elements.push_back(e);
  }
  if (basis.num_qubits() == 3) out.results["average_scp"] = bases::basis_average_scp(basis);
  out.results["average_roi"] = bases::basis_average_roi(basis);
  out.results["elements"] = elements;
  return out;
}

CommandOutput run_assist(const Params& p) {
  const auto state = assist_state(p);
  const auto [i, j] = parse_pair(p.text("pair"));
  const int helper = 3 - i - j;
  const auto basis = bases::basis_from_label(p.text("basis"));
  const auto r = assist::assisted_measurement(state, helper, basis);
  CommandOutput out;
  out.results["pair"] = p.text("pair");
  out.results["helper"] = helper;
  out.results["basis"] = basis.label();
  out.results["yield"] = r.yield;
  out.results["eoa_bound"] = assist::eoa_bound(state, i, j);
  Json branches = Json::array();
  for (const auto& b : r.branches) branches.push_back({{"probability", b.probability}, {"scp", b.scp}});
  out.results["branches"] = branches;
  return out;
}

CommandOutput run_assist_optimize(const Params& p, const Executor& ex) {
  const auto state = assist_state(p);
  const auto [i, j] = parse_pair(p.text("pair"));
  const int helper = 3 - i - j;
  const auto best = assist::optimize_qubit_basis(state, helper, ex);
  CommandOutput out;
  out.results = {{"pair", p.text("pair")},
                 {"helper", helper},
                 {"alpha", best.alpha},
                 {"beta", best.beta},
                 {"yield", best.yield},
                 {"eoa_bound", assist::eoa_bound(state, i, j)}};
  return out;
}

CommandOutput swap_sweep(const Params& p) {
  const auto points = swap::sweep_yields(p.number("from"), p.number("to"), p.number("step"));
  CommandOutput out;
  Table t{{"phi1", "yield_ghz", "yield_gw", "advantage"}, {}, {}};
  Json rows = Json::array();
  for (const auto& pt : points) {
    t.rows.push_back({pt.phi1, pt.yield_ghz, pt.yield_gw, pt.advantage});
    rows.push_back({{"phi1", pt.phi1},
                    {"yield_ghz", pt.yield_ghz},
                    {"yield_gw", pt.yield_gw},
                    {"advantage", pt.advantage}});
  }
  out.results["points"] = rows;
  out.table = std::move(t);
  return out;
}

CommandOutput swap_crossover() {
  const auto peak = swap::max_advantage();
  CommandOutput out;
  out.results = {{"crossover_phi1", swap::crossover_phi1()},
                 {"max_adv_phi1", peak.phi1},
                 {"max_adv", peak.advantage}};
  return out;
}

CommandOutput swap_outcomes(const Params& p) {
  const double phi1 = p.number("phi1");
  const auto basis = bases::basis_from_label(p.text("basis"));
  const auto outcomes = swap::swap_measure(swap::TwoQubitPhi::from_phi1(phi1), basis);
  CommandOutput out;
  Table t{{"index", "probability", "e2"}, {}, {}};
  Json rows = Json::array();
  for (const auto& o : outcomes) {
    t.rows.push_back({o.index, o.probability, o.e2});
    rows.push_back({{"index", o.index}, {"probability", o.probability}, {"e2", o.e2}});
  }
  out.results["phi1"] = phi1;
  out.results["basis"] = basis.label();
  out.results["average_yield"] = swap::average_yield(outcomes);
  out.results["outcomes"] = rows;
  out.table = std::move(t);
  return out;
}

CommandOutput perc_output(const perc::PercolationEstimate& est, std::string_view boundary) {
  CommandOutput out;
  Table t{{"p", "L", "trials", "spanning_fraction", "std_err"}, {}, {}};
  Json rows = Json::array();
  for (std::size_t k = 0; k < est.p_values.size(); ++k) {
    t.rows.push_back({est.p_values[k], est.linear_size, est.trials, est.spanning_fraction[k],
                      est.standard_error[k]});
    rows.push_back({{"p", est.p_values[k]},
                    {"spanning_fraction", est.spanning_fraction[k]},
                    {"std_err", est.standard_error[k]}});
  }
  out.results["lattice"] = perc::to_label(est.kind);
  out.results["boundary"] = boundary;
  out.results["L"] = est.linear_size;
  out.results["trials"] = est.trials;
  out.results["p_c_estimate"] = est.p_c_estimate ? Json(*est.p_c_estimate) : Json(nullptr);
  out.results["points"] = rows;
  if (est.p_c_estimate) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "p_c_estimate=%.12g", *est.p_c_estimate);
    t.trailer.push_back(buf);
  }
  out.table = std::move(t);
  return out;
}

CommandOutput perc_threshold(const Params& p, std::uint64_t seed, const Executor& ex) {
  const auto kind = perc::lattice_kind_from_label(p.text("lattice"));
  const auto boundary = perc::boundary_from_label(p.text("boundary"));
  const auto est =
      perc::estimate_threshold(kind, p.integer("L"), p.integer("trials"), seed, ex, boundary);
  return perc_output(est, perc::to_label(boundary));
}

CommandOutput perc_curve(const Params& p, std::uint64_t seed, const Executor& ex) {
  const auto kind = perc::lattice_kind_from_label(p.text("lattice"));
  const auto boundary = perc::boundary_from_label(p.text("boundary"));
  const double from = p.number("from");
  const double to = p.number("to");
  const double step = p.number("step");
  if (!(from >= 0.0 && from <= to && to <= 1.0)) throw UsageError("--from/--to: need 0 <= from <= to <= 1");
  if (!(step > 0.0)) throw UsageError("--step: must be positive");
  const auto ps = grid(from, to, step);
  const auto est =
      perc::spanning_curve(kind, p.integer("L"), p.integer("trials"), seed, ps, ex, boundary);
  return perc_output(est, perc::to_label(boundary));
}

CommandOutput report_table1() {
  const auto r = perc::strategy_report();
  CommandOutput out;
  out.results = {{"p_ghz", r.p_ghz},
                 {"p_gw", r.p_gw},
                 {"s_ghz", r.s_ghz},
                 {"s_gw", r.s_gw},
                 {"bond_reduction_pct", r.bond_reduction_pct},
                 {"ebit_reduction_pct", r.ebit_reduction_pct},
                 {"gw_avg_scp", r.gw_avg_scp},
                 {"gw_avg_roi", r.gw_avg_roi},
                 {"ghz_avg_scp", r.ghz_avg_scp},
                 {"ghz_avg_roi", r.ghz_avg_roi},
                 {"phi1_threshold", perc::phi1_percolation_threshold()}};
  return out;
}

}  // namespace

const std::vector<CommandSpec>& command_specs() {
  static const std::vector<CommandSpec> specs = build_specs();
  return specs;
}

const CommandSpec& spec_for(Command c) {
  for (const auto& s : command_specs())
    if (s.command == c) return s;
  throw std::logic_error("spec_for: unknown command");
}

double parse_number(std::string_view flag, std::string_view text) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end || !std::isfinite(v))
    throw UsageError(std::string(flag) + ": invalid number '" + std::string(text) + "'");
  return v;
}

long long parse_integer(std::string_view flag, std::string_view text) {
  long long v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (text.empty() || ec != std::errc() || ptr != end)
    throw UsageError(std::string(flag) + ": invalid integer '" + std::string(text) + "'");
  return v;
}

Json parameter_echo(const RunConfig& config) {
  Json echo = Json::object();
  const auto& spec = spec_for(config.command);
  for (const auto& ps : spec.params) {
    auto it = config.parameters.find(std::string(ps.name));
    if (it == config.parameters.end()) continue;
    const std::string flag = "--" + std::string(ps.name);
    switch (ps.kind) {
      case ParamKind::kNumber: echo[it->first] = parse_number(flag, it->second); break;
      case ParamKind::kInteger: echo[it->first] = parse_integer(flag, it->second); break;
      case ParamKind::kText: echo[it->first] = it->second; break;
    }
  }
  echo["seed"] = config.seed;
  echo["format"] = to_label(config.output_format);
  return echo;
}

CommandOutput execute(const RunConfig& config) {
  const Params p(config);
  const Executor ex(config.workers);
  switch (config.command) {
    case Command::kBasesVerify: return bases_verify(p);
    case Command::kBasesStats: return bases_stats(p);
    case Command::kAssist: return run_assist(p);
    case Command::kAssistOptimize: return run_assist_optimize(p, ex);
    case Command::kSwapSweep: return swap_sweep(p);
    case Command::kSwapCrossover: return swap_crossover();
    case Command::kSwapOutcomes: return swap_outcomes(p);
    case Command::kPercThreshold: return perc_threshold(p, config.seed, ex);
    case Command::kPercCurve: return perc_curve(p, config.seed, ex);
    case Command::kReportTable1: return report_table1();
  }
  throw std::logic_error("execute: unhandled command");
}

}  // namespace iqconc::cli
