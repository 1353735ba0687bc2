#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>

#include "cli/cli.hpp"
#include "iqconc/assist/assist.hpp"
#include "iqconc/bases/bases.hpp"
#include "iqconc/bases/slocc.hpp"
#include "iqconc/perc/percolation.hpp"
#include "iqconc/perc/strategy.hpp"
#include "iqconc/qcore/measures.hpp"
#include "iqconc/swap/swap.hpp"
#include "oracles.hpp"

using namespace iqconc;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Tally {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      out_.pass = false;
      if (failures_++ < 3) out_.detail += (out_.detail.empty() ? "" : "; ") + what;
    }
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : ", ") + s; }
  Outcome result() const {
    Outcome o = out_;
    if (o.pass) o.detail = notes_;
    return o;
  }

 private:
  Outcome out_;
  int failures_ = 0;
  std::string notes_;
};

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

int run_cli(const std::vector<std::string>& args, std::string* out = nullptr) {
  std::ostringstream o, e;
  try {
    const int code = cli::dispatch(cli::parse_args(args, std::nullopt), o, e);
    if (out) *out = o.str();
    return code;
  } catch (const cli::UsageError&) {
    return cli::kExitUsage;
  }
}

Outcome criterion1() {
  Tally t;
  for (const char* label : {"gw", "ghz"}) {
    std::string text;
    const int code = run_cli({"bases", "verify", "--basis", label, "--tol", "1e-12"}, &text);
    t.expect(code == cli::kExitOk, std::string("bases verify ") + label + " exit " + std::to_string(code));
    const auto r = bases::verify_basis(bases::basis_from_label(label), 1e-12);
    t.note(std::string(label) + " residuals " + fmt("%.1e", r.orthonormality_residual) + "/" +
           fmt("%.1e", r.completeness_residual));
  }
  return t.result();
}

Outcome criterion2() {
  Tally t;
  const double ghz = bases::basis_average_scp(bases::ghz_basis());
  const double gw = bases::basis_average_scp(bases::gw_basis());
  t.expect(std::abs(ghz - 1.0) <= 1e-12, "ghz avg scp " + fmt("%.15g", ghz));
  t.expect(std::abs(gw - (7 - std::sqrt(5.0)) / 8) <= 1e-12, "gw avg scp " + fmt("%.15g", gw));
  t.note("ghz " + fmt("%.12f", ghz) + ", gw " + fmt("%.12f", gw));
  return t.result();
}

Outcome criterion3() {
  Tally t;
  const double ghz = bases::basis_average_roi(bases::ghz_basis());
  const double gw = bases::basis_average_roi(bases::gw_basis());
  t.expect(std::abs(ghz) <= 1e-12, "ghz avg roi " + fmt("%.15g", ghz));
  t.expect(std::abs(gw - 0.75) <= 1e-9, "gw avg roi " + fmt("%.15g", gw));
  t.note("ghz " + fmt("%.12f", ghz) + ", gw " + fmt("%.12f", gw));
  return t.result();
}

Outcome criterion4() {
  Tally t;
  double worst_yield = 0.0, worst_prob = 0.0;
  for (int i = 1; i <= 50; ++i) {
    const double phi1 = i / 100.0;
    const double phi0 = 1 - phi1;
    const double k = phi0 * phi0 * phi0 + phi1 * phi1 * phi1 + 3 * phi0 * phi1 * phi1;
    const auto phi = swap::TwoQubitPhi::from_phi1(phi1);
    const auto ghz = swap::swap_measure(phi, bases::ghz_basis());
    const auto gw = swap::swap_measure(phi, bases::gw_basis());
    const double dy_ghz = std::abs(swap::average_yield(ghz) - swap::yield_ghz_closed(phi1));
    const double dy_gw = std::abs(swap::average_yield(gw) - swap::yield_gw_closed(phi1));
    worst_yield = std::max({worst_yield, dy_ghz, dy_gw});
    t.expect(dy_ghz <= 1e-9, "ghz yield at " + fmt("%.2f", phi1));
    t.expect(dy_gw <= 1e-9, "gw yield at " + fmt("%.2f", phi1));
    double sum_ghz = 0.0, sum_gw = 0.0;
    for (int m = 0; m < 8; ++m) {
      sum_ghz += ghz[m].probability;
      sum_gw += gw[m].probability;
      const double want = m < 5 ? k / 5 : phi0 * phi0 * phi1;
      const double d = std::abs(gw[m].probability - want);
      worst_prob = std::max(worst_prob, d);
      t.expect(d <= 1e-12, "gw outcome " + std::to_string(m) + " probability at " + fmt("%.2f", phi1));
    }
    t.expect(std::abs(sum_ghz - 1) <= 1e-12 && std::abs(sum_gw - 1) <= 1e-12,
             "probability sum at " + fmt("%.2f", phi1));
  }
  t.note("max yield dev " + fmt("%.1e", worst_yield) + ", max prob dev " + fmt("%.1e", worst_prob));
  return t.result();
}

Outcome criterion5() {
  Tally t;
  const double x = swap::crossover_phi1();
  const auto peak = swap::max_advantage();
  t.expect(std::abs(x - 0.39493) <= 5e-4, "crossover " + fmt("%.6f", x));
  t.expect(std::abs(peak.phi1 - 0.206) <= 1e-3, "peak phi1 " + fmt("%.6f", peak.phi1));
  t.expect(std::abs(peak.advantage - 0.191) <= 1e-3, "peak advantage " + fmt("%.6f", peak.advantage));
  t.note("crossover " + fmt("%.6f", x) + ", peak (" + fmt("%.6f", peak.phi1) + ", " +
         fmt("%.6f", peak.advantage) + ")");
  return t.result();
}

Outcome criterion6() {
  Tally t;
  double worst = 0.0;
  for (double phi1 : {0.1, 0.3, 0.5}) {
    for (const auto& o : swap::swap_measure(swap::TwoQubitPhi::from_phi1(phi1), bases::gw_basis())) {
      if (!o.post_state) {
        t.expect(false, "empty branch " + std::to_string(o.index));
        continue;
      }
      const double bc = qcore::e2_pair(*o.post_state, 0, 1);
      const double bd = qcore::e2_pair(*o.post_state, 0, 2);
      const double cd = qcore::e2_pair(*o.post_state, 1, 2);
      const double d = std::max(std::abs(bc - bd), std::abs(bc - cd));
      worst = std::max(worst, d);
      t.expect(d <= 1e-10, "outcome " + std::to_string(o.index) + " at " + fmt("%.1f", phi1));
    }
  }
  t.note("max pair spread " + fmt("%.1e", worst));
  return t.result();
}

Outcome criterion7() {
  Tally t;
  const auto hat = bases::basis_from_label("hat");
  const auto px = bases::basis_from_label("pauli-x");
  double worst_hat = 0.0, worst_px = 0.0;
  int points = 0;
  for (int i = 0; i < 10; ++i) {
    const double l4 = 0.1 + 0.085 * i;
    for (int j = 0; j < 5; ++j) {
      const double frac = 0.1 + 0.2 * j;
      const double l0 = std::sqrt((1 - l4 * l4) * frac);
      const double l1 = std::sqrt((1 - l4 * l4) * (1 - frac));
      const auto s = assist::slice_to_state({l0, l1, l4});
      const double dh = std::abs(assist::assisted_yield(s, 0, hat) - 2 * std::min(l4 * l4, 1 - l4 * l4));
      const double dp =
          std::abs(assist::assisted_yield(s, 2, px) - (1 - std::sqrt(1 - 4 * l0 * l0 * l4 * l4)));
      worst_hat = std::max(worst_hat, dh);
      worst_px = std::max(worst_px, dp);
      t.expect(dh <= 1e-9, "hat yield at l4=" + fmt("%.3f", l4));
      t.expect(dp <= 1e-9, "pauli-x yield at l4=" + fmt("%.3f", l4));
      ++points;
    }
  }

  // Real-basis argmax: the optimum can be a plateau, so alpha* must lie
  // within 1e-4 of the set of grid angles attaining the grid maximum.
  double worst_alpha = 0.0;
  constexpr int kGrid = 20000;
  for (double l4 : {0.3, 0.5, 0.6, 0.7071067811865476, 0.8, 0.9}) {
    for (double frac : {0.25, 0.5, 0.75}) {
      const double l0 = std::sqrt((1 - l4 * l4) * frac);
      const double l1 = std::sqrt((1 - l4 * l4) * (1 - frac));
      const assist::SliceState slice{l0, l1, l4};
      const auto s = assist::slice_to_state(slice);
      std::vector<double> y(kGrid);
      for (int k = 0; k < kGrid; ++k)
        y[k] = assist::assisted_yield(s, 0, bases::real_qubit_basis(k * (kPi / 2) / kGrid));
      const double best = *std::max_element(y.begin(), y.end());
      const double a_star = assist::optimal_real_alpha(slice);
      double dist = INFINITY;
      for (int k = 0; k < kGrid; ++k)
        if (y[k] >= best - 1e-12) dist = std::min(dist, std::abs(k * (kPi / 2) / kGrid - a_star));
      worst_alpha = std::max(worst_alpha, dist);
      t.expect(dist <= 1e-4, "alpha* off argmax set at l4=" + fmt("%.3f", l4) + " by " + fmt("%.2e", dist));
    }
  }

  double worst_gap = 0.0;
  for (int i = 0; i <= 32; ++i)
    for (int j = 0; j <= 32; ++j) {
      const double alpha = i * (kPi / 4) / 32;
      const auto p = assist::SliceFamilyParam::from_a(j / 32.0);
      const double gap = assist::e2_re_closed(p, alpha) - assist::e2_im_closed(p, alpha, kPi / 2);
      worst_gap = std::max(worst_gap, gap);
      t.expect(gap <= 1e-12, "E2,Im < E2,Re at alpha=" + fmt("%.3f", alpha));
    }
  t.note(std::to_string(points) + " slice points, hat dev " + fmt("%.1e", worst_hat) + ", pauli-x dev " +
         fmt("%.1e", worst_px) + ", alpha* dist " + fmt("%.1e", worst_alpha) + ", max Re-Im " +
         fmt("%.1e", worst_gap));
  return t.result();
}

Outcome criterion8() {
  Tally t;
  std::mt19937_64 rng(20240808);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    const auto c = oracle::random_canonical(rng);
    const auto s = assist::canonical_to_state(c);
    const double ab = qcore::wootters_concurrence(qcore::partial_trace(s, {0, 1}));
    const double ac = qcore::wootters_concurrence(qcore::partial_trace(s, {0, 2}));
    const double bc = qcore::wootters_concurrence(qcore::partial_trace(s, {1, 2}));
    const double want_bc = std::abs(c.lambda2 * c.lambda3 - std::polar(c.lambda1 * c.lambda4, c.phi));
    const double d = std::max({std::abs(ab - 2 * c.lambda0 * c.lambda3),
                               std::abs(ac - 2 * c.lambda0 * c.lambda2), std::abs(bc - 2 * want_bc)});
    worst = std::max(worst, d);
    t.expect(d <= 1e-9, "trial " + std::to_string(trial) + " dev " + fmt("%.1e", d));
  }
  t.note("100 states, max dev " + fmt("%.1e", worst));
  return t.result();
}

Outcome criterion9() {
  Tally t;
  double worst = 0.0;
  for (int i = 0; i <= 16; ++i)
    for (int j = 0; j <= 16; ++j) {
      const double a = i * (kPi / 4) / 16;
      const double b = j * kPi / 17;
      const auto basis = bases::complex_qubit_basis(a, b);
      for (std::size_t k = 0; k < 2; ++k) {
        const double r = qcore::roi(qcore::DensityMatrix::from_pure(qcore::PureState::from_amplitudes(basis[k])));
        const double d = std::abs(r - std::sin(2 * a) * std::sin(b));
        worst = std::max(worst, d);
        t.expect(d <= 1e-12, "roi at (" + fmt("%.3f", a) + ", " + fmt("%.3f", b) + ")");
      }
    }
  const double s = 1 / std::sqrt(2.0);
  const double hat = qcore::roi(qcore::DensityMatrix::from_pure(
      qcore::PureState::from_amplitudes({s, qcore::Complex(0, s)})));
  t.expect(std::abs(hat - 1) <= 1e-12, "roi(|+hat>) = " + fmt("%.15g", hat));
  t.note("17x17 grid max dev " + fmt("%.1e", worst) + ", roi(|+hat>) " + fmt("%.12f", hat));
  return t.result();
}

Outcome criterion10() {
  Tally t;
  const auto r = bases::verify_g1_slocc_decomposition();
  t.expect(r.decomposition_residual < 1e-12, "residual " + fmt("%.2e", r.decomposition_residual));
  t.note("residual " + fmt("%.1e", r.decomposition_residual) + " with the |1> component of a2 negated; unflipped " +
         fmt("%.3f", r.unflipped_decomposition_residual));
  return t.result();
}

Outcome criterion11() {
  Tally t;
  const double phi = perc::phi1_percolation_threshold();
  const auto r = perc::strategy_report();
  t.expect(std::abs(phi - 0.252136) <= 1e-5, "phi1 threshold " + fmt("%.7f", phi));
  t.expect(std::abs(r.s_gw - 0.8146) <= 5e-4, "S_GW " + fmt("%.6f", r.s_gw));
  t.expect(std::abs(r.s_ghz - 0.9112) <= 5e-4, "S_GHZ " + fmt("%.6f", r.s_ghz));
  t.expect(std::abs(r.p_gw - 0.5043) <= 5e-4, "p_GW " + fmt("%.6f", r.p_gw));
  t.expect(std::abs(r.p_ghz - 0.6527) <= 5e-5, "p_GHZ " + fmt("%.7f", r.p_ghz));
  t.expect(std::abs(r.bond_reduction_pct - 22.7) <= 0.2, "bond reduction " + fmt("%.3f", r.bond_reduction_pct));
  t.expect(std::abs(r.ebit_reduction_pct - 10.6) <= 0.2, "ebit reduction " + fmt("%.3f", r.ebit_reduction_pct));
  t.note("phi1 " + fmt("%.7f", phi) + ", S_GW " + fmt("%.4f", r.s_gw) + ", S_GHZ " + fmt("%.4f", r.s_ghz) +
         ", p_GW " + fmt("%.4f", r.p_gw) + ", p_GHZ " + fmt("%.4f", r.p_ghz) + ", reductions " +
         fmt("%.2f", r.bond_reduction_pct) + "% / " + fmt("%.2f", r.ebit_reduction_pct) + "%");
  return t.result();
}

Outcome criterion12() {
  Tally t;
  const auto ex = Executor::hardware();
  const auto site = perc::estimate_site_threshold(128, 500, 42, ex);
  const auto bond = perc::estimate_bond_threshold_honeycomb(128, 500, 42, ex);
  t.expect(std::abs(*site.p_c_estimate - 0.5) <= 0.02, "site p_c " + fmt("%.4f", *site.p_c_estimate));
  t.expect(std::abs(*bond.p_c_estimate - perc::honeycomb_bond_threshold()) <= 0.02,
           "bond p_c " + fmt("%.4f", *bond.p_c_estimate));

  long trials = 0;
  for (auto boundary : {perc::Boundary::kWrapHorizontal, perc::Boundary::kOpen}) {
    for (int L = 4; L <= 16; L += 4) {
      const auto h = perc::build_honeycomb(L, L, boundary);
      const auto g = perc::contract_to_triangular(h);
      for (int pi = 0; pi < 9; ++pi) {
        const double p = 0.3 + 0.05 * pi;
        for (std::uint64_t k = 0; k < 50; ++k) {
          perc::TrialRng rng(perc::derive_seed(3, static_cast<std::uint64_t>(pi), k));
          std::vector<std::uint8_t> sites(g.sites.size());
          for (auto& s : sites) s = rng.bernoulli(p);
          std::vector<std::uint8_t> bonds(h.bonds.size());
          for (auto& b : bonds) b = rng.bernoulli(p);
          t.expect(perc::sites_span(g, sites) == oracle::sites_span_bfs(L, L, boundary, sites),
                   "site BFS mismatch L=" + std::to_string(L));
          t.expect(perc::bonds_span(h, bonds) == oracle::bonds_span_bfs(h, bonds),
                   "bond BFS mismatch L=" + std::to_string(L));
          trials += 2;
        }
      }
    }
  }

  const auto dir = std::filesystem::temp_directory_path();
  std::vector<std::string> outputs;
  for (const char* workers : {"1", "4"}) {
    for (const char* lattice : {"triangular-site", "honeycomb-bond"}) {
      const auto path = dir / (std::string("iqconc_acceptance_") + lattice + "_" + workers + ".csv");
      const int code = run_cli({"perc", "threshold", "--lattice", lattice, "--L", "32", "--trials", "100",
                                "--seed", "7", "--workers", workers, "--out", path.string()});
      t.expect(code == cli::kExitOk, "perc threshold exit " + std::to_string(code));
      std::ifstream in(path, std::ios::binary);
      outputs.emplace_back(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
      std::filesystem::remove(path);
    }
  }
  t.expect(outputs[0] == outputs[2] && outputs[1] == outputs[3] && !outputs[0].empty(),
           "outputs differ between --workers 1 and 4");

  t.note("site p_c " + fmt("%.4f", *site.p_c_estimate) + ", bond p_c " + fmt("%.4f", *bond.p_c_estimate) +
         ", " + std::to_string(trials) + " BFS-checked trials, worker-count outputs identical");
  return t.result();
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"basis orthonormality and completeness", criterion1},
      {"basis average SCP", criterion2},
      {"basis average RoI", criterion3},
      {"swap closed form vs simulation", criterion4},
      {"crossover and maximal advantage", criterion5},
      {"GW outcome pair invariance", criterion6},
      {"slice-state assistance suite", criterion7},
      {"concurrence formulas", criterion8},
      {"RoI closed form", criterion9},
      {"G1 SLOCC decomposition", criterion10},
      {"percolation numerics", criterion11},
      {"Monte Carlo thresholds and determinism", criterion12},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("criterion %2zu: %s  %s  [%s]\n", i + 1, o.pass ? "PASS" : "FAIL", criteria[i].first,
                o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
