#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "iqconc/parallel.hpp"
#include "iqconc/perc/lattice.hpp"
#include "iqconc/perc/rng.hpp"

namespace iqconc::perc {

// Whether an occupied cluster joins a row-0 site to a last-row site.
// `occupied` is indexed like g.sites.
bool sites_span(const TriangularSiteGraph& g, std::span<const std::uint8_t> occupied);

// Whether open bonds join a row-0 node to a last-row node. `open` is indexed
// like h.bonds.
bool bonds_span(const HoneycombLattice& h, std::span<const std::uint8_t> open);

// Occupies each site independently with probability p (drawn in site order)
// and reports spanning.
bool site_percolation_trial(const TriangularSiteGraph& g, double p, TrialRng& rng);

// Opens each bond independently with probability p (drawn in bond order).
bool bond_percolation_trial(const HoneycombLattice& h, double p, TrialRng& rng);

enum class LatticeKind { kTriangularSite, kHoneycombBond };

LatticeKind lattice_kind_from_label(std::string_view label);
std::string_view to_label(LatticeKind kind);

struct PercolationTrialConfig {
  double occupation_p = 0.5;
  int linear_size = 16;
  int trials = 100;
  std::uint64_t seed = 42;
  Boundary boundary = Boundary::kWrapHorizontal;

  // p in [0, 1], trials >= 1, linear_size >= 4.
  void validate() const;
};

struct SpanningSample {
  double fraction = 0.0;
  double standard_error = 0.0;
};

/// Runs config.trials independent trials on an L x L lattice of the given
/// kind. Trial t draws from derive_seed(config.seed, stream, t); the result is
/// the same for every executor.
SpanningSample spanning_fraction(LatticeKind kind, const PercolationTrialConfig& config,
                                 std::uint64_t stream, const Executor& executor = Executor());

struct PercolationEstimate {
  LatticeKind kind = LatticeKind::kTriangularSite;
  int linear_size = 0;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<double> p_values;  // evaluation order
  std::vector<double> spanning_fraction;
  std::vector<double> standard_error;
  std::optional<double> p_c_estimate;
};

inline constexpr int kThresholdBisectionSteps = 12;
inline constexpr double kThresholdLow = 0.3;
inline constexpr double kThresholdHigh = 0.7;

/// Bisects p on [0.3, 0.7] for spanning fraction 1/2, 12 steps; step s uses
/// stream s. p_c_estimate is the midpoint of the final bracket; the p trace
/// is kept in evaluation order. Requires L >= 16 and trials >= 100.
PercolationEstimate estimate_threshold(LatticeKind kind, int linear_size, int trials,
                                       std::uint64_t seed,
                                       const Executor& executor = Executor(),
                                       Boundary boundary = Boundary::kWrapHorizontal);

inline PercolationEstimate estimate_site_threshold(int linear_size, int trials,
                                                   std::uint64_t seed,
                                                   const Executor& executor = Executor()) {
  return estimate_threshold(LatticeKind::kTriangularSite, linear_size, trials, seed, executor);
}

inline PercolationEstimate estimate_bond_threshold_honeycomb(int linear_size, int trials,
                                                             std::uint64_t seed,
                                                             const Executor& executor = Executor()) {
  return estimate_threshold(LatticeKind::kHoneycombBond, linear_size, trials, seed, executor);
}

/// Spanning fraction at each listed p (stream = index into p_values).
/// p_c_estimate is the linear interpolation of the first upward crossing of
/// 1/2, if any.
PercolationEstimate spanning_curve(LatticeKind kind, int linear_size, int trials,
                                   std::uint64_t seed, std::span<const double> p_values,
                                   const Executor& executor = Executor(),
                                   Boundary boundary = Boundary::kWrapHorizontal);

}  // namespace iqconc::perc
