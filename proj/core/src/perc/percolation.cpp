#include "iqconc/perc/percolation.hpp"

#include <cmath>
#include <string>

#include "iqconc/errors.hpp"
#include "iqconc/perc/union_find.hpp"

namespace iqconc::perc {

bool sites_span(const TriangularSiteGraph& g, std::span<const std::uint8_t> occupied) {
  const auto n = static_cast<std::uint32_t>(g.sites.size());
  if (occupied.size() != n) throw DomainError("sites_span: occupancy size mismatch");
  const std::uint32_t top = n;
  const std::uint32_t bottom = n + 1;
  UnionFind uf(n + 2);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (!occupied[i]) continue;
    if (g.sites[i].row == 0) uf.unite(i, top);
    if (g.sites[i].row == g.rows - 1) uf.unite(i, bottom);
    for (std::uint32_t j : g.neighbors[i])
      if (j > i && occupied[j]) uf.unite(i, j);
  }
  return uf.connected(top, bottom);
}

bool bonds_span(const HoneycombLattice& h, std::span<const std::uint8_t> open) {
  if (open.size() != h.bonds.size()) throw DomainError("bonds_span: bond mask size mismatch");
  const auto n = static_cast<std::uint32_t>(h.nodes.size());
  const std::uint32_t top = n;
  const std::uint32_t bottom = n + 1;
  UnionFind uf(n + 2);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (h.nodes[i].row == 0) uf.unite(i, top);
    if (h.nodes[i].row == h.rows - 1) uf.unite(i, bottom);
  }
  for (std::size_t k = 0; k < h.bonds.size(); ++k)
    if (open[k]) uf.unite(h.bonds[k].first, h.bonds[k].second);
  return uf.connected(top, bottom);
}

bool site_percolation_trial(const TriangularSiteGraph& g, double p, TrialRng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("site_percolation_trial: p outside [0, 1]");
  std::vector<std::uint8_t> occupied(g.sites.size());
  for (auto& o : occupied) o = rng.bernoulli(p);
  return sites_span(g, occupied);
}

bool bond_percolation_trial(const HoneycombLattice& h, double p, TrialRng& rng) {
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("bond_percolation_trial: p outside [0, 1]");
  std::vector<std::uint8_t> open(h.bonds.size());
  for (auto& o : open) o = rng.bernoulli(p);
  return bonds_span(h, open);
}

LatticeKind lattice_kind_from_label(std::string_view label) {
  if (label == "triangular-site") return LatticeKind::kTriangularSite;
  if (label == "honeycomb-bond") return LatticeKind::kHoneycombBond;
  throw DomainError("unknown lattice '" + std::string(label) + "'");
}

std::string_view to_label(LatticeKind kind) {
  return kind == LatticeKind::kTriangularSite ? "triangular-site" : "honeycomb-bond";
}

void PercolationTrialConfig::validate() const {
  if (!(occupation_p >= 0.0 && occupation_p <= 1.0))
    throw DomainError("percolation: occupation probability outside [0, 1]");
  if (trials < 1) throw DomainError("percolation: trials must be >= 1");
  if (linear_size < 4) throw DomainError("percolation: linear size must be >= 4");
}

namespace {

struct Lattices {
  HoneycombLattice honeycomb;
  TriangularSiteGraph triangular;
};

Lattices make_lattices(LatticeKind kind, int linear_size, Boundary boundary) {
  Lattices l;
  l.honeycomb = build_honeycomb(linear_size, linear_size, boundary);
  if (kind == LatticeKind::kTriangularSite) l.triangular = contract_to_triangular(l.honeycomb);
  return l;
}

SpanningSample sample(LatticeKind kind, const Lattices& lattices,
                      const PercolationTrialConfig& config, std::uint64_t stream,
                      const Executor& executor) {
  std::vector<std::uint8_t> spans(static_cast<std::size_t>(config.trials));
  executor.for_each_index(spans.size(), [&](std::size_t t) {
    TrialRng rng(derive_seed(config.seed, stream, t));
    spans[t] = kind == LatticeKind::kTriangularSite
                   ? site_percolation_trial(lattices.triangular, config.occupation_p, rng)
                   : bond_percolation_trial(lattices.honeycomb, config.occupation_p, rng);
  });
  std::size_t hits = 0;
  for (auto s : spans) hits += s;
  const double n = static_cast<double>(config.trials);
  const double f = static_cast<double>(hits) / n;
  return {f, std::sqrt(f * (1.0 - f) / n)};
}

}  // namespace

SpanningSample spanning_fraction(LatticeKind kind, const PercolationTrialConfig& config,
                                 std::uint64_t stream, const Executor& executor) {
  config.validate();
  const auto lattices = make_lattices(kind, config.linear_size, config.boundary);
  return sample(kind, lattices, config, stream, executor);
}

PercolationEstimate estimate_threshold(LatticeKind kind, int linear_size, int trials,
                                       std::uint64_t seed, const Executor& executor,
                                       Boundary boundary) {
  if (linear_size < 16) throw DomainError("threshold estimate: L must be >= 16");
  if (trials < 100) throw DomainError("threshold estimate: trials must be >= 100");
  const auto lattices = make_lattices(kind, linear_size, boundary);

  PercolationEstimate est;
  est.kind = kind;
  est.linear_size = linear_size;
  est.trials = trials;
  est.seed = seed;

  double lo = kThresholdLow;
  double hi = kThresholdHigh;
  for (int step = 0; step < kThresholdBisectionSteps; ++step) {
    const double p = 0.5 * (lo + hi);
    const PercolationTrialConfig config{p, linear_size, trials, seed, boundary};
    const auto s = sample(kind, lattices, config, static_cast<std::uint64_t>(step), executor);
    est.p_values.push_back(p);
    est.spanning_fraction.push_back(s.fraction);
    est.standard_error.push_back(s.standard_error);
    if (s.fraction < 0.5)
      lo = p;
    else
      hi = p;
  }
  est.p_c_estimate = 0.5 * (lo + hi);
  return est;
}

PercolationEstimate spanning_curve(LatticeKind kind, int linear_size, int trials,
                                   std::uint64_t seed, std::span<const double> p_values,
                                   const Executor& executor, Boundary boundary) {
  PercolationTrialConfig base{0.0, linear_size, trials, seed, boundary};
  base.validate();
  const auto lattices = make_lattices(kind, linear_size, boundary);

  PercolationEstimate est;
  est.kind = kind;
  est.linear_size = linear_size;
  est.trials = trials;
  est.seed = seed;
  for (std::size_t i = 0; i < p_values.size(); ++i) {
    PercolationTrialConfig config = base;
    config.occupation_p = p_values[i];
    config.validate();
    const auto s = sample(kind, lattices, config, i, executor);
    est.p_values.push_back(p_values[i]);
    est.spanning_fraction.push_back(s.fraction);
    est.standard_error.push_back(s.standard_error);
  }
  for (std::size_t i = 1; i < est.p_values.size(); ++i) {
    const double f0 = est.spanning_fraction[i - 1];
    const double f1 = est.spanning_fraction[i];
    if (f0 < 0.5 && f1 >= 0.5) {
      const double t = (0.5 - f0) / (f1 - f0);
      est.p_c_estimate = est.p_values[i - 1] + t * (est.p_values[i] - est.p_values[i - 1]);
      break;
    }
  }
  return est;
}

}  // namespace iqconc::perc
