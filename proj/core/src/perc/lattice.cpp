#include "iqconc/perc/lattice.hpp"

#include <algorithm>
#include <string>

#include "iqconc/errors.hpp"

namespace iqconc::perc {

Boundary boundary_from_label(std::string_view label) {
  if (label == "wrap-horizontal") return Boundary::kWrapHorizontal;
  if (label == "open") return Boundary::kOpen;
  throw DomainError("unknown boundary '" + std::string(label) + "'");
}

std::string_view to_label(Boundary b) {
  return b == Boundary::kWrapHorizontal ? "wrap-horizontal" : "open";
}

HoneycombLattice build_honeycomb(int rows, int cols, Boundary boundary) {
  if (rows < 2 || cols < 2) throw DomainError("build_honeycomb: rows and cols must be >= 2");
  HoneycombLattice h;
  h.rows = rows;
  h.cols = cols;
  h.boundary = boundary;
  const int width = 2 * cols;
  h.nodes.reserve(static_cast<std::size_t>(rows) * width);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < width; ++c)
      h.nodes.push_back({r, c, (r + c) % 2 == 0 ? NodeClass::kMeasured : NodeClass::kPassive});

  auto add = [&](std::size_t a, std::size_t b) {
    h.bonds.emplace_back(static_cast<std::uint32_t>(std::min(a, b)),
                         static_cast<std::uint32_t>(std::max(a, b)));
  };
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < width; ++c) {
      if (c + 1 < width)
        add(h.node_index(r, c), h.node_index(r, c + 1));
      else if (boundary == Boundary::kWrapHorizontal)
        add(h.node_index(r, c), h.node_index(r, 0));
      if ((r + c) % 2 == 0 && r + 1 < rows) add(h.node_index(r, c), h.node_index(r + 1, c));
    }
  }
  h.neighbors.assign(h.nodes.size(), {});
  for (const auto& [a, b] : h.bonds) {
    h.neighbors[a].push_back(b);
    h.neighbors[b].push_back(a);
  }
  return h;
}

TriangularSiteGraph contract_to_triangular(const HoneycombLattice& h) {
  TriangularSiteGraph g;
  g.rows = h.rows;
  g.cols = h.cols;
  g.boundary = h.boundary;

  std::vector<std::uint32_t> site_of(h.nodes.size(), UINT32_MAX);
  for (std::size_t i = 0; i < h.nodes.size(); ++i) {
    if (h.nodes[i].cls != NodeClass::kMeasured) continue;
    site_of[i] = static_cast<std::uint32_t>(g.sites.size());
    g.sites.push_back({h.nodes[i].row, h.nodes[i].col, static_cast<std::uint32_t>(i)});
  }

  for (std::size_t p = 0; p < h.nodes.size(); ++p) {
    if (h.nodes[p].cls != NodeClass::kPassive) continue;
    const auto& nb = h.neighbors[p];
    for (std::size_t x = 0; x < nb.size(); ++x)
      for (std::size_t y = x + 1; y < nb.size(); ++y) {
        const auto a = site_of[nb[x]];
        const auto b = site_of[nb[y]];
        if (a != b) g.adjacency.emplace_back(std::min(a, b), std::max(a, b));
      }
  }
  std::sort(g.adjacency.begin(), g.adjacency.end());
  g.adjacency.erase(std::unique(g.adjacency.begin(), g.adjacency.end()), g.adjacency.end());

  g.neighbors.assign(g.sites.size(), {});
  for (const auto& [a, b] : g.adjacency) {
    g.neighbors[a].push_back(b);
    g.neighbors[b].push_back(a);
  }
  return g;
}

}  // namespace iqconc::perc
