#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace iqconc::perc {

// Spanning is always measured top row to bottom row. kWrapHorizontal closes
// the lattice into a cylinder along the rows; kOpen leaves all sides open.
enum class Boundary { kWrapHorizontal, kOpen };

Boundary boundary_from_label(std::string_view label);
std::string_view to_label(Boundary b);

// Nodes of the measured class take part in the three-qubit joint measurement;
// passive nodes keep their qubits.
enum class NodeClass { kMeasured, kPassive };

struct HoneycombNode {
  int row = 0;
  int col = 0;  // brick-wall column in [0, 2 * cols)
  NodeClass cls = NodeClass::kMeasured;
};

using Edge = std::pair<std::uint32_t, std::uint32_t>;

/// Honeycomb lattice in brick-wall form: `rows` rows of 2*cols nodes. Node
/// (r, c) bonds to (r, c +/- 1) and, when r + c is even, to (r + 1, c).
/// Measured-class nodes are those with r + c even, so every bond joins the
/// two classes. Node index = r * 2 * cols + c.
struct HoneycombLattice {
  int rows = 0;
  int cols = 0;  // unit cells per row; two nodes per cell
  Boundary boundary = Boundary::kWrapHorizontal;
  std::vector<HoneycombNode> nodes;
  std::vector<Edge> bonds;
  std::vector<std::vector<std::uint32_t>> neighbors;

  std::size_t node_index(int r, int c) const {
    return static_cast<std::size_t>(r) * 2 * cols + c;
  }
};

// rows, cols >= 2; DomainError otherwise.
HoneycombLattice build_honeycomb(int rows, int cols, Boundary boundary);

struct TriangularSite {
  int row = 0;
  int col = 0;            // column of the originating honeycomb node
  std::uint32_t node = 0; // index into HoneycombLattice::nodes
};

/// One site per measured-class node; two sites are adjacent iff their
/// honeycomb neighborhoods share a passive node. Site index = r * cols + j
/// for the j-th measured node of row r.
struct TriangularSiteGraph {
  int rows = 0;
  int cols = 0;
  Boundary boundary = Boundary::kWrapHorizontal;
  std::vector<TriangularSite> sites;
  std::vector<Edge> adjacency;  // i < j, sorted, no duplicates
  std::vector<std::vector<std::uint32_t>> neighbors;
};

TriangularSiteGraph contract_to_triangular(const HoneycombLattice& h);

}  // namespace iqconc::perc
