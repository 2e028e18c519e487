#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "flowmat/linalg.hpp"
#include "flowmat/matroid.hpp"

// Graph-side ground truth. Everything here works directly on the graph by
// brute force and does not depend on the lattice or Voronoi code.
namespace flowmat::graph {

struct Edge {
  std::size_t tail;
  std::size_t head;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected multigraph with a reference orientation tail -> head per edge.
/// Parallel edges and loops are allowed; edge index = position in `edges`.
class Multigraph {
 public:
  Multigraph() = default;
  Multigraph(std::size_t vertices, std::vector<Edge> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t e) const { return edges_.at(e); }

  /// |E| - |V| + 1; only meaningful for connected graphs.
  std::size_t genus() const noexcept { return edges_.size() + 1 - n_; }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
};

/// A circuit with a chosen traversal direction.
struct GraphCircuit {
  std::vector<std::size_t> edge_set;  // sorted edge indices
  std::vector<int> signed_vector;     // entries in {-1, 0, +1}, one per edge
};

/// Partition of the edge set into 2-cut blocks; blocks are sorted and listed
/// by smallest member.
using TwoCutBlocks = std::vector<std::vector<std::size_t>>;

/// Connectivity of the graph with the edges flagged in `removed` deleted.
bool connected_without(const Multigraph& g, const std::vector<bool>& removed);

/// Throws NotConnected or HasBridge.
void validate_two_connected(const Multigraph& g);

/// Pairwise deletion test. Throws Error if the relation fails to be
/// transitive (it never should).
TwoCutBlocks two_cut_blocks(const Multigraph& g);

struct FundamentalBasis {
  std::vector<std::size_t> tree;    // tree edge indices, ascending
  std::vector<std::size_t> cotree;  // non-tree edge indices, ascending
  std::vector<GraphCircuit> circuits;  // one per cotree edge, traversing it forwards
  MatZ gram;
};

/// Spanning tree by BFS from vertex 0, scanning incident edges by index.
FundamentalBasis fundamental_basis(const Multigraph& g);

/// Coordinates of a flow in the fundamental basis: its entries on the cotree
/// edges.
VecZ basis_coordinates(const FundamentalBasis& basis, const std::vector<int>& flow);

/// Checks conservation at every vertex.
bool is_flow(const Multigraph& g, const std::vector<int>& signed_vector);

/// Every circuit once (loops and parallel pairs included), by depth-first
/// search from the smallest vertex of each cycle. Sorted by edge set.
std::vector<GraphCircuit> all_circuits(const Multigraph& g);

/// Ground set E(G), one circuit per graph circuit.
CircuitMatroid graphic_matroid(const Multigraph& g);

/// Number of strongly connected orientations, by scanning all 2^m of them.
/// Throws TooLarge above 20 edges.
std::uint64_t strong_orientation_count(const Multigraph& g);

/// Matrix-tree theorem on the reduced Laplacian. Loops are ignored.
Int spanning_tree_count(const Multigraph& g);

}  // namespace flowmat::graph
