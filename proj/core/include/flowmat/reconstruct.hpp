#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "flowmat/lattice.hpp"
#include "flowmat/matroid.hpp"
#include "flowmat/voronoi.hpp"

namespace flowmat {

/// How two oriented circuits relate, read off from facet intersections.
enum class PairType {
  Compatible,      // F_Ci meets F_Cj
  AntiCompatible,  // F_Ci meets F_-Cj
  Incompatible,    // neither
  Disjoint,        // both: the circuits share no edge
};

const char* to_string(PairType t);

/// Oriented circuits are named by facet index (see VoronoiCell).
PairType classify_pair(const VoronoiCell& cell, std::size_t facet_i, std::size_t facet_j);

/// Same, for signed lattice vectors that must be bisector normals of `cell`.
PairType classify_pair(const VoronoiCell& cell, const LatticeVector& ci, const LatticeVector& cj);

/// Facet of the cell whose bisector normal is exactly `v`. Throws Error if
/// `v` is not a (signed) circuit vector of the cell.
std::size_t facet_index(const VoronoiCell& cell, const LatticeVector& v);

/// A cancellation-free lattice basis made of circuits.
struct CircuitBasis {
  std::vector<std::size_t> members;  // indices into cell.circuits
  MatZ coords;                       // row i = coordinates of member i
  MatZ gram;                         // pairings (Ci, Cj)
  std::vector<std::vector<PairType>> pair_types;
};

/// First basis in (norm, lex) backtracking order whose members are pairwise
/// not Incompatible and whose coordinate matrix is unimodular. Throws
/// NoBasisFound.
CircuitBasis choose_basis(const VoronoiCell& cell, const GramMatrix& m);

/// One equation per basis circuit and per unordered pair of basis circuits,
/// over the parallel classes of the cell, with per-class search bounds.
struct BlockSystem {
  MatQ coeffs;
  VecQ rhs;
  std::vector<std::size_t> upper;  // max admissible size per class
};

/// Throws NoSolution if some class lies in no basis circuit.
BlockSystem block_size_system(const CircuitBasis& basis, const VoronoiCell& cell);

bool satisfies(const BlockSystem& system, const std::vector<std::size_t>& sizes);

struct BlockSolution {
  std::vector<std::size_t> sizes;  // by parallel class id
};

/// The unique positive integer solution of the block-size system. Throws
/// NoSolution, AmbiguousSolution, or TooLarge (search box too big).
BlockSolution solve_block_sizes(const CircuitBasis& basis, const VoronoiCell& cell);

/// One circuit per antipodal facet pair; block b is in the circuit of F_C iff
/// no edge of class b lies on F_C.
BlockMatroid build_matroid(const VoronoiCell& cell, const BlockSolution& solution);

/// Circuit/class incidence, one row per circuit in cell order.
std::vector<std::vector<bool>> block_incidence(const VoronoiCell& cell);

struct SpanningTreeBasis {
  std::vector<std::size_t> basis_rows;   // 0-based, ascending
  std::vector<std::size_t> marked_cols;  // 0-based, in marking order
};

/// Greedy extraction of a fundamental-circuit basis from a circuit/block
/// incidence matrix: repeatedly break the first unbroken circuit at its first
/// block, then keep the circuits broken exactly once.
SpanningTreeBasis spanning_tree_basis(const std::vector<std::vector<bool>>& incidence);

/// Every stage of a reconstruction, for inspection and reporting.
struct Reconstruction {
  std::vector<CircuitVector> circuits;
  std::optional<VoronoiCell> cell;    // absent for rank 1
  std::optional<CircuitBasis> basis;  // absent for rank 1
  BlockSolution solution;
  BlockMatroid matroid;
};

/// Runs the whole pipeline. Stage failures surface as NotAFlowLattice.
Reconstruction reconstruct_traced(const GramMatrix& m, bool parallel = false);
BlockMatroid reconstruct(const GramMatrix& m, bool parallel = false);

}  // namespace flowmat
