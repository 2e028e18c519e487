#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "flowmat/lattice.hpp"

namespace flowmat {

/// The bisector halfspace (x, v) <= (v, v) / 2 of a signed circuit vector v,
/// with x in rational coordinates over the lattice basis.
struct Halfspace {
  LatticeVector normal;
  Int norm;  // (v, v); the offset is norm / 2

  Rat offset() const {
    Rat q(norm, 2);
    q.canonicalize();
    return q;
  }
};

struct CellVertex {
  VecQ point;
  std::vector<std::size_t> active;  // sorted facet indices with equality
};

struct CellEdge {
  std::array<std::size_t, 2> endpoints;  // vertex indices, ascending
  LatticeVector direction;               // primitive, first nonzero entry positive
  std::vector<std::size_t> on_facets;    // facets active at both endpoints
};

struct ParallelClass {
  std::size_t id;
  LatticeVector direction;
  std::vector<std::size_t> edges;
};

/// Vertices, edges and facet data of the Voronoi cell of a lattice.
///
/// Facets are indexed so that facet 2k is the bisector of +circuits[k] and
/// facet 2k+1 the bisector of -circuits[k]. Parallel classes are ordered by
/// their direction vectors, lexicographically descending.
struct VoronoiCell {
  std::size_t dim = 0;
  std::vector<CircuitVector> circuits;
  std::vector<Halfspace> halfspaces;
  std::vector<CellVertex> vertices;
  std::vector<CellEdge> edges;
  std::vector<ParallelClass> classes;
  std::vector<std::vector<std::size_t>> facet_classes;  // sorted class ids per facet
  std::vector<std::vector<bool>> facet_adjacent;        // facets share a vertex

  std::size_t facet_count() const noexcept { return halfspaces.size(); }
  static std::size_t facet_of(std::size_t circuit, bool negated) { return 2 * circuit + (negated ? 1 : 0); }
  static std::size_t antipode(std::size_t facet) { return facet ^ 1U; }
};

/// Bisector halfspaces of ±v for every circuit, in circuit order.
std::vector<Halfspace> bisector_halfspaces(const std::vector<CircuitVector>& circuits);

/// Exact double-description vertex enumeration. Vertices carry their full
/// active sets and are sorted lexicographically. Throws Unbounded if the
/// halfspaces do not cut out a polytope.
std::vector<CellVertex> vertex_enumeration(const GramMatrix& m, const std::vector<Halfspace>& halfspaces);

/// Two vertices span an edge iff their common active normals have rank r - 1.
std::vector<CellEdge> edge_enumeration(const GramMatrix& m, const std::vector<CellVertex>& vertices,
                                       const std::vector<Halfspace>& halfspaces, bool parallel = false);

/// Full cell for a lattice of rank >= 2. Throws DegenerateRank for rank 1.
VoronoiCell build_cell(const GramMatrix& m, const std::vector<CircuitVector>& circuits, bool parallel = false);

const std::vector<std::size_t>& facet_classes(const VoronoiCell& cell, std::size_t facet);
bool facets_share_vertex(const VoronoiCell& cell, std::size_t i, std::size_t j);

/// `facets=<k> vertices=<v> edges=<e> classes=<c>`
std::string stats_line(const VoronoiCell& cell);

/// Wavefront OBJ mesh of a rank-3 cell in an isometric Euclidean embedding:
/// one `v` line per vertex and one `f` polygon per facet.
void write_obj(std::ostream& os, const GramMatrix& m, const VoronoiCell& cell);

}  // namespace flowmat
