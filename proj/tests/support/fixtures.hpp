#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "flowmat/graph.hpp"
#include "flowmat/matroid.hpp"

namespace flowmat::testing {

struct Fixture {
  std::string name;
  graph::Multigraph graph;
};

/// Five vertices, seven edges: four paths between vertices 0 and 1 of
/// lengths 1, 2, 2, 2. Edge i is e_{i+1}.
graph::Multigraph three_triangles();
/// Signed vectors of e3+e4+e7, e5+e6+e7, e1+e2+e3+e4 on three_triangles().
std::vector<std::vector<int>> three_triangles_basis();
/// Its 6x7 circuit matrix.
CircuitMatroid three_triangles_matroid();

/// Two triangles sharing edge 4; fundamental Gram [[3,-1],[-1,3]].
graph::Multigraph two_triangles_sharing_edge();
/// two_triangles_sharing_edge() with a triangle glued at vertex `attach`.
/// Gluing at vertex 0 (degree 3) or vertex 2 (degree 2) gives non-isomorphic,
/// 2-isomorphic graphs.
graph::Multigraph two_triangles_plus_triangle(std::size_t attach);

graph::Multigraph cycle(std::size_t n);
graph::Multigraph theta(std::size_t parallel);
graph::Multigraph complete(std::size_t n);
/// Two triangles sharing vertex 0 only.
graph::Multigraph bowtie();

/// Every connected, bridgeless, loop-free multigraph with 2..max_vertices
/// vertices and at most max_edges edges, one per isomorphism class.
std::vector<Fixture> exhaustive_corpus(std::size_t max_vertices, std::size_t max_edges);

/// Random connected bridgeless loop-free multigraphs with genus in
/// [1, max_genus], reproducible from the seed.
std::vector<Fixture> random_corpus(std::size_t count, std::size_t max_genus, std::uint64_t seed);

/// Small graphs with loops, kept apart from the main corpus.
std::vector<Fixture> loop_corpus();

}  // namespace flowmat::testing
