#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "flowmat/errors.hpp"
#include "flowmat/reconstruct.hpp"

using namespace flowmat;
namespace fx = flowmat::testing;

namespace {

const MatZ kHex{{3, -1}, {-1, 3}};
const MatZ kThreeTriangles{{3, 1, 2}, {1, 3, 0}, {2, 0, 4}};

struct Built {
  GramMatrix m;
  VoronoiCell cell;
};

Built build(const MatZ& g) {
  GramMatrix m(g);
  auto cell = build_cell(m, strict_voronoi_vectors(m));
  return {std::move(m), std::move(cell)};
}

Built build(const graph::Multigraph& g) { return build(graph::fundamental_basis(g).gram); }

}  // namespace

TEST(ClassifyPair, Hexagon) {
  const auto b = build(kHex);
  EXPECT_EQ(classify_pair(b.cell, LatticeVector{1, 0}, LatticeVector{0, 1}), PairType::AntiCompatible);
  EXPECT_EQ(classify_pair(b.cell, LatticeVector{1, 0}, LatticeVector{0, -1}), PairType::Compatible);
  EXPECT_STREQ(to_string(PairType::AntiCompatible), "anti-compatible");
}

TEST(ClassifyPair, SquareIsDisjoint) {
  const auto b = build(MatZ{{3, 0}, {0, 3}});
  EXPECT_EQ(classify_pair(b.cell, LatticeVector{1, 0}, LatticeVector{0, 1}), PairType::Disjoint);
  const auto bow = build(fx::bowtie());
  EXPECT_EQ(classify_pair(bow.cell, LatticeVector{1, 0}, LatticeVector{0, 1}), PairType::Disjoint);
}

TEST(ClassifyPair, K4OppositeSquaresIncompatible) {
  // K4 on vertices 0..3; the 4-cycles 0-1-2-3 and 0-1-3-2 share edges {0,1}
  // and {2,3} with opposite relative orientation on one of them, so the
  // pairing is 0 while they share two edges.
  const auto g = fx::complete(4);  // edges 01 02 03 12 13 23
  const std::vector<int> c1{1, 0, -1, 1, 0, 1};   // 0>1>2>3>0
  const std::vector<int> c2{1, -1, 0, 0, 1, -1};  // 0>1>3>2>0
  ASSERT_TRUE(graph::is_flow(g, c1));
  ASSERT_TRUE(graph::is_flow(g, c2));
  int pairing = 0;
  for (std::size_t e = 0; e < 6; ++e) pairing += c1[e] * c2[e];
  ASSERT_EQ(pairing, 0);

  const auto basis = graph::fundamental_basis(g);
  const auto b = build(basis.gram);
  const auto to_lattice = [&](const std::vector<int>& c) {
    const auto v = graph::basis_coordinates(basis, c);
    return LatticeVector(v.begin(), v.end());
  };
  EXPECT_EQ(classify_pair(b.cell, to_lattice(c1), to_lattice(c2)), PairType::Incompatible);
}

TEST(ChooseBasis, Examples) {
  const auto hex = build(kHex);
  const auto hb = choose_basis(hex.cell, hex.m);
  EXPECT_EQ(hb.coords, (MatZ{{0, 1}, {1, 0}}));

  const auto p = build(kThreeTriangles);
  const auto pb = choose_basis(p.cell, p.m);
  ASSERT_EQ(pb.members.size(), 3u);
  EXPECT_EQ(abs(det(pb.coords)), 1);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) EXPECT_NE(pb.pair_types[i][j], PairType::Incompatible);

  const auto th = build(MatZ{{2, 1}, {1, 2}});
  const auto tb = choose_basis(th.cell, th.m);
  EXPECT_EQ(tb.members.size(), 2u);
  EXPECT_EQ(th.cell.circuits.size(), 3u);
}

TEST(BlockSizes, Examples) {
  const auto p = build(kThreeTriangles);
  EXPECT_EQ(solve_block_sizes(choose_basis(p.cell, p.m), p.cell).sizes, (std::vector<std::size_t>{2, 2, 1, 2}));
  const auto hex = build(kHex);
  auto hs = solve_block_sizes(choose_basis(hex.cell, hex.m), hex.cell).sizes;
  std::sort(hs.begin(), hs.end());
  EXPECT_EQ(hs, (std::vector<std::size_t>{1, 2, 2}));
  const auto th = build(MatZ{{2, 1}, {1, 2}});
  EXPECT_EQ(solve_block_sizes(choose_basis(th.cell, th.m), th.cell).sizes, (std::vector<std::size_t>{1, 1, 1}));
}

TEST(BlockSizes, SystemRejectsPerturbations) {
  const auto p = build(kThreeTriangles);
  const auto basis = choose_basis(p.cell, p.m);
  const auto sys = block_size_system(basis, p.cell);
  EXPECT_TRUE(satisfies(sys, {2, 2, 1, 2}));
  EXPECT_FALSE(satisfies(sys, {2, 2, 2, 1}));
  EXPECT_FALSE(satisfies(sys, {1, 2, 1, 2}));
}

TEST(BuildMatroid, Examples) {
  const auto p = build(kThreeTriangles);
  const auto m = build_matroid(p.cell, solve_block_sizes(choose_basis(p.cell, p.m), p.cell));
  EXPECT_EQ(m.circuits.size(), 6u);
  EXPECT_TRUE(is_isomorphic(m, fx::three_triangles_matroid()));

  const auto hex = build(kHex);
  const auto hm = build_matroid(hex.cell, solve_block_sizes(choose_basis(hex.cell, hex.m), hex.cell));
  EXPECT_EQ(hm.ground_size(), 5u);
  EXPECT_TRUE(is_isomorphic(hm, graph::graphic_matroid(fx::two_triangles_sharing_edge())));

  const auto k4 = build(fx::complete(4));
  const auto km = build_matroid(k4.cell, solve_block_sizes(choose_basis(k4.cell, k4.m), k4.cell));
  EXPECT_EQ(km.block_sizes, (std::vector<std::size_t>(6, 1)));
  EXPECT_EQ(expand(km).circuits, km.circuits);
}

TEST(SpanningTreeBasis, Examples) {
  const std::vector<std::vector<bool>> inc{
      {1, 0, 1, 0}, {0, 0, 1, 1}, {1, 1, 0, 0}, {0, 1, 0, 1}, {1, 0, 0, 1}, {0, 1, 1, 0},
  };
  const auto b = spanning_tree_basis(inc);
  EXPECT_EQ(b.marked_cols, (std::vector<std::size_t>{0, 2, 1}));
  EXPECT_EQ(b.basis_rows, (std::vector<std::size_t>{1, 3, 4}));

  EXPECT_EQ(spanning_tree_basis({{1}}).basis_rows, (std::vector<std::size_t>{0}));
  const std::vector<std::vector<bool>> id{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  EXPECT_EQ(spanning_tree_basis(id).basis_rows, (std::vector<std::size_t>{0, 1, 2}));
}

TEST(SpanningTreeBasis, RankOnCorpus) {
  for (const auto& f : fx::random_corpus(30, 5, 8)) {
    if (f.graph.genus() < 2) continue;
    const auto b = build(f.graph);
    const auto rows = spanning_tree_basis(block_incidence(b.cell)).basis_rows;
    EXPECT_EQ(rows.size(), f.graph.genus()) << f.name;
    MatZ coords(rows.size(), b.m.rank());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < b.m.rank(); ++j) coords(i, j) = b.cell.circuits[rows[i]].rep[j];
    EXPECT_EQ(abs(det(coords)), 1) << f.name;
  }
}

TEST(Reconstruct, Examples) {
  EXPECT_TRUE(is_isomorphic(reconstruct(GramMatrix(kThreeTriangles)), fx::three_triangles_matroid()));
  const auto c4 = reconstruct(GramMatrix(MatZ{{4}}));
  EXPECT_EQ(c4.block_sizes, (std::vector<std::size_t>{4}));
  EXPECT_EQ(c4.circuits, (std::vector<std::vector<std::size_t>>{{0}}));
  EXPECT_TRUE(is_isomorphic(reconstruct(GramMatrix(kHex)), graph::graphic_matroid(fx::two_triangles_sharing_edge())));
}

TEST(Reconstruct, ThreeConnectedIsEdgeBijection) {
  for (const auto& g : {fx::complete(4), fx::complete(5)}) {
    const auto m = reconstruct(GramMatrix(graph::fundamental_basis(g).gram));
    EXPECT_EQ(m.block_sizes, std::vector<std::size_t>(g.edge_count(), 1));
    EXPECT_TRUE(is_isomorphic(m, graph::graphic_matroid(g)));
  }
}

TEST(Reconstruct, NonFlowLatticeFails) {
  // The root lattice D4 is not the flow lattice of any graph.
  const MatZ d4{{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}};
  EXPECT_THROW(reconstruct(GramMatrix(d4)), NotAFlowLattice);
}
