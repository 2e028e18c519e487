#include <gtest/gtest.h>

#include <sstream>

#include "fixtures.hpp"
#include "flowmat/errors.hpp"
#include "flowmat/io.hpp"
#include "flowmat/reconstruct.hpp"

using namespace flowmat;
namespace fx = flowmat::testing;

namespace {

GramMatrix parse_gram(const std::string& s) {
  std::istringstream in(s);
  return io::read_gram(in);
}

graph::Multigraph parse_graph(const std::string& s) {
  std::istringstream in(s);
  return io::read_graph(in);
}

}  // namespace

TEST(Gram, RoundTrip) {
  const MatZ g{{3, 1, 2}, {1, 3, 0}, {2, 0, 4}};
  std::ostringstream os;
  io::write_gram(os, g);
  EXPECT_EQ(os.str(), "3\n3 1 2\n1 3 0\n2 0 4\n");
  EXPECT_EQ(parse_gram(os.str()).entries(), g);
  EXPECT_TRUE(io::looks_like_gram(os.str()));
}

TEST(Gram, Errors) {
  EXPECT_THROW(parse_gram(""), ParseError);
  EXPECT_THROW(parse_gram("0\n"), ParseError);
  EXPECT_THROW(parse_gram("2\n1 0\n"), ParseError);
  EXPECT_THROW(parse_gram("2\n1 0\n0\n"), ParseError);
  EXPECT_THROW(parse_gram("1\nx\n"), ParseError);
  EXPECT_THROW(parse_gram("2\n1 2\n2 1\n"), NotPositiveDefinite);
  EXPECT_THROW(parse_gram("2\n1 0\n1 1\n"), DimensionMismatch);
}

TEST(Graph, RoundTripAndErrors) {
  const auto g = fx::three_triangles();
  std::ostringstream os;
  io::write_graph(os, g);
  const auto back = parse_graph(os.str());
  EXPECT_EQ(back.vertex_count(), 5u);
  EXPECT_EQ(back.edges(), g.edges());
  EXPECT_THROW(parse_graph("2 1\n0 2\n"), ParseError);
  EXPECT_THROW(parse_graph("2 2\n0 1\n"), ParseError);
  EXPECT_THROW(parse_graph("2 1\n0\n"), ParseError);
  EXPECT_THROW(parse_graph("-1 0\n"), ParseError);
}

TEST(Incidence, Parse) {
  std::istringstream in("1 0 1\n\n0 1 1\n");
  EXPECT_EQ(io::read_incidence(in), (std::vector<std::vector<bool>>{{1, 0, 1}, {0, 1, 1}}));
  std::istringstream bad("1 2\n");
  EXPECT_THROW(io::read_incidence(bad), ParseError);
  std::istringstream ragged("1 0\n1\n");
  EXPECT_THROW(io::read_incidence(ragged), ParseError);
  EXPECT_FALSE(io::looks_like_gram("1 0 1 0\n0 0 1 1\n"));
}

TEST(Matroid, Format) {
  const BlockMatroid m{{2, 2, 1}, {{0, 1}, {0, 2}, {1, 2}}};
  EXPECT_EQ(io::format_matroid(m),
            "matroid 5 3\n"
            "blocks 3: 2 2 1\n"
            "circuit: 0 1 2 3\n"
            "circuit: 0 1 4\n"
            "circuit: 2 3 4\n");
}

TEST(Loops, RoundTripThroughReconstruction) {
  // Loops are circuits of size one and carry norm 1; the lattice of a graph
  // with loops still reconstructs its matroid.
  for (const auto& f : fx::loop_corpus()) {
    std::ostringstream os;
    io::write_graph(os, f.graph);
    const auto g = parse_graph(os.str());
    graph::validate_two_connected(g);
    const GramMatrix m(graph::fundamental_basis(g).gram);
    EXPECT_TRUE(is_isomorphic(reconstruct(m), graph::graphic_matroid(g))) << f.name;
  }
}
