// flowmat: reconstruct the graphic matroid of a 2-edge-connected graph from
// the Gram matrix of its lattice of integer flows.
//
// Exit codes: 0 success, 1 invalid input, 2 not a flow lattice,
// 3 verification mismatch.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "flowmat/errors.hpp"
#include "flowmat/graph.hpp"
#include "flowmat/io.hpp"
#include "flowmat/reconstruct.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInvalidInput = 1;
constexpr int kNotAFlowLattice = 2;
constexpr int kMismatch = 3;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw flowmat::ParseError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

flowmat::GramMatrix load_gram(const std::string& path) {
  std::istringstream in(slurp(path));
  return flowmat::io::read_gram(in);
}

flowmat::graph::Multigraph load_graph(const std::string& path) {
  std::istringstream in(slurp(path));
  return flowmat::io::read_graph(in);
}

std::string join(const auto& xs, std::size_t offset = 0) {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : xs) {
    os << (first ? "" : " ") << x + offset;
    first = false;
  }
  return os.str();
}

int cmd_reconstruct(const std::string& path, bool parallel) {
  const auto gram = load_gram(path);
  std::cout << flowmat::io::format_matroid(flowmat::reconstruct(gram, parallel));
  return kOk;
}

int cmd_gram(const std::string& path) {
  const auto g = load_graph(path);
  flowmat::io::write_gram(std::cout, flowmat::graph::fundamental_basis(g).gram);
  return kOk;
}

int cmd_oracle(const std::string& path) {
  namespace graph = flowmat::graph;
  const auto g = load_graph(path);
  graph::validate_two_connected(g);
  const auto basis = graph::fundamental_basis(g);
  const auto circuits = graph::all_circuits(g);
  const auto blocks = graph::two_cut_blocks(g);

  std::cout << "vertices " << g.vertex_count() << " edges " << g.edge_count() << " genus " << g.genus() << '\n';
  std::cout << "spanning_trees " << graph::spanning_tree_count(g) << '\n';
  if (g.edge_count() <= 20) std::cout << "strong_orientations " << graph::strong_orientation_count(g) << '\n';
  std::cout << "tree " << join(basis.tree) << '\n';
  std::cout << "blocks " << blocks.size() << ':';
  for (const auto& b : blocks) std::cout << " {" << join(b) << '}';
  std::cout << '\n';
  std::cout << "circuits " << circuits.size() << '\n';
  for (const auto& c : circuits) {
    std::cout << "circuit: " << join(c.edge_set) << "  coords (" << join(graph::basis_coordinates(basis, c.signed_vector))
              << ")\n";
  }
  return kOk;
}

int cmd_verify(const std::string& path, bool parallel) {
  namespace graph = flowmat::graph;
  const auto g = load_graph(path);
  graph::validate_two_connected(g);
  const flowmat::GramMatrix gram(graph::fundamental_basis(g).gram);
  const auto expected = graph::graphic_matroid(g);
  try {
    const auto got = flowmat::reconstruct(gram, parallel);
    if (flowmat::is_isomorphic(got, expected)) {
      std::cout << "OK\n";
      return kOk;
    }
    std::cout << "MISMATCH\n";
  } catch (const flowmat::NotAFlowLattice& e) {
    std::cout << "MISMATCH\n";
    std::cerr << "pipeline failed: " << e.what() << '\n';
  }
  return kMismatch;
}

int cmd_voronoi(const std::string& path, bool stats_only, const std::string& obj_path, bool parallel) {
  const auto gram = load_gram(path);
  const auto circuits = flowmat::strict_voronoi_vectors(gram, parallel);
  if (gram.rank() < 2) throw flowmat::DegenerateRank("rank-1 lattice: the Voronoi cell is a segment");
  const auto cell = flowmat::build_cell(gram, circuits, parallel);

  if (!stats_only) {
    for (std::size_t i = 0; i < cell.circuits.size(); ++i)
      std::cout << "circuit " << i << ": (" << join(cell.circuits[i].rep) << ") norm " << cell.circuits[i].norm
                << " classes {" << join(flowmat::facet_classes(cell, flowmat::VoronoiCell::facet_of(i, false)))
                << "}\n";
    for (const auto& c : cell.classes)
      std::cout << "class " << c.id << ": direction (" << join(c.direction) << ") edges " << c.edges.size() << '\n';
  }
  std::cout << flowmat::stats_line(cell) << '\n';
  if (!obj_path.empty()) {
    std::ofstream out(obj_path);
    if (!out) throw flowmat::ParseError("cannot write " + obj_path);
    flowmat::write_obj(out, gram, cell);
  }
  return kOk;
}

int cmd_stbasis(const std::string& path, const std::string& format, bool parallel) {
  const std::string text = slurp(path);
  const bool gram_input = format == "gram" || (format == "auto" && flowmat::io::looks_like_gram(text));
  std::vector<std::vector<bool>> incidence;
  std::istringstream in(text);
  if (gram_input) {
    const auto gram = flowmat::io::read_gram(in);
    if (gram.rank() == 1) {
      incidence = {{true}};
    } else {
      const auto traced = flowmat::reconstruct_traced(gram, parallel);
      incidence = flowmat::block_incidence(*traced.cell);
    }
  } else {
    incidence = flowmat::io::read_incidence(in);
  }
  const auto result = flowmat::spanning_tree_basis(incidence);
  std::cout << "marked: " << join(result.marked_cols, 1) << '\n';
  std::cout << "basis: " << join(result.basis_rows, 1) << '\n';
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Reconstruct graphic matroids from lattices of integer flows"};
  app.require_subcommand(1);
  bool parallel = false;
  app.add_flag("--parallel", parallel, "Run coset and edge enumeration on worker threads");

  std::string input;
  auto* reconstruct = app.add_subcommand("reconstruct", "Gram matrix file -> matroid text");
  reconstruct->add_option("gram", input, "Gram matrix file")->required();

  auto* gram = app.add_subcommand("gram", "Graph file -> Gram matrix of its fundamental-circuit basis");
  gram->add_option("graph", input, "Graph file")->required();

  auto* oracle = app.add_subcommand("oracle", "Graph file -> graph-side ground truth");
  oracle->add_option("graph", input, "Graph file")->required();

  auto* verify = app.add_subcommand("verify", "Round-trip a graph through its flow lattice");
  verify->add_option("graph", input, "Graph file")->required();

  bool stats_only = false;
  std::string obj_path;
  auto* voronoi = app.add_subcommand("voronoi", "Gram matrix file -> Voronoi cell summary");
  voronoi->add_option("gram", input, "Gram matrix file")->required();
  voronoi->add_flag("--stats", stats_only, "Print only the statistics line");
  voronoi->add_option("--obj", obj_path, "Write an OBJ mesh (rank 3 only)");

  std::string format = "auto";
  auto* stbasis = app.add_subcommand("stbasis", "Spanning-tree basis from a Gram file or 0/1 incidence matrix");
  stbasis->add_option("input", input, "Gram matrix or incidence matrix file")->required();
  stbasis->add_option("--format", format, "Input format")->check(CLI::IsMember({"auto", "gram", "incidence"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInvalidInput;
  }

  try {
    if (*reconstruct) return cmd_reconstruct(input, parallel);
    if (*gram) return cmd_gram(input);
    if (*oracle) return cmd_oracle(input);
    if (*verify) return cmd_verify(input, parallel);
    if (*voronoi) return cmd_voronoi(input, stats_only, obj_path, parallel);
    if (*stbasis) return cmd_stbasis(input, format, parallel);
  } catch (const flowmat::NotAFlowLattice& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNotAFlowLattice;
  } catch (const flowmat::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
  return kInvalidInput;
}
