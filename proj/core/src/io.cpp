#include "flowmat/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "flowmat/errors.hpp"

namespace flowmat::io {

namespace {

std::vector<std::vector<std::string>> tokenized_lines(std::istream& in) {
  std::vector<std::vector<std::string>> lines;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<std::string> toks;
    for (std::string t; ls >> t;) toks.push_back(t);
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  return lines;
}

Int parse_int(const std::string& tok) {
  Int v;
  if (tok.empty() || v.set_str(tok, 10) != 0) throw ParseError("not an integer: '" + tok + "'");
  return v;
}

std::size_t parse_count(const std::string& tok) {
  const Int v = parse_int(tok);
  if (v < 0 || !v.fits_ulong_p()) throw ParseError("not a non-negative count: '" + tok + "'");
  return v.get_ui();
}

}  // namespace

GramMatrix read_gram(std::istream& in) {
  const auto lines = tokenized_lines(in);
  if (lines.empty() || lines[0].size() != 1) throw ParseError("gram: first line must hold the rank");
  const std::size_t r = parse_count(lines[0][0]);
  if (r == 0) throw ParseError("gram: rank must be positive");
  if (lines.size() != r + 1) throw ParseError("gram: expected " + std::to_string(r) + " matrix rows");
  MatZ m(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    if (lines[i + 1].size() != r) throw ParseError("gram: row " + std::to_string(i + 1) + " has the wrong length");
    for (std::size_t j = 0; j < r; ++j) m(i, j) = parse_int(lines[i + 1][j]);
  }
  return GramMatrix(std::move(m));
}

void write_gram(std::ostream& out, const MatZ& gram) {
  out << gram.rows() << '\n';
  for (std::size_t i = 0; i < gram.rows(); ++i) {
    for (std::size_t j = 0; j < gram.cols(); ++j) out << (j ? " " : "") << gram(i, j);
    out << '\n';
  }
}

graph::Multigraph read_graph(std::istream& in) {
  const auto lines = tokenized_lines(in);
  if (lines.empty() || lines[0].size() != 2) throw ParseError("graph: first line must be `n m`");
  const std::size_t n = parse_count(lines[0][0]);
  const std::size_t m = parse_count(lines[0][1]);
  if (lines.size() != m + 1) throw ParseError("graph: expected " + std::to_string(m) + " edge lines");
  std::vector<graph::Edge> edges;
  for (std::size_t e = 0; e < m; ++e) {
    const auto& l = lines[e + 1];
    if (l.size() != 2) throw ParseError("graph: edge line " + std::to_string(e + 1) + " must be `tail head`");
    const std::size_t t = parse_count(l[0]);
    const std::size_t h = parse_count(l[1]);
    if (t >= n || h >= n) throw ParseError("graph: edge " + std::to_string(e) + " has an endpoint out of range");
    edges.push_back({t, h});
  }
  return graph::Multigraph(n, std::move(edges));
}

void write_graph(std::ostream& out, const graph::Multigraph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << e.tail << ' ' << e.head << '\n';
}

std::string format_matroid(const BlockMatroid& m) {
  const CircuitMatroid expanded = expand(m);
  std::ostringstream os;
  os << "matroid " << expanded.ground_size << ' ' << expanded.circuits.size() << '\n';
  os << "blocks " << m.block_sizes.size() << ':';
  for (std::size_t s : m.block_sizes) os << ' ' << s;
  os << '\n';
  for (const auto& c : expanded.circuits) {
    os << "circuit:";
    for (std::size_t e : c) os << ' ' << e;
    os << '\n';
  }
  return os.str();
}

std::vector<std::vector<bool>> read_incidence(std::istream& in) {
  const auto lines = tokenized_lines(in);
  if (lines.empty()) throw ParseError("incidence: empty matrix");
  std::vector<std::vector<bool>> rows;
  for (const auto& l : lines) {
    if (l.size() != lines[0].size()) throw ParseError("incidence: rows differ in length");
    std::vector<bool> row;
    for (const auto& t : l) {
      if (t != "0" && t != "1") throw ParseError("incidence: entries must be 0 or 1, got '" + t + "'");
      row.push_back(t == "1");
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

bool looks_like_gram(const std::string& text) {
  std::istringstream in(text);
  const auto lines = tokenized_lines(in);
  if (lines.empty() || lines[0].size() != 1) return false;
  Int r;
  if (r.set_str(lines[0][0], 10) != 0 || r < 1 || !r.fits_ulong_p()) return false;
  if (lines.size() != r.get_ui() + 1) return false;
  for (std::size_t i = 1; i < lines.size(); ++i)
    if (lines[i].size() != r.get_ui()) return false;
  return true;
}

}  // namespace flowmat::io
