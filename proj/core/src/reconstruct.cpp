#include "flowmat/reconstruct.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "flowmat/errors.hpp"

namespace flowmat {

const char* to_string(PairType t) {
  switch (t) {
    case PairType::Compatible:
      return "compatible";
    case PairType::AntiCompatible:
      return "anti-compatible";
    case PairType::Incompatible:
      return "incompatible";
    case PairType::Disjoint:
      return "disjoint";
  }
  return "?";
}

PairType classify_pair(const VoronoiCell& cell, std::size_t facet_i, std::size_t facet_j) {
  const bool same = facets_share_vertex(cell, facet_i, facet_j);
  const bool opposite = facets_share_vertex(cell, facet_i, VoronoiCell::antipode(facet_j));
  if (same && opposite) return PairType::Disjoint;
  if (same) return PairType::Compatible;
  if (opposite) return PairType::AntiCompatible;
  return PairType::Incompatible;
}

std::size_t facet_index(const VoronoiCell& cell, const LatticeVector& v) {
  for (std::size_t f = 0; f < cell.halfspaces.size(); ++f)
    if (cell.halfspaces[f].normal == v) return f;
  throw Error("vector is not a circuit vector of the cell");
}

PairType classify_pair(const VoronoiCell& cell, const LatticeVector& ci, const LatticeVector& cj) {
  return classify_pair(cell, facet_index(cell, ci), facet_index(cell, cj));
}

namespace {

// gcd of the maximal minors of the rows; 1 iff the rows extend to a basis
// of Zʳ.
Int maximal_minor_gcd(const std::vector<const LatticeVector*>& rows, std::size_t r) {
  const std::size_t k = rows.size();
  std::vector<std::size_t> cols(k);
  for (std::size_t i = 0; i < k; ++i) cols[i] = i;
  Int g = 0;
  for (;;) {
    MatZ sub(k, k);
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b) sub(a, b) = (*rows[a])[cols[b]];
    g = gcd(g, det(sub));
    if (g == 1) return g;
    // Next k-combination of {0, ..., r-1}.
    std::size_t i = k;
    while (i > 0 && cols[i - 1] == r - k + i - 1) --i;
    if (i == 0) return g;
    ++cols[i - 1];
    for (std::size_t j = i; j < k; ++j) cols[j] = cols[j - 1] + 1;
  }
}

}  // namespace

CircuitBasis choose_basis(const VoronoiCell& cell, const GramMatrix& m) {
  const std::size_t r = m.rank();
  const std::size_t n = cell.circuits.size();
  std::vector<std::vector<PairType>> types(n, std::vector<PairType>(n, PairType::Disjoint));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) types[i][j] = classify_pair(cell, VoronoiCell::facet_of(i, false), VoronoiCell::facet_of(j, false));

  std::vector<std::size_t> chosen;
  std::vector<const LatticeVector*> rows;
  std::function<bool(std::size_t)> extend = [&](std::size_t start) {
    if (chosen.size() == r) return true;
    for (std::size_t c = start; c + (r - chosen.size()) <= n; ++c) {
      if (std::any_of(chosen.begin(), chosen.end(), [&](std::size_t s) { return types[s][c] == PairType::Incompatible; }))
        continue;
      rows.push_back(&cell.circuits[c].rep);
      if (maximal_minor_gcd(rows, r) == 1) {
        chosen.push_back(c);
        if (extend(c + 1)) return true;
        chosen.pop_back();
      }
      rows.pop_back();
    }
    return false;
  };
  if (!extend(0)) throw NoBasisFound("no unimodular set of pairwise compatible circuits");

  CircuitBasis basis;
  basis.members = chosen;
  basis.coords = MatZ(r, r);
  basis.gram = MatZ(r, r);
  basis.pair_types.assign(r, std::vector<PairType>(r, PairType::Compatible));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      basis.coords(i, j) = cell.circuits[chosen[i]].rep[j];
      basis.gram(i, j) = inner(cell.circuits[chosen[i]].rep, cell.circuits[chosen[j]].rep, m);
      basis.pair_types[i][j] = types[chosen[i]][chosen[j]];
    }
  }
  return basis;
}

BlockSystem block_size_system(const CircuitBasis& basis, const VoronoiCell& cell) {
  const std::size_t r = basis.members.size();
  const std::size_t k = cell.classes.size();
  std::vector<std::vector<bool>> on_face(r, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c : facet_classes(cell, VoronoiCell::facet_of(basis.members[i], false))) on_face[i][c] = true;

  BlockSystem sys;
  sys.coeffs = MatQ(r + r * (r - 1) / 2, k);
  sys.rhs.reserve(sys.coeffs.rows());
  std::size_t row = 0;
  for (std::size_t i = 0; i < r; ++i, ++row) {
    for (std::size_t c = 0; c < k; ++c)
      if (!on_face[i][c]) sys.coeffs(row, c) = 1;
    sys.rhs.emplace_back(basis.gram(i, i));
  }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j, ++row) {
      for (std::size_t c = 0; c < k; ++c)
        if (!on_face[i][c] && !on_face[j][c]) sys.coeffs(row, c) = 1;
      sys.rhs.emplace_back(abs(basis.gram(i, j)));
    }

  sys.upper.assign(k, 0);
  for (std::size_t c = 0; c < k; ++c) {
    bool any = false;
    for (std::size_t i = 0; i < r; ++i) {
      if (on_face[i][c]) continue;
      const auto len = basis.gram(i, i).get_ui();
      sys.upper[c] = any ? std::min<std::size_t>(sys.upper[c], len) : len;
      any = true;
    }
    if (!any) throw NoSolution("parallel class " + std::to_string(c) + " lies in no basis circuit");
  }
  return sys;
}

bool satisfies(const BlockSystem& system, const std::vector<std::size_t>& sizes) {
  if (sizes.size() != system.coeffs.cols()) return false;
  for (std::size_t i = 0; i < system.coeffs.rows(); ++i) {
    Rat s = 0;
    for (std::size_t c = 0; c < sizes.size(); ++c)
      if (system.coeffs(i, c) != 0) s += system.coeffs(i, c) * static_cast<unsigned long>(sizes[c]);
    if (s != system.rhs[i]) return false;
  }
  return true;
}

BlockSolution solve_block_sizes(const CircuitBasis& basis, const VoronoiCell& cell) {
  const BlockSystem sys = block_size_system(basis, cell);
  const std::size_t k = sys.coeffs.cols();
  const auto affine = solve_affine(sys.coeffs, sys.rhs);
  if (!affine) throw NoSolution("block-size equations are inconsistent");

  auto admissible = [&](const VecQ& x, std::vector<std::size_t>& sizes) {
    sizes.assign(k, 0);
    for (std::size_t c = 0; c < k; ++c) {
      if (x[c].get_den() != 1 || x[c] < 1 || x[c] > static_cast<unsigned long>(sys.upper[c])) return false;
      sizes[c] = x[c].get_num().get_ui();
    }
    return true;
  };

  std::vector<std::vector<std::size_t>> solutions;
  std::vector<std::size_t> sizes;
  if (affine->nullspace.empty()) {
    if (admissible(affine->particular, sizes)) solutions.push_back(sizes);
  } else {
    // Each nullspace vector is supported on exactly one free variable among
    // the free variables, and the particular solution vanishes there, so the
    // free variables parametrize the solution space directly.
    std::vector<std::size_t> free_var;
    double box = 1;
    for (const auto& n : affine->nullspace) {
      std::size_t f = 0;
      while (affine->particular[f] != 0 || n[f] == 0 ||
             std::any_of(affine->nullspace.begin(), affine->nullspace.end(),
                         [&](const VecQ& o) { return &o != &n && o[f] != 0; }))
        ++f;
      free_var.push_back(f);
      box *= static_cast<double>(sys.upper[f]);
    }
    if (box > 1e7) throw TooLarge("block-size search box exceeds 1e7 points");

    std::vector<std::size_t> value(free_var.size(), 1);
    VecQ x(k);
    for (;;) {
      x = affine->particular;
      for (std::size_t t = 0; t < free_var.size(); ++t) {
        const VecQ& n = affine->nullspace[t];
        const Rat scale = Rat(static_cast<unsigned long>(value[t])) / n[free_var[t]];
        for (std::size_t c = 0; c < k; ++c)
          if (n[c] != 0) x[c] += scale * n[c];
      }
      if (admissible(x, sizes)) solutions.push_back(sizes);
      std::size_t t = 0;
      while (t < value.size() && value[t] == sys.upper[free_var[t]]) value[t++] = 1;
      if (t == value.size()) break;
      ++value[t];
    }
  }

  if (solutions.empty()) throw NoSolution("no positive integer block sizes satisfy the equations");
  if (solutions.size() > 1)
    throw AmbiguousSolution(std::to_string(solutions.size()) + " positive integer solutions for the block sizes");
  return BlockSolution{std::move(solutions.front())};
}

std::vector<std::vector<bool>> block_incidence(const VoronoiCell& cell) {
  std::vector<std::vector<bool>> rows;
  for (std::size_t i = 0; i < cell.circuits.size(); ++i) {
    std::vector<bool> row(cell.classes.size(), true);
    for (std::size_t c : facet_classes(cell, VoronoiCell::facet_of(i, false))) row[c] = false;
    rows.push_back(std::move(row));
  }
  return rows;
}

BlockMatroid build_matroid(const VoronoiCell& cell, const BlockSolution& solution) {
  if (solution.sizes.size() != cell.classes.size()) throw DimensionMismatch("one block size per parallel class expected");
  BlockMatroid out;
  out.block_sizes = solution.sizes;
  std::vector<bool> used(cell.classes.size(), false);
  for (const auto& row : block_incidence(cell)) {
    std::vector<std::size_t> circuit;
    for (std::size_t c = 0; c < row.size(); ++c)
      if (row[c]) {
        circuit.push_back(c);
        used[c] = true;
      }
    out.circuits.push_back(std::move(circuit));
  }
  if (std::find(used.begin(), used.end(), false) != used.end()) throw Error("a block lies in no circuit");
  std::sort(out.circuits.begin(), out.circuits.end());
  return out;
}

SpanningTreeBasis spanning_tree_basis(const std::vector<std::vector<bool>>& incidence) {
  const std::size_t rows = incidence.size();
  const std::size_t cols = rows == 0 ? 0 : incidence.front().size();
  for (const auto& row : incidence) {
    if (row.size() != cols) throw DimensionMismatch("incidence rows differ in length");
    if (std::find(row.begin(), row.end(), true) == row.end()) throw DimensionMismatch("incidence row without a 1");
  }

  SpanningTreeBasis out;
  std::vector<bool> marked(cols, false);
  auto broken = [&](std::size_t i) {
    for (std::size_t c = 0; c < cols; ++c)
      if (incidence[i][c] && marked[c]) return true;
    return false;
  };
  for (std::size_t i = 0; i < rows; ++i) {
    if (broken(i)) continue;
    const auto first = static_cast<std::size_t>(std::find(incidence[i].begin(), incidence[i].end(), true) -
                                                 incidence[i].begin());
    marked[first] = true;
    out.marked_cols.push_back(first);
  }
  for (std::size_t i = 0; i < rows; ++i) {
    std::size_t red = 0;
    for (std::size_t c = 0; c < cols; ++c)
      if (incidence[i][c] && marked[c]) ++red;
    if (red == 1) out.basis_rows.push_back(i);
  }
  return out;
}

Reconstruction reconstruct_traced(const GramMatrix& m, bool parallel) {
  Reconstruction out;
  out.circuits = strict_voronoi_vectors(m, parallel);

  if (m.rank() == 1) {
    const Int& n = m(0, 0);
    out.solution.sizes = {n.get_ui()};
    out.matroid.block_sizes = {n.get_ui()};
    out.matroid.circuits = {{0}};
    return out;
  }

  auto stage = [](const char* name, auto&& fn) {
    try {
      return fn();
    } catch (const NotAFlowLattice&) {
      throw;
    } catch (const Error& e) {
      throw NotAFlowLattice(name, e.what());
    }
  };
  out.cell = stage("voronoi", [&] { return build_cell(m, out.circuits, parallel); });
  out.basis = stage("basis", [&] { return choose_basis(*out.cell, m); });
  out.solution = stage("block-sizes", [&] { return solve_block_sizes(*out.basis, *out.cell); });
  out.matroid = stage("matroid", [&] { return build_matroid(*out.cell, out.solution); });
  return out;
}

BlockMatroid reconstruct(const GramMatrix& m, bool parallel) { return reconstruct_traced(m, parallel).matroid; }

}  // namespace flowmat
