#include "flowmat/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <thread>

#include <boost/dynamic_bitset.hpp>

#include "flowmat/errors.hpp"

namespace flowmat {

namespace {

using Bits = boost::dynamic_bitset<>;

Int dot(const VecZ& a, const VecZ& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

// a := alpha * a + beta * b, then made primitive.
void combine_into(VecZ& a, const Int& alpha, const Int& beta, const VecZ& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = alpha * a[i] + beta * b[i];
  a = make_primitive(std::move(a));
}

// Homogenized constraint g·(x, t) <= 0 for the bisector halfspace:
// 2(Mv)·x - (v,v) t <= 0.
VecZ homogenize(const GramMatrix& m, const Halfspace& h) {
  const std::size_t r = m.rank();
  if (h.normal.size() != r) throw DimensionMismatch("halfspace normal length differs from lattice rank");
  VecZ g(r + 1, Int(0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) g[i] += m(i, j) * h.normal[j];
    g[i] *= 2;
  }
  g[r] = -h.norm;
  return g;
}

// Double description of the cone {(x, t) : t >= 0, g_k·(x, t) <= 0}.
// The lineality space starts as the whole ambient space and shrinks as
// constraints that are not orthogonal to it are inserted.
class DoubleDescription {
 public:
  DoubleDescription(std::size_t dim, std::size_t constraint_count) : dim_(dim), count_(constraint_count) {
    for (std::size_t i = 0; i < dim; ++i) {
      VecZ e(dim, Int(0));
      e[i] = 1;
      lineality_.push_back(std::move(e));
    }
  }

  void insert(const VecZ& g) {
    const std::size_t c = inserted_++;
    auto lin = std::find_if(lineality_.begin(), lineality_.end(), [&](const VecZ& l) { return dot(g, l) != 0; });
    if (lin != lineality_.end()) {
      shrink_lineality(g, c, static_cast<std::size_t>(lin - lineality_.begin()));
    } else {
      cut(g, c);
    }
  }

  bool bounded_cone() const { return lineality_.empty(); }
  const std::vector<std::pair<VecZ, Bits>>& rays() const { return rays_; }

 private:
  void shrink_lineality(const VecZ& g, std::size_t c, std::size_t idx) {
    VecZ l0 = std::move(lineality_[idx]);
    lineality_.erase(lineality_.begin() + static_cast<std::ptrdiff_t>(idx));
    Int s0 = dot(g, l0);
    if (s0 > 0) {
      for (Int& x : l0) x = -x;
      s0 = -s0;
    }
    const Int neg_s0 = -s0;
    for (VecZ& l : lineality_) {
      const Int s = dot(g, l);
      if (s != 0) combine_into(l, neg_s0, s, l0);
    }
    for (auto& [y, tight] : rays_) {
      const Int s = dot(g, y);
      if (s != 0) combine_into(y, neg_s0, s, l0);
      tight.set(c);
    }
    Bits tight(count_);
    for (std::size_t k = 0; k < c; ++k) tight.set(k);
    rays_.emplace_back(std::move(l0), std::move(tight));
  }

  void cut(const VecZ& g, std::size_t c) {
    std::vector<Int> s;
    s.reserve(rays_.size());
    for (const auto& ray : rays_) s.push_back(dot(g, ray.first));

    const std::size_t pointed_dim = dim_ - lineality_.size();
    std::vector<std::pair<VecZ, Bits>> next;
    for (std::size_t i = 0; i < rays_.size(); ++i) {
      if (s[i] > 0) continue;
      next.push_back(rays_[i]);
      if (s[i] == 0) next.back().second.set(c);
    }
    for (std::size_t p = 0; p < rays_.size(); ++p) {
      if (s[p] <= 0) continue;
      for (std::size_t n = 0; n < rays_.size(); ++n) {
        if (s[n] >= 0) continue;
        Bits common = rays_[p].second & rays_[n].second;
        if (pointed_dim >= 2 && common.count() + 2 < pointed_dim) continue;
        bool adjacent = true;
        for (std::size_t q = 0; q < rays_.size() && adjacent; ++q)
          if (q != p && q != n && common.is_subset_of(rays_[q].second)) adjacent = false;
        if (!adjacent) continue;
        VecZ y = rays_[n].first;
        combine_into(y, s[p], -s[n], rays_[p].first);
        common.set(c);
        next.emplace_back(std::move(y), std::move(common));
      }
    }
    rays_ = std::move(next);
  }

  std::size_t dim_;
  std::size_t count_;
  std::size_t inserted_ = 0;
  std::vector<VecZ> lineality_;
  std::vector<std::pair<VecZ, Bits>> rays_;
};

template <typename Fn>
void for_chunks(std::size_t n, bool parallel, Fn&& fn) {
  const std::size_t workers = parallel ? std::max(1U, std::thread::hardware_concurrency()) : 1;
  if (workers <= 1 || n < 2) {
    fn(std::size_t{0}, std::size_t{1});
    return;
  }
  std::vector<std::jthread> pool;
  for (std::size_t t = 0; t < workers; ++t) pool.emplace_back([&fn, t, workers] { fn(t, workers); });
}

}  // namespace

std::vector<Halfspace> bisector_halfspaces(const std::vector<CircuitVector>& circuits) {
  std::vector<Halfspace> hs;
  hs.reserve(2 * circuits.size());
  for (const auto& c : circuits) {
    hs.push_back({c.rep, c.norm});
    LatticeVector neg = c.rep;
    for (Int& x : neg) x = -x;
    hs.push_back({std::move(neg), c.norm});
  }
  return hs;
}

std::vector<CellVertex> vertex_enumeration(const GramMatrix& m, const std::vector<Halfspace>& halfspaces) {
  const std::size_t r = m.rank();
  std::vector<VecZ> constraints;
  constraints.reserve(halfspaces.size());
  for (const auto& h : halfspaces) constraints.push_back(homogenize(m, h));

  DoubleDescription dd(r + 1, halfspaces.size() + 1);
  VecZ nonneg_t(r + 1, Int(0));
  nonneg_t[r] = -1;
  dd.insert(nonneg_t);
  for (const auto& g : constraints) dd.insert(g);

  if (!dd.bounded_cone()) throw Unbounded("halfspaces leave a lineality direction");
  std::vector<CellVertex> out;
  for (const auto& [y, tight] : dd.rays()) {
    if (y[r] == 0) throw Unbounded("halfspaces leave an unbounded ray");
    CellVertex v;
    v.point.reserve(r);
    for (std::size_t i = 0; i < r; ++i) {
      Rat q(y[i], y[r]);
      q.canonicalize();
      v.point.push_back(std::move(q));
    }
    for (std::size_t k = 0; k < constraints.size(); ++k)
      if (dot(constraints[k], y) == 0) v.active.push_back(k);
    out.push_back(std::move(v));
  }
  std::sort(out.begin(), out.end(), [](const CellVertex& a, const CellVertex& b) { return a.point < b.point; });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const CellVertex& a, const CellVertex& b) { return a.point == b.point; }),
            out.end());
  return out;
}

std::vector<CellEdge> edge_enumeration(const GramMatrix& m, const std::vector<CellVertex>& vertices,
                                       const std::vector<Halfspace>& halfspaces, bool parallel) {
  const std::size_t r = m.rank();
  const std::size_t nv = vertices.size();
  std::vector<std::vector<CellEdge>> found(nv);

  for_chunks(nv, parallel, [&](std::size_t first, std::size_t stride) {
    std::vector<std::size_t> common;
    for (std::size_t i = first; i < nv; i += stride) {
      for (std::size_t j = i + 1; j < nv; ++j) {
        common.clear();
        std::set_intersection(vertices[i].active.begin(), vertices[i].active.end(), vertices[j].active.begin(),
                              vertices[j].active.end(), std::back_inserter(common));
        if (common.size() + 1 < r) continue;
        MatZ normals(common.size(), r);
        for (std::size_t a = 0; a < common.size(); ++a)
          for (std::size_t b = 0; b < r; ++b) normals(a, b) = halfspaces[common[a]].normal[b];
        if (rank(normals) != r - 1) continue;

        VecQ diff(r);
        for (std::size_t b = 0; b < r; ++b) diff[b] = vertices[j].point[b] - vertices[i].point[b];
        VecZ dir = primitive_direction(diff);
        canonicalize_sign(dir);
        found[i].push_back(CellEdge{{i, j}, std::move(dir), common});
      }
    }
  });

  std::vector<CellEdge> out;
  for (auto& bucket : found)
    for (auto& e : bucket) out.push_back(std::move(e));
  return out;
}

VoronoiCell build_cell(const GramMatrix& m, const std::vector<CircuitVector>& circuits, bool parallel) {
  const std::size_t r = m.rank();
  if (r < 2) throw DegenerateRank("Voronoi cell of a rank-1 lattice has no proper 1-faces");
  if (circuits.empty()) throw DimensionMismatch("build_cell: no circuit vectors");

  VoronoiCell cell;
  cell.dim = r;
  cell.circuits = circuits;
  cell.halfspaces = bisector_halfspaces(circuits);
  cell.vertices = vertex_enumeration(m, cell.halfspaces);
  cell.edges = edge_enumeration(m, cell.vertices, cell.halfspaces, parallel);

  std::map<LatticeVector, std::vector<std::size_t>, std::greater<>> by_direction;
  for (std::size_t e = 0; e < cell.edges.size(); ++e) by_direction[cell.edges[e].direction].push_back(e);
  std::vector<std::size_t> class_of_edge(cell.edges.size());
  for (auto& [dir, members] : by_direction) {
    const std::size_t id = cell.classes.size();
    for (std::size_t e : members) class_of_edge[e] = id;
    cell.classes.push_back(ParallelClass{id, dir, std::move(members)});
  }

  const std::size_t nf = cell.halfspaces.size();
  std::vector<std::set<std::size_t>> fc(nf);
  for (std::size_t e = 0; e < cell.edges.size(); ++e)
    for (std::size_t f : cell.edges[e].on_facets) fc[f].insert(class_of_edge[e]);
  cell.facet_classes.reserve(nf);
  for (auto& s : fc) cell.facet_classes.emplace_back(s.begin(), s.end());

  cell.facet_adjacent.assign(nf, std::vector<bool>(nf, false));
  for (const auto& v : cell.vertices)
    for (std::size_t a : v.active)
      for (std::size_t b : v.active) cell.facet_adjacent[a][b] = true;
  for (std::size_t f = 0; f < nf; ++f)
    if (!cell.facet_adjacent[f][f])
      throw Error("halfspace " + std::to_string(f) + " supports no vertex of the cell");
  return cell;
}

const std::vector<std::size_t>& facet_classes(const VoronoiCell& cell, std::size_t facet) {
  return cell.facet_classes.at(facet);
}

bool facets_share_vertex(const VoronoiCell& cell, std::size_t i, std::size_t j) {
  return cell.facet_adjacent.at(i).at(j);
}

std::string stats_line(const VoronoiCell& cell) {
  std::ostringstream os;
  os << "facets=" << cell.facet_count() << " vertices=" << cell.vertices.size() << " edges=" << cell.edges.size()
     << " classes=" << cell.classes.size();
  return os.str();
}

void write_obj(std::ostream& os, const GramMatrix& m, const VoronoiCell& cell) {
  const std::size_t r = m.rank();
  if (r != 3) throw DimensionMismatch("OBJ export needs a rank-3 lattice");
  const Ldlt& f = m.factor();

  // x ↦ sqrt(D) ∘ (Lᵀ x) is an isometry onto Euclidean space.
  auto embed = [&](auto&& coord) {
    std::array<double, 3> e{};
    for (std::size_t i = 0; i < r; ++i) {
      Rat s = 0;
      for (std::size_t j = i; j < r; ++j) s += f.lower(j, i) * coord(j);
      e[i] = std::sqrt(f.diag[i].get_d()) * s.get_d();
    }
    return e;
  };

  std::vector<std::array<double, 3>> pts;
  os << "# " << stats_line(cell) << '\n';
  for (const auto& v : cell.vertices) {
    pts.push_back(embed([&](std::size_t j) { return v.point[j]; }));
    os << "v " << pts.back()[0] << ' ' << pts.back()[1] << ' ' << pts.back()[2] << '\n';
  }

  for (std::size_t facet = 0; facet < cell.facet_count(); ++facet) {
    std::map<std::size_t, std::vector<std::size_t>> nbrs;
    for (const auto& e : cell.edges) {
      if (!std::binary_search(e.on_facets.begin(), e.on_facets.end(), facet)) continue;
      nbrs[e.endpoints[0]].push_back(e.endpoints[1]);
      nbrs[e.endpoints[1]].push_back(e.endpoints[0]);
    }
    if (nbrs.empty()) continue;
    std::vector<std::size_t> loop{nbrs.begin()->first};
    std::size_t prev = loop.front();
    std::size_t cur = nbrs.begin()->second.front();
    while (cur != loop.front() && loop.size() <= nbrs.size()) {
      loop.push_back(cur);
      const auto& nb = nbrs[cur];
      const std::size_t next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    if (loop.size() >= 3) {
      const auto normal = embed([&](std::size_t j) { return Rat(cell.halfspaces[facet].normal[j]); });
      const auto& a = pts[loop[0]];
      const auto& b = pts[loop[1]];
      const auto& c = pts[loop[2]];
      const std::array<double, 3> u{b[0] - a[0], b[1] - a[1], b[2] - a[2]};
      const std::array<double, 3> w{c[0] - a[0], c[1] - a[1], c[2] - a[2]};
      const double orient = normal[0] * (u[1] * w[2] - u[2] * w[1]) + normal[1] * (u[2] * w[0] - u[0] * w[2]) +
                            normal[2] * (u[0] * w[1] - u[1] * w[0]);
      if (orient < 0) std::reverse(loop.begin(), loop.end());
    }
    os << 'f';
    for (std::size_t v : loop) os << ' ' << v + 1;
    os << '\n';
  }
}

}  // namespace flowmat
