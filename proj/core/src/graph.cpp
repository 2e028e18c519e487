#include "flowmat/graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "flowmat/errors.hpp"

namespace flowmat::graph {

Multigraph::Multigraph(std::size_t vertices, std::vector<Edge> edges) : n_(vertices), edges_(std::move(edges)) {
  for (const auto& e : edges_)
    if (e.tail >= n_ || e.head >= n_) throw DimensionMismatch("edge endpoint out of range");
}

namespace {

struct Incidence {
  std::size_t edge;
  std::size_t other;
};

std::vector<std::vector<Incidence>> adjacency(const Multigraph& g) {
  std::vector<std::vector<Incidence>> adj(g.vertex_count());
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    const auto& [t, h] = g.edge(e);
    adj[t].push_back({e, h});
    if (t != h) adj[h].push_back({e, t});
  }
  return adj;
}

int traversal_sign(const Edge& e, std::size_t from) { return e.tail == from ? 1 : -1; }

}  // namespace

bool connected_without(const Multigraph& g, const std::vector<bool>& removed) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    if (removed[e]) continue;
    const auto a = find(g.edge(e).tail);
    const auto b = find(g.edge(e).head);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

void validate_two_connected(const Multigraph& g) {
  std::vector<bool> removed(g.edge_count(), false);
  if (!connected_without(g, removed)) throw NotConnected("graph is not connected");
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    removed[e] = true;
    if (!connected_without(g, removed)) throw HasBridge(e);
    removed[e] = false;
  }
}

TwoCutBlocks two_cut_blocks(const Multigraph& g) {
  const std::size_t m = g.edge_count();
  std::vector<std::vector<bool>> cut(m, std::vector<bool>(m, false));
  std::vector<bool> removed(m, false);
  for (std::size_t e = 0; e < m; ++e) {
    cut[e][e] = true;
    for (std::size_t f = e + 1; f < m; ++f) {
      removed[e] = removed[f] = true;
      cut[e][f] = cut[f][e] = !connected_without(g, removed);
      removed[e] = removed[f] = false;
    }
  }
  for (std::size_t e = 0; e < m; ++e)
    for (std::size_t f = 0; f < m; ++f)
      for (std::size_t h = 0; h < m; ++h)
        if (cut[e][f] && cut[f][h] && !cut[e][h])
          throw Error("2-cut relation is not transitive on edges " + std::to_string(e) + ", " + std::to_string(f) +
                      ", " + std::to_string(h));

  TwoCutBlocks blocks;
  std::vector<bool> seen(m, false);
  for (std::size_t e = 0; e < m; ++e) {
    if (seen[e]) continue;
    std::vector<std::size_t> block;
    for (std::size_t f = e; f < m; ++f)
      if (cut[e][f]) {
        block.push_back(f);
        seen[f] = true;
      }
    blocks.push_back(std::move(block));
  }
  return blocks;
}

FundamentalBasis fundamental_basis(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  const auto adj = adjacency(g);

  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> parent_edge(n, kNone), parent(n, kNone), depth(n, 0);
  std::vector<bool> visited(n, false), in_tree(m, false);
  std::queue<std::size_t> queue;
  if (n > 0) {
    visited[0] = true;
    queue.push(0);
  }
  while (!queue.empty()) {
    const std::size_t u = queue.front();
    queue.pop();
    std::vector<Incidence> inc = adj[u];
    std::sort(inc.begin(), inc.end(), [](const Incidence& a, const Incidence& b) { return a.edge < b.edge; });
    for (const auto& [e, w] : inc) {
      if (visited[w]) continue;
      visited[w] = true;
      parent[w] = u;
      parent_edge[w] = e;
      depth[w] = depth[u] + 1;
      in_tree[e] = true;
      queue.push(w);
    }
  }
  if (std::find(visited.begin(), visited.end(), false) != visited.end()) throw NotConnected("graph is not connected");

  FundamentalBasis out;
  for (std::size_t e = 0; e < m; ++e) (in_tree[e] ? out.tree : out.cotree).push_back(e);

  for (std::size_t e : out.cotree) {
    std::vector<int> vec(m, 0);
    const auto& [u, v] = g.edge(e);
    vec[e] = 1;
    // Return from v to u through the tree: climb from both ends to the
    // lowest common ancestor.
    std::size_t a = v, b = u;
    while (a != b) {
      if (depth[a] >= depth[b]) {
        const std::size_t pe = parent_edge[a];
        vec[pe] += traversal_sign(g.edge(pe), a);
        a = parent[a];
      } else {
        const std::size_t pe = parent_edge[b];
        vec[pe] -= traversal_sign(g.edge(pe), b);
        b = parent[b];
      }
    }
    GraphCircuit c;
    for (std::size_t i = 0; i < m; ++i)
      if (vec[i] != 0) c.edge_set.push_back(i);
    c.signed_vector = std::move(vec);
    out.circuits.push_back(std::move(c));
  }

  const std::size_t r = out.circuits.size();
  out.gram = MatZ(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) {
      long s = 0;
      for (std::size_t k = 0; k < m; ++k) s += out.circuits[i].signed_vector[k] * out.circuits[j].signed_vector[k];
      out.gram(i, j) = s;
    }
  return out;
}

VecZ basis_coordinates(const FundamentalBasis& basis, const std::vector<int>& flow) {
  VecZ coords;
  coords.reserve(basis.cotree.size());
  for (std::size_t e : basis.cotree) coords.emplace_back(flow.at(e));
  return coords;
}

bool is_flow(const Multigraph& g, const std::vector<int>& signed_vector) {
  std::vector<long> balance(g.vertex_count(), 0);
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    balance[g.edge(e).head] += signed_vector[e];
    balance[g.edge(e).tail] -= signed_vector[e];
  }
  return std::all_of(balance.begin(), balance.end(), [](long b) { return b == 0; });
}

std::vector<GraphCircuit> all_circuits(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  const auto adj = adjacency(g);
  std::map<std::vector<std::size_t>, std::vector<int>> found;

  for (std::size_t e = 0; e < m; ++e)
    if (g.edge(e).tail == g.edge(e).head) {
      std::vector<int> vec(m, 0);
      vec[e] = 1;
      found.emplace(std::vector<std::size_t>{e}, std::move(vec));
    }

  std::vector<bool> on_path(n, false), used(m, false);
  std::vector<int> vec(m, 0);
  // Cycles through start vertex s whose other vertices are all > s.
  auto dfs = [&](auto&& self, std::size_t s, std::size_t u, std::size_t length) -> void {
    for (const auto& [e, w] : adj[u]) {
      if (used[e] || w == u) continue;
      const int sign = traversal_sign(g.edge(e), u);
      if (w == s) {
        if (length == 0) continue;
        vec[e] = sign;
        std::vector<std::size_t> set;
        for (std::size_t i = 0; i < m; ++i)
          if (vec[i] != 0) set.push_back(i);
        found.emplace(std::move(set), vec);
        vec[e] = 0;
      } else if (w > s && !on_path[w]) {
        used[e] = true;
        on_path[w] = true;
        vec[e] = sign;
        self(self, s, w, length + 1);
        vec[e] = 0;
        on_path[w] = false;
        used[e] = false;
      }
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    on_path[s] = true;
    dfs(dfs, s, s, 0);
    on_path[s] = false;
  }

  std::vector<GraphCircuit> out;
  out.reserve(found.size());
  for (auto& [set, v] : found) out.push_back(GraphCircuit{set, std::move(v)});
  return out;
}

CircuitMatroid graphic_matroid(const Multigraph& g) {
  CircuitMatroid m;
  m.ground_size = g.edge_count();
  for (auto& c : all_circuits(g)) m.circuits.push_back(std::move(c.edge_set));
  return m;
}

std::uint64_t strong_orientation_count(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  const std::size_t m = g.edge_count();
  if (m > 20) throw TooLarge("strong orientation scan is limited to 20 edges");

  std::vector<std::vector<std::size_t>> fwd(n), bwd(n);
  std::vector<bool> seen(n);
  auto reaches_all = [&](const std::vector<std::vector<std::size_t>>& out) {
    std::fill(seen.begin(), seen.end(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      for (std::size_t w : out[u])
        if (!seen[w]) {
          seen[w] = true;
          ++count;
          stack.push_back(w);
        }
    }
    return count == n;
  };

  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
    for (auto& l : fwd) l.clear();
    for (auto& l : bwd) l.clear();
    for (std::size_t e = 0; e < m; ++e) {
      auto [t, h] = g.edge(e);
      if ((mask >> e) & 1U) std::swap(t, h);
      fwd[t].push_back(h);
      bwd[h].push_back(t);
    }
    if (n == 0 || (reaches_all(fwd) && reaches_all(bwd))) ++count;
  }
  return count;
}

Int spanning_tree_count(const Multigraph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return 1;
  MatZ laplacian(n - 1, n - 1);
  for (const auto& [t, h] : g.edges()) {
    if (t == h) continue;
    if (t > 0) laplacian(t - 1, t - 1) += 1;
    if (h > 0) laplacian(h - 1, h - 1) += 1;
    if (t > 0 && h > 0) {
      laplacian(t - 1, h - 1) -= 1;
      laplacian(h - 1, t - 1) -= 1;
    }
  }
  return det(laplacian);
}

}  // namespace flowmat::graph
