#include "fixtures.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

namespace flowmat::testing {

using graph::Edge;
using graph::Multigraph;

Multigraph three_triangles() {
  return Multigraph(5, {{0, 3}, {3, 1}, {1, 2}, {2, 0}, {1, 4}, {4, 0}, {0, 1}});
}

std::vector<std::vector<int>> three_triangles_basis() {
  return {
      {0, 0, 1, 1, 0, 0, 1},
      {0, 0, 0, 0, 1, 1, 1},
      {1, 1, 1, 1, 0, 0, 0},
  };
}

CircuitMatroid three_triangles_matroid() {
  const int rows[6][7] = {
      {1, 1, 0, 0, 1, 0, 0}, {0, 0, 0, 0, 1, 1, 1}, {1, 1, 1, 1, 0, 0, 0},
      {0, 0, 1, 1, 0, 1, 1}, {1, 1, 0, 0, 0, 1, 1}, {0, 0, 1, 1, 1, 0, 0},
  };
  CircuitMatroid m{7, {}};
  for (const auto& row : rows) {
    std::vector<std::size_t> c;
    for (std::size_t j = 0; j < 7; ++j)
      if (row[j]) c.push_back(j);
    m.circuits.push_back(c);
  }
  return m;
}

Multigraph two_triangles_sharing_edge() { return Multigraph(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}, {1, 0}}); }

Multigraph two_triangles_plus_triangle(std::size_t attach) {
  return Multigraph(6, {{0, 2}, {2, 1}, {1, 3}, {3, 0}, {1, 0}, {attach, 4}, {4, 5}, {5, attach}});
}

Multigraph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return Multigraph(n, edges);
}

Multigraph theta(std::size_t parallel) {
  std::vector<Edge> edges(parallel, Edge{0, 1});
  return Multigraph(2, edges);
}

Multigraph complete(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({i, j});
  return Multigraph(n, edges);
}

Multigraph bowtie() { return Multigraph(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}}); }

namespace {

bool two_connected(const Multigraph& g) {
  std::vector<bool> removed(g.edge_count(), false);
  if (!graph::connected_without(g, removed)) return false;
  for (std::size_t e = 0; e < g.edge_count(); ++e) {
    removed[e] = true;
    const bool ok = graph::connected_without(g, removed);
    removed[e] = false;
    if (!ok) return false;
  }
  return true;
}

}  // namespace

std::vector<Fixture> exhaustive_corpus(std::size_t max_vertices, std::size_t max_edges) {
  std::vector<Fixture> out;
  for (std::size_t n = 2; n <= max_vertices; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    std::vector<std::vector<std::size_t>> pair_index(n, std::vector<std::size_t>(n));
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      pair_index[pairs[p].first][pairs[p].second] = p;
      pair_index[pairs[p].second][pairs[p].first] = p;
    }
    std::vector<std::vector<std::size_t>> perms;
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    std::vector<std::size_t> mult(pairs.size(), 0);
    auto emit = [&] {
      const std::size_t m = std::accumulate(mult.begin(), mult.end(), std::size_t{0});
      if (m < n) return;
      // Keep only the lexicographically greatest multiplicity vector of each
      // vertex-permutation orbit.
      std::vector<std::size_t> image(pairs.size());
      for (const auto& p : perms) {
        for (std::size_t k = 0; k < pairs.size(); ++k) image[pair_index[p[pairs[k].first]][p[pairs[k].second]]] = mult[k];
        if (image > mult) return;
      }
      std::vector<Edge> edges;
      for (std::size_t k = 0; k < pairs.size(); ++k)
        for (std::size_t c = 0; c < mult[k]; ++c) edges.push_back({pairs[k].first, pairs[k].second});
      Multigraph g(n, edges);
      if (!two_connected(g)) return;
      std::string name = "n" + std::to_string(n) + "m" + std::to_string(m) + ":";
      for (std::size_t x : mult) name += std::to_string(x);
      out.push_back({name, std::move(g)});
    };
    auto rec = [&](auto&& self, std::size_t k, std::size_t budget) -> void {
      if (k == pairs.size()) {
        emit();
        return;
      }
      for (std::size_t c = 0; c <= budget; ++c) {
        mult[k] = c;
        self(self, k + 1, budget - c);
      }
      mult[k] = 0;
    };
    rec(rec, 0, max_edges);
  }
  return out;
}

std::vector<Fixture> random_corpus(std::size_t count, std::size_t max_genus, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto pick = [&](std::size_t lo, std::size_t hi) { return std::uniform_int_distribution<std::size_t>(lo, hi)(rng); };
  std::vector<Fixture> out;
  while (out.size() < count) {
    const std::size_t n = pick(2, 8);
    const std::size_t genus = pick(1, max_genus);
    std::vector<Edge> edges;
    for (std::size_t v = 1; v < n; ++v) edges.push_back({pick(0, v - 1), v});
    for (std::size_t k = 0; k < genus; ++k) {
      const std::size_t a = pick(0, n - 1);
      std::size_t b = pick(0, n - 2);
      if (b >= a) ++b;
      edges.push_back({a, b});
    }
    std::shuffle(edges.begin(), edges.end(), rng);
    for (auto& e : edges)
      if (pick(0, 1)) std::swap(e.tail, e.head);
    std::vector<std::size_t> relabel(n);
    std::iota(relabel.begin(), relabel.end(), 0);
    std::shuffle(relabel.begin(), relabel.end(), rng);
    for (auto& e : edges) e = {relabel[e.tail], relabel[e.head]};
    Multigraph g(n, edges);
    if (!two_connected(g)) continue;
    out.push_back({"random" + std::to_string(out.size()), std::move(g)});
  }
  return out;
}

std::vector<Fixture> loop_corpus() {
  return {
      {"bouquet1", Multigraph(1, {{0, 0}})},
      {"bouquet3", Multigraph(1, {{0, 0}, {0, 0}, {0, 0}})},
      {"triangle+loop", Multigraph(3, {{0, 1}, {1, 2}, {2, 0}, {1, 1}})},
      {"theta+2loops", Multigraph(2, {{0, 1}, {0, 0}, {1, 0}, {1, 1}, {0, 1}})},
      {"h+loop", Multigraph(4, {{0, 2}, {2, 1}, {1, 3}, {3, 0}, {1, 0}, {3, 3}})},
  };
}

}  // namespace flowmat::testing
