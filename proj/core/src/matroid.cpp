#include "flowmat/matroid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>

#include "flowmat/errors.hpp"

namespace flowmat {

std::size_t BlockMatroid::ground_size() const {
  return std::accumulate(block_sizes.begin(), block_sizes.end(), std::size_t{0});
}

void validate(const CircuitMatroid& m) {
  std::vector<bool> covered(m.ground_size, false);
  for (const auto& c : m.circuits) {
    if (c.empty()) throw Error("empty circuit");
    if (!std::is_sorted(c.begin(), c.end()) || std::adjacent_find(c.begin(), c.end()) != c.end())
      throw Error("circuit is not a sorted set");
    if (c.back() >= m.ground_size) throw Error("circuit element out of range");
    for (std::size_t e : c) covered[e] = true;
  }
  for (std::size_t i = 0; i < m.circuits.size(); ++i)
    for (std::size_t j = 0; j < m.circuits.size(); ++j) {
      if (i == j) continue;
      const auto& a = m.circuits[i];
      const auto& b = m.circuits[j];
      if (std::includes(b.begin(), b.end(), a.begin(), a.end()))
        throw Error("circuit " + std::to_string(i) + " is contained in circuit " + std::to_string(j));
    }
  for (std::size_t e = 0; e < m.ground_size; ++e)
    if (!covered[e]) throw Error("element " + std::to_string(e) + " is a coloop");
}

CircuitMatroid expand(const BlockMatroid& b) {
  std::vector<std::size_t> first(b.block_sizes.size());
  std::size_t next = 0;
  for (std::size_t i = 0; i < b.block_sizes.size(); ++i) {
    if (b.block_sizes[i] == 0) throw Error("block " + std::to_string(i) + " is empty");
    first[i] = next;
    next += b.block_sizes[i];
  }
  CircuitMatroid out;
  out.ground_size = next;
  for (const auto& c : b.circuits) {
    std::vector<std::size_t> cols;
    for (std::size_t blk : c)
      for (std::size_t k = 0; k < b.block_sizes.at(blk); ++k) cols.push_back(first[blk] + k);
    std::sort(cols.begin(), cols.end());
    out.circuits.push_back(std::move(cols));
  }
  std::sort(out.circuits.begin(), out.circuits.end());
  return out;
}

namespace {

// Weighted matroid on classes of elements with identical circuit membership.
struct Reduced {
  std::vector<std::size_t> weight;
  std::vector<std::vector<std::size_t>> circuits;
  std::vector<std::vector<std::size_t>> containing;  // circuits per class
};

Reduced reduce(const CircuitMatroid& m) {
  std::vector<std::vector<std::size_t>> membership(m.ground_size);
  for (std::size_t c = 0; c < m.circuits.size(); ++c)
    for (std::size_t e : m.circuits[c]) membership.at(e).push_back(c);

  std::map<std::vector<std::size_t>, std::size_t> class_of;
  Reduced red;
  std::vector<std::size_t> elem_class(m.ground_size);
  for (std::size_t e = 0; e < m.ground_size; ++e) {
    auto [it, inserted] = class_of.try_emplace(membership[e], red.weight.size());
    if (inserted) {
      red.weight.push_back(0);
      red.containing.push_back(membership[e]);
    }
    elem_class[e] = it->second;
    ++red.weight[it->second];
  }
  for (const auto& c : m.circuits) {
    std::vector<std::size_t> cls;
    for (std::size_t e : c) cls.push_back(elem_class[e]);
    std::sort(cls.begin(), cls.end());
    cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
    red.circuits.push_back(std::move(cls));
  }
  return red;
}

template <typename Key>
std::vector<std::size_t> rank_keys(const std::vector<Key>& keys) {
  std::vector<Key> sorted = keys;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<std::size_t> out(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i)
    out[i] = static_cast<std::size_t>(std::lower_bound(sorted.begin(), sorted.end(), keys[i]) - sorted.begin());
  return out;
}

std::size_t distinct(const std::vector<std::size_t>& colors) {
  std::vector<std::size_t> s = colors;
  std::sort(s.begin(), s.end());
  return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
}

class Canonicalizer {
 public:
  explicit Canonicalizer(const Reduced& red) : red_(red) {}

  CanonicalForm run() {
    search(rank_keys(red_.weight));
    return std::move(*best_);
  }

 private:
  // Colour refinement on the element/circuit incidence structure. Colours are
  // ranks of label-independent signatures, so refinement commutes with
  // relabeling.
  std::vector<std::size_t> refine(std::vector<std::size_t> colors) const {
    std::size_t count = distinct(colors);
    for (;;) {
      std::vector<std::vector<std::size_t>> circuit_sig;
      circuit_sig.reserve(red_.circuits.size());
      for (const auto& c : red_.circuits) {
        std::vector<std::size_t> sig;
        for (std::size_t e : c) sig.push_back(colors[e]);
        std::sort(sig.begin(), sig.end());
        circuit_sig.push_back(std::move(sig));
      }
      const auto circuit_color = rank_keys(circuit_sig);
      std::vector<std::vector<std::size_t>> elem_sig;
      for (std::size_t e = 0; e < colors.size(); ++e) {
        std::vector<std::size_t> sig{colors[e]};
        std::vector<std::size_t> around;
        for (std::size_t c : red_.containing[e]) around.push_back(circuit_color[c]);
        std::sort(around.begin(), around.end());
        sig.insert(sig.end(), around.begin(), around.end());
        elem_sig.push_back(std::move(sig));
      }
      colors = rank_keys(elem_sig);
      const std::size_t now = distinct(colors);
      if (now == count) return colors;
      count = now;
    }
  }

  void search(std::vector<std::size_t> colors) {
    colors = refine(std::move(colors));
    const std::size_t k = colors.size();
    std::vector<std::size_t> cell_size(k, 0);
    for (std::size_t c : colors) ++cell_size[c];
    const auto target = std::find_if(cell_size.begin(), cell_size.end(), [](std::size_t s) { return s > 1; });
    if (target == cell_size.end()) {
      leaf(colors);
      return;
    }
    const auto c = static_cast<std::size_t>(target - cell_size.begin());
    for (std::size_t e = 0; e < k; ++e) {
      if (colors[e] != c) continue;
      std::vector<std::size_t> next(k);
      for (std::size_t x = 0; x < k; ++x) next[x] = 2 * colors[x] + (colors[x] == c && x != e ? 1 : 0);
      search(rank_keys(next));
    }
  }

  void leaf(const std::vector<std::size_t>& position) {
    CanonicalForm form;
    form.class_sizes.assign(position.size(), 0);
    for (std::size_t e = 0; e < position.size(); ++e) form.class_sizes[position[e]] = red_.weight[e];
    for (const auto& c : red_.circuits) {
      std::vector<std::size_t> mapped;
      for (std::size_t e : c) mapped.push_back(position[e]);
      std::sort(mapped.begin(), mapped.end());
      form.circuits.push_back(std::move(mapped));
    }
    std::sort(form.circuits.begin(), form.circuits.end());
    if (!best_ || form < *best_) best_ = std::move(form);
  }

  const Reduced& red_;
  std::optional<CanonicalForm> best_;
};

}  // namespace

CanonicalForm canonicalize(const CircuitMatroid& m) {
  validate(m);
  const Reduced red = reduce(m);
  if (red.weight.size() > kMaxCanonicalClasses)
    throw TooLarge("matroid has " + std::to_string(red.weight.size()) + " classes; limit is " +
                   std::to_string(kMaxCanonicalClasses));
  if (red.weight.empty()) return {};
  return Canonicalizer(red).run();
}

CanonicalForm canonicalize(const BlockMatroid& b) { return canonicalize(expand(b)); }

bool is_isomorphic(const CircuitMatroid& a, const CircuitMatroid& b) {
  if (a.ground_size != b.ground_size || a.circuits.size() != b.circuits.size()) return false;
  auto sizes = [](const CircuitMatroid& m) {
    std::vector<std::size_t> s;
    for (const auto& c : m.circuits) s.push_back(c.size());
    std::sort(s.begin(), s.end());
    return s;
  };
  if (sizes(a) != sizes(b)) return false;
  return canonicalize(a) == canonicalize(b);
}

bool is_isomorphic(const BlockMatroid& a, const CircuitMatroid& b) { return is_isomorphic(expand(a), b); }

}  // namespace flowmat
