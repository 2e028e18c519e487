#pragma once

#include <cstddef>
#include <vector>

namespace flowmat {

/// A matroid given by its circuits over the ground set {0, ..., ground_size-1}.
struct CircuitMatroid {
  std::size_t ground_size = 0;
  std::vector<std::vector<std::size_t>> circuits;  // each sorted
};

/// Circuits over 2-cut blocks: circuit c contains every element of block b
/// or none of them.
struct BlockMatroid {
  std::vector<std::size_t> block_sizes;
  std::vector<std::vector<std::size_t>> circuits;  // sorted block ids, list sorted

  std::size_t ground_size() const;
};

/// Throws Error unless circuits are sorted, in range, pairwise
/// incomparable, and cover the ground set (no coloops).
void validate(const CircuitMatroid& m);

/// Blocks become contiguous runs of columns in block order.
CircuitMatroid expand(const BlockMatroid& b);

/// Labeling-independent form: elements with identical circuit membership are
/// merged into weighted classes, then the lexicographically least relabeling
/// reachable by individualization-refinement is taken.
struct CanonicalForm {
  std::vector<std::size_t> class_sizes;
  std::vector<std::vector<std::size_t>> circuits;  // over class positions

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

inline constexpr std::size_t kMaxCanonicalClasses = 24;

/// Throws TooLarge when more than kMaxCanonicalClasses classes remain.
CanonicalForm canonicalize(const CircuitMatroid& m);
CanonicalForm canonicalize(const BlockMatroid& b);

bool is_isomorphic(const CircuitMatroid& a, const CircuitMatroid& b);
bool is_isomorphic(const BlockMatroid& a, const CircuitMatroid& b);

}  // namespace flowmat
