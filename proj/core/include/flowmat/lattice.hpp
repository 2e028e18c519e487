#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "flowmat/linalg.hpp"

namespace flowmat {

/// Integer coordinates of a lattice vector with respect to the input basis.
using LatticeVector = std::vector<Int>;

/// A coset of L / 2L, given by the residues mod 2 of the coordinates.
using Parity = std::vector<std::uint8_t>;

/// Gram matrix of a lattice: symmetric, integral and positive definite.
/// Validation happens on construction; the LDLᵀ factor is cached.
class GramMatrix {
 public:
  /// Throws DimensionMismatch (not square / not symmetric / empty) or
  /// NotPositiveDefinite.
  explicit GramMatrix(MatZ entries);

  std::size_t rank() const noexcept { return entries_.rows(); }
  const MatZ& entries() const noexcept { return entries_; }
  const Int& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
  const Ldlt& factor() const noexcept { return factor_; }

 private:
  MatZ entries_;
  Ldlt factor_;
};

/// A strict Voronoi vector, stored with its first nonzero coordinate positive.
struct CircuitVector {
  LatticeVector rep;
  Int norm;

  friend bool operator==(const CircuitVector&, const CircuitVector&) = default;
};

/// vᵀ·M·w. Throws DimensionMismatch on length mismatch.
Int inner(const LatticeVector& v, const LatticeVector& w, const GramMatrix& m);
inline Int norm(const LatticeVector& v, const GramMatrix& m) { return inner(v, v, m); }

/// Ordering used for every emitted list of lattice vectors: norm first, then
/// lexicographic on the coordinates.
bool norm_lex_less(const Int& na, const LatticeVector& a, const Int& nb, const LatticeVector& b);

/// All v with (v,v) <= bound, restricted to v ≡ parity (mod 2) when a parity
/// is given. Sorted by (norm, lex).
std::vector<LatticeVector> enumerate_by_norm(const GramMatrix& m, const Int& bound,
                                             const std::optional<Parity>& parity = std::nullopt);

struct CosetMinima {
  Int min_norm;
  std::vector<LatticeVector> minima;  // sorted lexicographically
};

/// Shortest vectors of the coset parity + 2L. The parity must be nonzero.
CosetMinima coset_minima(const GramMatrix& m, const Parity& parity);

/// Every strict Voronoi vector up to sign, canonically signed and sorted by
/// (norm, lex). For the flow lattice of a graph these are exactly its
/// circuits. With `parallel` set, cosets are processed on worker threads; the
/// output is identical.
std::vector<CircuitVector> strict_voronoi_vectors(const GramMatrix& m, bool parallel = false);

}  // namespace flowmat
