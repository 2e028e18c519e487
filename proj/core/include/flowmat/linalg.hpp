#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace flowmat {

using Int = mpz_class;
using Rat = mpq_class;

/// Dense row-major matrix with dimensions fixed at construction.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows);

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const T> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <typename T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

using MatQ = Matrix<Rat>;
using MatZ = Matrix<Int>;
using VecQ = std::vector<Rat>;
using VecZ = std::vector<Int>;

MatQ to_rational(const MatZ& m);
MatQ multiply(const MatQ& a, const MatQ& b);
MatQ transpose(const MatQ& m);

/// L·diag(D)·Lᵀ factorization of a symmetric positive-definite matrix.
struct Ldlt {
  MatQ lower;  // unit lower-triangular
  VecQ diag;   // strictly positive pivots
};

/// Throws NotPositiveDefinite if a pivot is not strictly positive, and
/// DimensionMismatch if `m` is not square and symmetric.
Ldlt ldlt(const MatQ& m);

/// Exact determinant by fraction-free (Bareiss) elimination.
Rat det(const MatQ& m);
Int det(const MatZ& m);

/// Exact rank by fraction-free elimination.
std::size_t rank(const MatQ& m);
std::size_t rank(const MatZ& m);

/// Affine description of {x : A·x = b}. Nullspace vectors are primitive
/// integer vectors with their first nonzero entry positive.
struct AffineSolution {
  VecQ particular;
  std::vector<VecQ> nullspace;
};

/// Returns std::nullopt when the system is inconsistent.
std::optional<AffineSolution> solve_affine(const MatQ& a, const VecQ& b);

/// Divides by the gcd of the entries; the zero vector is returned unchanged.
VecZ make_primitive(VecZ v);

/// Negates `v` if its first nonzero entry is negative. Returns true if flipped.
bool canonicalize_sign(VecZ& v);

/// Clears denominators of a rational vector and returns the primitive integer
/// vector on the same ray (positive multiple).
VecZ primitive_direction(std::span<const Rat> v);

/// True when the stored value is in lowest terms with a positive denominator.
bool is_reduced(const Rat& q);

}  // namespace flowmat
