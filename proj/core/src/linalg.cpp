#include "flowmat/linalg.hpp"

#include <algorithm>
#include <cassert>
#include <utility>

#include "flowmat/errors.hpp"

namespace flowmat {

MatQ to_rational(const MatZ& m) {
  MatQ out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rat(m(i, j));
  return out;
}

MatQ multiply(const MatQ& a, const MatQ& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("multiply: inner dimensions differ");
  MatQ out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

MatQ transpose(const MatQ& m) {
  MatQ out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

Ldlt ldlt(const MatQ& m) {
  if (!m.square()) throw DimensionMismatch("ldlt: matrix is not square");
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (m(i, j) != m(j, i)) throw DimensionMismatch("ldlt: matrix is not symmetric");

  Ldlt f{MatQ::identity(n), VecQ(n)};
  for (std::size_t j = 0; j < n; ++j) {
    Rat d = m(j, j);
    for (std::size_t k = 0; k < j; ++k) d -= f.lower(j, k) * f.lower(j, k) * f.diag[k];
    if (sgn(d) <= 0) throw NotPositiveDefinite("pivot " + std::to_string(j) + " is " + d.get_str());
    f.diag[j] = d;
    for (std::size_t i = j + 1; i < n; ++i) {
      Rat s = m(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= f.lower(i, k) * f.lower(j, k) * f.diag[k];
      f.lower(i, j) = s / d;
    }
  }
  return f;
}

namespace {

// Scales each row by the lcm of its denominators. Returns the integer matrix
// and the product of the scale factors.
std::pair<MatZ, Int> clear_denominators(const MatQ& m) {
  MatZ out(m.rows(), m.cols());
  Int scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int l = 1;
    for (const Rat& q : m.row(i)) l = lcm(l, Int(q.get_den()));
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_num() * (l / m(i, j).get_den());
    scale *= l;
  }
  return {std::move(out), std::move(scale)};
}

}  // namespace

Int det(const MatZ& m) {
  if (!m.square()) throw DimensionMismatch("det: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  MatZ a = m;
  Int prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Int t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(t);
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Rat det(const MatQ& m) {
  if (!m.square()) throw DimensionMismatch("det: matrix is not square");
  auto [z, scale] = clear_denominators(m);
  Rat out(det(z), scale);
  out.canonicalize();
  return out;
}

std::size_t rank(const MatZ& m) {
  MatZ a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::size_t r = 0;
  Int prev = 1;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(r, j), a(p, j));
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Int t = a(i, j) * a(r, c) - a(i, c) * a(r, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(t);
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    ++r;
  }
  return r;
}

std::size_t rank(const MatQ& m) { return rank(clear_denominators(m).first); }

std::optional<AffineSolution> solve_affine(const MatQ& a, const VecQ& b) {
  if (a.rows() != b.size()) throw DimensionMismatch("solve_affine: rhs length differs from row count");
  const std::size_t rows = a.rows();
  const std::size_t n = a.cols();

  // Reduced row echelon form of [A | b].
  MatQ r(rows, n + 1);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < n; ++j) r(i, j) = a(i, j);
    r(i, n) = b[i];
  }
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t c = 0; c < n && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && r(p, c) == 0) ++p;
    if (p == rows) continue;
    if (p != row)
      for (std::size_t j = 0; j <= n; ++j) std::swap(r(row, j), r(p, j));
    const Rat inv = 1 / r(row, c);
    for (std::size_t j = c; j <= n; ++j) r(row, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || r(i, c) == 0) continue;
      const Rat f = r(i, c);
      for (std::size_t j = c; j <= n; ++j) r(i, j) -= f * r(row, j);
    }
    pivot_cols.push_back(c);
    ++row;
  }
  for (std::size_t i = row; i < rows; ++i)
    if (r(i, n) != 0) return std::nullopt;

  AffineSolution out;
  out.particular.assign(n, Rat(0));
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
    out.particular[pivot_cols[i]] = r(i, n);
    is_pivot[pivot_cols[i]] = true;
  }
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    VecQ v(n, Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -r(i, f);
    VecZ z = primitive_direction(v);
    canonicalize_sign(z);
    VecQ q;
    q.reserve(n);
    for (auto& x : z) q.emplace_back(x);
    out.nullspace.push_back(std::move(q));
  }
  return out;
}

VecZ make_primitive(VecZ v) {
  Int g = 0;
  for (const Int& x : v) g = gcd(g, x);
  if (g > 1)
    for (Int& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return v;
}

bool canonicalize_sign(VecZ& v) {
  for (const Int& x : v) {
    if (x == 0) continue;
    if (x < 0) {
      for (Int& y : v) y = -y;
      return true;
    }
    return false;
  }
  return false;
}

VecZ primitive_direction(std::span<const Rat> v) {
  Int l = 1;
  for (const Rat& q : v) l = lcm(l, Int(q.get_den()));
  VecZ z;
  z.reserve(v.size());
  for (const Rat& q : v) z.push_back(q.get_num() * (l / q.get_den()));
  return make_primitive(std::move(z));
}

bool is_reduced(const Rat& q) {
  if (q.get_den() <= 0) return false;
  return gcd(Int(q.get_num()), Int(q.get_den())) == 1;
}

}  // namespace flowmat
