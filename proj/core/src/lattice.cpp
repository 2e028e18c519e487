#include "flowmat/lattice.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <thread>

#include "flowmat/errors.hpp"

namespace flowmat {

GramMatrix::GramMatrix(MatZ entries) : entries_(std::move(entries)) {
  if (entries_.rows() == 0) throw DimensionMismatch("Gram matrix must have rank at least 1");
  if (!entries_.square()) throw DimensionMismatch("Gram matrix is not square");
  factor_ = ldlt(to_rational(entries_));
}

Int inner(const LatticeVector& v, const LatticeVector& w, const GramMatrix& m) {
  const std::size_t r = m.rank();
  if (v.size() != r || w.size() != r) throw DimensionMismatch("inner: vector length differs from lattice rank");
  Int s = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (v[i] == 0) continue;
    Int row = 0;
    for (std::size_t j = 0; j < r; ++j)
      if (w[j] != 0) row += m(i, j) * w[j];
    s += v[i] * row;
  }
  return s;
}

bool norm_lex_less(const Int& na, const LatticeVector& a, const Int& nb, const LatticeVector& b) {
  if (na != nb) return na < nb;
  return a < b;
}

namespace {

// Fincke-Pohst style enumeration of {x : xᵀMx <= bound} in exact arithmetic.
// Q(x) = Σ_i D_i (x_i - c_i)², with c_i = -Σ_{j>i} L_ji x_j, so coordinates
// are fixed from the last to the first and each coordinate ranges over an
// interval around c_i. The visitor may lower the bound mid-enumeration.
class Enumerator {
 public:
  using Visitor = std::function<void(const LatticeVector&, const Int&, Int& bound)>;

  Enumerator(const GramMatrix& m, const Parity* parity, Int bound, Visitor visit)
      : f_(m.factor()), r_(m.rank()), parity_(parity), bound_(std::move(bound)),
        visit_(std::move(visit)), x_(r_, Int(0)) {}

  void run() { level(static_cast<std::ptrdiff_t>(r_) - 1, Rat(0)); }

 private:
  bool wants_odd(std::size_t i) const { return parity_ != nullptr && (*parity_)[i] != 0; }

  void level(std::ptrdiff_t i, const Rat& partial) {
    if (i < 0) {
      assert(partial.get_den() == 1);
      visit_(x_, partial.get_num(), bound_);
      return;
    }
    const auto k = static_cast<std::size_t>(i);
    Rat center = 0;
    for (std::size_t j = k + 1; j < r_; ++j)
      if (x_[j] != 0) center -= f_.lower(j, k) * x_[j];

    Int start;
    mpz_fdiv_q(start.get_mpz_t(), center.get_num_mpz_t(), center.get_den_mpz_t());
    const int step = parity_ != nullptr ? 2 : 1;
    auto fix_parity = [&](Int v, int dir) {
      if (parity_ != nullptr && (mpz_odd_p(v.get_mpz_t()) != 0) != wants_odd(k)) v += dir;
      return v;
    };

    Rat q;
    auto fits = [&](const Int& v) {
      Rat d = Rat(v) - center;
      q = partial + f_.diag[k] * d * d;
      return q <= Rat(bound_);
    };

    for (Int v = fix_parity(start, -1); fits(v); v -= step) {
      x_[k] = v;
      level(i - 1, q);
    }
    for (Int v = fix_parity(start + 1, 1); fits(v); v += step) {
      x_[k] = v;
      level(i - 1, q);
    }
    x_[k] = 0;
  }

  const Ldlt& f_;
  std::size_t r_;
  const Parity* parity_;
  Int bound_;
  Visitor visit_;
  LatticeVector x_;
};

void sort_by_norm_lex(std::vector<std::pair<Int, LatticeVector>>& vs) {
  std::sort(vs.begin(), vs.end(), [](const auto& a, const auto& b) {
    return norm_lex_less(a.first, a.second, b.first, b.second);
  });
}

void check_parity(const GramMatrix& m, const Parity& parity) {
  if (parity.size() != m.rank()) throw DimensionMismatch("parity length differs from lattice rank");
}

}  // namespace

std::vector<LatticeVector> enumerate_by_norm(const GramMatrix& m, const Int& bound,
                                             const std::optional<Parity>& parity) {
  if (parity) check_parity(m, *parity);
  std::vector<std::pair<Int, LatticeVector>> found;
  if (bound < 0) return {};
  Enumerator e(m, parity ? &*parity : nullptr, bound,
               [&](const LatticeVector& x, const Int& n, Int&) { found.emplace_back(n, x); });
  e.run();
  sort_by_norm_lex(found);
  std::vector<LatticeVector> out;
  out.reserve(found.size());
  for (auto& [n, v] : found) out.push_back(std::move(v));
  return out;
}

CosetMinima coset_minima(const GramMatrix& m, const Parity& parity) {
  check_parity(m, parity);
  if (std::all_of(parity.begin(), parity.end(), [](auto b) { return b == 0; }))
    throw DimensionMismatch("coset_minima: parity must be nonzero");

  LatticeVector rep(parity.begin(), parity.end());
  CosetMinima best{norm(rep, m), {}};
  Enumerator e(m, &parity, best.min_norm, [&](const LatticeVector& x, const Int& n, Int& bound) {
    if (n < best.min_norm) {
      best.min_norm = n;
      best.minima.clear();
      bound = n;
    }
    if (n == best.min_norm) best.minima.push_back(x);
  });
  e.run();
  std::sort(best.minima.begin(), best.minima.end());
  return best;
}

std::vector<CircuitVector> strict_voronoi_vectors(const GramMatrix& m, bool parallel) {
  const std::size_t r = m.rank();
  if (r >= 8 * sizeof(std::size_t) - 1) throw TooLarge("lattice rank too large for coset enumeration");
  const std::size_t cosets = (std::size_t{1} << r) - 1;

  // Slot p-1 holds the result for parity p (bit i = coordinate i).
  std::vector<std::optional<CircuitVector>> slots(cosets);
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t p = first + 1; p <= cosets; p += stride) {
      Parity parity(r);
      for (std::size_t i = 0; i < r; ++i) parity[i] = static_cast<std::uint8_t>((p >> i) & 1U);
      CosetMinima cm = coset_minima(m, parity);
      if (cm.minima.size() != 2) continue;
      LatticeVector v = cm.minima.back();
      canonicalize_sign(v);
      slots[p - 1] = CircuitVector{std::move(v), cm.min_norm};
    }
  };

  const std::size_t workers = parallel ? std::max(1U, std::thread::hardware_concurrency()) : 1;
  if (workers <= 1 || cosets < 2) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work, t, workers);
  }

  std::vector<CircuitVector> out;
  for (auto& s : slots)
    if (s) out.push_back(std::move(*s));
  std::sort(out.begin(), out.end(), [](const CircuitVector& a, const CircuitVector& b) {
    return norm_lex_less(a.norm, a.rep, b.norm, b.rep);
  });
  return out;
}

}  // namespace flowmat
