#include "linalg.hpp"

#include <cstddef>
#include <utility>

namespace wreal::linalg {

namespace {

using Matrix = std::vector<RatVector>;

// Row-reduces `m` in place; returns pivot columns.
std::vector<std::size_t> reduce(Matrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t p = row;
    while (p < m.size() && m[p][c].numerator() == 0) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[row]);
    Rational inv = Rational(1) / m[row][c];
    for (auto& x : m[row]) x *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][c].numerator() == 0) continue;
      Rational f = m[r][c];
      for (std::size_t k = 0; k < m[r].size(); ++k) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

RatVector to_rational(const std::vector<int>& v) {
  RatVector r;
  r.reserve(v.size());
  for (int x : v) r.emplace_back(x);
  return r;
}

std::optional<std::vector<int>> to_integer(const RatVector& v) {
  std::vector<int> out;
  out.reserve(v.size());
  for (const auto& x : v) {
    if (x.denominator() != 1) return std::nullopt;
    out.push_back(static_cast<int>(x.numerator()));
  }
  return out;
}

int rank(const std::vector<std::vector<int>>& vectors) {
  if (vectors.empty()) return 0;
  Matrix m;
  for (const auto& v : vectors) m.push_back(to_rational(v));
  return static_cast<int>(reduce(m, vectors.front().size()).size());
}

std::optional<RatVector> solve(const std::vector<std::vector<int>>& basis,
                               const std::vector<int>& target) {
  // Augmented system: columns are basis vectors, last column the target.
  const std::size_t k = basis.size();
  const std::size_t n = target.size();
  Matrix m(n, RatVector(k + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (basis[j].size() != n) return std::nullopt;
      m[i][j] = basis[j][i];
    }
    m[i][k] = target[i];
  }
  auto pivots = reduce(m, k + 1);
  RatVector x(k, Rational(0));
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    if (pivots[r] == k) return std::nullopt;  // inconsistent
    x[pivots[r]] = m[r][k];
  }
  if (pivots.size() != k) return std::nullopt;  // dependent basis
  return x;
}

std::optional<std::vector<int>> lattice_coords(const std::vector<std::vector<int>>& basis,
                                               const std::vector<int>& target) {
  auto x = solve(basis, target);
  if (!x) return std::nullopt;
  return to_integer(*x);
}

std::optional<RatVector> solve_transposed(const std::vector<std::vector<int>>& a,
                                          const std::vector<int>& w) {
  // A^T u = w  <=>  sum_j u_j * (row j of A) = w.
  return solve(a, w);
}

bool positive_multiple(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) return false;
  std::optional<Rational> t;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].numerator() == 0) {
      if (b[i].numerator() != 0) return false;
      continue;
    }
    Rational q = b[i] / a[i];
    if (t && *t != q) return false;
    t = q;
  }
  return t && t->numerator() > 0;
}

}  // namespace wreal::linalg
