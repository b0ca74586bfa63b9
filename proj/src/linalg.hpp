// Exact rational linear algebra on small integer systems.
#pragma once

#include <optional>
#include <vector>

#include <boost/rational.hpp>

namespace wreal::linalg {

using Rational = boost::rational<long long>;
using RatVector = std::vector<Rational>;

/// Rank of the given integer vectors (all of equal length).
int rank(const std::vector<std::vector<int>>& vectors);

/// Coefficients x with sum_k x_k * basis[k] = target, if any. `basis` must be
/// linearly independent.
std::optional<RatVector> solve(const std::vector<std::vector<int>>& basis,
                               const std::vector<int>& target);

/// Integer coefficients, if `target` lies in the lattice spanned by `basis`.
std::optional<std::vector<int>> lattice_coords(const std::vector<std::vector<int>>& basis,
                                               const std::vector<int>& target);

/// Solves A^T u = w for square invertible integer A (given by rows).
std::optional<RatVector> solve_transposed(const std::vector<std::vector<int>>& a,
                                          const std::vector<int>& w);

/// True if b = t * a for some rational t > 0.
bool positive_multiple(const RatVector& a, const RatVector& b);

RatVector to_rational(const std::vector<int>& v);

/// Integer vector if every entry is integral.
std::optional<std::vector<int>> to_integer(const RatVector& v);

}  // namespace wreal::linalg
