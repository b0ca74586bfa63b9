// Brute-force reference computations for small ranks, independent of the
// library's greedy algorithms: they use only the Cartan matrix.
#pragma once

#include <set>
#include <vector>

#include "wreal/types.hpp"

namespace oracle {

using Vec = std::vector<int>;
using Mat = std::vector<Vec>;  // row-major, acts on column vectors

/// Roots as the orbit of the simple roots under the reflections in J.
std::set<Vec> roots(const wreal::IntMatrix& cartan, wreal::NodeSet J);

/// Positive roots supported on J.
std::vector<Vec> positive_roots(const wreal::IntMatrix& cartan, wreal::NodeSet J);

struct Element {
  Mat matrix;
  int length;  // number of positive roots of J sent to negative roots
};

/// Every element of the parabolic subgroup W_J, by breadth-first search.
std::vector<Element> enumerate(const wreal::IntMatrix& cartan, wreal::NodeSet J);

/// The unique element of maximal length in W_J.
Element longest(const wreal::IntMatrix& cartan, wreal::NodeSet J);

Vec apply(const Mat& m, const Vec& v);

}  // namespace oracle
