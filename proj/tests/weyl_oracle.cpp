#include "weyl_oracle.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace oracle {

namespace {

Mat reflection(const wreal::IntMatrix& cartan, int i) {
  const int n = cartan.dim();
  Mat m(n, Vec(n, 0));
  for (int k = 0; k < n; ++k) m[k][k] = 1;
  // s_i(alpha_k) = alpha_k - <alpha_k, alpha_i^vee> alpha_i: column k.
  for (int k = 0; k < n; ++k) m[i][k] -= cartan(i, k);
  return m;
}

Mat multiply(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  Mat c(n, Vec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

bool positive(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](int x) { return x >= 0; });
}

}  // namespace

Vec apply(const Mat& m, const Vec& v) {
  Vec out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

std::set<Vec> roots(const wreal::IntMatrix& cartan, wreal::NodeSet J) {
  const int n = cartan.dim();
  std::set<Vec> seen;
  std::deque<Vec> queue;
  for (int i : J.indices()) {
    Vec e(n, 0);
    e[i] = 1;
    if (seen.insert(e).second) queue.push_back(e);
  }
  while (!queue.empty()) {
    Vec v = queue.front();
    queue.pop_front();
    for (int i : J.indices()) {
      Vec w = oracle::apply(reflection(cartan, i), v);
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  return seen;
}

std::vector<Vec> positive_roots(const wreal::IntMatrix& cartan, wreal::NodeSet J) {
  std::vector<Vec> out;
  for (const auto& r : roots(cartan, J))
    if (positive(r)) out.push_back(r);
  return out;
}

std::vector<Element> enumerate(const wreal::IntMatrix& cartan, wreal::NodeSet J) {
  const int n = cartan.dim();
  Mat id(n, Vec(n, 0));
  for (int k = 0; k < n; ++k) id[k][k] = 1;
  const auto pos = positive_roots(cartan, J);
  std::map<Mat, bool> seen{{id, true}};
  std::deque<Mat> queue{id};
  std::vector<Element> out;
  while (!queue.empty()) {
    Mat m = queue.front();
    queue.pop_front();
    int len = 0;
    for (const auto& r : pos)
      if (!positive(oracle::apply(m, r))) ++len;
    out.push_back({m, len});
    for (int i : J.indices()) {
      Mat next = multiply(m, reflection(cartan, i));
      if (seen.emplace(next, true).second) queue.push_back(next);
    }
  }
  return out;
}

Element longest(const wreal::IntMatrix& cartan, wreal::NodeSet J) {
  auto all = enumerate(cartan, J);
  return *std::max_element(all.begin(), all.end(),
                           [](const Element& a, const Element& b) { return a.length < b.length; });
}

}  // namespace oracle
