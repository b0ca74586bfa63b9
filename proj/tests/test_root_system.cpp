#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "weyl_oracle.hpp"
#include "wreal/root_system.hpp"

using namespace wreal;

namespace {

const std::vector<std::pair<char, int>>& all_types() {
  static const std::vector<std::pair<char, int>> types = [] {
    std::vector<std::pair<char, int>> t;
    for (int n = 1; n <= 8; ++n) t.push_back({'A', n});
    for (int n = 2; n <= 8; ++n) t.push_back({'B', n});
    for (int n = 2; n <= 8; ++n) t.push_back({'C', n});
    for (int n = 4; n <= 8; ++n) t.push_back({'D', n});
    for (int n = 6; n <= 8; ++n) t.push_back({'E', n});
    t.push_back({'F', 4});
    t.push_back({'G', 2});
    return t;
  }();
  return types;
}

int classical_count(char t, int n) {
  switch (t) {
    case 'A': return n * (n + 1) / 2;
    case 'B':
    case 'C': return n * n;
    case 'D': return n * (n - 1);
    case 'E': return n == 6 ? 36 : n == 7 ? 63 : 120;
    case 'F': return 24;
    case 'G': return 6;
  }
  return -1;
}

RootVector r(std::vector<int> c) { return RootVector(std::move(c)); }

}  // namespace

TEST_CASE("positive root counts match the oracle and the classical formulas") {
  CHECK(root_system('A', 2)->positive_roots().size() == 3);
  CHECK(root_system('D', 4)->positive_roots().size() == 12);
  CHECK(root_system('G', 2)->positive_roots().size() == 6);
  for (auto [t, n] : all_types()) {
    CAPTURE(t);
    CAPTURE(n);
    auto rs = root_system(t, n);
    CHECK(static_cast<int>(rs->positive_roots().size()) == classical_count(t, n));
    if (n <= 6 || t == 'E') {
      auto ref = oracle::positive_roots(rs->cartan(), NodeSet::all(n));
      std::set<std::vector<int>> mine;
      for (const auto& p : rs->positive_roots()) mine.insert(p.coords);
      CHECK(mine == std::set<std::vector<int>>(ref.begin(), ref.end()));
    }
  }
}

TEST_CASE("Cartan matrix invariants") {
  for (auto [t, n] : all_types()) {
    const auto& c = root_system(t, n)->cartan();
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        if (i == j) {
          CHECK(c(i, j) == 2);
          continue;
        }
        CHECK(c(i, j) <= 0);
        CHECK(c(i, j) >= -3);
        CHECK((c(i, j) == 0) == (c(j, i) == 0));
      }
    auto rs = root_system(t, n);
    for (int i = 0; i < n; ++i) CHECK(rs->is_root(RootVector::simple(n, i)));
  }
}

TEST_CASE("Bourbaki conventions") {
  // B_n: alpha_n short, C_n: alpha_n long; G2: alpha_1 short.
  CHECK(root_system('B', 3)->cartan()(2, 1) == -2);
  CHECK(root_system('C', 3)->cartan()(1, 2) == -2);
  CHECK(root_system('G', 2)->cartan()(0, 1) == -3);
  CHECK(root_system('F', 4)->cartan()(2, 1) == -2);
  // E: alpha_2 hangs off alpha_4.
  auto e6 = root_system('E', 6);
  CHECK(e6->cartan()(1, 3) == -1);
  CHECK(e6->cartan()(1, 2) == 0);
  CHECK(root_system('D', 3)->name() == "A3");
}

TEST_CASE("invalid types are rejected") {
  CHECK_THROWS_AS(RootSystem::build('Z', 3), Error);
  CHECK_THROWS_AS(root_system('E', 9), Error);
  CHECK_THROWS_AS(root_system('B', 1), Error);
  CHECK_THROWS_AS(root_system('A', 0), Error);
  CHECK_THROWS_AS(parse_root_system("Z9"), Error);
  CHECK_THROWS_AS(parse_root_system("D"), Error);
  try {
    parse_root_system("Z9");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotFound);
  }
  CHECK(parse_root_system("e8")->rank() == 8);
}

TEST_CASE("simple reflections") {
  auto rs = root_system('A', 2);
  auto s1 = simple_reflection(*rs, 0);
  CHECK(act(s1, r({1, 0})) == r({-1, 0}));
  CHECK(act(s1, r({0, 1})) == r({1, 1}));
  CHECK(act(s1, r({1, 1})) == r({0, 1}));
  for (auto [t, n] : all_types()) {
    auto sys = root_system(t, n);
    for (int i = 0; i < n; ++i) {
      auto s = simple_reflection(*sys, i);
      CHECK(compose(s, s).matrix == IntMatrix::identity(n));
      CHECK(act(s, RootVector::simple(n, i)) == -RootVector::simple(n, i));
    }
  }
  CHECK_THROWS_AS(simple_reflection(*rs, 2), Error);
  CHECK_THROWS_AS(act(s1, r({1, 0, 0})), Error);
}

TEST_CASE("longest elements: worked cases") {
  auto a3 = root_system('A', 3);
  auto empty = longest_element(*a3, NodeSet{});
  CHECK(empty.word.empty());
  CHECK(empty.matrix == IntMatrix::identity(3));

  auto w0 = longest_element(*a3, NodeSet::all(3));
  CHECK(w0.length() == 6);
  CHECK(act(w0, r({1, 0, 0})) == r({0, 0, -1}));
  CHECK(act(w0, r({0, 1, 0})) == r({0, -1, 0}));
  CHECK(act(w0, r({0, 0, 1})) == r({-1, 0, 0}));

  auto a2 = root_system('A', 2);
  CHECK(act(longest_element(*a2, NodeSet::all(2)), r({1, 0})) == r({0, -1}));

  auto d4 = root_system('D', 4);
  auto wj = longest_element(*d4, NodeSet{1, 2, 3});
  CHECK(wj.length() == 6);
  CHECK(-act(wj, RootVector::simple(4, 1)) == RootVector::simple(4, 1));
  CHECK(-act(wj, RootVector::simple(4, 2)) == RootVector::simple(4, 3));
  CHECK(-act(wj, RootVector::simple(4, 3)) == RootVector::simple(4, 2));
}

TEST_CASE("longest elements: global invariants up to rank 8") {
  for (auto [t, n] : all_types()) {
    CAPTURE(t);
    CAPTURE(n);
    auto rs = root_system(t, n);
    auto w0 = longest_element(*rs, NodeSet::all(n));
    CHECK(compose(w0, w0).matrix == IntMatrix::identity(n));
    CHECK(w0.length() == static_cast<int>(rs->positive_roots().size()));
    // The word reproduces the matrix.
    WeylElement prod = weyl_identity(*rs);
    for (int i : w0.word) prod = compose(prod, simple_reflection(*rs, i));
    CHECK(prod.matrix == w0.matrix);
    // w0 permutes the roots.
    for (const auto& p : rs->positive_roots()) CHECK(rs->is_root(-act(w0, p)));
  }
}

TEST_CASE("longest element maps positive roots of J onto their negatives") {
  std::mt19937 gen(20241);
  for (auto [t, n] : all_types()) {
    auto rs = root_system(t, n);
    for (int trial = 0; trial < 12; ++trial) {
      NodeSet J(std::uniform_int_distribution<std::uint32_t>(0, (1u << n) - 1)(gen));
      auto w = longest_element(*rs, J);
      auto pos = rs->positive_roots_on(J);
      CHECK(w.length() == static_cast<int>(pos.size()));
      std::set<RootVector> images, negatives;
      for (const auto& p : pos) {
        images.insert(act(w, p));
        negatives.insert(-p);
      }
      CHECK(images == negatives);
      CHECK(compose(w, w).matrix == IntMatrix::identity(n));
    }
  }
}

TEST_CASE("longest element agrees with Weyl group enumeration for rank <= 4") {
  for (auto [t, n] : all_types()) {
    if (n > 4) continue;
    auto rs = root_system(t, n);
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      CAPTURE(rs->name());
      CAPTURE(mask);
      NodeSet J(mask);
      auto ref = oracle::longest(rs->cartan(), J);
      auto w = longest_element(*rs, J);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) CHECK(w.matrix(i, j) == ref.matrix[i][j]);
      CHECK(w.length() == ref.length);
      CHECK(w.length() == static_cast<int>(oracle::positive_roots(rs->cartan(), J).size()));
    }
  }
}

TEST_CASE("act is a group action") {
  std::mt19937 gen(7);
  for (auto [t, n] : all_types()) {
    auto rs = root_system(t, n);
    std::uniform_int_distribution<int> node(0, n - 1), coeff(-3, 3), len(0, 6);
    for (int trial = 0; trial < 20; ++trial) {
      WeylElement a = weyl_identity(*rs), b = weyl_identity(*rs);
      for (int k = len(gen); k > 0; --k) a = compose(a, simple_reflection(*rs, node(gen)));
      for (int k = len(gen); k > 0; --k) b = compose(b, simple_reflection(*rs, node(gen)));
      RootVector v = RootVector::zero(n);
      for (int& c : v.coords) c = coeff(gen);
      CHECK(act(compose(a, b), v) == act(a, act(b, v)));
      CHECK(act(weyl_identity(*rs), v) == v);
    }
  }
}

TEST_CASE("opposition involution") {
  for (int n = 2; n <= 8; ++n) CHECK(opposition_involution(*root_system('B', n)).is_identity());
  auto a3 = opposition_involution(*root_system('A', 3));
  CHECK(a3.perm == std::vector<int>{2, 1, 0});
  CHECK(a3.to_string() == "(1 3)");
  CHECK(opposition_involution(*root_system('E', 8)).is_identity());
  CHECK(opposition_involution(*root_system('E', 6)).to_string() == "(1 6)(3 5)");
  CHECK(opposition_involution(*root_system('D', 5)).to_string() == "(4 5)");
  CHECK(opposition_involution(*root_system('D', 4)).is_identity());
  for (auto [t, n] : all_types()) {
    auto rs = root_system(t, n);
    auto eps = opposition_involution(*rs);
    CHECK(eps.preserves(rs->cartan()));
    CHECK(eps.is_involution());
  }
}

TEST_CASE("diagram automorphisms") {
  CHECK(diagram_automorphisms(*root_system('D', 4)).size() == 6);
  CHECK(diagram_automorphisms(*root_system('E', 6)).size() == 2);
  CHECK(diagram_automorphisms(*root_system('E', 8)).size() == 1);
  CHECK(diagram_automorphisms(*root_system('A', 1)).size() == 1);
  CHECK(diagram_automorphisms(*root_system('B', 3)).size() == 1);
  CHECK(diagram_automorphisms(*root_system('A', 4)).front().is_identity());
}

TEST_CASE("weights and formatting") {
  auto a2 = root_system('A', 2);
  CHECK(a2->to_weight(r({1, 0})) == Weight({2, -1}));
  CHECK(format_root(r({1, 2, 0})) == "a1+2a2");
  CHECK(format_root(r({-1, 0, 0})) == "-a1");
  CHECK(format_root(r({0, 0})) == "0");
  CHECK(format_weight(Weight({1, 0, 2})) == "w1+2w3");
  CHECK(format_nodes(NodeSet{0, 2}) == "{1,3}");
  DiagramAutomorphism swap{{1, 0}};
  CHECK(swap.apply(Weight({0, 1})) == Weight({1, 0}));
}
