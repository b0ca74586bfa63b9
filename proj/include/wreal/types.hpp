#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace wreal {

enum class ErrorKind {
  InvalidInput,     // malformed or out-of-range arguments, schema violations
  CorruptData,      // catalog/fixture data violating its own invariants
  Inapplicable,     // a criterion's hypothesis does not hold
  NotSelfConjugate, // Cartan index requested for a weight not fixed by epsilon
  IndexUnavailable, // no Cartan index data for this form
  SizeLimit,        // exhaustive enumeration refused
  NotFound,         // unknown form, fixture or type
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A set of Dynkin nodes, stored as a bitmask over 0-based node indices.
/// Everything user-facing (files, CLI, reports) uses 1-based Bourbaki labels;
/// the conversion happens in the io layer only.
class NodeSet {
 public:
  constexpr NodeSet() = default;
  constexpr explicit NodeSet(std::uint32_t bits) : bits_(bits) {}
  NodeSet(std::initializer_list<int> nodes) {
    for (int n : nodes) insert(n);
  }

  static NodeSet from_indices(const std::vector<int>& nodes) {
    NodeSet s;
    for (int n : nodes) s.insert(n);
    return s;
  }
  static constexpr NodeSet all(int rank) {
    return NodeSet(rank >= 32 ? ~0u : ((1u << rank) - 1u));
  }

  constexpr bool contains(int i) const { return (bits_ >> i) & 1u; }
  void insert(int i) { bits_ |= (1u << i); }
  void erase(int i) { bits_ &= ~(1u << i); }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint32_t bits() const { return bits_; }

  constexpr bool subset_of(NodeSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr NodeSet operator|(NodeSet o) const { return NodeSet(bits_ | o.bits_); }
  constexpr NodeSet operator&(NodeSet o) const { return NodeSet(bits_ & o.bits_); }
  constexpr NodeSet minus(NodeSet o) const { return NodeSet(bits_ & ~o.bits_); }
  constexpr bool operator==(const NodeSet&) const = default;
  constexpr auto operator<=>(const NodeSet&) const = default;

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

 private:
  std::uint32_t bits_ = 0;
};

/// Element of the root lattice, coordinates in the simple-root basis.
struct RootVector {
  std::vector<int> coords;

  RootVector() = default;
  explicit RootVector(std::vector<int> c) : coords(std::move(c)) {}
  static RootVector zero(int rank) { return RootVector(std::vector<int>(rank, 0)); }
  static RootVector simple(int rank, int i) {
    auto v = zero(rank);
    v.coords[i] = 1;
    return v;
  }

  int rank() const { return static_cast<int>(coords.size()); }
  int height() const;
  bool is_zero() const;
  RootVector operator-() const;
  bool operator==(const RootVector&) const = default;
  auto operator<=>(const RootVector&) const = default;
};

/// Element of the weight lattice, coordinates in the fundamental-weight basis.
struct Weight {
  std::vector<int> coords;

  Weight() = default;
  explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
  static Weight zero(int rank) { return Weight(std::vector<int>(rank, 0)); }
  static Weight fundamental(int rank, int i) {
    auto w = zero(rank);
    w.coords[i] = 1;
    return w;
  }

  int rank() const { return static_cast<int>(coords.size()); }
  bool is_dominant() const;
  Weight operator+(const Weight& o) const;
  bool operator==(const Weight&) const = default;
  auto operator<=>(const Weight&) const = default;
};

/// Square integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n) * n, 0) {}
  static IntMatrix identity(int n);

  int dim() const { return n_; }
  int& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * n_ + j]; }
  int operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * n_ + j]; }

  IntMatrix operator*(const IntMatrix& o) const;
  std::vector<int> operator*(const std::vector<int>& v) const;
  bool operator==(const IntMatrix&) const = default;

 private:
  int n_ = 0;
  std::vector<int> a_;
};

/// A piece of evidence attached to a verdict: which element failed (or
/// succeeded) and what it was mapped to.
struct Witness {
  std::string kind;        // e.g. "spherical_root", "parabolic_node", "generator"
  std::vector<int> from;   // coordinates (or 1-based node list) before the map
  std::vector<int> to;     // after the map
  std::string text;        // human-readable rendering

  bool operator==(const Witness&) const = default;
};

// Human-readable renderings, 1-based labels: "a1+2a2+a3", "w1+w2", "{1,3}".
std::string format_root(const RootVector& v);
std::string format_weight(const Weight& w);
std::string format_nodes(NodeSet s);

}  // namespace wreal
