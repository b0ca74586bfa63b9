#pragma once

#include <memory>
#include <string>
#include <vector>

#include "wreal/types.hpp"

namespace wreal {

/// Cartan data and positive roots of a simple root system, Bourbaki labels.
///
/// The Cartan matrix entry `cartan(i, j)` is <alpha_j, alpha_i^vee>, so that
/// s_i(alpha_j) = alpha_j - cartan(i, j) alpha_i and the fundamental-weight
/// coordinates of alpha_j form column j.
class RootSystem {
 public:
  /// Throws Error(InvalidInput) for pairs outside A1.., B2.., C2.., D3..
  /// (D3 is returned as A3), E6-E8, F4, G2.
  static RootSystem build(char type_letter, int rank);

  char type_letter() const { return type_; }
  int rank() const { return rank_; }
  std::string name() const;

  const IntMatrix& cartan() const { return cartan_; }
  /// Symmetrized form (alpha_i, alpha_j), scaled so the short roots have
  /// squared length 2.
  int inner(int i, int j) const { return gram_(i, j); }
  const std::vector<RootVector>& positive_roots() const { return positive_; }

  bool is_root(const RootVector& v) const;
  /// <v, alpha_i^vee> for v in the root lattice.
  int pairing(const RootVector& v, int i) const;
  Weight to_weight(const RootVector& v) const;
  /// Positive roots whose support lies inside `nodes`.
  std::vector<RootVector> positive_roots_on(NodeSet nodes) const;
  /// Nodes adjacent to i in the Dynkin diagram.
  NodeSet neighbours(int i) const;
  bool orthogonal(int i, int j) const { return i != j && cartan_(i, j) == 0; }

 private:
  RootSystem(char type, int rank, IntMatrix gram);

  char type_;
  int rank_;
  IntMatrix gram_;
  IntMatrix cartan_;
  std::vector<RootVector> positive_;
};

/// Shared, cached instance. Safe to call concurrently.
std::shared_ptr<const RootSystem> root_system(char type_letter, int rank);

/// Parses "D4", "e8", "A1" into a cached root system; throws NotFound.
std::shared_ptr<const RootSystem> parse_root_system(const std::string& type_rank);

/// An element of the Weyl group: its matrix on the root lattice (simple-root
/// basis) and a word w = s_{word[0]} s_{word[1]} ... s_{word[k-1]}.
struct WeylElement {
  IntMatrix matrix;
  std::vector<int> word;

  int length() const { return static_cast<int>(word.size()); }
  bool operator==(const WeylElement& o) const { return matrix == o.matrix; }
};

WeylElement weyl_identity(const RootSystem& rs);
WeylElement simple_reflection(const RootSystem& rs, int i);
/// Product a*b (apply b first). The word is the concatenation, which need
/// not be reduced.
WeylElement compose(const WeylElement& a, const WeylElement& b);
RootVector act(const WeylElement& w, const RootVector& v);

/// Longest element of the parabolic subgroup generated by {s_j : j in J},
/// found by greedy descent from rho_J with lowest-index tie-break. The word is
/// reduced.
WeylElement longest_element(const RootSystem& rs, NodeSet J);

/// A permutation of the Dynkin nodes; extended linearly to roots and weights.
struct DiagramAutomorphism {
  std::vector<int> perm;

  static DiagramAutomorphism identity(int rank);
  int rank() const { return static_cast<int>(perm.size()); }
  int operator()(int i) const { return perm[i]; }
  bool is_identity() const;
  bool is_involution() const;
  bool preserves(const IntMatrix& cartan) const;

  NodeSet apply(NodeSet s) const;
  RootVector apply(const RootVector& v) const;
  Weight apply(const Weight& w) const;
  DiagramAutomorphism compose(const DiagramAutomorphism& inner) const;

  /// "id" or the nontrivial cycles, 1-based: "(1 3)(5 6)".
  std::string to_string() const;
  bool operator==(const DiagramAutomorphism&) const = default;
};

/// alpha -> -w_0(alpha).
DiagramAutomorphism opposition_involution(const RootSystem& rs);

/// All automorphisms of the Dynkin diagram (Cartan-matrix preserving node
/// permutations), identity first.
std::vector<DiagramAutomorphism> diagram_automorphisms(const RootSystem& rs);

}  // namespace wreal
