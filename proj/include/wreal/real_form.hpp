#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "wreal/root_system.hpp"

namespace wreal {

/// A real form given by its Satake diagram: black nodes, and the involution
/// omega on the white nodes (arrows of the diagram).
struct SatakeDiagram {
  std::shared_ptr<const RootSystem> root_system;
  NodeSet black;
  /// omega[i] for a white node i; -1 on black nodes.
  std::vector<int> omega;
  std::string name;
  std::vector<std::string> aliases;
  /// Coweight c with Cartan index (-1)^<lambda, c>; empty if unknown.
  std::vector<int> index_coweight;

  int rank() const { return root_system->rank(); }
  NodeSet white() const { return NodeSet::all(rank()).minus(black); }
  /// Case-insensitive match against the name or any alias; signatures
  /// "so(5,3)" and "so(3,5)" are the same form.
  bool matches(std::string_view id) const;
  bool is_split() const;
  bool is_compact() const;
};

/// Throws Error(CorruptData) describing the first broken invariant.
void validate_diagram(const SatakeDiagram& sd);

/// omega on white nodes, -w_bullet on black nodes (w_bullet = longest
/// element of the Weyl group of the black nodes).
DiagramAutomorphism epsilon_sigma(const SatakeDiagram& sd);

Weight extend_to_weights(const DiagramAutomorphism& eps, const Weight& lambda);

/// Highest weight of the twisted module V^sigma.
Weight twisted_highest_weight(const SatakeDiagram& sd, const Weight& lambda);

/// +1 (real) or -1 (quaternionic) for a dominant epsilon-fixed weight.
int cartan_index(const SatakeDiagram& sd, const Weight& lambda);

class SatakeCatalog {
 public:
  /// The catalog compiled into the library.
  static const SatakeCatalog& builtin();
  static SatakeCatalog from_json(const std::string& text, const std::string& source);
  static SatakeCatalog from_file(const std::string& path);

  int version() const { return version_; }
  const std::string& source() const { return source_; }
  const std::vector<SatakeDiagram>& all() const { return forms_; }

  /// Forms of one simple type; throws NotFound if the catalog has none.
  std::vector<SatakeDiagram> forms(const RootSystem& rs) const;
  /// Throws NotFound for an unknown id.
  const SatakeDiagram& find(const RootSystem& rs, std::string_view id) const;

 private:
  int version_ = 0;
  std::string source_;
  std::vector<SatakeDiagram> forms_;
};

/// All real forms of a simple type from the built-in catalog.
std::vector<SatakeDiagram> real_form_catalog(char type_letter, int rank);

}  // namespace wreal
