#pragma once

#include "greenring/cyclotomic.hpp"
#include "greenring/linalg.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace greenring {

enum class GroupFamily { Cyclic, AbelianProduct, Dihedral, Generic };

const char* to_string(GroupFamily family);

/// Family descriptor accepted by Group::build.
struct GroupSpec {
  GroupFamily family = GroupFamily::Cyclic;
  std::vector<std::int64_t> orders;                 // cyclic: {n}; abelian: factor orders
  std::int64_t s = 0;                               // dihedral parameter
  std::vector<std::vector<std::int64_t>> mult;      // generic: row-major table
  std::vector<std::string> generator_names;         // generic: optional names
  std::vector<std::int64_t> generators;             // generic: optional generator indices
};

/// A finite group on the index set 0..order-1, element 0 the identity.
class Group {
 public:
  static Group build(const GroupSpec& spec);
  static Group cyclic(std::int64_t n);
  static Group abelian(std::vector<std::int64_t> orders);
  static Group dihedral(std::int64_t s);
  static Group from_table(std::vector<std::vector<std::int64_t>> mult,
                          std::vector<std::int64_t> generators = {},
                          std::vector<std::string> generator_names = {});

  GroupFamily family() const { return family_; }
  const GroupSpec& spec() const { return spec_; }
  std::int64_t order() const { return static_cast<std::int64_t>(mult_.size()); }
  std::int64_t mult(std::int64_t a, std::int64_t b) const { return mult_[a][b]; }
  std::int64_t inverse(std::int64_t a) const { return inverse_[a]; }
  std::int64_t power(std::int64_t a, std::int64_t k) const;
  std::int64_t element_order(std::int64_t a) const;
  std::int64_t exponent() const;
  bool is_central(std::int64_t a) const;

  const std::vector<std::int64_t>& generators() const { return generators_; }
  const std::vector<std::string>& generator_names() const { return generator_names_; }
  /// Shortest word in the generators reaching each element (BFS order).
  const std::vector<std::string>& element_names() const { return element_names_; }

  /// Parses "c^3", "b*c^2", "g", "e" (identity), or a decimal element index.
  std::int64_t parse_element(const std::string& expr) const;

  /// Conjugacy classes sorted by representative; representative = minimal index.
  const std::vector<std::vector<std::int64_t>>& classes() const { return classes_; }
  std::int64_t class_of(std::int64_t a) const { return class_of_[a]; }
  std::int64_t num_classes() const { return static_cast<std::int64_t>(classes_.size()); }
  std::int64_t class_rep(std::int64_t c) const { return classes_[c].front(); }
  std::int64_t class_size(std::int64_t c) const { return static_cast<std::int64_t>(classes_[c].size()); }

  /// Exhaustive associativity / identity / inverse check.
  void validate() const;

 private:
  Group() = default;
  void finish();

  GroupFamily family_ = GroupFamily::Cyclic;
  GroupSpec spec_;
  std::vector<std::vector<std::int64_t>> mult_;
  std::vector<std::int64_t> inverse_;
  std::vector<std::int64_t> generators_;
  std::vector<std::string> generator_names_;
  std::vector<std::string> element_names_;
  std::vector<std::vector<std::int64_t>> classes_;
  std::vector<std::int64_t> class_of_;
};

/// Partition into conjugacy classes by brute-force orbit computation.
std::vector<std::vector<std::int64_t>> conjugacy_classes(const Group& g);

/// Character table; row 0 (index 1 in user-facing numbering) is trivial.
struct CharacterTable {
  std::int64_t group_order = 1;
  std::vector<std::int64_t> class_reps;
  std::vector<std::int64_t> class_sizes;
  std::vector<std::vector<Cyclotomic>> values;  // values[irrep][class]
  std::vector<std::int64_t> dims;
  std::vector<std::string> labels;

  std::int64_t num_irreducibles() const { return static_cast<std::int64_t>(values.size()); }
  std::int64_t num_classes() const { return static_cast<std::int64_t>(class_reps.size()); }

  /// Same table with every value embedded into Q(zeta_N).
  CharacterTable embedded(std::int64_t conductor) const;
};

/// Explicit matrices of each irreducible, per group element.
struct Representations {
  std::vector<std::vector<CycMatrix>> matrices;  // matrices[irrep][element]
  std::vector<std::string> labels;
  bool empty() const { return matrices.empty(); }
};

/// Imported character data for generic groups.
struct ImportedTable {
  std::vector<std::vector<Cyclotomic>> values;
  std::vector<std::int64_t> class_reps;
  std::vector<std::int64_t> class_sizes;
  std::vector<std::string> labels;
};

/// Extends generator matrices to all elements by walking the Cayley graph.
/// Throws InvalidTable if the matrices do not define a homomorphism.
std::vector<CycMatrix> extend_to_group(const Group& g, const std::vector<CycMatrix>& generator_images);

/// Irreducible representations for the families with a closed form.
Representations family_representations(const Group& g);

/// Builds and validates the character table. Cyclic, abelian and dihedral
/// tables are traces of family_representations; generic groups need `imported`.
CharacterTable character_table(const Group& g, const std::optional<ImportedTable>& imported = std::nullopt);

/// Throws InvalidTable unless the first orthogonality relation holds exactly,
/// the first row is trivial and sum of dims^2 = |G|.
void validate_table(const CharacterTable& t);

/// Column orthogonality: sum_i chi_i(c) conj(chi_i(c')) = delta |C_G(c)|.
bool column_orthogonal(const CharacterTable& t);

/// Multiplicities <f, chi_i>; throws NotACharacter unless they are
/// non-negative integers.
std::vector<BigInt> char_decompose(const std::vector<Cyclotomic>& f, const CharacterTable& t);

/// Pointwise product of two rows.
std::vector<Cyclotomic> class_product(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b);

}  // namespace greenring
