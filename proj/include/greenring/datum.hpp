#pragma once

#include "greenring/cyclotomic.hpp"
#include "greenring/group.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace greenring {

/// Index permutations of the simple modules, 0-based.
struct Permutations {
  std::vector<std::int64_t> tau;      // V_{chi^-1} (x) V_i = V_{tau(i)}
  std::vector<std::int64_t> tau_inv;
  std::vector<std::int64_t> star;     // (V_i)* = V_{star(i)}
};

/// Raw input of a group datum before validation.
struct DatumInput {
  Group group;
  std::optional<ImportedTable> imported_table;
  std::optional<std::vector<std::vector<CycMatrix>>> imported_generator_matrices;  // per irrep, per generator
  std::int64_t chi = 0;    // 0-based row of the character table
  std::int64_t g = 0;      // element index
  Rational mu = 0;
};

/// A validated group datum (G, chi, g, 0) of nilpotent type with every
/// derived quantity. Simple modules are indexed 0..m-1 with 0 the trivial one.
class GroupDatum {
 public:
  static std::shared_ptr<const GroupDatum> create(DatumInput input);

  const Group& group() const { return group_; }
  const CharacterTable& table() const { return table_; }
  std::int64_t chi() const { return chi_; }
  std::int64_t g() const { return g_; }
  const Cyclotomic& q() const { return q_; }
  std::int64_t n() const { return n_; }
  std::int64_t l() const { return l_; }
  std::int64_t m() const { return table_.num_irreducibles(); }
  std::int64_t dim_h() const { return n_ * group_.order(); }
  /// lcm(exponent(G), 2n); every scalar of the datum lives in Q(zeta_conductor).
  std::int64_t conductor() const { return conductor_; }
  const Permutations& permutations() const { return perms_; }

  std::int64_t tau(std::int64_t i, std::int64_t power = 1) const;
  std::int64_t star(std::int64_t i) const { return perms_.star[i]; }
  std::int64_t dim(std::int64_t i) const { return table_.dims[i]; }

  /// chi(h) for an element index h.
  const Cyclotomic& chi_at(std::int64_t h) const { return chi_values_[h]; }

  /// Multiplicity of V_k in V_i (x) V_j.
  const BigInt& fusion(std::int64_t i, std::int64_t j, std::int64_t k) const { return fusion_[i][j][k]; }
  const std::vector<BigInt>& fusion(std::int64_t i, std::int64_t j) const { return fusion_[i][j]; }

  /// Explicit matrices of every simple module, when known.
  bool has_representations() const { return reps_.has_value(); }
  const Representations& representations() const;

  /// chi(theta) for theta = sum_k sum_{h^2 = g^-k} (-1)^k h^-k g^-k(k+1)/2,
  /// the trace of the antipode of H_D.
  Cyclotomic antipode_trace() const;

 private:
  GroupDatum(Group group) : group_(std::move(group)) {}

  Group group_;
  CharacterTable table_;
  std::int64_t chi_ = 0;
  std::int64_t g_ = 0;
  Cyclotomic q_;
  std::int64_t n_ = 0;
  std::int64_t l_ = 0;
  std::int64_t conductor_ = 1;
  std::vector<Cyclotomic> chi_values_;
  Permutations perms_;
  std::vector<std::vector<std::vector<BigInt>>> fusion_;
  std::optional<Representations> reps_;
};

using DatumPtr = std::shared_ptr<const GroupDatum>;

/// Result of comparing two data on the same group.
struct GaugeComparison {
  Cyclotomic trace_left;
  Cyclotomic trace_right;
  bool traces_differ = false;
  /// For cyclic G with chi of order |G|: whether chi' = chi^i with gcd(i, |G|) = 1,
  /// in which case a -> a' extends to an automorphism of r(kG).
  std::optional<bool> cyclic_automorphism;
};

GaugeComparison compare_gauge(const GroupDatum& left, const GroupDatum& right);

}  // namespace greenring
