#pragma once

#include "greenring/datum.hpp"
#include "greenring/greenring.hpp"
#include "greenring/linalg.hpp"

#include <vector>

namespace greenring {

/// An explicit H_D-module: one matrix per group element and the action of y.
struct ModuleRep {
  DatumPtr datum;
  std::vector<CycMatrix> group_action;  // indexed by group element
  CycMatrix y;

  Index dim() const { return y.rows(); }
  const CycMatrix& g_action(std::int64_t h) const { return group_action[static_cast<std::size_t>(h)]; }
};

/// M(i,j) = V_i + xV_i + ... + x^(j-1)V_i with h(x^k v) = chi^-k(h) x^k hv and
/// y(x^k v) = x^(k+1) v. Basis vector x^k v_t has index k*dim(V_i) + t.
ModuleRep module_build(const DatumPtr& datum, std::int64_t i, std::int64_t j);

/// Delta(h) = h (x) h, Delta(y) = y (x) g + 1 (x) y.
ModuleRep module_tensor(const ModuleRep& a, const ModuleRep& b);

/// (hf)(v) = f(S(h)v) with S(h) = h^-1, S(y) = -y g^-1.
ModuleRep module_dual(const ModuleRep& a);

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b);

/// The left regular module on the PBW basis y^a h, index a*|G| + h.
ModuleRep regular_module(const DatumPtr& datum);

/// Throws InconsistentModule unless the group matrices form a homomorphism,
/// y^n = 0 and y h = chi(h) h y for every group generator h.
void verify_relations(const ModuleRep& mod);

struct Summand {
  std::int64_t i = 0;  // simple index, 0-based
  std::int64_t j = 1;  // length
  BigInt multiplicity;
};

/// Krull-Schmidt decomposition read off the image filtration of y: with
/// c_k(p) the multiplicity of V_p in im(y^(k-1))/im(y^k),
/// mult M(i,j) = c_j(tau^(j-1)(i)) - c_(j+1)(tau^j(i)).
std::vector<Summand> module_decompose(const ModuleRep& mod);

/// Summands as a coefficient vector on the Green ring basis.
IntVector summands_to_vector(const std::vector<Summand>& s, std::int64_t n, std::int64_t m);

/// dim Hom_H(A, B).
Index hom_dim(const ModuleRep& a, const ModuleRep& b);

struct StructureProbe {
  std::vector<BigInt> socle;        // multiplicities of simples in ker y
  std::vector<BigInt> top;          // multiplicities of simples in M / yM
  std::vector<Index> radical_dims;  // dim y^k M, k = 0..n
};

StructureProbe structure_probe(const ModuleRep& mod);

/// Trace of the antipode of H_D computed on the PBW basis {y^a h}.
Cyclotomic pbw_antipode_trace(const GroupDatum& datum);

}  // namespace greenring
