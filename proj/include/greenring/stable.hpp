#pragma once

#include "greenring/greenring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace greenring {

/// Combination of the stable basis M[i,j], j <= n-1, with coefficients in
/// Q(zeta_N), N the datum conductor. Index (i, j) -> i*(n-1) + (j-1).
class StableElement {
 public:
  StableElement(RingPtr ring, CycVector coeffs);

  static StableElement zero(const RingPtr& ring);
  static StableElement basis(const RingPtr& ring, Index u);

  const RingPtr& ring() const { return ring_; }
  const CycVector& coeffs() const { return coeffs_; }

  StableElement& operator+=(const StableElement& o);
  StableElement& operator-=(const StableElement& o);
  friend StableElement operator+(StableElement a, const StableElement& b) { return a += b; }
  friend StableElement operator-(StableElement a, const StableElement& b) { return a -= b; }
  friend StableElement operator*(const StableElement& a, const StableElement& b);
  friend StableElement operator*(const Cyclotomic& c, StableElement a);
  friend bool operator==(const StableElement& a, const StableElement& b);
  friend bool operator!=(const StableElement& a, const StableElement& b) { return !(a == b); }
  bool is_zero() const { return is_zero_matrix<Cyclotomic>(coeffs_); }

 private:
  RingPtr ring_;
  CycVector coeffs_;
};

Index stable_rank(const GreenRing& ring);
Index stable_index(const GreenRing& ring, std::int64_t i, std::int64_t j);
BasisLabel stable_label(const GreenRing& ring, Index u);

/// Drops every M[i,n] coordinate.
StableElement stable_reduce(const GreenElement& x);

/// epsilon(M[i,j]) = dim(V_i) F_j(1, 2cos(pi/n)), per stable basis index.
std::vector<Cyclotomic> epsilon_values(const GreenRing& ring);
Cyclotomic epsilon_st(const StableElement& x);

/// epsilon applied to a polynomial in (a, z): a -> 1, z -> 2cos(pi/n).
Cyclotomic epsilon_poly(std::int64_t n, const DicksonPoly& p);

/// b_u = epsilon(M_u) M_u.
StableElement b_basis(const RingPtr& ring, Index u);

/// (i,j)* = (tau^(1-j)(i*), j) on stable indices.
Index stable_involution(const GreenRing& ring, Index u);

/// p_{uv}^w with b_u b_v = sum_w p_{uv}^w b_w.
Cyclotomic structure_constant(const GreenRing& ring, Index u, Index v, Index w);

struct AxiomResult {
  bool pass = true;
  std::string witness;  // first counterexample
  std::int64_t checked = 0;
};

struct GroupLikeReport {
  AxiomResult g1, g2, g3;
  bool pass() const { return g1.pass && g2.pass && g3.pass; }
};

GroupLikeReport grouplike_check(const RingPtr& ring);

/// Delta(x) as a matrix D with Delta(x) = sum D(v, w) M_v (x) M_w.
using Coproduct = CycMatrix;

struct BiFrobeniusData {
  std::vector<Cyclotomic> phi;        // phi(b_u) = delta_{u,(1,1)}
  std::vector<Coproduct> delta;       // Delta(b_u) = b_u (x) b_u / epsilon(b_u)
  StableElement t;                    // sum of b_u
  std::vector<Index> antipode;        // S(b_u) = b_{u*}
  AxiomResult dual_pair, counit, anti_algebra, anti_coalgebra, involutive;
  bool pass() const {
    return dual_pair.pass && counit.pass && anti_algebra.pass && anti_coalgebra.pass && involutive.pass;
  }
};

/// phi on an arbitrary stable element.
Cyclotomic frobenius_phi(const StableElement& x);
Coproduct coproduct(const StableElement& x);
StableElement antipode(const StableElement& x);

BiFrobeniusData bifrobenius_data(const RingPtr& ring);

/// [V_i] z^j via the inverse Dickson expansion:
/// sum_k C(j,k) (j+1-2k)/(j+1-k) M[tau^k(i), j+1-2k], for 0 <= j <= n-2.
StableElement monomial(const RingPtr& ring, std::int64_t i, std::int64_t j);

struct MonomialEntry {
  std::int64_t i = 0;
  std::int64_t j = 0;
  Cyclotomic phi;           // closed formula
  Coproduct delta;          // closed formula
  StableElement antipode;   // closed formula, [V_i*] a^(k-j) F_{j+1-2k}
};

struct MonomialReport {
  std::vector<MonomialEntry> entries;
  AxiomResult expansion;   // monomial() equals stable_reduce([V_i] M[1,2]^j)
  AxiomResult phi, delta, antipode, t;
  bool pass() const { return expansion.pass && phi.pass && delta.pass && antipode.pass && t.pass; }
};

MonomialReport bifrobenius_on_monomials(const RingPtr& ring);

/// Optional floating check that every epsilon(M_u) is a positive real number.
bool epsilon_positive_numeric(const GreenRing& ring);

}  // namespace greenring
