#pragma once

#include "greenring/datum.hpp"
#include "greenring/dickson.hpp"
#include "greenring/linalg.hpp"

#include <memory>
#include <utility>
#include <vector>

namespace greenring {

/// Basis label (i, j): simple index i (0-based) and length j in 1..n.
struct BasisLabel {
  std::int64_t i = 0;
  std::int64_t j = 1;
  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

/// Structure data of the Green ring r(H_D) on the basis M[i,j], ordered with
/// i outer: index(i, j) = i*n + (j-1).
class GreenRing {
 public:
  static std::shared_ptr<const GreenRing> create(DatumPtr datum);

  const GroupDatum& datum() const { return *datum_; }
  const DatumPtr& datum_ptr() const { return datum_; }
  std::int64_t m() const { return datum_->m(); }
  std::int64_t n() const { return datum_->n(); }
  Index rank() const { return static_cast<Index>(m() * n()); }

  Index index(std::int64_t i, std::int64_t j) const;
  BasisLabel label(Index u) const { return {u / n(), u % n() + 1}; }

  /// M_u * M_v as a coefficient vector.
  const IntVector& product(Index u, Index v) const { return table_[static_cast<std::size_t>(u * rank() + v)]; }

  /// Columns: delta_{M_u} and its dual delta*_{M_u}; both matrices are unimodular.
  const IntMatrix& delta_matrix() const { return delta_; }
  const IntMatrix& delta_star_matrix() const { return delta_star_; }
  const IntMatrix& delta_inverse() const { return delta_inv_; }
  const IntMatrix& delta_star_inverse() const { return delta_star_inv_; }

  /// Index of the dual basis element M[i,j]* = M[tau^(1-j)(i*), j].
  Index dual_index(Index u) const;

 private:
  explicit GreenRing(DatumPtr datum) : datum_(std::move(datum)) {}

  DatumPtr datum_;
  std::vector<IntVector> table_;
  IntMatrix delta_, delta_star_, delta_inv_, delta_star_inv_;
};

using RingPtr = std::shared_ptr<const GreenRing>;

/// Integer combination of the basis M[i,j].
class GreenElement {
 public:
  GreenElement(RingPtr ring, IntVector coeffs);

  static GreenElement zero(const RingPtr& ring);
  static GreenElement one(const RingPtr& ring) { return basis(ring, 0, 1); }
  static GreenElement basis(const RingPtr& ring, std::int64_t i, std::int64_t j);
  static GreenElement basis(const RingPtr& ring, Index u);
  /// a = [V_{chi^-1}] = M[tau(1), 1].
  static GreenElement a(const RingPtr& ring);
  /// [V_i] = M[i, 1].
  static GreenElement simple(const RingPtr& ring, std::int64_t i) { return basis(ring, i, 1); }

  const RingPtr& ring() const { return ring_; }
  const IntVector& coeffs() const { return coeffs_; }
  const BigInt& coeff(std::int64_t i, std::int64_t j) const { return coeffs_(ring_->index(i, j)); }
  bool is_zero() const { return is_zero_matrix<BigInt>(coeffs_); }

  GreenElement& operator+=(const GreenElement& o);
  GreenElement& operator-=(const GreenElement& o);
  friend GreenElement operator+(GreenElement a, const GreenElement& b) { return a += b; }
  friend GreenElement operator-(GreenElement a, const GreenElement& b) { return a -= b; }
  friend GreenElement operator*(const GreenElement& a, const GreenElement& b);
  friend GreenElement operator*(const BigInt& c, GreenElement a);
  GreenElement operator-() const;
  friend bool operator==(const GreenElement& a, const GreenElement& b);
  friend bool operator!=(const GreenElement& a, const GreenElement& b) { return !(a == b); }

  GreenElement pow(std::int64_t e) const;

 private:
  RingPtr ring_;
  IntVector coeffs_;
};

GreenElement multiply(const GreenElement& x, const GreenElement& y);

/// The dual automorphism M[i,j] -> M[tau^(1-j)(i*), j].
GreenElement dual(const GreenElement& x);

/// delta_{M[i,j]} = (1 + a - M[1,2]) M[i,j] for j < n, M[i,n] - a M[i,n-1] for j = n.
GreenElement delta_element(const RingPtr& ring, std::int64_t i, std::int64_t j);
GreenElement delta_star_element(const RingPtr& ring, std::int64_t i, std::int64_t j);

/// (x, y) = dim Hom(V, W*) extended bilinearly.
BigInt form_sym(const GreenElement& x, const GreenElement& y);
/// <x, y> = dim Hom(V, W) extended bilinearly.
BigInt form_hom(const GreenElement& x, const GreenElement& y);

/// Dimension of the module class.
BigInt dimension(const GreenElement& x);

/// Polynomial in z with coefficients in r(kG) (vectors over simple indices),
/// coeffs[k] the coefficient of z^k.
struct RkgPoly {
  std::vector<IntVector> coeffs;
};

/// Resolves y -> a = [V_{tau(1)}] in a bivariate polynomial.
RkgPoly rkg_poly(const GroupDatum& datum, const DicksonPoly& p);

/// Substitutes z -> M[1,2] and multiplies out in r(H).
GreenElement phi_eval(const RingPtr& ring, const RkgPoly& p);
GreenElement phi_eval(const RingPtr& ring, const DicksonPoly& p);

/// (1 + y - z) F_n(y, z), the defining relation of r(H).
DicksonPoly presentation_relation(std::int64_t n);

/// Product in r(kG) of two vectors over simple indices.
IntVector rkg_multiply(const GroupDatum& datum, const IntVector& x, const IntVector& y);

/// Ring map to G_0(H): M[i,j] -> [V_i](1 + a + ... + a^(j-1)).
IntVector grothendieck_image(const GreenElement& x);

struct ARData {
  BasisLabel left;
  GreenElement middle;
  BasisLabel right;
  GreenElement delta;
};

/// Almost split sequence ending at M(i,j), j < n. Throws ProjectiveModule for j = n.
ARData ar_sequence(const RingPtr& ring, std::int64_t i, std::int64_t j);

struct FrobeniusData {
  std::vector<BigInt> phi;                                    // phi(M_u) = (M_u, 1)
  std::vector<std::pair<GreenElement, GreenElement>> casimir; // (delta*_{M_u}, M_u)
  GreenElement integral;                                      // [H]
};

FrobeniusData frobenius_data(const RingPtr& ring);

/// [H] = sum_i dim(V_i) M[i,n].
GreenElement regular_class(const RingPtr& ring);

}  // namespace greenring
