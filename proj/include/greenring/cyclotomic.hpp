#pragma once

#include "greenring/numeric.hpp"

#include <Eigen/Core>

#include <complex>
#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

namespace greenring {

/// Exact element of the cyclotomic field Q(zeta_N), stored over the power
/// basis {1, zeta, ..., zeta^(phi(N)-1)} reduced modulo Phi_N.
///
/// Values of different conductors interoperate: binary operations embed both
/// operands into the field of conductor lcm(N1, N2) first. The zero element
/// of conductor 1 is the default value, which makes the type usable as an
/// Eigen scalar.
class Cyclotomic {
 public:
  Cyclotomic() : conductor_(1), coeffs_(1) {}
  Cyclotomic(long long v) : conductor_(1), coeffs_{Rational(v)} {}  // NOLINT
  Cyclotomic(const Rational& r) : conductor_(1), coeffs_{r} {}      // NOLINT

  /// zeta_N^k. Throws InvalidConductor for N < 1.
  static Cyclotomic root_of_unity(std::int64_t conductor, std::int64_t k);

  /// Builds a value from power-basis coefficients; `coeffs.size()` must be phi(N).
  static Cyclotomic from_coeffs(std::int64_t conductor, std::vector<Rational> coeffs);

  std::int64_t conductor() const { return conductor_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  /// Same value in Q(zeta_N); N must be a multiple of conductor().
  Cyclotomic embed(std::int64_t conductor) const;

  bool is_zero() const;
  bool is_one() const;
  std::optional<Rational> to_rational() const;

  /// Galois automorphism zeta -> zeta^a, gcd(a, N) = 1.
  Cyclotomic galois(std::int64_t a) const;
  Cyclotomic conj() const { return galois(-1); }

  Cyclotomic inverse() const;
  Cyclotomic pow(std::int64_t e) const;

  /// Floating image under zeta_N -> exp(2 pi i / N). Debug cross-checks only.
  std::complex<double> to_complex() const;

  Cyclotomic& operator+=(const Cyclotomic& o);
  Cyclotomic& operator-=(const Cyclotomic& o);
  Cyclotomic& operator*=(const Cyclotomic& o);
  Cyclotomic& operator/=(const Cyclotomic& o) { return *this *= o.inverse(); }

  friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
  friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
  Cyclotomic operator-() const;

  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

 private:
  Cyclotomic(std::int64_t conductor, std::vector<Rational> coeffs)
      : conductor_(conductor), coeffs_(std::move(coeffs)) {}

  std::int64_t conductor_;
  std::vector<Rational> coeffs_;
};

inline bool is_zero(const Cyclotomic& x) { return x.is_zero(); }

/// Smallest k >= 1 with x^k = 1, or nullopt if x is not a root of unity.
std::optional<std::int64_t> order_of_root(const Cyclotomic& x);

/// 2cos(pi/n) = zeta_2n + zeta_2n^-1.
Cyclotomic two_cos_pi_over(std::int64_t n);

/// Coefficients of the N-th cyclotomic polynomial, lowest degree first.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t conductor);

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x);

using CycMatrix = Eigen::Matrix<Cyclotomic, Eigen::Dynamic, Eigen::Dynamic>;
using CycVector = Eigen::Matrix<Cyclotomic, Eigen::Dynamic, 1>;

}  // namespace greenring

namespace Eigen {

template <>
struct NumTraits<greenring::Cyclotomic> : GenericNumTraits<greenring::Cyclotomic> {
  using Real = greenring::Cyclotomic;
  using NonInteger = greenring::Cyclotomic;
  using Nested = greenring::Cyclotomic;
  using Literal = greenring::Cyclotomic;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 16,
    MulCost = 64
  };
  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
