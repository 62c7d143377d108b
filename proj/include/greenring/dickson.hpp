#pragma once

#include "greenring/numeric.hpp"

#include <cstdint>
#include <map>
#include <ostream>
#include <utility>
#include <vector>

namespace greenring {

/// Bivariate polynomial in (y, z) with integer coefficients, keyed by
/// (deg_y, deg_z). Zero coefficients are never stored.
struct DicksonPoly {
  std::map<std::pair<std::int64_t, std::int64_t>, BigInt> terms;

  static DicksonPoly constant(const BigInt& c);
  static DicksonPoly monomial(std::int64_t deg_y, std::int64_t deg_z, const BigInt& c = 1);

  BigInt coeff(std::int64_t deg_y, std::int64_t deg_z) const;
  std::int64_t degree_z() const;

  DicksonPoly& operator+=(const DicksonPoly& o);
  DicksonPoly& operator-=(const DicksonPoly& o);
  friend DicksonPoly operator+(DicksonPoly a, const DicksonPoly& b) { return a += b; }
  friend DicksonPoly operator-(DicksonPoly a, const DicksonPoly& b) { return a -= b; }
  friend DicksonPoly operator*(const DicksonPoly& a, const DicksonPoly& b);
  friend bool operator==(const DicksonPoly& a, const DicksonPoly& b) { return a.terms == b.terms; }
};

/// F_s(y, z) with F_1 = 1, F_2 = z, F_s = z F_{s-1} - y F_{s-2}. Throws Domain for s < 1.
DicksonPoly dickson(std::int64_t s);

/// F_s from the closed form sum_i (-1)^i C(s-1-i, i) y^i z^(s-1-2i).
DicksonPoly dickson_closed_form(std::int64_t s);

/// Coefficients c_i, i = 0..floor(s/2), with z^s = sum_i c_i y^i F_{s+1-2i}(y, z):
/// c_i = C(s, i) (s+1-2i) / (s+1-i).
std::vector<Rational> inverse_dickson(std::int64_t s);

/// Expands sum_i c_i y^i F_{s+1-2i} and compares with z^s, exactly.
bool verify_inverse_dickson(std::int64_t s);

std::ostream& operator<<(std::ostream& os, const DicksonPoly& p);

}  // namespace greenring
