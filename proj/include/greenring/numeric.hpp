#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace greenring {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

inline bool is_zero(const BigInt& x) { return x.is_zero(); }
inline bool is_zero(const Rational& x) { return x.is_zero(); }

inline std::int64_t lcm64(std::int64_t a, std::int64_t b) { return std::lcm(a, b); }

/// Euler's totient, by trial division.
std::int64_t euler_phi(std::int64_t n);

/// Positive divisors in increasing order.
std::vector<std::int64_t> divisors(std::int64_t n);

BigInt binomial(std::int64_t n, std::int64_t k);

/// True when r is an integer; writes it to `out`.
bool rational_to_integer(const Rational& r, BigInt& out);

/// Nonnegative residue of a mod m (m > 0).
inline std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace greenring
