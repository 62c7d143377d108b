#include "greenring/numeric.hpp"

#include "greenring/error.hpp"

namespace greenring {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidConductor: return "invalid-conductor";
    case ErrorKind::DivisionByZero: return "division-by-zero";
    case ErrorKind::InvalidGroup: return "invalid-group";
    case ErrorKind::UnsupportedParameter: return "unsupported-parameter";
    case ErrorKind::MissingTable: return "missing-table";
    case ErrorKind::InvalidTable: return "invalid-table";
    case ErrorKind::NotACharacter: return "not-a-character";
    case ErrorKind::InvalidDatum: return "invalid-datum";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::UnsupportedNonNilpotent: return "unsupported-non-nilpotent";
    case ErrorKind::InternalConsistency: return "internal-consistency";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::ProjectiveModule: return "projective-module";
    case ErrorKind::UnsupportedRepresentation: return "unsupported-representation";
    case ErrorKind::InconsistentModule: return "inconsistent-module";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::Io: return "io";
  }
  return "unknown";
}

std::int64_t euler_phi(std::int64_t n) {
  std::int64_t result = n;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (std::int64_t d = 1; d <= n; ++d)
    if (n % d == 0) out.push_back(d);
  return out;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return BigInt(0);
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;
  }
  return r;
}

bool rational_to_integer(const Rational& r, BigInt& out) {
  if (denominator(r) != 1) return false;
  out = numerator(r);
  return true;
}

}  // namespace greenring
