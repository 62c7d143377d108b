#include "greenring/dickson.hpp"

#include "greenring/error.hpp"

#include <algorithm>

namespace greenring {

DicksonPoly DicksonPoly::constant(const BigInt& c) { return monomial(0, 0, c); }

DicksonPoly DicksonPoly::monomial(std::int64_t deg_y, std::int64_t deg_z, const BigInt& c) {
  DicksonPoly p;
  if (!c.is_zero()) p.terms[{deg_y, deg_z}] = c;
  return p;
}

BigInt DicksonPoly::coeff(std::int64_t deg_y, std::int64_t deg_z) const {
  const auto it = terms.find({deg_y, deg_z});
  return it == terms.end() ? BigInt(0) : it->second;
}

std::int64_t DicksonPoly::degree_z() const {
  std::int64_t d = -1;
  for (const auto& [key, c] : terms) d = std::max(d, key.second);
  return d;
}

DicksonPoly& DicksonPoly::operator+=(const DicksonPoly& o) {
  for (const auto& [key, c] : o.terms) {
    BigInt& v = terms[key];
    v += c;
    if (v.is_zero()) terms.erase(key);
  }
  return *this;
}

DicksonPoly& DicksonPoly::operator-=(const DicksonPoly& o) {
  for (const auto& [key, c] : o.terms) {
    BigInt& v = terms[key];
    v -= c;
    if (v.is_zero()) terms.erase(key);
  }
  return *this;
}

DicksonPoly operator*(const DicksonPoly& a, const DicksonPoly& b) {
  DicksonPoly out;
  for (const auto& [ka, ca] : a.terms)
    for (const auto& [kb, cb] : b.terms) out += DicksonPoly::monomial(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return out;
}

DicksonPoly dickson(std::int64_t s) {
  if (s < 1) throw Error(ErrorKind::Domain, "Dickson index must be at least 1");
  DicksonPoly prev = DicksonPoly::constant(1);
  if (s == 1) return prev;
  DicksonPoly cur = DicksonPoly::monomial(0, 1);
  const DicksonPoly z = DicksonPoly::monomial(0, 1), y = DicksonPoly::monomial(1, 0);
  for (std::int64_t i = 3; i <= s; ++i) {
    DicksonPoly next = z * cur - y * prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

DicksonPoly dickson_closed_form(std::int64_t s) {
  if (s < 1) throw Error(ErrorKind::Domain, "Dickson index must be at least 1");
  DicksonPoly p;
  for (std::int64_t i = 0; 2 * i <= s - 1; ++i) {
    BigInt c = binomial(s - 1 - i, i);
    if (i % 2) c = -c;
    p += DicksonPoly::monomial(i, s - 1 - 2 * i, c);
  }
  return p;
}

std::vector<Rational> inverse_dickson(std::int64_t s) {
  if (s < 0) throw Error(ErrorKind::Domain, "inverse Dickson exponent must be non-negative");
  std::vector<Rational> c;
  for (std::int64_t i = 0; 2 * i <= s; ++i)
    c.push_back(Rational(binomial(s, i)) * Rational(s + 1 - 2 * i, s + 1 - i));
  return c;
}

bool verify_inverse_dickson(std::int64_t s) {
  const auto c = inverse_dickson(s);
  std::map<std::pair<std::int64_t, std::int64_t>, Rational> sum;
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto k = static_cast<std::int64_t>(i);
    for (const auto& [key, v] : dickson(s + 1 - 2 * k).terms) sum[{key.first + k, key.second}] += c[i] * Rational(v);
  }
  for (const auto& [key, v] : sum) {
    const bool target = key.first == 0 && key.second == s;
    if (v != Rational(target ? 1 : 0)) return false;
  }
  return sum.count({0, s}) == 1;
}

std::ostream& operator<<(std::ostream& os, const DicksonPoly& p) {
  if (p.terms.empty()) return os << "0";
  bool first = true;
  std::vector<std::pair<std::pair<std::int64_t, std::int64_t>, BigInt>> items(p.terms.begin(), p.terms.end());
  std::stable_sort(items.begin(), items.end(),
                   [](const auto& a, const auto& b) { return a.first.second > b.first.second; });
  for (const auto& [key, c] : items) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const bool has_var = key.first > 0 || key.second > 0;
    if (mag != 1 || !has_var) os << mag;
    if (key.first > 0) os << "y" << (key.first > 1 ? "^" + std::to_string(key.first) : "");
    if (key.second > 0) os << "z" << (key.second > 1 ? "^" + std::to_string(key.second) : "");
  }
  return os;
}

}  // namespace greenring
