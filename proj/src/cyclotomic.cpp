#include "greenring/cyclotomic.hpp"

#include "greenring/error.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace greenring {
namespace {

struct FieldTable {
  std::int64_t conductor = 1;
  std::int64_t degree = 1;
  std::vector<std::int64_t> phi;                     // Phi_N, lowest degree first
  std::vector<std::vector<std::int64_t>> power_mod;  // x^e mod Phi_N, 0 <= e < N
};

std::vector<std::int64_t> divide_monic(std::vector<std::int64_t> num,
                                       const std::vector<std::int64_t>& den) {
  const std::size_t dn = den.size() - 1;
  std::vector<std::int64_t> quot(num.size() - dn, 0);
  for (std::size_t i = num.size(); i-- > dn;) {
    const std::int64_t c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t k = 0; k <= dn; ++k) num[i - dn + k] -= c * den[k];
  }
  return quot;
}

std::unique_ptr<FieldTable> build_table(std::int64_t n) {
  auto t = std::make_unique<FieldTable>();
  t->conductor = n;
  // Phi_N = (x^N - 1) / prod_{d | N, d < N} Phi_d
  std::vector<std::int64_t> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (std::int64_t d : divisors(n)) {
    if (d == n) continue;
    poly = divide_monic(poly, cyclotomic_polynomial(d));
  }
  t->phi = poly;
  t->degree = static_cast<std::int64_t>(poly.size()) - 1;

  const std::int64_t deg = t->degree;
  std::vector<std::int64_t> cur(deg, 0);
  cur[0] = 1;
  t->power_mod.reserve(n);
  for (std::int64_t e = 0; e < n; ++e) {
    t->power_mod.push_back(cur);
    std::vector<std::int64_t> next(deg, 0);
    const std::int64_t top = cur[deg - 1];
    for (std::int64_t k = deg - 1; k > 0; --k) next[k] = cur[k - 1];
    for (std::int64_t k = 0; k < deg; ++k) next[k] -= top * t->phi[k];
    cur = std::move(next);
  }
  return t;
}

const FieldTable& field(std::int64_t n) {
  static std::recursive_mutex mutex;
  static std::map<std::int64_t, std::unique_ptr<FieldTable>> cache;
  if (n < 1) throw Error(ErrorKind::InvalidConductor, "conductor must be positive");
  std::lock_guard<std::recursive_mutex> lock(mutex);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  std::unique_ptr<FieldTable> built;
  if (n == 1) {
    built = std::make_unique<FieldTable>();
    built->phi = {-1, 1};
    built->power_mod = {{1}};
  } else {
    built = build_table(n);  // recurses into field(d) for proper divisors d
  }
  return *cache.emplace(n, std::move(built)).first->second;
}

void accumulate_power(std::vector<Rational>& out, const FieldTable& t, std::int64_t e,
                      const Rational& c) {
  const auto& row = t.power_mod[mod_floor(e, t.conductor)];
  for (std::size_t k = 0; k < row.size(); ++k)
    if (row[k] != 0) out[k] += c * row[k];
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(std::int64_t conductor) {
  return field(conductor).phi;
}

Cyclotomic Cyclotomic::root_of_unity(std::int64_t conductor, std::int64_t k) {
  const FieldTable& t = field(conductor);
  const auto& row = t.power_mod[mod_floor(k, conductor)];
  std::vector<Rational> c(row.begin(), row.end());
  return Cyclotomic(conductor, std::move(c));
}

Cyclotomic Cyclotomic::from_coeffs(std::int64_t conductor, std::vector<Rational> coeffs) {
  const FieldTable& t = field(conductor);
  if (static_cast<std::int64_t>(coeffs.size()) != t.degree)
    throw Error(ErrorKind::Domain, "coefficient vector length must equal phi(conductor)");
  return Cyclotomic(conductor, std::move(coeffs));
}

Cyclotomic Cyclotomic::embed(std::int64_t conductor) const {
  if (conductor == conductor_) return *this;
  if (conductor < 1 || conductor % conductor_ != 0)
    throw Error(ErrorKind::InvalidConductor, "embedding target must be a multiple of the conductor");
  const FieldTable& t = field(conductor);
  std::vector<Rational> out(t.degree);
  const std::int64_t step = conductor / conductor_;
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) accumulate_power(out, t, static_cast<std::int64_t>(k) * step, coeffs_[k]);
  return Cyclotomic(conductor, std::move(out));
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : coeffs_)
    if (!c.is_zero()) return false;
  return true;
}

bool Cyclotomic::is_one() const {
  if (coeffs_[0] != 1) return false;
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) return false;
  return true;
}

std::optional<Rational> Cyclotomic::to_rational() const {
  for (std::size_t k = 1; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) return std::nullopt;
  return coeffs_[0];
}

Cyclotomic Cyclotomic::galois(std::int64_t a) const {
  if (std::gcd(mod_floor(a, conductor_), conductor_) != 1 && conductor_ > 1)
    throw Error(ErrorKind::Domain, "Galois exponent must be coprime to the conductor");
  if (conductor_ == 1) return *this;
  const FieldTable& t = field(conductor_);
  std::vector<Rational> out(t.degree);
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (!coeffs_[k].is_zero()) accumulate_power(out, t, a * static_cast<std::int64_t>(k), coeffs_[k]);
  return Cyclotomic(conductor_, std::move(out));
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero cyclotomic");
  if (conductor_ == 1) return Cyclotomic(Rational(1) / coeffs_[0]);
  const FieldTable& t = field(conductor_);
  const std::size_t d = static_cast<std::size_t>(t.degree);
  // Column k holds this * zeta^k; solve A c = e_0.
  std::vector<std::vector<Rational>> a(d, std::vector<Rational>(d + 1));
  for (std::size_t k = 0; k < d; ++k) {
    std::vector<Rational> col(d);
    for (std::size_t i = 0; i < d; ++i)
      if (!coeffs_[i].is_zero()) accumulate_power(col, t, static_cast<std::int64_t>(i + k), coeffs_[i]);
    for (std::size_t r = 0; r < d; ++r) a[r][k] = col[r];
  }
  a[0][d] = 1;
  for (std::size_t c = 0; c < d; ++c) {
    std::size_t p = c;
    while (p < d && a[p][c].is_zero()) ++p;
    if (p == d) throw Error(ErrorKind::InternalConsistency, "singular multiplication matrix");
    std::swap(a[p], a[c]);
    const Rational inv = Rational(1) / a[c][c];
    for (std::size_t k = c; k <= d; ++k) a[c][k] *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == c || a[r][c].is_zero()) continue;
      const Rational f = a[r][c];
      for (std::size_t k = c; k <= d; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::vector<Rational> out(d);
  for (std::size_t r = 0; r < d; ++r) out[r] = a[r][d];
  return Cyclotomic(conductor_, std::move(out));
}

Cyclotomic Cyclotomic::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclotomic result(1);
  Cyclotomic base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::complex<double> Cyclotomic::to_complex() const {
  std::complex<double> z = 0;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k].is_zero()) continue;
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(conductor_);
    z += coeffs_[k].convert_to<double>() * std::polar(1.0, angle);
  }
  return z;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  if (o.is_zero()) return *this;
  if (conductor_ == o.conductor_) {
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  const std::int64_t n = std::lcm(conductor_, o.conductor_);
  *this = embed(n);
  const Cyclotomic e = o.embed(n);
  for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += e.coeffs_[k];
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += -o; }

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& o) {
  *this = *this * o;
  return *this;
}

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == 1 || b.conductor_ == 1) {
    const Cyclotomic& scalar = a.conductor_ == 1 ? a : b;
    const Cyclotomic& other = a.conductor_ == 1 ? b : a;
    const Rational& s = scalar.coeffs_[0];
    if (s.is_zero()) return Cyclotomic();
    Cyclotomic r = other;
    if (s != 1)
      for (auto& c : r.coeffs_) c *= s;
    return r;
  }
  if (a.conductor_ != b.conductor_) {
    const std::int64_t n = std::lcm(a.conductor_, b.conductor_);
    return a.embed(n) * b.embed(n);
  }
  const FieldTable& t = field(a.conductor_);
  const std::size_t d = static_cast<std::size_t>(t.degree);
  std::vector<Rational> wide(2 * d - 1);
  bool any = false;
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.coeffs_[j].is_zero()) continue;
      wide[i + j] += a.coeffs_[i] * b.coeffs_[j];
      any = true;
    }
  }
  if (!any) return Cyclotomic();
  std::vector<Rational> out(wide.begin(), wide.begin() + static_cast<std::ptrdiff_t>(d));
  for (std::size_t e = d; e < wide.size(); ++e)
    if (!wide[e].is_zero()) accumulate_power(out, t, static_cast<std::int64_t>(e), wide[e]);
  return Cyclotomic(a.conductor_, std::move(out));
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.conductor_ == b.conductor_) return a.coeffs_ == b.coeffs_;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const std::int64_t n = std::lcm(a.conductor_, b.conductor_);
  return a.embed(n).coeffs_ == b.embed(n).coeffs_;
}

std::optional<std::int64_t> order_of_root(const Cyclotomic& x) {
  if (x.is_zero()) return std::nullopt;
  const std::int64_t bound = std::lcm<std::int64_t>(2, x.conductor());
  for (std::int64_t d : divisors(bound))
    if (x.pow(d).is_one()) return d;
  return std::nullopt;
}

Cyclotomic two_cos_pi_over(std::int64_t n) {
  return Cyclotomic::root_of_unity(2 * n, 1) + Cyclotomic::root_of_unity(2 * n, -1);
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic& x) {
  bool first = true;
  for (std::size_t k = 0; k < x.coeffs().size(); ++k) {
    const Rational& c = x.coeffs()[k];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << c;
    if (k > 0) os << "*z" << x.conductor() << "^" << k;
  }
  if (first) os << "0";
  return os;
}

}  // namespace greenring
