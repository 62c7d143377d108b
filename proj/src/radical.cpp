#include "greenring/radical.hpp"

#include "greenring/error.hpp"

namespace greenring {

OmegaCounts omega_counts(const GroupDatum& d) {
  const CharacterTable& t = d.table();
  const std::int64_t l = d.l(), n = d.n();
  const Cyclotomic omega = Cyclotomic::root_of_unity(l, 1).embed(d.conductor());
  OmegaCounts out;
  for (std::int64_t c = 0; c < t.num_classes(); ++c) {
    const Cyclotomic v = t.values[d.chi()][c].inverse();
    std::int64_t found = -1;
    Cyclotomic p(1);
    for (std::int64_t k = 0; k < l; ++k) {
      if (p == v) {
        found = k;
        break;
      }
      p = p * omega;
    }
    if (found < 0) throw Error(ErrorKind::InternalConsistency, "chi value is not a power of omega");
    int part = 1;
    if (found != 0) part = found % (l / n) == 0 ? 3 : 2;
    out.t.push_back(found);
    out.values.push_back(v);
    out.part.push_back(part);
    (part == 1 ? out.d1 : part == 2 ? out.d2 : out.d3) += 1;
  }
  return out;
}

GreenElement theta(const RingPtr& ring) {
  const GroupDatum& d = ring->datum();
  const GreenElement one = GreenElement::one(ring);
  const GreenElement a = GreenElement::a(ring);
  const GreenElement an = a.pow(d.n());
  GreenElement sum = GreenElement::zero(ring);
  GreenElement term = one;
  for (std::int64_t k = 0; k < d.l() / d.n(); ++k) {
    sum += term;
    term = term * an;
  }
  return (one - a) * sum;
}

GreenElement radical_generator(const RingPtr& ring) {
  return GreenElement::basis(ring, 0, ring->n()) * theta(ring);
}

std::int64_t ideal_rank(const GreenElement& gen) {
  const GreenRing& ring = *gen.ring();
  IntMatrix rows(ring.rank(), ring.rank());
  for (Index u = 0; u < ring.rank(); ++u) rows.row(u) = (gen * GreenElement::basis(gen.ring(), u)).coeffs().transpose();
  return static_cast<std::int64_t>(integer_rank(rows));
}

Cyclotomic evaluate_at_class(const GroupDatum& d, const IntVector& x, std::int64_t c) {
  Cyclotomic v(0);
  for (std::int64_t i = 0; i < d.m(); ++i)
    if (!x(i).is_zero()) v += Cyclotomic(Rational(x(i))) * d.table().values[i][c];
  return v;
}

CycPoly poly_normalize(CycPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

std::int64_t poly_degree(const CycPoly& p) { return static_cast<std::int64_t>(poly_normalize(p).size()) - 1; }

CycPoly poly_multiply(const CycPoly& a, const CycPoly& b) {
  if (a.empty() || b.empty()) return {};
  CycPoly out(a.size() + b.size() - 1, Cyclotomic(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return poly_normalize(std::move(out));
}

CycPoly poly_derivative(const CycPoly& p) {
  CycPoly out;
  for (std::size_t k = 1; k < p.size(); ++k) out.push_back(Cyclotomic(static_cast<long long>(k)) * p[k]);
  return poly_normalize(std::move(out));
}

CycPoly poly_remainder(CycPoly a, const CycPoly& b_in) {
  const CycPoly b = poly_normalize(b_in);
  if (b.empty()) throw Error(ErrorKind::DivisionByZero, "polynomial division by zero");
  a = poly_normalize(std::move(a));
  const Cyclotomic lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    const Cyclotomic f = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= f * b[k];
    a.pop_back();
    a = poly_normalize(std::move(a));
  }
  return a;
}

CycPoly poly_gcd(CycPoly a, CycPoly b) {
  a = poly_normalize(std::move(a));
  b = poly_normalize(std::move(b));
  while (!b.empty()) {
    CycPoly r = poly_remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  const Cyclotomic inv = a.back().inverse();
  for (auto& c : a) c = c * inv;
  return a;
}

std::int64_t distinct_root_count(const CycPoly& p) {
  const CycPoly q = poly_normalize(p);
  if (q.empty()) throw Error(ErrorKind::Domain, "the zero polynomial has infinitely many roots");
  return poly_degree(q) - poly_degree(poly_gcd(q, poly_derivative(q)));
}

CycPoly root_polynomial(const GroupDatum& d, const Cyclotomic& w) {
  const DicksonPoly f = dickson(d.n());
  CycPoly fw(static_cast<std::size_t>(f.degree_z() + 1), Cyclotomic(0));
  for (const auto& [key, c] : f.terms) fw[static_cast<std::size_t>(key.second)] += Cyclotomic(Rational(c)) * w.pow(key.first);
  const CycPoly linear = {-(w + Cyclotomic(1)), Cyclotomic(1)};
  return poly_multiply(linear, poly_normalize(fw));
}

std::vector<RootCount> root_counts(const GroupDatum& d) {
  const OmegaCounts om = omega_counts(d);
  std::vector<RootCount> out;
  for (std::size_t c = 0; c < om.values.size(); ++c)
    out.push_back({static_cast<std::int64_t>(c), distinct_root_count(root_polynomial(d, om.values[c])), om.part[c] == 3});
  return out;
}

RadicalReport radical_report(const RingPtr& ring) {
  RadicalReport r{omega_counts(ring->datum()), theta(ring), radical_generator(ring), 0, false, {}, 0};
  r.rank = ideal_rank(r.generator);
  r.nilpotency_checked = (r.generator * r.generator).is_zero();
  r.roots = root_counts(ring->datum());
  for (const RootCount& rc : r.roots) r.simple_quotient_count += rc.distinct_roots;
  return r;
}

}  // namespace greenring
