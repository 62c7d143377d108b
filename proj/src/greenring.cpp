#include "greenring/greenring.hpp"

#include "greenring/error.hpp"

namespace greenring {
namespace {

struct CGTerm {
  std::int64_t shift;
  std::int64_t length;
};

// M[1,k] M[1,l] = sum of M[tau^shift(1), length].
std::vector<CGTerm> clebsch_gordan(std::int64_t k, std::int64_t l, std::int64_t n) {
  std::vector<CGTerm> out;
  const std::int64_t s = k + l - 1;
  const std::int64_t lo = std::min(k, l);
  if (s <= n) {
    for (std::int64_t t = 0; t < lo; ++t) out.push_back({t, s - 2 * t});
  } else {
    const std::int64_t r = s - n;
    for (std::int64_t t = 0; t <= r; ++t) out.push_back({t, n});
    for (std::int64_t t = r + 1; t < lo; ++t) out.push_back({t, s - 2 * t});
  }
  return out;
}

void require_same_ring(const GreenElement& x, const GreenElement& y) {
  if (x.ring() != y.ring() && &x.ring()->datum() != &y.ring()->datum())
    throw Error(ErrorKind::Domain, "Green ring elements over different data");
}

}  // namespace

std::shared_ptr<const GreenRing> GreenRing::create(DatumPtr datum) {
  std::shared_ptr<GreenRing> ring(new GreenRing(std::move(datum)));
  const GroupDatum& d = *ring->datum_;
  const Index r = ring->rank();
  const std::int64_t m = d.m(), n = d.n();
  ring->table_.assign(static_cast<std::size_t>(r * r), IntVector::Zero(r));
  for (std::int64_t i = 0; i < m; ++i)
    for (std::int64_t j = 0; j < m; ++j) {
      const auto& fus = d.fusion(i, j);
      for (std::int64_t k = 1; k <= n; ++k)
        for (std::int64_t l = 1; l <= n; ++l) {
          IntVector& out = ring->table_[static_cast<std::size_t>(ring->index(i, k) * r + ring->index(j, l))];
          const auto terms = clebsch_gordan(k, l, n);
          for (std::int64_t p = 0; p < m; ++p) {
            if (fus[p].is_zero()) continue;
            for (const CGTerm& t : terms) out(ring->index(d.tau(p, t.shift), t.length)) += fus[p];
          }
        }
    }

  RingPtr handle = ring;
  ring->delta_ = IntMatrix::Zero(r, r);
  ring->delta_star_ = IntMatrix::Zero(r, r);
  for (Index u = 0; u < r; ++u) {
    const BasisLabel b = ring->label(u);
    const GreenElement del = delta_element(handle, b.i, b.j);
    ring->delta_.col(u) = del.coeffs();
    ring->delta_star_.col(u) = dual(del).coeffs();
  }
  ring->delta_inv_ = unimodular_inverse(ring->delta_);
  ring->delta_star_inv_ = unimodular_inverse(ring->delta_star_);
  return ring;
}

Index GreenRing::index(std::int64_t i, std::int64_t j) const {
  if (i < 0 || i >= m() || j < 1 || j > n())
    throw Error(ErrorKind::Domain, "basis label out of range: (" + std::to_string(i + 1) + "," + std::to_string(j) + ")");
  return static_cast<Index>(i * n() + (j - 1));
}

Index GreenRing::dual_index(Index u) const {
  const BasisLabel b = label(u);
  return index(datum_->tau(datum_->star(b.i), 1 - b.j), b.j);
}

GreenElement::GreenElement(RingPtr ring, IntVector coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != ring_->rank()) throw Error(ErrorKind::Domain, "coefficient vector has the wrong length");
}

GreenElement GreenElement::zero(const RingPtr& ring) { return GreenElement(ring, IntVector::Zero(ring->rank())); }

GreenElement GreenElement::basis(const RingPtr& ring, std::int64_t i, std::int64_t j) {
  return basis(ring, ring->index(i, j));
}

GreenElement GreenElement::basis(const RingPtr& ring, Index u) {
  IntVector c = IntVector::Zero(ring->rank());
  c(u) = 1;
  return GreenElement(ring, std::move(c));
}

GreenElement GreenElement::a(const RingPtr& ring) { return basis(ring, ring->datum().tau(0), 1); }

GreenElement& GreenElement::operator+=(const GreenElement& o) {
  require_same_ring(*this, o);
  coeffs_ += o.coeffs_;
  return *this;
}

GreenElement& GreenElement::operator-=(const GreenElement& o) {
  require_same_ring(*this, o);
  coeffs_ -= o.coeffs_;
  return *this;
}

GreenElement operator*(const GreenElement& a, const GreenElement& b) { return multiply(a, b); }

GreenElement operator*(const BigInt& c, GreenElement a) {
  for (Index u = 0; u < a.coeffs_.size(); ++u) a.coeffs_(u) *= c;
  return a;
}

GreenElement GreenElement::operator-() const {
  GreenElement out = *this;
  for (Index u = 0; u < out.coeffs_.size(); ++u) out.coeffs_(u) = -out.coeffs_(u);
  return out;
}

bool operator==(const GreenElement& a, const GreenElement& b) {
  require_same_ring(a, b);
  return a.coeffs_ == b.coeffs_;
}

GreenElement GreenElement::pow(std::int64_t e) const {
  if (e < 0) throw Error(ErrorKind::Domain, "negative power in the Green ring");
  GreenElement out = one(ring_);
  for (std::int64_t k = 0; k < e; ++k) out = multiply(out, *this);
  return out;
}

GreenElement multiply(const GreenElement& x, const GreenElement& y) {
  require_same_ring(x, y);
  const GreenRing& ring = *x.ring();
  IntVector out = IntVector::Zero(ring.rank());
  for (Index u = 0; u < ring.rank(); ++u) {
    if (x.coeffs()(u).is_zero()) continue;
    for (Index v = 0; v < ring.rank(); ++v) {
      if (y.coeffs()(v).is_zero()) continue;
      const BigInt c = x.coeffs()(u) * y.coeffs()(v);
      const IntVector& p = ring.product(u, v);
      for (Index w = 0; w < ring.rank(); ++w)
        if (!p(w).is_zero()) out(w) += c * p(w);
    }
  }
  return GreenElement(x.ring(), std::move(out));
}

GreenElement dual(const GreenElement& x) {
  const GreenRing& ring = *x.ring();
  IntVector out = IntVector::Zero(ring.rank());
  for (Index u = 0; u < ring.rank(); ++u) out(ring.dual_index(u)) += x.coeffs()(u);
  return GreenElement(x.ring(), std::move(out));
}

GreenElement delta_element(const RingPtr& ring, std::int64_t i, std::int64_t j) {
  const std::int64_t n = ring->n();
  const GreenElement mij = GreenElement::basis(ring, i, j);
  const GreenElement a = GreenElement::a(ring);
  if (j < n) return multiply(GreenElement::one(ring) + a - GreenElement::basis(ring, 0, 2), mij);
  return mij - multiply(a, GreenElement::basis(ring, i, n - 1));
}

GreenElement delta_star_element(const RingPtr& ring, std::int64_t i, std::int64_t j) {
  return dual(delta_element(ring, i, j));
}

BigInt form_sym(const GreenElement& x, const GreenElement& y) {
  require_same_ring(x, y);
  return x.coeffs().dot(x.ring()->delta_star_inverse() * y.coeffs());
}

BigInt form_hom(const GreenElement& x, const GreenElement& y) {
  require_same_ring(x, y);
  return x.coeffs().dot(x.ring()->delta_inverse() * y.coeffs());
}

BigInt dimension(const GreenElement& x) {
  const GreenRing& ring = *x.ring();
  BigInt d = 0;
  for (Index u = 0; u < ring.rank(); ++u) {
    const BasisLabel b = ring.label(u);
    d += x.coeffs()(u) * (b.j * ring.datum().dim(b.i));
  }
  return d;
}

RkgPoly rkg_poly(const GroupDatum& datum, const DicksonPoly& p) {
  RkgPoly out;
  out.coeffs.assign(static_cast<std::size_t>(std::max<std::int64_t>(p.degree_z() + 1, 0)), IntVector::Zero(datum.m()));
  for (const auto& [key, c] : p.terms) out.coeffs[static_cast<std::size_t>(key.second)](datum.tau(0, key.first)) += c;
  return out;
}

GreenElement phi_eval(const RingPtr& ring, const RkgPoly& p) {
  const GreenElement z = GreenElement::basis(ring, 0, 2);
  GreenElement out = GreenElement::zero(ring);
  GreenElement zk = GreenElement::one(ring);
  for (std::size_t k = 0; k < p.coeffs.size(); ++k) {
    if (k > 0) zk = multiply(zk, z);
    GreenElement c = GreenElement::zero(ring);
    for (std::int64_t i = 0; i < ring->m(); ++i) c += p.coeffs[k](i) * GreenElement::simple(ring, i);
    out += multiply(c, zk);
  }
  return out;
}

GreenElement phi_eval(const RingPtr& ring, const DicksonPoly& p) { return phi_eval(ring, rkg_poly(ring->datum(), p)); }

DicksonPoly presentation_relation(std::int64_t n) {
  const DicksonPoly factor = DicksonPoly::constant(1) + DicksonPoly::monomial(1, 0) - DicksonPoly::monomial(0, 1);
  return factor * dickson(n);
}

IntVector rkg_multiply(const GroupDatum& datum, const IntVector& x, const IntVector& y) {
  const std::int64_t m = datum.m();
  IntVector out = IntVector::Zero(m);
  for (std::int64_t i = 0; i < m; ++i) {
    if (x(i).is_zero()) continue;
    for (std::int64_t j = 0; j < m; ++j) {
      if (y(j).is_zero()) continue;
      const auto& f = datum.fusion(i, j);
      for (std::int64_t k = 0; k < m; ++k)
        if (!f[k].is_zero()) out(k) += x(i) * y(j) * f[k];
    }
  }
  return out;
}

IntVector grothendieck_image(const GreenElement& x) {
  const GreenRing& ring = *x.ring();
  const GroupDatum& d = ring.datum();
  IntVector out = IntVector::Zero(d.m());
  for (Index u = 0; u < ring.rank(); ++u) {
    if (x.coeffs()(u).is_zero()) continue;
    const BasisLabel b = ring.label(u);
    for (std::int64_t t = 0; t < b.j; ++t) out(d.tau(b.i, t)) += x.coeffs()(u);
  }
  return out;
}

ARData ar_sequence(const RingPtr& ring, std::int64_t i, std::int64_t j) {
  const std::int64_t n = ring->n();
  ring->index(i, j);
  if (j == n) throw Error(ErrorKind::ProjectiveModule, "no almost split sequence ends at the projective module M(i,n)");
  const std::int64_t ti = ring->datum().tau(i);
  GreenElement middle = GreenElement::basis(ring, i, j + 1);
  if (j > 1) middle += GreenElement::basis(ring, ti, j - 1);
  GreenElement delta = GreenElement::basis(ring, ti, j) - middle + GreenElement::basis(ring, i, j);
  return ARData{{ti, j}, std::move(middle), {i, j}, std::move(delta)};
}

GreenElement regular_class(const RingPtr& ring) {
  GreenElement out = GreenElement::zero(ring);
  for (std::int64_t i = 0; i < ring->m(); ++i) out += BigInt(ring->datum().dim(i)) * GreenElement::basis(ring, i, ring->n());
  return out;
}

FrobeniusData frobenius_data(const RingPtr& ring) {
  FrobeniusData out{{}, {}, regular_class(ring)};
  const GreenElement one = GreenElement::one(ring);
  for (Index u = 0; u < ring->rank(); ++u) {
    const GreenElement mu = GreenElement::basis(ring, u);
    out.phi.push_back(form_sym(mu, one));
    out.casimir.emplace_back(GreenElement(ring, ring->delta_star_matrix().col(u)), mu);
  }
  return out;
}

}  // namespace greenring
