#include "greenring/stable.hpp"

#include "greenring/error.hpp"

#include <cmath>
#include <complex>

namespace greenring {
namespace {

std::string label_text(const GreenRing& ring, Index u) {
  const BasisLabel b = stable_label(ring, u);
  return "(" + std::to_string(b.i + 1) + "," + std::to_string(b.j) + ")";
}

void record(AxiomResult& r, bool ok, const std::string& witness) {
  ++r.checked;
  if (!ok && r.pass) {
    r.pass = false;
    r.witness = witness;
  }
}

CycVector zero_vector(Index n) { return CycVector::Constant(n, Cyclotomic(0)); }

Coproduct zero_coproduct(Index n) { return Coproduct::Constant(n, n, Cyclotomic(0)); }

// Matrix of S on the M-basis: column u holds S(M_u).
CycMatrix antipode_matrix(const GreenRing& ring) {
  const Index r = stable_rank(ring);
  const auto eps = epsilon_values(ring);
  CycMatrix a = CycMatrix::Constant(r, r, Cyclotomic(0));
  for (Index u = 0; u < r; ++u) {
    const Index us = stable_involution(ring, u);
    a(us, u) = eps[static_cast<std::size_t>(us)] / eps[static_cast<std::size_t>(u)];
  }
  return a;
}

void require_same_ring(const StableElement& x, const StableElement& y) {
  if (x.ring() != y.ring()) throw Error(ErrorKind::Domain, "stable elements over different rings");
}

}  // namespace

Index stable_rank(const GreenRing& ring) { return static_cast<Index>(ring.m() * (ring.n() - 1)); }

Index stable_index(const GreenRing& ring, std::int64_t i, std::int64_t j) {
  if (i < 0 || i >= ring.m() || j < 1 || j >= ring.n()) throw Error(ErrorKind::Domain, "stable basis label out of range");
  return static_cast<Index>(i * (ring.n() - 1) + (j - 1));
}

BasisLabel stable_label(const GreenRing& ring, Index u) {
  const std::int64_t w = ring.n() - 1;
  return {u / w, u % w + 1};
}

StableElement::StableElement(RingPtr ring, CycVector coeffs) : ring_(std::move(ring)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != stable_rank(*ring_)) throw Error(ErrorKind::Domain, "stable coefficient vector has the wrong length");
}

StableElement StableElement::zero(const RingPtr& ring) { return StableElement(ring, zero_vector(stable_rank(*ring))); }

StableElement StableElement::basis(const RingPtr& ring, Index u) {
  CycVector c = zero_vector(stable_rank(*ring));
  c(u) = Cyclotomic(1);
  return StableElement(ring, std::move(c));
}

StableElement& StableElement::operator+=(const StableElement& o) {
  require_same_ring(*this, o);
  for (Index u = 0; u < coeffs_.size(); ++u) coeffs_(u) += o.coeffs_(u);
  return *this;
}

StableElement& StableElement::operator-=(const StableElement& o) {
  require_same_ring(*this, o);
  for (Index u = 0; u < coeffs_.size(); ++u) coeffs_(u) -= o.coeffs_(u);
  return *this;
}

StableElement operator*(const Cyclotomic& c, StableElement a) {
  for (Index u = 0; u < a.coeffs_.size(); ++u)
    if (!a.coeffs_(u).is_zero()) a.coeffs_(u) = c * a.coeffs_(u);
  return a;
}

StableElement operator*(const StableElement& a, const StableElement& b) {
  require_same_ring(a, b);
  const GreenRing& ring = *a.ring();
  const Index r = stable_rank(ring);
  CycVector out = zero_vector(r);
  for (Index u = 0; u < r; ++u) {
    if (a.coeffs()(u).is_zero()) continue;
    const BasisLabel bu = stable_label(ring, u);
    for (Index v = 0; v < r; ++v) {
      if (b.coeffs()(v).is_zero()) continue;
      const BasisLabel bv = stable_label(ring, v);
      const IntVector& p = ring.product(ring.index(bu.i, bu.j), ring.index(bv.i, bv.j));
      const Cyclotomic c = a.coeffs()(u) * b.coeffs()(v);
      for (Index w = 0; w < ring.rank(); ++w) {
        if (p(w).is_zero()) continue;
        const BasisLabel bw = ring.label(w);
        if (bw.j == ring.n()) continue;
        out(stable_index(ring, bw.i, bw.j)) += Cyclotomic(Rational(p(w))) * c;
      }
    }
  }
  return StableElement(a.ring(), std::move(out));
}

bool operator==(const StableElement& a, const StableElement& b) {
  require_same_ring(a, b);
  return a.coeffs_ == b.coeffs_;
}

StableElement stable_reduce(const GreenElement& x) {
  const GreenRing& ring = *x.ring();
  CycVector out = zero_vector(stable_rank(ring));
  for (Index w = 0; w < ring.rank(); ++w) {
    const BasisLabel b = ring.label(w);
    if (b.j == ring.n() || x.coeffs()(w).is_zero()) continue;
    out(stable_index(ring, b.i, b.j)) = Cyclotomic(Rational(x.coeffs()(w)));
  }
  return StableElement(x.ring(), std::move(out));
}

Cyclotomic epsilon_poly(std::int64_t n, const DicksonPoly& p) {
  const Cyclotomic z = two_cos_pi_over(n);
  Cyclotomic v(0);
  for (const auto& [key, c] : p.terms) v += Cyclotomic(Rational(c)) * z.pow(key.second);
  return v;
}

std::vector<Cyclotomic> epsilon_values(const GreenRing& ring) {
  const std::int64_t n = ring.n();
  const std::int64_t N = ring.datum().conductor();
  std::vector<Cyclotomic> fj;
  for (std::int64_t j = 1; j < n; ++j) fj.push_back(epsilon_poly(n, dickson(j)).embed(N));
  std::vector<Cyclotomic> out;
  for (Index u = 0; u < stable_rank(ring); ++u) {
    const BasisLabel b = stable_label(ring, u);
    out.push_back(Cyclotomic(ring.datum().dim(b.i)) * fj[static_cast<std::size_t>(b.j - 1)]);
  }
  return out;
}

Cyclotomic epsilon_st(const StableElement& x) {
  const auto eps = epsilon_values(*x.ring());
  Cyclotomic v(0);
  for (Index u = 0; u < x.coeffs().size(); ++u)
    if (!x.coeffs()(u).is_zero()) v += x.coeffs()(u) * eps[static_cast<std::size_t>(u)];
  return v;
}

StableElement b_basis(const RingPtr& ring, Index u) {
  return epsilon_values(*ring)[static_cast<std::size_t>(u)] * StableElement::basis(ring, u);
}

Index stable_involution(const GreenRing& ring, Index u) {
  const BasisLabel b = stable_label(ring, u);
  const GroupDatum& d = ring.datum();
  return stable_index(ring, d.tau(d.star(b.i), 1 - b.j), b.j);
}

Cyclotomic structure_constant(const GreenRing& ring, Index u, Index v, Index w) {
  const auto eps = epsilon_values(ring);
  const BasisLabel bu = stable_label(ring, u), bv = stable_label(ring, v), bw = stable_label(ring, w);
  const BigInt& c = ring.product(ring.index(bu.i, bu.j), ring.index(bv.i, bv.j))(ring.index(bw.i, bw.j));
  if (c.is_zero()) return Cyclotomic(0);
  const auto e = [&](Index k) { return eps[static_cast<std::size_t>(k)]; };
  return e(u) * e(v) * Cyclotomic(Rational(c)) / e(w);
}

GroupLikeReport grouplike_check(const RingPtr& ring) {
  GroupLikeReport rep;
  const GreenRing& R = *ring;
  const Index r = stable_rank(R);
  const auto eps = epsilon_values(R);
  std::vector<Cyclotomic> eps_b;
  for (Index u = 0; u < r; ++u) eps_b.push_back(epsilon_st(b_basis(ring, u)));

  for (Index u = 0; u < r; ++u) {
    const Index us = stable_involution(R, u);
    record(rep.g1, eps_b[u] == eps_b[us] && !eps_b[u].is_zero(), "epsilon(b) differs from epsilon(b*) or vanishes at " + label_text(R, u));
  }
  if (!b_basis(ring, 0).coeffs()(0).is_one()) record(rep.g1, false, "b_(1,1) is not the unit");

  // Structure constants p[u][v][w].
  std::vector<std::vector<CycVector>> p(r, std::vector<CycVector>(r));
  for (Index u = 0; u < r; ++u)
    for (Index v = 0; v < r; ++v) {
      p[u][v] = zero_vector(r);
      for (Index w = 0; w < r; ++w) p[u][v](w) = structure_constant(R, u, v, w);
    }
  // Expanding b_u b_v directly must reproduce the constants.
  for (Index u = 0; u < r; ++u)
    for (Index v = 0; v < r; ++v) {
      StableElement lhs = b_basis(ring, u) * b_basis(ring, v);
      StableElement rhs = StableElement::zero(ring);
      for (Index w = 0; w < r; ++w)
        if (!p[u][v](w).is_zero()) rhs += p[u][v](w) * b_basis(ring, w);
      record(rep.g2, lhs == rhs, "structure constants do not reproduce b" + label_text(R, u) + " b" + label_text(R, v));
    }
  for (Index u = 0; u < r; ++u)
    for (Index v = 0; v < r; ++v) {
      const Index us = stable_involution(R, u), vs = stable_involution(R, v);
      for (Index w = 0; w < r; ++w) {
        const Index ws = stable_involution(R, w);
        record(rep.g2, p[u][v](w) == p[vs][us](ws),
               "p_{uv}^w != p_{v*u*}^{w*} at u=" + label_text(R, u) + " v=" + label_text(R, v) + " w=" + label_text(R, w));
      }
      const Cyclotomic expected = us == v ? eps_b[u] : Cyclotomic(0);
      record(rep.g3, p[u][v](0) == expected, "p_{uv}^(1,1) wrong at u=" + label_text(R, u) + " v=" + label_text(R, v));
    }
  return rep;
}

Cyclotomic frobenius_phi(const StableElement& x) {
  const auto eps = epsilon_values(*x.ring());
  // Coordinate of b_(1,1) is x_(1,1) / epsilon(M[1,1]).
  return x.coeffs()(0) / eps[0];
}

Coproduct coproduct(const StableElement& x) {
  const GreenRing& R = *x.ring();
  const Index r = stable_rank(R);
  const auto eps = epsilon_values(R);
  Coproduct out = zero_coproduct(r);
  for (Index u = 0; u < r; ++u) {
    if (x.coeffs()(u).is_zero()) continue;
    // x_u M_u = (x_u / eps_u) b_u and Delta(b_u) = b_u (x) b_u / epsilon(b_u).
    const Cyclotomic e = eps[static_cast<std::size_t>(u)];
    const Cyclotomic eps_b = e * e;
    out(u, u) += x.coeffs()(u) / e / eps_b * e * e;
  }
  return out;
}

StableElement antipode(const StableElement& x) {
  const CycMatrix a = antipode_matrix(*x.ring());
  return StableElement(x.ring(), multiply<Cyclotomic>(a, x.coeffs()));
}

BiFrobeniusData bifrobenius_data(const RingPtr& ring) {
  const GreenRing& R = *ring;
  const Index r = stable_rank(R);
  const auto eps = epsilon_values(R);
  BiFrobeniusData out{{}, {}, StableElement::zero(ring), {}, {}, {}, {}, {}, {}};
  std::vector<StableElement> b;
  std::vector<Cyclotomic> eps_b;
  for (Index u = 0; u < r; ++u) {
    b.push_back(b_basis(ring, u));
    eps_b.push_back(epsilon_st(b.back()));
    out.phi.push_back(u == 0 ? Cyclotomic(1) : Cyclotomic(0));
    out.delta.push_back(coproduct(b.back()));
    out.t += b.back();
    out.antipode.push_back(stable_involution(R, u));
  }
  const CycMatrix s = antipode_matrix(R);

  for (Index v = 0; v < r; ++v) {
    StableElement rebuilt = StableElement::zero(ring);
    for (Index u = 0; u < r; ++u) {
      const Cyclotomic f = frobenius_phi(b[v] * b[u]);
      if (!f.is_zero()) rebuilt += (f / eps_b[u]) * b[out.antipode[u]];
    }
    record(out.dual_pair, rebuilt == b[v], "dual pair fails at " + label_text(R, v));
  }

  for (Index u = 0; u < r; ++u) {
    const Coproduct& d = out.delta[u];
    CycVector left = zero_vector(r), right = zero_vector(r);
    for (Index v = 0; v < r; ++v)
      for (Index w = 0; w < r; ++w) {
        if (d(v, w).is_zero()) continue;
        left(w) += eps[static_cast<std::size_t>(v)] * d(v, w);
        right(v) += eps[static_cast<std::size_t>(w)] * d(v, w);
      }
    record(out.counit, left == b[u].coeffs() && right == b[u].coeffs(), "counit axiom fails at " + label_text(R, u));

    const Coproduct ds = coproduct(antipode(b[u]));
    const Coproduct sd = multiply<Cyclotomic>(multiply<Cyclotomic>(s, d), s.transpose()).transpose();
    record(out.anti_coalgebra, ds == sd, "S is not an anti-coalgebra map at " + label_text(R, u));
    record(out.involutive, antipode(antipode(b[u])) == b[u], "S^2 != id at " + label_text(R, u));
    for (Index v = 0; v < r; ++v)
      record(out.anti_algebra, antipode(b[u] * b[v]) == antipode(b[v]) * antipode(b[u]),
             "S is not an anti-algebra map at " + label_text(R, u) + ", " + label_text(R, v));
  }
  const StableElement one = StableElement::basis(ring, 0);
  record(out.anti_algebra, antipode(one) == one, "S(1) != 1");
  return out;
}

StableElement monomial(const RingPtr& ring, std::int64_t i, std::int64_t j) {
  const GroupDatum& d = ring->datum();
  if (j < 0 || j > ring->n() - 2) throw Error(ErrorKind::Domain, "monomial degree must lie in 0..n-2");
  const auto c = inverse_dickson(j);
  StableElement out = StableElement::zero(ring);
  for (std::size_t k = 0; k < c.size(); ++k) {
    const auto kk = static_cast<std::int64_t>(k);
    out += Cyclotomic(c[k]) * StableElement::basis(ring, stable_index(*ring, d.tau(i, kk), j + 1 - 2 * kk));
  }
  return out;
}

MonomialReport bifrobenius_on_monomials(const RingPtr& ring) {
  const GreenRing& R = *ring;
  const GroupDatum& d = R.datum();
  const std::int64_t n = R.n();
  const Index r = stable_rank(R);
  const BiFrobeniusData bf = bifrobenius_data(ring);
  MonomialReport rep;
  const StableElement z = stable_reduce(GreenElement::basis(ring, 0, 2));
  std::vector<Cyclotomic> fvals;  // F_s(1, 2cos(pi/n)) for s = 1..n-1
  for (std::int64_t s = 1; s < n; ++s) fvals.push_back(epsilon_poly(n, dickson(s)).embed(d.conductor()));

  for (std::int64_t i = 0; i < d.m(); ++i) {
    StableElement power = stable_reduce(GreenElement::simple(ring, i));
    for (std::int64_t j = 0; j <= n - 2; ++j) {
      if (j > 0) power = power * z;
      const std::string where = "[V_" + std::to_string(i + 1) + "]z^" + std::to_string(j);
      const StableElement mono = monomial(ring, i, j);
      record(rep.expansion, mono == power, "inverse Dickson expansion differs from the product at " + where);

      MonomialEntry e{i, j, Cyclotomic(0), zero_coproduct(r), StableElement::zero(ring)};
      if (j % 2 == 0 && i == d.tau(0, -j / 2))
        e.phi = Cyclotomic(Rational(binomial(j, j / 2)) * Rational(2, j + 2));
      const auto c = inverse_dickson(j);
      for (std::size_t k = 0; k < c.size(); ++k) {
        const auto kk = static_cast<std::int64_t>(k);
        const std::int64_t len = j + 1 - 2 * kk;
        const Index u = stable_index(R, d.tau(i, kk), len);
        e.delta(u, u) += Cyclotomic(c[k]) / (Cyclotomic(d.dim(i)) * fvals[static_cast<std::size_t>(len - 1)]);
        e.antipode += Cyclotomic(c[k]) * StableElement::basis(ring, stable_index(R, d.tau(d.star(i), kk - j), len));
      }
      record(rep.phi, e.phi == frobenius_phi(mono), "phi formula disagrees at " + where);
      record(rep.delta, e.delta == coproduct(mono), "Delta formula disagrees at " + where);
      record(rep.antipode, e.antipode == antipode(mono), "S formula disagrees at " + where);
      rep.entries.push_back(std::move(e));
    }
  }
  StableElement t = StableElement::zero(ring);
  const auto eps = epsilon_values(R);
  for (Index u = 0; u < r; ++u) t += eps[static_cast<std::size_t>(u)] * StableElement::basis(ring, u);
  record(rep.t, t == bf.t, "t formula disagrees");
  return rep;
}

bool epsilon_positive_numeric(const GreenRing& ring) {
  for (const Cyclotomic& e : epsilon_values(ring)) {
    const auto z = e.to_complex();
    if (std::abs(z.imag()) > 1e-9 || z.real() <= 1e-9) return false;
  }
  return true;
}

}  // namespace greenring
