#include "greenring/verify.hpp"

#include "greenring/error.hpp"
#include "greenring/oracle.hpp"
#include "greenring/radical.hpp"
#include "greenring/stable.hpp"

#include <array>
#include <random>

namespace greenring {
namespace {

std::string lbl(const GreenRing& r, Index u) {
  const BasisLabel b = r.label(u);
  return "M[" + std::to_string(b.i + 1) + "," + std::to_string(b.j) + "]";
}

class Checker {
 public:
  explicit Checker(std::string name) { result_.name = std::move(name); }
  void operator()(bool ok, const std::string& witness) {
    ++result_.checked;
    if (!ok && result_.pass) {
      result_.pass = false;
      result_.witness = witness;
    }
  }
  void absorb(const AxiomResult& r, const std::string& prefix) {
    result_.checked += r.checked;
    if (!r.pass && result_.pass) {
      result_.pass = false;
      result_.witness = prefix + ": " + r.witness;
    }
  }
  void skip(const std::string& why) {
    result_.skipped = true;
    result_.witness = why;
  }
  SuiteResult done() { return result_; }

 private:
  SuiteResult result_;
};

GreenElement basis(const RingPtr& r, Index u) { return GreenElement::basis(r, u); }

SuiteResult clebsch_gordan(const RingPtr& ring) {
  Checker check("clebsch-gordan");
  const GreenRing& r = *ring;
  const GroupDatum& d = r.datum();
  const std::int64_t n = r.n();
  const GreenElement one = GreenElement::one(ring);
  const GreenElement z = GreenElement::basis(ring, 0, 2);
  for (Index u = 0; u < r.rank(); ++u) {
    check(one * basis(ring, u) == basis(ring, u), "M[1,1] is not the unit at " + lbl(r, u));
    for (Index v = 0; v < r.rank(); ++v) {
      const GreenElement x = basis(ring, u), y = basis(ring, v);
      const std::string at = lbl(r, u) + " * " + lbl(r, v);
      check(x * y == y * x, "not commutative at " + at);
      check(dimension(x * y) == dimension(x) * dimension(y), "dimension not multiplicative at " + at);
      check(grothendieck_image(x * y) == rkg_multiply(d, grothendieck_image(x), grothendieck_image(y)),
            "Grothendieck image not multiplicative at " + at);
    }
  }
  for (std::int64_t i = 0; i < d.m(); ++i) {
    for (std::int64_t j = 1; j <= n; ++j) {
      GreenElement expected = GreenElement::zero(ring);
      if (j < n) {
        expected += GreenElement::basis(ring, i, j + 1);
        if (j > 1) expected += GreenElement::basis(ring, d.tau(i), j - 1);
      } else {
        expected = GreenElement::basis(ring, i, n) + GreenElement::basis(ring, d.tau(i), n);
      }
      check(z * GreenElement::basis(ring, i, j) == expected, "M[1,2] * M[" + std::to_string(i + 1) + "," + std::to_string(j) + "] is wrong");
    }
    for (std::int64_t k = 0; k < d.m(); ++k) {
      GreenElement expected = GreenElement::zero(ring);
      for (std::int64_t p = 0; p < d.m(); ++p) expected += d.fusion(i, k, p) * GreenElement::simple(ring, p);
      check(GreenElement::simple(ring, i) * GreenElement::simple(ring, k) == expected, "simple fusion differs");
    }
  }
  // Every triple for small rings, a fixed pseudo-random sample otherwise.
  const Index rk = r.rank();
  std::vector<std::array<Index, 3>> triples;
  if (rk * rk * rk <= 8000) {
    for (Index a = 0; a < rk; ++a)
      for (Index b = 0; b < rk; ++b)
        for (Index c = 0; c < rk; ++c) triples.push_back({a, b, c});
  } else {
    std::mt19937_64 gen(20240517);
    std::uniform_int_distribution<Index> pick(0, rk - 1);
    for (int t = 0; t < 500; ++t) triples.push_back({pick(gen), pick(gen), pick(gen)});
  }
  for (const auto& [a, b, c] : triples)
    check((basis(ring, a) * basis(ring, b)) * basis(ring, c) == basis(ring, a) * (basis(ring, b) * basis(ring, c)),
          "not associative at " + lbl(r, a) + ", " + lbl(r, b) + ", " + lbl(r, c));
  return check.done();
}

SuiteResult presentation(const RingPtr& ring) {
  Checker check("presentation");
  const GreenRing& r = *ring;
  const std::int64_t n = r.n();
  for (std::int64_t j = 1; j <= n; ++j) {
    check(phi_eval(ring, dickson(j)) == GreenElement::basis(ring, 0, j), "F_" + std::to_string(j) + "(a, z) does not map to M[1," + std::to_string(j) + "]");
    check(dickson(j) == dickson_closed_form(j), "closed form of F_" + std::to_string(j) + " differs from the recurrence");
  }
  check(phi_eval(ring, presentation_relation(n)).is_zero(), "(1 + a - z) F_n(a, z) does not vanish");
  for (std::int64_t s = 0; s <= 10; ++s) check(verify_inverse_dickson(s), "inverse Dickson identity fails at s = " + std::to_string(s));

  const GreenElement h = regular_class(ring);
  check(dimension(h) == BigInt(r.datum().dim_h()), "[H] has the wrong dimension");
  for (Index u = 0; u < r.rank(); ++u) {
    const GreenElement x = basis(ring, u);
    check(h * x == dimension(x) * h, "[H] M_u != dim(M_u) [H] at " + lbl(r, u));
    check(form_sym(h, x) == dimension(x), "([H], M_u) != dim(M_u) at " + lbl(r, u));
  }
  return check.done();
}

SuiteResult dual_bases(const RingPtr& ring) {
  Checker check("dual-bases");
  const GreenRing& r = *ring;
  const std::int64_t n = r.n();
  std::vector<GreenElement> ds, dd;
  for (Index u = 0; u < r.rank(); ++u) {
    const BasisLabel b = r.label(u);
    ds.push_back(delta_star_element(ring, b.i, b.j));
    dd.push_back(delta_element(ring, b.i, b.j));
    check(dual(dd.back()) == ds.back(), "delta* differs from dual(delta) at " + lbl(r, u));
  }
  for (Index u = 0; u < r.rank(); ++u)
    for (Index v = 0; v < r.rank(); ++v) {
      const BigInt want = u == v ? 1 : 0;
      check(form_sym(basis(ring, u), ds[v]) == want, "(M_u, delta*_v) wrong at " + lbl(r, u) + ", " + lbl(r, v));
      check(form_hom(basis(ring, u), dd[v]) == want, "<M_u, delta_v> wrong at " + lbl(r, u) + ", " + lbl(r, v));
      check(form_sym(basis(ring, u), basis(ring, v)) == form_sym(basis(ring, v), basis(ring, u)),
            "symmetric form not symmetric at " + lbl(r, u) + ", " + lbl(r, v));
      check(dual(basis(ring, u) * basis(ring, v)) == dual(basis(ring, u)) * dual(basis(ring, v)),
            "dual not multiplicative at " + lbl(r, u) + ", " + lbl(r, v));
    }
  for (Index u = 0; u < r.rank(); ++u) {
    check(dual(dual(basis(ring, u))) == basis(ring, u), "dual not an involution at " + lbl(r, u));
    const BasisLabel b = r.label(u);
    if (b.j == n) continue;
    const ARData ar = ar_sequence(ring, b.i, b.j);
    const GreenElement ends = GreenElement::basis(ring, ar.left.i, ar.left.j) + GreenElement::basis(ring, ar.right.i, ar.right.j);
    check(ar.delta == ends - ar.middle && ar.delta == dd[u], "almost split sequence mismatch at " + lbl(r, u));
  }
  return check.done();
}

SuiteResult radical(const RingPtr& ring) {
  Checker check("radical");
  const GroupDatum& d = ring->datum();
  const RadicalReport rep = radical_report(ring);
  check(rep.omega.d1 + rep.omega.d2 + rep.omega.d3 == d.table().num_classes(), "class counts do not add up");
  check(rep.nilpotency_checked, "(M[1,n] theta)^2 != 0");
  check(rep.rank == rep.omega.d3, "rank of the radical differs from d3");
  check(is_zero_matrix<BigInt>(grothendieck_image(rep.generator)), "radical generator survives in G0");
  GreenElement geo = GreenElement::zero(ring);
  for (std::int64_t k = 0; k < d.n(); ++k) geo += GreenElement::a(ring).pow(k);
  check((geo * rep.theta).is_zero(), "(1 + a + ... + a^(n-1)) theta != 0");
  const IntVector th = grothendieck_image(rep.theta);
  for (std::int64_t c = 0; c < d.table().num_classes(); ++c)
    check(evaluate_at_class(d, th, c).is_zero() == (rep.omega.part[c] != 3),
          "theta vanishing pattern wrong at class " + std::to_string(c + 1));
  for (const RootCount& rc : rep.roots)
    check(rc.distinct_roots == (rc.in_omega3 ? d.n() - 1 : d.n()), "root count wrong at class " + std::to_string(rc.class_index + 1));
  check(rep.simple_quotient_count == d.m() * d.n() - rep.omega.d3, "quotient dimension differs from mn - d3");
  return check.done();
}

SuiteResult grouplike(const RingPtr& ring) {
  Checker check("grouplike");
  const GreenRing& r = *ring;
  check(epsilon_poly(r.n(), dickson(r.n())).is_zero(), "epsilon(F_n) != 0");
  const GroupLikeReport rep = grouplike_check(ring);
  check.absorb(rep.g1, "G1");
  check.absorb(rep.g2, "G2");
  check.absorb(rep.g3, "G3");
  for (Index u = 0; u < r.rank(); ++u)
    for (Index v = 0; v < r.rank(); ++v) {
      const StableElement x = stable_reduce(basis(ring, u)), y = stable_reduce(basis(ring, v));
      check(stable_reduce(basis(ring, u) * basis(ring, v)) == x * y, "stable quotient not multiplicative at " + lbl(r, u) + ", " + lbl(r, v));
      check(epsilon_st(x * y) == epsilon_st(x) * epsilon_st(y), "epsilon not multiplicative at " + lbl(r, u) + ", " + lbl(r, v));
    }
  check(stable_reduce(radical_generator(ring)).is_zero(), "radical generator survives in the stable ring");
  return check.done();
}

SuiteResult bifrobenius(const RingPtr& ring) {
  Checker check("bifrobenius");
  const BiFrobeniusData bf = bifrobenius_data(ring);
  check.absorb(bf.dual_pair, "dual pair");
  check.absorb(bf.counit, "counit");
  check.absorb(bf.anti_algebra, "anti-algebra");
  check.absorb(bf.anti_coalgebra, "anti-coalgebra");
  check.absorb(bf.involutive, "involutive");
  const MonomialReport mono = bifrobenius_on_monomials(ring);
  check.absorb(mono.expansion, "monomial expansion");
  check.absorb(mono.phi, "monomial phi");
  check.absorb(mono.delta, "monomial Delta");
  check.absorb(mono.antipode, "monomial S");
  check.absorb(mono.t, "monomial t");
  return check.done();
}

SuiteResult oracle(const RingPtr& ring, std::int64_t max_dim) {
  Checker check("oracle");
  const GreenRing& r = *ring;
  const DatumPtr& d = r.datum_ptr();
  if (d->dim_h() > max_dim) {
    check.skip("dim H = " + std::to_string(d->dim_h()) + " exceeds the oracle cutoff " + std::to_string(max_dim));
    return check.done();
  }
  if (!d->has_representations()) {
    check.skip("no explicit matrices for the simple modules");
    return check.done();
  }
  const std::int64_t n = r.n(), m = r.m();
  std::vector<ModuleRep> mods, duals;
  for (Index u = 0; u < r.rank(); ++u) {
    const BasisLabel b = r.label(u);
    mods.push_back(module_build(d, b.i, b.j));
    duals.push_back(module_dual(mods.back()));
    check(summands_to_vector(module_decompose(mods.back()), n, m) == basis(ring, u).coeffs(), "decomposition round trip fails at " + lbl(r, u));
    check(summands_to_vector(module_decompose(duals.back()), n, m) == basis(ring, r.dual_index(u)).coeffs(), "dual module decomposes wrongly at " + lbl(r, u));
    const StructureProbe p = structure_probe(mods.back());
    check(p.top[static_cast<std::size_t>(b.i)] == 1 && p.socle[static_cast<std::size_t>(d->tau(b.i, b.j - 1))] == 1,
          "socle or top wrong at " + lbl(r, u));
  }
  for (Index u = 0; u < r.rank(); ++u)
    for (Index v = 0; v < r.rank(); ++v) {
      const std::string at = lbl(r, u) + ", " + lbl(r, v);
      const ModuleRep t = module_tensor(mods[u], mods[v]);
      check(summands_to_vector(module_decompose(t), n, m) == (basis(ring, u) * basis(ring, v)).coeffs(), "tensor decomposition differs at " + at);
      check(BigInt(hom_dim(mods[u], mods[v])) == form_hom(basis(ring, u), basis(ring, v)), "dim Hom differs from <,> at " + at);
      check(BigInt(hom_dim(mods[u], duals[v])) == form_sym(basis(ring, u), basis(ring, v)), "dim Hom(A, B*) differs from (,) at " + at);
    }
  for (std::int64_t i = 0; i < m; ++i) {
    const ModuleRep t = module_tensor(module_build(d, d->tau(0), 1), module_build(d, i, 1));
    check(summands_to_vector(module_decompose(t), n, m) == GreenElement::basis(ring, d->tau(i), 1).coeffs(), "tau disagrees with the oracle");
  }
  check(summands_to_vector(module_decompose(regular_module(d)), n, m) == regular_class(ring).coeffs(), "regular module decomposes wrongly");
  check(pbw_antipode_trace(*d) == d->antipode_trace(), "antipode trace differs from the PBW trace");
  return check.done();
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"clebsch-gordan", "presentation", "dual-bases", "radical",
                                                 "grouplike", "bifrobenius", "oracle"};
  return names;
}

SuiteResult run_suite(const std::string& name, const RingPtr& ring, std::int64_t max_dim) {
  if (name == "clebsch-gordan") return clebsch_gordan(ring);
  if (name == "presentation") return presentation(ring);
  if (name == "dual-bases") return dual_bases(ring);
  if (name == "radical") return radical(ring);
  if (name == "grouplike") return grouplike(ring);
  if (name == "bifrobenius") return bifrobenius(ring);
  if (name == "oracle") return oracle(ring, max_dim);
  throw Error(ErrorKind::Parse, "unknown suite \"" + name + "\"");
}

}  // namespace greenring
