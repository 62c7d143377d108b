#include "fixtures.hpp"
#include "greenring/dickson.hpp"
#include "greenring/greenring.hpp"
#include "greenring/oracle.hpp"
#include "greenring/radical.hpp"
#include "greenring/stable.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <string>

using namespace greenring;

namespace {

struct Outcome {
  bool pass = true;
  std::int64_t checks = 0;
  std::string witness;

  void operator()(bool ok, const std::string& where) {
    ++checks;
    if (!ok && pass) {
      pass = false;
      witness = where;
    }
  }
};

std::string at(const std::string& name, const GreenRing& r, Index u) {
  const BasisLabel b = r.label(u);
  return name + " M[" + std::to_string(b.i + 1) + "," + std::to_string(b.j) + "]";
}

std::string at(const std::string& name, const GreenRing& r, Index u, Index v) {
  const BasisLabel b = r.label(v);
  return at(name, r, u) + " x M[" + std::to_string(b.i + 1) + "," + std::to_string(b.j) + "]";
}

std::vector<RingPtr> rings() {
  std::vector<RingPtr> out;
  for (const auto& nd : fixtures::standard_data()) out.push_back(GreenRing::create(nd.datum));
  return out;
}

std::vector<std::string> names() {
  std::vector<std::string> out;
  for (const auto& nd : fixtures::standard_data()) out.push_back(nd.name);
  return out;
}

Outcome clebsch_gordan_vs_oracle() {
  Outcome o;
  const auto rs = rings();
  const auto ns = names();
  for (std::size_t k = 0; k < rs.size(); ++k) {
    const RingPtr& r = rs[k];
    std::vector<ModuleRep> mods;
    for (Index u = 0; u < r->rank(); ++u) mods.push_back(module_build(r->datum_ptr(), r->label(u).i, r->label(u).j));
    for (Index u = 0; u < r->rank(); ++u)
      for (Index v = 0; v < r->rank(); ++v) {
        const IntVector oracle = summands_to_vector(module_decompose(module_tensor(mods[u], mods[v])), r->n(), r->m());
        const GreenElement rule = multiply(GreenElement::basis(r, u), GreenElement::basis(r, v));
        o(oracle == rule.coeffs(), at(ns[k], *r, u, v));
      }
  }
  return o;
}

Outcome presentation() {
  Outcome o;
  const auto rs = rings();
  const auto ns = names();
  for (std::size_t k = 0; k < rs.size(); ++k) {
    const RingPtr& r = rs[k];
    for (std::int64_t j = 1; j <= r->n(); ++j)
      o(phi_eval(r, dickson(j)) == GreenElement::basis(r, 0, j), ns[k] + " F_" + std::to_string(j));
    o(phi_eval(r, presentation_relation(r->n())).is_zero(), ns[k] + " (1 + a - z) F_n");
  }
  return o;
}

Outcome dual_bases() {
  Outcome o;
  const auto rs = rings();
  const auto ns = names();
  for (std::size_t k = 0; k < rs.size(); ++k) {
    const RingPtr& r = rs[k];
    const Index rk = r->rank();
    // Oracle side: dim Hom(M_u, M_w*) from explicit modules.
    std::vector<ModuleRep> mods, duals;
    for (Index u = 0; u < rk; ++u) {
      mods.push_back(module_build(r->datum_ptr(), r->label(u).i, r->label(u).j));
      duals.push_back(module_dual(mods.back()));
    }
    std::vector<std::vector<Index>> hom(rk, std::vector<Index>(rk));
    for (Index u = 0; u < rk; ++u)
      for (Index w = 0; w < rk; ++w) hom[u][w] = hom_dim(mods[u], duals[w]);
    for (Index v = 0; v < rk; ++v) {
      const BasisLabel b = r->label(v);
      const GreenElement ds = delta_star_element(r, b.i, b.j);
      o(ds == dual(delta_element(r, b.i, b.j)), at(ns[k], *r, v) + " closed form of delta*");
      for (Index u = 0; u < rk; ++u) {
        const BigInt want = u == v ? 1 : 0;
        o(form_sym(GreenElement::basis(r, u), ds) == want, at(ns[k], *r, u, v) + " via the form");
        BigInt via_oracle = 0;
        for (Index w = 0; w < rk; ++w) via_oracle += ds.coeffs()(w) * BigInt(hom[u][w]);
        o(via_oracle == want, at(ns[k], *r, u, v) + " via oracle Hom dimensions");
      }
    }
  }
  return o;
}

// Roots of F_n(w, x): with w = u^2 they are u (t + 1/t), t = zeta_2n^k, 1 <= k <= n-1.
std::int64_t explicit_root_count(const GroupDatum& d, std::int64_t c) {
  const std::int64_t n = d.n(), l = d.l();
  const Cyclotomic v = d.table().values[d.chi()][c].inverse();
  std::int64_t t = 0;
  const Cyclotomic omega = Cyclotomic::root_of_unity(l, 1);
  while (!(omega.pow(t) == v)) ++t;
  const Cyclotomic w = omega.pow(t);
  const Cyclotomic u = Cyclotomic::root_of_unity(2 * l, t);
  std::vector<Cyclotomic> roots;
  const DicksonPoly f = dickson(n);
  const auto value = [&](const Cyclotomic& x) {
    Cyclotomic s(0);
    for (const auto& [key, coef] : f.terms) s += Cyclotomic(Rational(coef)) * w.pow(key.first) * x.pow(key.second);
    return s;
  };
  for (std::int64_t k = 1; k < n; ++k) {
    const Cyclotomic x = u * (Cyclotomic::root_of_unity(2 * n, k) + Cyclotomic::root_of_unity(2 * n, -k));
    if (!value(x).is_zero()) return -1;
    if (std::find(roots.begin(), roots.end(), x) == roots.end()) roots.push_back(x);
  }
  if (static_cast<std::int64_t>(roots.size()) != f.degree_z()) return -1;
  const Cyclotomic extra = w + Cyclotomic(1);
  if (std::find(roots.begin(), roots.end(), extra) == roots.end()) roots.push_back(extra);
  return static_cast<std::int64_t>(roots.size());
}

Outcome radical() {
  Outcome o;
  const auto rs = rings();
  const auto ns = names();
  for (std::size_t k = 0; k < rs.size(); ++k) {
    const RingPtr& r = rs[k];
    const GroupDatum& d = r->datum();
    const GreenElement gen = radical_generator(r);
    o((gen * gen).is_zero(), ns[k] + " (M[1,n] theta)^2");
    std::int64_t d3 = 0;
    for (std::int64_t c = 0; c < d.table().num_classes(); ++c) {
      const Cyclotomic v = d.table().values[d.chi()][c].inverse();
      if (v.pow(d.n()).is_one() && !v.is_one()) ++d3;
    }
    const OmegaCounts om = omega_counts(d);
    o(om.d3 == d3, ns[k] + " d3 from omega_counts");
    o(ideal_rank(gen) == d3, ns[k] + " rank over Z of the radical");
    RatMatrix rows(r->rank(), r->rank());
    for (Index u = 0; u < r->rank(); ++u) {
      const IntVector row = (gen * GreenElement::basis(r, u)).coeffs();
      for (Index v = 0; v < r->rank(); ++v) rows(u, v) = Rational(row(v));
    }
    o(rank<Rational>(rows) == d3, ns[k] + " rank over Q of the radical");
    if (d.group().family() == GroupFamily::Cyclic && d.l() == d.n() && d.group().order() == d.n()) {
      o(d3 == d.n() - 1, ns[k] + " Taft d3 = n - 1");
      o(theta(r) == GreenElement::one(r) - GreenElement::a(r), ns[k] + " Taft theta = 1 - a");
    }
    for (const RootCount& rc : root_counts(d)) {
      const std::string where = ns[k] + " roots at class " + std::to_string(rc.class_index + 1);
      o(rc.distinct_roots == (rc.in_omega3 ? d.n() - 1 : d.n()), where);
      o(explicit_root_count(d, rc.class_index) == rc.distinct_roots, where + " against the explicit roots");
    }
  }
  return o;
}

Outcome dihedral_example() {
  Outcome o;
  for (std::int64_t s : {3, 5}) {
    const DatumPtr dp = fixtures::dihedral(s);
    const GroupDatum& d = *dp;
    const std::string tag = "s=" + std::to_string(s);
    o(d.group().order() == 4 * s, tag + " order from the relations");
    o(d.group().is_central(d.g()) && d.n() == 2 && d.l() == 2, tag + " datum");
    const CharacterTable& t = d.table();
    const auto idx = [&](const std::string& label) {
      return static_cast<std::int64_t>(std::find(t.labels.begin(), t.labels.end(), label) - t.labels.begin());
    };
    const auto F = [&](std::int64_t i, std::int64_t j) { return idx("F(" + std::to_string(i % 2) + "," + std::to_string(j % 2) + ")"); };
    const auto V = [&](std::int64_t l) { return idx("V(" + std::to_string(l) + ")"); };
    const auto product = [&](std::int64_t a, std::int64_t b) { return char_decompose(class_product(t.values[a], t.values[b]), t); };
    const auto expect = [&](std::vector<std::int64_t> rows) {
      std::vector<BigInt> v(t.num_irreducibles(), BigInt(0));
      for (std::int64_t r : rows) v[r] += 1;
      return v;
    };
    for (std::int64_t i = 0; i < 2; ++i)
      for (std::int64_t j = 0; j < 2; ++j) {
        for (std::int64_t k = 0; k < 2; ++k)
          for (std::int64_t m = 0; m < 2; ++m) o(product(F(i, j), F(k, m)) == expect({F(i + k, j + m)}), tag + " rule (1)");
        for (std::int64_t l = 1; l <= s - 1; ++l)
          o(product(F(i, j), V(l)) == expect({i == 0 ? V(l) : V(s - l)}), tag + (i == 0 ? " rule (2)" : " rule (3)"));
      }
    for (std::int64_t l = 1; l <= (s - 1) / 2; ++l) {
      for (std::int64_t h = 1; h < l; ++h) o(product(V(l), V(h)) == expect({V(l - h), V(l + h)}), tag + " rule (4)");
      o(product(V(l), V(l)) == expect({V(2 * l), F(0, 0), F(0, 1)}), tag + " rule (5)");
    }

    // Polynomials in x2, x3 evaluated in G0 = r(kG) as vectors over simples.
    const auto simple = [&](std::int64_t i) {
      IntVector v = IntVector::Constant(d.m(), BigInt(0));
      v(i) = 1;
      return v;
    };
    const auto mul = [&](const IntVector& a, const IntVector& b) { return rkg_multiply(d, a, b); };
    const IntVector x1 = simple(F(1, 0)), x2 = simple(F(0, 1)), x3 = simple(V(1)), one = simple(F(0, 0));
    std::vector<IntVector> f = {IntVector(one + x2), x3};
    for (std::int64_t i = 2; i <= (s + 1) / 2; ++i) f.push_back(IntVector(mul(x3, f[i - 1]) - f[i - 2]));
    const IntVector rel = f[(s + 1) / 2] - mul(x1, f[(s - 1) / 2]);
    o(is_zero_matrix<BigInt>(rel), tag + " f_(s+1)/2 - x1 f_(s-1)/2");
    o(mul(x1, x1) == one && mul(x2, x2) == one && mul(x2, x3) == x3, tag + " x1^2 = x2^2 = 1, x2 x3 = x3");
    std::vector<IntVector> vv = {IntVector(one + x2), x3};
    for (std::int64_t i = 2; i <= s - 1; ++i) {
      vv.push_back(IntVector(mul(vv[i - 1], x3) - vv[i - 2]));
      o(vv[i] == simple(V(i)), tag + " [V(i)] = [V(i-1)][V(1)] - [V(i-2)]");
    }
    const RingPtr r = GreenRing::create(dp);
    const GreenElement x4 = GreenElement::basis(r, 0, 2), a = GreenElement::simple(r, F(1, 0));
    o(a == GreenElement::a(r), tag + " a = [F(1,0)]");
    o((x4 * x4 - a * x4 - x4).is_zero(), tag + " x4^2 - x1 x4 - x4");
  }
  return o;
}

Outcome stable_ring() {
  Outcome o;
  const auto rs = rings();
  const auto ns = names();
  for (std::size_t k = 0; k < rs.size(); ++k) {
    const RingPtr& r = rs[k];
    const std::int64_t n = r->n();
    const std::string& nm = ns[k];
    o(epsilon_poly(n, dickson(n)).is_zero(), nm + " epsilon(F_n) = 0");
    // Independent value: F_j(1, t + 1/t) = (t^j - t^-j) / (t - 1/t), t = zeta_2n.
    const Cyclotomic t = Cyclotomic::root_of_unity(2 * n, 1);
    o(phi_eval(r, dickson(n)) == GreenElement::basis(r, 0, n) && (t.pow(n) - t.pow(-n)).is_zero(),
      nm + " epsilon of the image M[1,n] of F_n");
    const auto eps = epsilon_values(*r);
    for (Index u = 0; u < stable_rank(*r); ++u) {
      const BasisLabel b = stable_label(*r, u);
      const Cyclotomic cheb = (t.pow(b.j) - t.pow(-b.j)) / (t - t.inverse());
      o(eps[u] == Cyclotomic(r->datum().dim(b.i)) * cheb, nm + " epsilon value");
    }
    o(epsilon_positive_numeric(*r), nm + " epsilon positive");
    const GroupLikeReport gl = grouplike_check(r);
    o(gl.g1.pass, nm + " G1: " + gl.g1.witness);
    o(gl.g2.pass, nm + " G2: " + gl.g2.witness);
    o(gl.g3.pass, nm + " G3: " + gl.g3.witness);
    const BiFrobeniusData bf = bifrobenius_data(r);
    o(bf.dual_pair.pass, nm + " dual pair: " + bf.dual_pair.witness);
    o(bf.counit.pass, nm + " counit: " + bf.counit.witness);
    o(bf.anti_algebra.pass, nm + " S anti-algebra: " + bf.anti_algebra.witness);
    o(bf.anti_coalgebra.pass, nm + " S anti-coalgebra: " + bf.anti_coalgebra.witness);
    o(bf.involutive.pass, nm + " S^2 = id: " + bf.involutive.witness);
    const MonomialReport mono = bifrobenius_on_monomials(r);
    o(mono.expansion.pass, nm + " monomial expansion: " + mono.expansion.witness);
    o(mono.phi.pass, nm + " monomial phi: " + mono.phi.witness);
    o(mono.delta.pass, nm + " monomial Delta: " + mono.delta.witness);
    o(mono.antipode.pass, nm + " monomial S: " + mono.antipode.witness);
    o(mono.t.pass, nm + " monomial t: " + mono.t.witness);
    for (Index u = 0; u < r->rank(); ++u)
      for (Index v = 0; v < r->rank(); ++v) {
        const StableElement x = stable_reduce(GreenElement::basis(r, u)), y = stable_reduce(GreenElement::basis(r, v));
        o(epsilon_st(x * y) == epsilon_st(x) * epsilon_st(y), at(nm, *r, u, v) + " epsilon multiplicative");
      }
  }
  return o;
}

Outcome inverse_dickson_identity() {
  Outcome o;
  for (std::int64_t s = 0; s <= 10; ++s) {
    DicksonPoly sum;
    for (std::int64_t i = 0; 2 * i <= s; ++i) {
      const Rational c = Rational(binomial(s, i)) * Rational(s + 1 - 2 * i, s + 1 - i);
      BigInt ci;
      o(rational_to_integer(c, ci), "s=" + std::to_string(s) + " integral coefficient");
      sum += DicksonPoly::monomial(i, 0, ci) * dickson_closed_form(s + 1 - 2 * i);
    }
    o(sum == DicksonPoly::monomial(0, s), "s=" + std::to_string(s) + " z^s expansion");
    o(verify_inverse_dickson(s), "s=" + std::to_string(s) + " library check");
  }
  return o;
}

Outcome antipode_trace() {
  Outcome o;
  const auto ns = names();
  const auto data = fixtures::standard_data();
  for (std::size_t k = 0; k < data.size(); ++k)
    o(data[k].datum->antipode_trace() == pbw_antipode_trace(*data[k].datum), ns[k]);
  const DatumPtr sweedler = fixtures::taft(2);
  o(sweedler->antipode_trace() == Cyclotomic(2) && pbw_antipode_trace(*sweedler) == Cyclotomic(2), "Sweedler trace 2");
  return o;
}

Outcome frobenius_integral() {
  Outcome o;
  const auto rs = rings();
  const auto ns = names();
  for (std::size_t k = 0; k < rs.size(); ++k) {
    const RingPtr& r = rs[k];
    const GreenElement h = regular_class(r);
    const ModuleRep reg = regular_module(r->datum_ptr());
    o(summands_to_vector(module_decompose(reg), r->n(), r->m()) == h.coeffs(), ns[k] + " [H] against the regular module");
    for (Index u = 0; u < r->rank(); ++u) {
      const GreenElement x = GreenElement::basis(r, u);
      const BasisLabel b = r->label(u);
      const BigInt dim = BigInt(b.j * r->datum().dim(b.i));
      o(h * x == dim * h, at(ns[k], *r, u) + " [H] M = dim(M) [H]");
      o(form_sym(h, x) == dim, at(ns[k], *r, u) + " ([H], M) = dim(M)");
      const ModuleRep mod = module_build(r->datum_ptr(), b.i, b.j);
      o(BigInt(hom_dim(reg, module_dual(mod))) == dim, at(ns[k], *r, u) + " dim Hom(H, M*) = dim(M)");
    }
  }
  return o;
}

Outcome ring_sanity() {
  Outcome o;
  const auto rs = rings();
  const auto ns = names();
  std::mt19937_64 gen(1009);
  for (std::size_t k = 0; k < rs.size(); ++k) {
    const RingPtr& r = rs[k];
    const auto b = [&](Index u) { return GreenElement::basis(r, u); };
    for (Index u = 0; u < r->rank(); ++u) {
      o(dual(dual(b(u))) == b(u), at(ns[k], *r, u) + " dual involution");
      for (Index v = 0; v < r->rank(); ++v) {
        o(b(u) * b(v) == b(v) * b(u), at(ns[k], *r, u, v) + " commutative");
        o(dual(b(u) * b(v)) == dual(b(u)) * dual(b(v)), at(ns[k], *r, u, v) + " dual multiplicative");
        o(dual(b(u) + b(v)) == dual(b(u)) + dual(b(v)), at(ns[k], *r, u, v) + " dual additive");
        for (Index w = 0; w < r->rank(); w += std::max<Index>(1, r->rank() / 4))
          o((b(u) * b(v)) * b(w) == b(u) * (b(v) * b(w)), at(ns[k], *r, u, v) + " associative");
      }
    }
    o(dual(GreenElement::one(r)) == GreenElement::one(r), ns[k] + " dual(1) = 1");
    std::uniform_int_distribution<Index> pick(0, r->rank() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const Index x = pick(gen), y = pick(gen), z = pick(gen);
      o((b(x) * b(y)) * b(z) == b(x) * (b(y) * b(z)), at(ns[k], *r, x, y) + " random triple");
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Clebsch-Gordan products match oracle decompositions on all basis pairs", clebsch_gordan_vs_oracle},
      {"presentation: F_j(a,z) -> M[1,j] and (1+a-z)F_n(a,z) -> 0", presentation},
      {"dual bases: ((M[i,j], delta*_M[k,l])) is the identity", dual_bases},
      {"Jacobson radical: nilpotent generator, rank d3, root counts", radical},
      {"dihedral s=3,5: fusion rules and Grothendieck relations", dihedral_example},
      {"stable Green ring: epsilon, group-like and bi-Frobenius axioms", stable_ring},
      {"inverse Dickson identity for s = 0..10", inverse_dickson_identity},
      {"antipode trace equals the PBW trace; Sweedler trace 2", antipode_trace},
      {"Frobenius integral: [H] M = dim(M) [H] and ([H], M) = dim(M)", frobenius_integral},
      {"ring sanity: commutative, associative, dual a ring involution", ring_sanity},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.pass = false;
      o.witness = std::string("exception: ") + e.what();
    }
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " (" << o.checks
              << " checks)";
    if (!o.pass) std::cout << " first failure: " << o.witness;
    std::cout << std::endl;
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
