#include <doctest.h>

#include "fixtures.hpp"
#include "greenring/radical.hpp"
#include "greenring/stable.hpp"

using namespace greenring;

TEST_CASE("stable indexing round trip") {
  const RingPtr r = GreenRing::create(fixtures::taft(4));
  CHECK(stable_rank(*r) == 12);
  for (Index u = 0; u < stable_rank(*r); ++u) {
    const BasisLabel b = stable_label(*r, u);
    CHECK(stable_index(*r, b.i, b.j) == u);
  }
  CHECK_THROWS_AS(stable_index(*r, 0, 4), Error);
}

TEST_CASE("epsilon kills F_n") {
  for (std::int64_t n = 2; n <= 8; ++n) {
    CAPTURE(n);
    CHECK(epsilon_poly(n, dickson(n)).is_zero());
    for (std::int64_t j = 1; j < n; ++j) CHECK(!epsilon_poly(n, dickson(j)).is_zero());
  }
}

TEST_CASE("stable quotient is a ring map and epsilon is multiplicative") {
  for (const auto& [name, d] : fixtures::standard_data()) {
    CAPTURE(name);
    const RingPtr r = GreenRing::create(d);
    CHECK(stable_reduce(GreenElement::basis(r, 0, r->n())).is_zero());
    CHECK(stable_reduce(radical_generator(r)).is_zero());
    CHECK(epsilon_positive_numeric(*r));
    for (Index u = 0; u < r->rank(); ++u)
      for (Index v = 0; v < r->rank(); ++v) {
        const GreenElement x = GreenElement::basis(r, u), y = GreenElement::basis(r, v);
        const StableElement sx = stable_reduce(x), sy = stable_reduce(y);
        CHECK(stable_reduce(x * y) == sx * sy);
        CHECK(epsilon_st(sx * sy) == epsilon_st(sx) * epsilon_st(sy));
      }
  }
}

TEST_CASE("group-like basis axioms") {
  for (const auto& [name, d] : fixtures::standard_data()) {
    CAPTURE(name);
    const GroupLikeReport rep = grouplike_check(GreenRing::create(d));
    CHECK_MESSAGE(rep.g1.pass, rep.g1.witness);
    CHECK_MESSAGE(rep.g2.pass, rep.g2.witness);
    CHECK_MESSAGE(rep.g3.pass, rep.g3.witness);
    CHECK(rep.g3.checked > 0);
  }
}

TEST_CASE("bi-Frobenius structure") {
  for (const auto& [name, d] : fixtures::standard_data()) {
    CAPTURE(name);
    const RingPtr r = GreenRing::create(d);
    const BiFrobeniusData bf = bifrobenius_data(r);
    CHECK_MESSAGE(bf.dual_pair.pass, bf.dual_pair.witness);
    CHECK_MESSAGE(bf.counit.pass, bf.counit.witness);
    CHECK_MESSAGE(bf.anti_algebra.pass, bf.anti_algebra.witness);
    CHECK_MESSAGE(bf.anti_coalgebra.pass, bf.anti_coalgebra.witness);
    CHECK_MESSAGE(bf.involutive.pass, bf.involutive.witness);
    for (Index u = 0; u < stable_rank(*r); ++u) {
      // S(M_u) = M_{u*}: epsilon is constant on the involution orbits.
      CHECK(antipode(StableElement::basis(r, u)) == StableElement::basis(r, stable_involution(*r, u)));
      CHECK(stable_involution(*r, stable_involution(*r, u)) == u);
    }
  }
}

TEST_CASE("monomial formulas") {
  for (const auto& [name, d] : fixtures::standard_data()) {
    CAPTURE(name);
    const MonomialReport rep = bifrobenius_on_monomials(GreenRing::create(d));
    CHECK_MESSAGE(rep.expansion.pass, rep.expansion.witness);
    CHECK_MESSAGE(rep.phi.pass, rep.phi.witness);
    CHECK_MESSAGE(rep.delta.pass, rep.delta.witness);
    CHECK_MESSAGE(rep.antipode.pass, rep.antipode.witness);
    CHECK_MESSAGE(rep.t.pass, rep.t.witness);
  }
}

TEST_CASE("taft 3 epsilon values") {
  const RingPtr r = GreenRing::create(fixtures::taft(3));
  // F_1 = 1 and F_2(1, z) = z with z = 2cos(pi/3) = 1.
  for (const Cyclotomic& e : epsilon_values(*r)) CHECK(e.is_one());
}
