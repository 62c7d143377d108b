#include <doctest.h>

#include "fixtures.hpp"
#include "greenring/error.hpp"
#include "greenring/greenring.hpp"

#include <random>

using namespace greenring;

namespace {

GreenElement M(const RingPtr& r, std::int64_t i, std::int64_t j) { return GreenElement::basis(r, i, j); }

GreenElement random_element(const RingPtr& r, std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(-3, 3);
  IntVector c(r->rank());
  for (Index u = 0; u < r->rank(); ++u) c(u) = dist(rng);
  return GreenElement(r, c);
}

}  // namespace

TEST_CASE("basic products") {
  const RingPtr r3 = GreenRing::create(fixtures::taft(3));
  const GreenElement a3 = GreenElement::a(r3);
  CHECK(M(r3, 0, 2) * M(r3, 0, 2) == M(r3, 0, 3) + a3);
  CHECK(M(r3, 0, 2) * M(r3, 0, 3) == M(r3, 0, 3) + M(r3, r3->datum().tau(0), 3));

  const RingPtr r2 = GreenRing::create(fixtures::taft(2));
  const GreenElement a2 = GreenElement::a(r2);
  CHECK(M(r2, 0, 2) * M(r2, 0, 2) == (GreenElement::one(r2) + a2) * M(r2, 0, 2));

  std::mt19937 rng(3);
  const GreenElement x = random_element(r3, rng);
  CHECK(GreenElement::one(r3) * x == x);
  CHECK(a3.pow(r3->datum().l()) == GreenElement::one(r3));
}

TEST_CASE("M[i,j] = [V_i] M[1,j]") {
  for (const auto& [name, d] : fixtures::standard_data()) {
    CAPTURE(name);
    const RingPtr r = GreenRing::create(d);
    for (std::int64_t i = 0; i < r->m(); ++i)
      for (std::int64_t j = 1; j <= r->n(); ++j) CHECK(GreenElement::simple(r, i) * M(r, 0, j) == M(r, i, j));
  }
}

TEST_CASE("dickson polynomials") {
  CHECK(dickson(2) == DicksonPoly::monomial(0, 1));
  CHECK(dickson(3) == DicksonPoly::monomial(0, 2) - DicksonPoly::monomial(1, 0));
  CHECK(dickson(5) == DicksonPoly::monomial(0, 4) - DicksonPoly::monomial(1, 2, 3) + DicksonPoly::monomial(2, 0));
  for (std::int64_t s = 1; s <= 14; ++s) CHECK(dickson(s) == dickson_closed_form(s));
  CHECK_THROWS_AS(dickson(0), Error);
}

TEST_CASE("inverse dickson") {
  const auto c2 = inverse_dickson(2);
  REQUIRE(c2.size() == 2);
  CHECK(c2[0] == 1);
  CHECK(c2[1] == 1);
  CHECK(inverse_dickson(0) == std::vector<Rational>{Rational(1)});
  for (std::int64_t s = 0; s <= 12; ++s) CHECK(verify_inverse_dickson(s));
}

TEST_CASE("presentation") {
  for (const auto& [name, d] : fixtures::standard_data()) {
    CAPTURE(name);
    const RingPtr r = GreenRing::create(d);
    for (std::int64_t j = 1; j <= r->n(); ++j) CHECK(phi_eval(r, dickson(j)) == M(r, 0, j));
    CHECK(phi_eval(r, presentation_relation(r->n())).is_zero());
    CHECK(phi_eval(r, DicksonPoly::constant(1)) == GreenElement::one(r));
  }
}

TEST_CASE("ring axioms") {
  std::mt19937 rng(17);
  for (const auto& [name, d] : fixtures::standard_data()) {
    CAPTURE(name);
    const RingPtr r = GreenRing::create(d);
    for (Index u = 0; u < r->rank(); ++u)
      for (Index v = 0; v < r->rank(); ++v) CHECK(r->product(u, v) == r->product(v, u));
    for (int k = 0; k < 20; ++k) {
      const GreenElement x = random_element(r, rng), y = random_element(r, rng), z = random_element(r, rng);
      CHECK((x * y) * z == x * (y * z));
      CHECK(dual(x * y) == dual(x) * dual(y));
      CHECK(dual(dual(x)) == x);
      CHECK(form_sym(x * y, z) == form_sym(x, y * z));
      CHECK(form_sym(x, y) == form_sym(y, x));
    }
  }
}

TEST_CASE("delta bases") {
  for (const auto& [name, d] : fixtures::standard_data()) {
    CAPTURE(name);
    const RingPtr r = GreenRing::create(d);
    const std::int64_t n = r->n();
    for (Index u = 0; u < r->rank(); ++u)
      for (Index v = 0; v < r->rank(); ++v) {
        const BigInt expected = u == v ? 1 : 0;
        CHECK(form_sym(GreenElement::basis(r, u), GreenElement(r, r->delta_star_matrix().col(v))) == expected);
        CHECK(form_hom(GreenElement::basis(r, u), GreenElement(r, r->delta_matrix().col(v))) == expected);
      }
    // Closed forms of delta*.
    const GreenElement a = GreenElement::a(r);
    for (std::int64_t i = 0; i < r->m(); ++i) {
      for (std::int64_t j = 1; j < n; ++j)
        CHECK(delta_star_element(r, i, j) == delta_element(r, d->tau(d->star(i), -j), j));
      const GreenElement closed = GreenElement::simple(r, d->tau(d->star(i), 1 - n)) * (M(r, 0, n) - M(r, 0, n - 1));
      CHECK(delta_star_element(r, i, n) == closed);
    }
    // Expansion x = sum <x, delta_u> M_u.
    std::mt19937 rng(5);
    const GreenElement x = random_element(r, rng);
    GreenElement rebuilt = GreenElement::zero(r);
    for (Index u = 0; u < r->rank(); ++u)
      rebuilt += form_hom(x, GreenElement(r, r->delta_matrix().col(u))) * GreenElement::basis(r, u);
    CHECK(rebuilt == x);
    // Basepoint: coefficient of M[1,1] in [V_i][V_j] is delta_{i,j*}.
    for (std::int64_t i = 0; i < r->m(); ++i)
      for (std::int64_t j = 0; j < r->m(); ++j)
        CHECK((GreenElement::simple(r, i) * GreenElement::simple(r, j)).coeff(0, 1) == (i == d->star(j) ? 1 : 0));
  }
}

TEST_CASE("almost split sequences") {
  for (const auto& [name, d] : fixtures::standard_data()) {
    CAPTURE(name);
    const RingPtr r = GreenRing::create(d);
    for (std::int64_t i = 0; i < r->m(); ++i) {
      for (std::int64_t j = 1; j < r->n(); ++j) {
        const ARData ar = ar_sequence(r, i, j);
        CHECK(ar.middle == M(r, 0, 2) * M(r, i, j));
        CHECK(ar.delta == delta_element(r, i, j));
        CHECK(ar.left == BasisLabel{d->tau(i), j});
      }
      CHECK_THROWS_AS(ar_sequence(r, i, r->n()), Error);
    }
    const ARData first = ar_sequence(r, 0, 1);
    CHECK(first.middle == M(r, 0, 2));
  }
}

TEST_CASE("grothendieck image") {
  for (const auto& [name, d] : fixtures::standard_data()) {
    CAPTURE(name);
    const RingPtr r = GreenRing::create(d);
    for (std::int64_t i = 0; i < r->m(); ++i) {
      IntVector e = IntVector::Zero(r->m());
      e(i) = 1;
      CHECK(grothendieck_image(M(r, i, 1)) == e);
      for (std::int64_t j = 1; j < r->n(); ++j) CHECK(is_zero_matrix<BigInt>(grothendieck_image(delta_element(r, i, j))));
    }
    for (Index u = 0; u < r->rank(); ++u)
      for (Index v = 0; v < r->rank(); ++v) {
        const GreenElement x = GreenElement::basis(r, u), y = GreenElement::basis(r, v);
        CHECK(grothendieck_image(x * y) == rkg_multiply(*d, grothendieck_image(x), grothendieck_image(y)));
      }
  }
  const RingPtr r = GreenRing::create(fixtures::taft(4));
  CHECK(grothendieck_image(M(r, 0, 4)) == IntVector::Ones(4));
}

TEST_CASE("frobenius data") {
  for (const auto& [name, d] : fixtures::standard_data()) {
    CAPTURE(name);
    const RingPtr r = GreenRing::create(d);
    const FrobeniusData f = frobenius_data(r);
    CHECK(f.phi[0] == 1);
    for (Index u = 0; u < r->rank(); ++u) {
      const GreenElement x = GreenElement::basis(r, u);
      CHECK(f.integral * x == dimension(x) * f.integral);
      CHECK(form_sym(f.integral, x) == dimension(x));
    }
    CHECK(dimension(f.integral) == d->dim_h());
  }
}

TEST_CASE("mismatched data are rejected") {
  const RingPtr r1 = GreenRing::create(fixtures::taft(3));
  const RingPtr r2 = GreenRing::create(fixtures::taft(3));
  CHECK_THROWS_AS(GreenElement::one(r1) + GreenElement::one(r2), Error);
}
