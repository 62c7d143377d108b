#include <doctest.h>

#include "greenring/cyclotomic.hpp"
#include "greenring/error.hpp"

#include <random>

using namespace greenring;

namespace {

Cyclotomic random_element(std::mt19937& rng, std::int64_t conductor) {
  std::uniform_int_distribution<int> num(-5, 5), den(1, 4);
  std::vector<Rational> c(static_cast<std::size_t>(euler_phi(conductor)));
  for (auto& v : c) v = Rational(num(rng), den(rng));
  return Cyclotomic::from_coeffs(conductor, c);
}

}  // namespace

TEST_CASE("roots of unity") {
  CHECK(Cyclotomic::root_of_unity(1, 0).is_one());
  CHECK(Cyclotomic::root_of_unity(4, 2) == Cyclotomic(-1));
  const Cyclotomic z12 = Cyclotomic::root_of_unity(12, 7);
  const Cyclotomic prod = (Cyclotomic::root_of_unity(3, 1) * Cyclotomic::root_of_unity(4, 1)).embed(12);
  CHECK(z12 == prod);
  CHECK(std::abs(z12.to_complex() - prod.to_complex()) < 1e-9);
  CHECK_THROWS_AS(Cyclotomic::root_of_unity(0, 1), Error);
}

TEST_CASE("field operations") {
  CHECK(Cyclotomic::root_of_unity(3, 1) + Cyclotomic::root_of_unity(3, 2) == Cyclotomic(-1));
  CHECK((Cyclotomic::root_of_unity(5, 1) * Cyclotomic::root_of_unity(5, 4)).is_one());
  CHECK(Cyclotomic(2).inverse() == Cyclotomic(Rational(1, 2)));
  CHECK_THROWS_AS(Cyclotomic(0).inverse(), Error);
}

TEST_CASE("order of roots") {
  CHECK(order_of_root(Cyclotomic::root_of_unity(6, 1)) == 6);
  CHECK(order_of_root(Cyclotomic(-1)) == 2);
  CHECK(!order_of_root(Cyclotomic(2)).has_value());
  CHECK(order_of_root(Cyclotomic::root_of_unity(15, 6)) == 5);
}

TEST_CASE("field axioms on random triples") {
  std::mt19937 rng(7);
  for (std::int64_t n : {1, 3, 4, 5, 7, 8, 9, 12, 15, 20, 24, 30, 60}) {
    for (int trial = 0; trial < 4; ++trial) {
      const Cyclotomic x = random_element(rng, n), y = random_element(rng, n), z = random_element(rng, n);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK(x * y == y * x);
      if (!x.is_zero()) CHECK((x * x.inverse()).is_one());
      CHECK(x.embed(n * 2) == x);
    }
  }
}

TEST_CASE("mixed conductors embed to the lcm") {
  std::mt19937 rng(11);
  const Cyclotomic x = random_element(rng, 4), y = random_element(rng, 6);
  const Cyclotomic s = x + y;
  CHECK(s.conductor() % 12 == 0);
  CHECK(s - y == x);
  CHECK(std::abs(s.to_complex() - (x.to_complex() + y.to_complex())) < 1e-9);
}

TEST_CASE("powers reach the order exactly") {
  for (std::int64_t n : {2, 3, 4, 6, 10, 12}) {
    for (std::int64_t k = 1; k < n; ++k) {
      const Cyclotomic z = Cyclotomic::root_of_unity(n, k);
      const auto ord = order_of_root(z);
      REQUIRE(ord.has_value());
      CHECK(z.pow(*ord).is_one());
      for (std::int64_t j = 1; j < *ord; ++j) CHECK(!z.pow(j).is_one());
    }
  }
}

TEST_CASE("two cos pi over n") {
  CHECK(two_cos_pi_over(2).is_zero());
  CHECK(two_cos_pi_over(3).is_one());
  CHECK(two_cos_pi_over(4) * two_cos_pi_over(4) == Cyclotomic(2));
  CHECK(std::abs(two_cos_pi_over(5).to_complex().real() - 2 * std::cos(M_PI / 5)) < 1e-12);
}

TEST_CASE("galois conjugation") {
  const Cyclotomic z = Cyclotomic::root_of_unity(7, 2);
  CHECK(z.conj() == Cyclotomic::root_of_unity(7, 5));
  CHECK((z * z.conj()).is_one());
}
