#include <doctest.h>

#include "greenring/error.hpp"
#include "greenring/group.hpp"

using namespace greenring;

namespace {

std::int64_t label_index(const CharacterTable& t, const std::string& label) {
  for (std::size_t i = 0; i < t.labels.size(); ++i)
    if (t.labels[i] == label) return static_cast<std::int64_t>(i);
  FAIL("missing label " << label);
  return -1;
}

void check_products_reassemble(const CharacterTable& t) {
  for (std::int64_t i = 0; i < t.num_irreducibles(); ++i)
    for (std::int64_t j = 0; j < t.num_irreducibles(); ++j) {
      const auto f = class_product(t.values[i], t.values[j]);
      const auto mult = char_decompose(f, t);
      for (std::int64_t c = 0; c < t.num_classes(); ++c) {
        Cyclotomic s(0);
        for (std::int64_t k = 0; k < t.num_irreducibles(); ++k)
          s += Cyclotomic(Rational(mult[k])) * t.values[k][c];
        CHECK(s == f[c]);
      }
    }
}

}  // namespace

TEST_CASE("cyclic groups") {
  const Group g = Group::cyclic(4);
  CHECK(g.order() == 4);
  CHECK(g.num_classes() == 4);
  const CharacterTable t = character_table(g);
  for (std::int64_t i = 0; i < 4; ++i)
    for (std::int64_t j = 0; j < 4; ++j) CHECK(t.values[i][j] == Cyclotomic::root_of_unity(4, i * j));
  CHECK(column_orthogonal(t));
  check_products_reassemble(t);
}

TEST_CASE("abelian products") {
  const Group klein = Group::abelian({2, 2});
  CHECK(klein.order() == 4);
  CHECK(klein.exponent() == 2);
  const CharacterTable t = character_table(klein);
  for (const auto& row : t.values)
    for (const auto& v : row) CHECK((v == Cyclotomic(1) || v == Cyclotomic(-1)));
  const Group c6 = Group::abelian({2, 3});
  CHECK(c6.num_classes() == 6);
  const CharacterTable t6 = character_table(c6);
  for (std::int64_t i = 0; i < 6; ++i)
    for (std::int64_t j = 0; j < 6; ++j) {
      const auto m = char_decompose(class_product(t6.values[i], t6.values[j]), t6);
      BigInt total = 0;
      for (const auto& x : m) total += x;
      CHECK(total == 1);
    }
}

TEST_CASE("dihedral group s=3") {
  const Group g = Group::dihedral(3);
  CHECK(g.order() == 12);
  CHECK(g.num_classes() == 6);
  std::vector<std::int64_t> center;
  for (std::int64_t a = 0; a < g.order(); ++a)
    if (g.is_central(a)) center.push_back(a);
  CHECK(center == std::vector<std::int64_t>{0, g.parse_element("c^3")});
  CHECK_THROWS_AS(Group::dihedral(4), Error);

  const CharacterTable t = character_table(g);
  CHECK(t.num_irreducibles() == 6);
  CHECK(column_orthogonal(t));
  check_products_reassemble(t);

  const auto v1 = label_index(t, "V(1)"), v2 = label_index(t, "V(2)");
  const auto f00 = label_index(t, "F(0,0)"), f01 = label_index(t, "F(0,1)"), f10 = label_index(t, "F(1,0)");
  auto m = char_decompose(class_product(t.values[v1], t.values[v1]), t);
  for (std::int64_t k = 0; k < 6; ++k) CHECK(m[k] == ((k == v2 || k == f00 || k == f01) ? 1 : 0));
  m = char_decompose(class_product(t.values[f10], t.values[v1]), t);
  for (std::int64_t k = 0; k < 6; ++k) CHECK(m[k] == (k == v2 ? 1 : 0));

  const Cyclotomic theta = Cyclotomic::root_of_unity(6, 1);
  const std::int64_t c = g.parse_element("c");
  for (std::int64_t k = 0; k < 6; ++k) {
    const std::int64_t cls = g.class_of(g.power(c, k));
    CHECK(t.values[v1][cls] == theta.pow(k) + theta.pow(-k));
  }
}

TEST_CASE("generic table import") {
  const Group c3 = Group::cyclic(3);
  std::vector<std::vector<std::int64_t>> mult(3, std::vector<std::int64_t>(3));
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) mult[a][b] = c3.mult(a, b);
  const Group g = Group::from_table(mult);
  CHECK_THROWS_AS(character_table(g), Error);
  ImportedTable imp;
  imp.class_reps = {0, 1, 2};
  for (int i = 0; i < 3; ++i) {
    std::vector<Cyclotomic> row;
    for (int j = 0; j < 3; ++j) row.push_back(Cyclotomic::root_of_unity(3, i * j));
    imp.values.push_back(row);
  }
  CHECK(character_table(g, imp).num_irreducibles() == 3);
  imp.values[1][1] = Cyclotomic(1);
  CHECK_THROWS_AS(character_table(g, imp), Error);

  std::vector<std::vector<std::int64_t>> bad = {{0, 1}, {1, 1}};
  CHECK_THROWS_AS(Group::from_table(bad), Error);
}

TEST_CASE("element parsing") {
  const Group g = Group::dihedral(5);
  CHECK(g.parse_element("e") == 0);
  CHECK(g.parse_element("1") == 1);
  CHECK(g.parse_element("c^5") == g.power(g.parse_element("c"), 5));
  CHECK(g.parse_element("b*c") == g.mult(g.parse_element("b"), g.parse_element("c")));
  CHECK_THROWS_AS(g.parse_element("x"), Error);
  for (std::int64_t a = 0; a < g.order(); ++a) CHECK(g.parse_element(g.element_names()[a]) == a);
}

TEST_CASE("char_decompose rejects non-characters") {
  const CharacterTable t = character_table(Group::cyclic(3));
  std::vector<Cyclotomic> f = {Cyclotomic(1), Cyclotomic(0), Cyclotomic(0)};
  CHECK_THROWS_AS(char_decompose(f, t), Error);
}
