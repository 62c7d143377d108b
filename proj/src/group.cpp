#include "greenring/group.hpp"

#include "greenring/error.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <sstream>

namespace greenring {

const char* to_string(GroupFamily family) {
  switch (family) {
    case GroupFamily::Cyclic: return "cyclic";
    case GroupFamily::AbelianProduct: return "abelian";
    case GroupFamily::Dihedral: return "dihedral";
    case GroupFamily::Generic: return "generic";
  }
  return "unknown";
}

Group Group::build(const GroupSpec& spec) {
  switch (spec.family) {
    case GroupFamily::Cyclic:
      if (spec.orders.size() != 1) throw Error(ErrorKind::InvalidGroup, "cyclic group needs exactly one order");
      return cyclic(spec.orders[0]);
    case GroupFamily::AbelianProduct: return abelian(spec.orders);
    case GroupFamily::Dihedral: return dihedral(spec.s);
    case GroupFamily::Generic: return from_table(spec.mult, spec.generators, spec.generator_names);
  }
  throw Error(ErrorKind::InvalidGroup, "unknown group family");
}

Group Group::cyclic(std::int64_t n) {
  if (n < 1) throw Error(ErrorKind::InvalidGroup, "cyclic order must be at least 1");
  Group g;
  g.family_ = GroupFamily::Cyclic;
  g.spec_.family = GroupFamily::Cyclic;
  g.spec_.orders = {n};
  g.mult_.assign(n, std::vector<std::int64_t>(n));
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b) g.mult_[a][b] = (a + b) % n;
  if (n > 1) {
    g.generators_ = {1};
    g.generator_names_ = {"g"};
  }
  g.finish();
  return g;
}

Group Group::abelian(std::vector<std::int64_t> orders) {
  if (orders.empty()) throw Error(ErrorKind::InvalidGroup, "abelian product needs at least one factor");
  std::int64_t total = 1;
  for (std::int64_t o : orders) {
    if (o < 1) throw Error(ErrorKind::InvalidGroup, "factor orders must be positive");
    total *= o;
  }
  // Mixed radix, last factor fastest.
  std::vector<std::int64_t> stride(orders.size(), 1);
  for (std::size_t i = orders.size() - 1; i-- > 0;) stride[i] = stride[i + 1] * orders[i + 1];
  auto digits = [&](std::int64_t x) {
    std::vector<std::int64_t> d(orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) d[i] = (x / stride[i]) % orders[i];
    return d;
  };
  Group g;
  g.family_ = GroupFamily::AbelianProduct;
  g.spec_.family = GroupFamily::AbelianProduct;
  g.spec_.orders = orders;
  g.mult_.assign(total, std::vector<std::int64_t>(total));
  for (std::int64_t a = 0; a < total; ++a) {
    const auto da = digits(a);
    for (std::int64_t b = 0; b < total; ++b) {
      const auto db = digits(b);
      std::int64_t c = 0;
      for (std::size_t i = 0; i < orders.size(); ++i) c += ((da[i] + db[i]) % orders[i]) * stride[i];
      g.mult_[a][b] = c;
    }
  }
  for (std::size_t i = 0; i < orders.size(); ++i) {
    if (orders[i] == 1) continue;
    g.generators_.push_back(stride[i]);
    g.generator_names_.push_back("g" + std::to_string(i + 1));
  }
  g.finish();
  return g;
}

Group Group::dihedral(std::int64_t s) {
  if (s < 1 || s % 2 == 0)
    throw Error(ErrorKind::UnsupportedParameter, "dihedral parameter s must be odd and positive");
  const std::int64_t rot = 2 * s;
  const std::int64_t total = 2 * rot;
  Group g;
  g.family_ = GroupFamily::Dihedral;
  g.spec_.family = GroupFamily::Dihedral;
  g.spec_.s = s;
  g.mult_.assign(total, std::vector<std::int64_t>(total));
  // Index k + 2s*e stands for c^k b^e; b c b = c^-1.
  for (std::int64_t a = 0; a < total; ++a) {
    const std::int64_t k1 = a % rot, e1 = a / rot;
    for (std::int64_t b = 0; b < total; ++b) {
      const std::int64_t k2 = b % rot, e2 = b / rot;
      const std::int64_t k = mod_floor(k1 + (e1 ? -k2 : k2), rot);
      g.mult_[a][b] = k + rot * ((e1 + e2) % 2);
    }
  }
  g.generators_ = {1, rot};
  g.generator_names_ = {"c", "b"};
  g.finish();

  const std::int64_t b = rot, c = 1;
  const std::int64_t cb = g.mult(c, b);
  if (g.power(b, 2) != 0 || g.power(c, rot) != 0 || g.power(cb, 2) != 0)
    throw Error(ErrorKind::InternalConsistency, "dihedral relations violated");
  return g;
}

Group Group::from_table(std::vector<std::vector<std::int64_t>> mult, std::vector<std::int64_t> generators,
                        std::vector<std::string> generator_names) {
  const std::int64_t n = static_cast<std::int64_t>(mult.size());
  if (n < 1) throw Error(ErrorKind::InvalidGroup, "empty multiplication table");
  for (const auto& row : mult) {
    if (static_cast<std::int64_t>(row.size()) != n) throw Error(ErrorKind::InvalidGroup, "table is not square");
    for (std::int64_t v : row)
      if (v < 0 || v >= n) throw Error(ErrorKind::InvalidGroup, "table entry out of range");
  }
  Group g;
  g.family_ = GroupFamily::Generic;
  g.spec_.family = GroupFamily::Generic;
  g.spec_.mult = mult;
  g.mult_ = std::move(mult);
  for (std::int64_t a = 0; a < n; ++a)
    if (g.mult_[0][a] != a || g.mult_[a][0] != a)
      throw Error(ErrorKind::InvalidGroup, "element 0 is not the identity");
  g.validate();

  if (generators.empty()) {
    // Greedy generating set: add any element outside the current subgroup.
    std::vector<bool> inside(n, false);
    inside[0] = true;
    for (std::int64_t a = 1; a < n; ++a) {
      if (inside[a]) continue;
      generators.push_back(a);
      std::deque<std::int64_t> queue;
      std::fill(inside.begin(), inside.end(), false);
      inside[0] = true;
      queue.push_back(0);
      while (!queue.empty()) {
        const std::int64_t x = queue.front();
        queue.pop_front();
        for (std::int64_t s : generators) {
          const std::int64_t y = g.mult_[s][x];
          if (!inside[y]) {
            inside[y] = true;
            queue.push_back(y);
          }
        }
      }
    }
  }
  for (std::int64_t s : generators)
    if (s < 0 || s >= n) throw Error(ErrorKind::InvalidGroup, "generator index out of range");
  if (generator_names.empty())
    for (std::int64_t s : generators) generator_names.push_back("e" + std::to_string(s));
  if (generator_names.size() != generators.size())
    throw Error(ErrorKind::InvalidGroup, "generator names and indices differ in length");
  g.spec_.generators = generators;
  g.spec_.generator_names = generator_names;
  g.generators_ = std::move(generators);
  g.generator_names_ = std::move(generator_names);
  g.finish();
  return g;
}

void Group::validate() const {
  const std::int64_t n = order();
  for (std::int64_t a = 0; a < n; ++a) {
    std::vector<bool> seen_row(n, false), seen_col(n, false);
    for (std::int64_t b = 0; b < n; ++b) {
      if (seen_row[mult_[a][b]] || seen_col[mult_[b][a]])
        throw Error(ErrorKind::InvalidGroup, "element without two-sided inverse (table is not a Latin square)");
      seen_row[mult_[a][b]] = true;
      seen_col[mult_[b][a]] = true;
    }
  }
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b)
      for (std::int64_t c = 0; c < n; ++c)
        if (mult_[mult_[a][b]][c] != mult_[a][mult_[b][c]])
          throw Error(ErrorKind::InvalidGroup, "multiplication is not associative");
}

void Group::finish() {
  const std::int64_t n = order();
  inverse_.assign(n, -1);
  for (std::int64_t a = 0; a < n; ++a)
    for (std::int64_t b = 0; b < n; ++b)
      if (mult_[a][b] == 0) inverse_[a] = b;

  // BFS words over the generators, left multiplication.
  std::vector<std::vector<std::int64_t>> words(n);
  std::vector<bool> seen(n, false);
  std::deque<std::int64_t> queue{0};
  seen[0] = true;
  while (!queue.empty()) {
    const std::int64_t x = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < generators_.size(); ++k) {
      const std::int64_t y = mult_[generators_[k]][x];
      if (seen[y]) continue;
      seen[y] = true;
      words[y] = words[x];
      words[y].insert(words[y].begin(), static_cast<std::int64_t>(k));
      queue.push_back(y);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw Error(ErrorKind::InvalidGroup, "generators do not generate the group");
  element_names_.assign(n, "e");
  for (std::int64_t a = 1; a < n; ++a) {
    std::ostringstream os;
    const auto& w = words[a];
    for (std::size_t i = 0; i < w.size();) {
      std::size_t j = i;
      while (j < w.size() && w[j] == w[i]) ++j;
      if (i > 0) os << '*';
      os << generator_names_[w[i]];
      if (j - i > 1) os << '^' << (j - i);
      i = j;
    }
    element_names_[a] = os.str();
  }

  classes_ = conjugacy_classes(*this);
  class_of_.assign(n, 0);
  for (std::size_t c = 0; c < classes_.size(); ++c)
    for (std::int64_t a : classes_[c]) class_of_[a] = static_cast<std::int64_t>(c);
}

std::int64_t Group::power(std::int64_t a, std::int64_t k) const {
  if (k < 0) return power(inverse(a), -k);
  std::int64_t r = 0;
  for (std::int64_t i = 0; i < k; ++i) r = mult(r, a);
  return r;
}

std::int64_t Group::element_order(std::int64_t a) const {
  std::int64_t k = 1;
  for (std::int64_t x = a; x != 0; x = mult(x, a)) ++k;
  return k;
}

std::int64_t Group::exponent() const {
  std::int64_t e = 1;
  for (std::int64_t a = 0; a < order(); ++a) e = std::lcm(e, element_order(a));
  return e;
}

bool Group::is_central(std::int64_t a) const {
  for (std::int64_t h = 0; h < order(); ++h)
    if (mult(a, h) != mult(h, a)) return false;
  return true;
}

std::int64_t Group::parse_element(const std::string& expr) const {
  std::string text;
  for (char ch : expr)
    if (!std::isspace(static_cast<unsigned char>(ch))) text.push_back(ch);
  if (text.empty()) throw Error(ErrorKind::Parse, "empty element expression");
  if (std::all_of(text.begin(), text.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
    const std::int64_t idx = std::stoll(text);
    if (idx < 0 || idx >= order()) throw Error(ErrorKind::Parse, "element index out of range: " + text);
    return idx;
  }
  std::int64_t result = 0;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, '*')) {
    std::string name = token;
    std::int64_t exp = 1;
    const auto caret = token.find('^');
    if (caret != std::string::npos) {
      name = token.substr(0, caret);
      try {
        exp = std::stoll(token.substr(caret + 1));
      } catch (const std::exception&) {
        throw Error(ErrorKind::Parse, "bad exponent in element expression: " + token);
      }
    }
    std::int64_t base = -1;
    if (name == "e") {
      base = 0;
    } else {
      for (std::size_t k = 0; k < generator_names_.size(); ++k)
        if (generator_names_[k] == name) base = generators_[k];
    }
    if (base < 0) throw Error(ErrorKind::Parse, "unknown generator '" + name + "'");
    result = mult(result, power(base, exp));
  }
  return result;
}

std::vector<std::vector<std::int64_t>> conjugacy_classes(const Group& g) {
  const std::int64_t n = g.order();
  std::vector<bool> assigned(n, false);
  std::vector<std::vector<std::int64_t>> out;
  for (std::int64_t a = 0; a < n; ++a) {
    if (assigned[a]) continue;
    std::vector<std::int64_t> cls;
    for (std::int64_t h = 0; h < n; ++h) {
      const std::int64_t c = g.mult(g.mult(h, a), g.inverse(h));
      if (!assigned[c]) {
        assigned[c] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.push_back(std::move(cls));
  }
  return out;
}

CharacterTable CharacterTable::embedded(std::int64_t conductor) const {
  CharacterTable t = *this;
  for (auto& row : t.values)
    for (auto& v : row) v = v.embed(conductor);
  return t;
}

std::vector<CycMatrix> extend_to_group(const Group& g, const std::vector<CycMatrix>& generator_images) {
  const auto& gens = g.generators();
  if (generator_images.size() != gens.size())
    throw Error(ErrorKind::InvalidTable, "need one matrix per generator");
  const Index d = gens.empty() ? 1 : generator_images.front().rows();
  std::vector<CycMatrix> image(g.order());
  std::vector<bool> seen(g.order(), false);
  image[0] = CycMatrix::Identity(d, d);
  seen[0] = true;
  std::deque<std::int64_t> queue{0};
  while (!queue.empty()) {
    const std::int64_t x = queue.front();
    queue.pop_front();
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const std::int64_t y = g.mult(gens[k], x);
      if (seen[y]) continue;
      seen[y] = true;
      image[y] = multiply<Cyclotomic>(generator_images[k], image[x]);
      queue.push_back(y);
    }
  }
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (std::int64_t x = 0; x < g.order(); ++x)
      if (multiply<Cyclotomic>(generator_images[k], image[x]) != image[g.mult(gens[k], x)])
        throw Error(ErrorKind::InvalidTable, "generator matrices do not satisfy the group relations");
  return image;
}

Representations family_representations(const Group& g) {
  Representations reps;
  auto scalar = [](const Cyclotomic& v) {
    CycMatrix m(1, 1);
    m(0, 0) = v;
    return m;
  };
  switch (g.family()) {
    case GroupFamily::Cyclic: {
      const std::int64_t n = g.order();
      for (std::int64_t k = 0; k < n; ++k) {
        std::vector<CycMatrix> gens;
        if (n > 1) gens.push_back(scalar(Cyclotomic::root_of_unity(n, k)));
        reps.matrices.push_back(extend_to_group(g, gens));
        reps.labels.push_back("chi^" + std::to_string(k));
      }
      break;
    }
    case GroupFamily::AbelianProduct: {
      const auto& orders = g.spec().orders;
      std::int64_t total = 1;
      for (std::int64_t o : orders) total *= o;
      for (std::int64_t x = 0; x < total; ++x) {
        std::vector<std::int64_t> digit(orders.size());
        std::int64_t rest = x;
        for (std::size_t i = orders.size(); i-- > 0;) {
          digit[i] = rest % orders[i];
          rest /= orders[i];
        }
        std::vector<CycMatrix> gens;
        std::string label = "chi(";
        for (std::size_t i = 0; i < orders.size(); ++i) {
          if (orders[i] > 1) gens.push_back(scalar(Cyclotomic::root_of_unity(orders[i], digit[i])));
          label += (i ? "," : "") + std::to_string(digit[i]);
        }
        reps.matrices.push_back(extend_to_group(g, gens));
        reps.labels.push_back(label + ")");
      }
      break;
    }
    case GroupFamily::Dihedral: {
      const std::int64_t s = g.spec().s;
      const Cyclotomic minus_one(-1), one(1);
      // Generators are ordered (c, b).
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
          reps.matrices.push_back(extend_to_group(g, {scalar(i ? minus_one : one), scalar(j ? minus_one : one)}));
          reps.labels.push_back("F(" + std::to_string(i) + "," + std::to_string(j) + ")");
        }
      for (std::int64_t l = 1; l <= s - 1; ++l) {
        CycMatrix c = CycMatrix::Zero(2, 2), b = CycMatrix::Zero(2, 2);
        c(0, 0) = Cyclotomic::root_of_unity(2 * s, l);
        c(1, 1) = Cyclotomic::root_of_unity(2 * s, -l);
        b(0, 1) = Cyclotomic(1);
        b(1, 0) = Cyclotomic(1);
        reps.matrices.push_back(extend_to_group(g, {c, b}));
        reps.labels.push_back("V(" + std::to_string(l) + ")");
      }
      break;
    }
    case GroupFamily::Generic:
      throw Error(ErrorKind::MissingTable, "generic groups have no built-in representations");
  }
  return reps;
}

CharacterTable character_table(const Group& g, const std::optional<ImportedTable>& imported) {
  CharacterTable t;
  t.group_order = g.order();
  for (std::int64_t c = 0; c < g.num_classes(); ++c) {
    t.class_reps.push_back(g.class_rep(c));
    t.class_sizes.push_back(g.class_size(c));
  }
  if (g.family() != GroupFamily::Generic) {
    const Representations reps = family_representations(g);
    for (std::size_t i = 0; i < reps.matrices.size(); ++i) {
      std::vector<Cyclotomic> row;
      for (std::int64_t rep : t.class_reps) row.push_back(trace<Cyclotomic>(reps.matrices[i][rep]));
      t.dims.push_back(reps.matrices[i][0].rows());
      t.values.push_back(std::move(row));
    }
    t.labels = reps.labels;
  } else {
    if (!imported) throw Error(ErrorKind::MissingTable, "generic group requires an imported character table");
    const std::int64_t k = static_cast<std::int64_t>(imported->class_reps.size());
    if (k != g.num_classes())
      throw Error(ErrorKind::InvalidTable, "imported table has the wrong number of classes");
    // Map imported columns onto the computed class order.
    std::vector<std::int64_t> column_of(k, -1);
    for (std::int64_t col = 0; col < k; ++col) {
      const std::int64_t rep = imported->class_reps[col];
      if (rep < 0 || rep >= g.order()) throw Error(ErrorKind::InvalidTable, "class representative out of range");
      const std::int64_t cls = g.class_of(rep);
      if (column_of[cls] != -1) throw Error(ErrorKind::InvalidTable, "two imported columns name the same class");
      if (!imported->class_sizes.empty() && imported->class_sizes[col] != g.class_size(cls))
        throw Error(ErrorKind::InvalidTable, "imported class size disagrees with the group");
      column_of[cls] = col;
    }
    for (std::size_t i = 0; i < imported->values.size(); ++i) {
      const auto& src = imported->values[i];
      if (static_cast<std::int64_t>(src.size()) != k) throw Error(ErrorKind::InvalidTable, "ragged character table");
      std::vector<Cyclotomic> row;
      for (std::int64_t cls = 0; cls < k; ++cls) row.push_back(src[column_of[cls]]);
      const auto dim = row[0].to_rational();
      BigInt d;
      if (!dim || !rational_to_integer(*dim, d) || d < 1)
        throw Error(ErrorKind::InvalidTable, "character value at the identity must be a positive integer");
      t.dims.push_back(d.convert_to<std::int64_t>());
      t.values.push_back(std::move(row));
      t.labels.push_back(i < imported->labels.size() ? imported->labels[i] : "X" + std::to_string(i + 1));
    }
  }
  validate_table(t);
  return t;
}

void validate_table(const CharacterTable& t) {
  const std::int64_t m = t.num_irreducibles();
  if (m != t.num_classes()) throw Error(ErrorKind::InvalidTable, "number of irreducibles differs from number of classes");
  if (m == 0) throw Error(ErrorKind::InvalidTable, "empty character table");
  for (const auto& v : t.values[0])
    if (!v.is_one()) throw Error(ErrorKind::InvalidTable, "first row must be the trivial character");
  std::int64_t sum = 0;
  for (std::int64_t d : t.dims) sum += d * d;
  if (sum != t.group_order) throw Error(ErrorKind::InvalidTable, "sum of squared dimensions differs from |G|");
  for (std::int64_t i = 0; i < m; ++i)
    for (std::int64_t j = i; j < m; ++j) {
      Cyclotomic s(0);
      for (std::int64_t c = 0; c < m; ++c)
        s += Cyclotomic(t.class_sizes[c]) * t.values[i][c] * t.values[j][c].conj();
      if (s != Cyclotomic(i == j ? t.group_order : 0))
        throw Error(ErrorKind::InvalidTable, "row orthogonality fails for rows " + std::to_string(i + 1) + ", " +
                                                 std::to_string(j + 1));
    }
}

bool column_orthogonal(const CharacterTable& t) {
  const std::int64_t m = t.num_irreducibles();
  for (std::int64_t c = 0; c < m; ++c)
    for (std::int64_t d = 0; d < m; ++d) {
      Cyclotomic s(0);
      for (std::int64_t i = 0; i < m; ++i) s += t.values[i][c] * t.values[i][d].conj();
      const Cyclotomic expected = c == d ? Cyclotomic(Rational(t.group_order, t.class_sizes[c])) : Cyclotomic(0);
      if (s != expected) return false;
    }
  return true;
}

std::vector<BigInt> char_decompose(const std::vector<Cyclotomic>& f, const CharacterTable& t) {
  const std::int64_t m = t.num_irreducibles();
  if (static_cast<std::int64_t>(f.size()) != t.num_classes())
    throw Error(ErrorKind::Domain, "class function has the wrong length");
  std::vector<BigInt> out(m);
  for (std::int64_t i = 0; i < m; ++i) {
    Cyclotomic s(0);
    for (std::int64_t c = 0; c < m; ++c) {
      if (f[c].is_zero()) continue;
      s += Cyclotomic(t.class_sizes[c]) * f[c] * t.values[i][c].conj();
    }
    const auto r = s.to_rational();
    BigInt k;
    if (!r || !rational_to_integer(*r / t.group_order, k) || k < 0)
      throw Error(ErrorKind::NotACharacter, "class function is not a character (bad multiplicity for irreducible " +
                                                std::to_string(i + 1) + ")");
    out[i] = k;
  }
  return out;
}

std::vector<Cyclotomic> class_product(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
  std::vector<Cyclotomic> out(a.size());
  for (std::size_t c = 0; c < a.size(); ++c) out[c] = a[c] * b[c];
  return out;
}

}  // namespace greenring
