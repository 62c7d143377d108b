#include "greenring/io.hpp"

#include "greenring/error.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <sstream>

namespace greenring {
namespace {

std::string strip_spaces(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; }), s.end());
  return s;
}

std::int64_t phi_of(std::int64_t conductor) {
  return static_cast<std::int64_t>(cyclotomic_polynomial(conductor).size()) - 1;
}

std::int64_t as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(ErrorKind::Parse, std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::vector<std::int64_t> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorKind::Parse, std::string(what) + " must be an array");
  std::vector<std::int64_t> out;
  for (const Json& x : j) out.push_back(as_int(x, what));
  return out;
}

CycMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorKind::Parse, "matrix must be a non-empty array of rows");
  const auto rows = static_cast<Index>(j.size());
  const auto cols = static_cast<Index>(j[0].size());
  CycMatrix m(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    if (!j[r].is_array() || static_cast<Index>(j[r].size()) != cols) throw Error(ErrorKind::Parse, "ragged matrix");
    for (Index c = 0; c < cols; ++c) m(r, c) = cyclotomic_from_json(j[r][c]);
  }
  return m;
}

struct GenericImport {
  std::vector<std::vector<std::int64_t>> mult;
  std::vector<std::int64_t> generators;
  std::vector<std::string> generator_names;
  std::optional<ImportedTable> table;
  std::optional<std::vector<std::vector<CycMatrix>>> generator_matrices;
};

GenericImport generic_from_json(const Json& j) {
  GenericImport out;
  if (!j.contains("mult")) throw Error(ErrorKind::Parse, "generic group needs a multiplication table \"mult\"");
  for (const Json& row : j.at("mult")) out.mult.push_back(int_list(row, "mult"));
  if (j.contains("order") && as_int(j.at("order"), "order") != static_cast<std::int64_t>(out.mult.size()))
    throw Error(ErrorKind::InvalidGroup, "order does not match the multiplication table");
  if (j.contains("generators")) out.generators = int_list(j.at("generators"), "generators");
  if (j.contains("generator_names")) out.generator_names = j.at("generator_names").get<std::vector<std::string>>();
  if (j.contains("character_table")) {
    const Json& t = j.at("character_table");
    ImportedTable it;
    for (const Json& row : t.at("values")) {
      std::vector<Cyclotomic> r;
      for (const Json& v : row) r.push_back(cyclotomic_from_json(v));
      it.values.push_back(std::move(r));
    }
    it.class_reps = int_list(t.at("class_reps"), "class_reps");
    it.class_sizes = int_list(t.at("class_sizes"), "class_sizes");
    if (t.contains("labels")) it.labels = t.at("labels").get<std::vector<std::string>>();
    out.table = std::move(it);
  }
  if (j.contains("representations")) {
    std::vector<std::vector<CycMatrix>> reps;
    for (const Json& irrep : j.at("representations")) {
      std::vector<CycMatrix> mats;
      for (const Json& m : irrep) mats.push_back(matrix_from_json(m));
      reps.push_back(std::move(mats));
    }
    out.generator_matrices = std::move(reps);
  }
  return out;
}

}  // namespace

Json bigint_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return x.convert_to<std::int64_t>();
  return x.str();
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return BigInt(j.get<std::string>());
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "invalid integer string");
    }
  }
  throw Error(ErrorKind::Parse, "expected an integer");
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) {
    try {
      return Rational(strip_spaces(j.get<std::string>()));
    } catch (const std::exception&) {
      throw Error(ErrorKind::Parse, "invalid rational string");
    }
  }
  throw Error(ErrorKind::Parse, "expected a rational number");
}

Json cyclotomic_to_json(const Cyclotomic& x, std::int64_t conductor) {
  Cyclotomic v = x;
  if (v.to_rational()) v = Cyclotomic(*v.to_rational());
  else if (conductor > 0) v = v.embed(conductor);
  Json terms = Json::array();
  const auto& c = v.coeffs();
  for (std::size_t e = 0; e < c.size(); ++e) {
    if (c[e].is_zero()) continue;
    terms.push_back({static_cast<std::int64_t>(e), bigint_to_json(numerator(c[e])), bigint_to_json(denominator(c[e]))});
  }
  return Json{{"conductor", v.conductor()}, {"terms", terms}};
}

Cyclotomic cyclotomic_from_json(const Json& j) {
  if (j.is_number_integer() || j.is_string()) return Cyclotomic(rational_from_json(j));
  if (!j.is_object() || !j.contains("conductor") || !j.contains("terms"))
    throw Error(ErrorKind::Parse, "cyclotomic value needs \"conductor\" and \"terms\"");
  const std::int64_t n = as_int(j.at("conductor"), "conductor");
  if (n < 1) throw Error(ErrorKind::InvalidConductor, "conductor must be positive");
  const std::int64_t phi = phi_of(n);
  std::vector<Rational> coeffs(static_cast<std::size_t>(phi), Rational(0));
  std::int64_t last = -1;
  for (const Json& t : j.at("terms")) {
    if (!t.is_array() || t.size() != 3) throw Error(ErrorKind::Parse, "cyclotomic term must be [exponent, num, den]");
    const std::int64_t e = as_int(t[0], "exponent");
    if (e <= last || e >= phi) throw Error(ErrorKind::Parse, "cyclotomic exponents must increase and lie below phi(N)");
    last = e;
    const BigInt den = bigint_from_json(t[2]);
    if (den <= 0) throw Error(ErrorKind::Parse, "denominator must be positive");
    coeffs[static_cast<std::size_t>(e)] = Rational(bigint_from_json(t[1]), den);
  }
  return Cyclotomic::from_coeffs(n, std::move(coeffs));
}

Json green_to_json(const GreenElement& x) {
  const GreenRing& r = *x.ring();
  Json coeffs = Json::array();
  for (Index u = 0; u < r.rank(); ++u) {
    if (x.coeffs()(u).is_zero()) continue;
    const BasisLabel b = r.label(u);
    coeffs.push_back({b.i + 1, b.j, bigint_to_json(x.coeffs()(u))});
  }
  return Json{{"coeffs", coeffs}};
}

GreenElement green_from_json(const RingPtr& ring, const Json& j) {
  GreenElement out = GreenElement::zero(ring);
  for (const Json& t : j.at("coeffs")) {
    if (!t.is_array() || t.size() != 3) throw Error(ErrorKind::Parse, "Green coefficient must be [i, j, c]");
    out += bigint_from_json(t[2]) * GreenElement::basis(ring, as_int(t[0], "i") - 1, as_int(t[1], "j"));
  }
  return out;
}

Json stable_to_json(const StableElement& x) {
  const GreenRing& r = *x.ring();
  Json coeffs = Json::array();
  for (Index u = 0; u < x.coeffs().size(); ++u) {
    if (x.coeffs()(u).is_zero()) continue;
    const BasisLabel b = stable_label(r, u);
    coeffs.push_back({b.i + 1, b.j, cyclotomic_to_json(x.coeffs()(u), r.datum().conductor())});
  }
  return Json{{"coeffs", coeffs}};
}

Json summands_to_json(const std::vector<Summand>& s) {
  Json out = Json::array();
  for (const Summand& x : s) out.push_back({x.i + 1, x.j, bigint_to_json(x.multiplicity)});
  return out;
}

std::string green_pretty(const GreenElement& x) {
  const GreenRing& r = *x.ring();
  std::ostringstream os;
  bool first = true;
  for (Index u = 0; u < r.rank(); ++u) {
    BigInt c = x.coeffs()(u);
    if (c.is_zero()) continue;
    const BasisLabel b = r.label(u);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (c < 0) c = -c;
    if (c != 1) os << c << " ";
    os << "M[" << b.i + 1 << "," << b.j << "]";
    first = false;
  }
  return first ? "0" : os.str();
}

Json error_to_json(ErrorKind kind, const std::string& message) {
  return Json{{"error", Json{{"kind", to_string(kind)}, {"message", message}}}};
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Io, "cannot read " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, path.string() + ": " + e.what());
  }
}

DatumPtr datum_from_json(const Json& j, const std::filesystem::path& base_dir) {
  try {
    if (!j.is_object() || !j.contains("group")) throw Error(ErrorKind::Parse, "datum needs a \"group\" object");
    Json gj = j.at("group");
    if (gj.contains("file")) {
      Json imported = read_json_file(base_dir / gj.at("file").get<std::string>());
      imported.merge_patch(gj);
      gj = std::move(imported);
    }
    const std::string family = gj.value("family", std::string("generic"));

    std::optional<Group> group;
    GenericImport generic;
    if (family == "cyclic") {
      group = Group::cyclic(as_int(gj.at("order"), "order"));
    } else if (family == "abelian" || family == "abelian-product") {
      group = Group::abelian(int_list(gj.at("orders"), "orders"));
    } else if (family == "dihedral") {
      group = Group::dihedral(as_int(gj.at("s"), "s"));
    } else if (family == "generic" || family == "generic-table") {
      generic = generic_from_json(gj);
      group = Group::from_table(generic.mult, generic.generators, generic.generator_names);
    } else {
      throw Error(ErrorKind::Parse, "unknown group family \"" + family + "\"");
    }

    if (!j.contains("chi")) throw Error(ErrorKind::Parse, "datum needs \"chi\"");
    std::int64_t chi = 0;
    const Json& cj = j.at("chi");
    if (cj.is_number_integer()) {
      chi = cj.get<std::int64_t>() - 1;
    } else if (cj.is_string()) {
      const CharacterTable t = character_table(*group, generic.table);
      const std::string want = strip_spaces(cj.get<std::string>());
      const auto it = std::find(t.labels.begin(), t.labels.end(), want);
      if (it == t.labels.end()) throw Error(ErrorKind::InvalidDatum, "no irreducible labelled \"" + want + "\"");
      chi = static_cast<std::int64_t>(it - t.labels.begin());
    } else {
      throw Error(ErrorKind::Parse, "chi must be an index or a label");
    }

    if (!j.contains("g")) throw Error(ErrorKind::Parse, "datum needs \"g\"");
    const Json& g = j.at("g");
    const std::int64_t elem = g.is_number_integer() ? g.get<std::int64_t>() : group->parse_element(g.get<std::string>());
    const Rational mu = j.contains("mu") ? rational_from_json(j.at("mu")) : Rational(0);

    return GroupDatum::create(DatumInput{std::move(*group), generic.table, generic.generator_matrices, chi, elem, mu});
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
}

DatumPtr load_datum(const std::filesystem::path& path) {
  return datum_from_json(read_json_file(path), path.parent_path());
}

BasisLabel parse_label(const std::string& text) {
  const std::string s = strip_spaces(text);
  const auto comma = s.find(',');
  if (comma == std::string::npos) throw Error(ErrorKind::Parse, "expected a basis label i,j");
  try {
    std::size_t p1 = 0, p2 = 0;
    const std::int64_t i = std::stoll(s.substr(0, comma), &p1);
    const std::int64_t j = std::stoll(s.substr(comma + 1), &p2);
    if (p1 != comma || p2 != s.size() - comma - 1) throw Error(ErrorKind::Parse, "expected a basis label i,j");
    return {i - 1, j};
  } catch (const std::logic_error&) {
    throw Error(ErrorKind::Parse, "expected a basis label i,j");
  }
}

}  // namespace greenring
