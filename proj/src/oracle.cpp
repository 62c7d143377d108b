#include "greenring/oracle.hpp"

#include "greenring/error.hpp"

#include <map>

namespace greenring {
namespace {

CycMatrix identity(Index d) {
  CycMatrix out = CycMatrix::Zero(d, d);
  for (Index k = 0; k < d; ++k) out(k, k) = Cyclotomic(1);
  return out;
}

CycMatrix scaled(const CycMatrix& a, const Cyclotomic& c) {
  CycMatrix out = a;
  for (Index r = 0; r < out.rows(); ++r)
    for (Index k = 0; k < out.cols(); ++k)
      if (!out(r, k).is_zero()) out(r, k) = out(r, k) * c;
  return out;
}

CycMatrix add(const CycMatrix& a, const CycMatrix& b) {
  CycMatrix out = a;
  for (Index r = 0; r < out.rows(); ++r)
    for (Index k = 0; k < out.cols(); ++k)
      if (!b(r, k).is_zero()) out(r, k) += b(r, k);
  return out;
}

// Character values of the G-invariant subspace spanned by `w`, one per class.
std::vector<Cyclotomic> subspace_character(const ModuleRep& mod, const SubspaceBasis<Cyclotomic>& w) {
  const CharacterTable& t = mod.datum->table();
  std::vector<Cyclotomic> out;
  for (std::int64_t rep : t.class_reps) out.push_back(restricted_trace<Cyclotomic>(mod.g_action(rep), w));
  return out;
}

std::vector<Cyclotomic> difference(const std::vector<Cyclotomic>& a, const std::vector<Cyclotomic>& b) {
  std::vector<Cyclotomic> out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = a[k] - b[k];
  return out;
}

std::vector<BigInt> decompose_or_throw(const std::vector<Cyclotomic>& f, const CharacterTable& t) {
  try {
    return char_decompose(f, t);
  } catch (const Error& e) {
    throw Error(ErrorKind::InconsistentModule, std::string("subquotient is not a kG-module: ") + e.what());
  }
}

void require_same_datum(const ModuleRep& a, const ModuleRep& b) {
  if (a.datum.get() != b.datum.get()) throw Error(ErrorKind::Domain, "modules over different data");
}

}  // namespace

ModuleRep module_build(const DatumPtr& datum, std::int64_t i, std::int64_t j) {
  const GroupDatum& d = *datum;
  if (i < 0 || i >= d.m() || j < 1 || j > d.n())
    throw Error(ErrorKind::Domain, "module label out of range: (" + std::to_string(i + 1) + "," + std::to_string(j) + ")");
  const Representations& reps = d.representations();
  const Index dv = reps.matrices[i][0].rows();
  const Index dim = dv * j;
  ModuleRep out{datum, {}, CycMatrix::Zero(dim, dim)};
  for (std::int64_t h = 0; h < d.group().order(); ++h) {
    CycMatrix mat = CycMatrix::Zero(dim, dim);
    const Cyclotomic chi_inv = d.chi_at(h).inverse();
    Cyclotomic factor(1);
    for (std::int64_t k = 0; k < j; ++k) {
      mat.block(k * dv, k * dv, dv, dv) = scaled(reps.matrices[i][h], factor);
      factor = factor * chi_inv;
    }
    out.group_action.push_back(std::move(mat));
  }
  for (std::int64_t k = 0; k + 1 < j; ++k)
    for (Index t = 0; t < dv; ++t) out.y((k + 1) * dv + t, k * dv + t) = Cyclotomic(1);
  return out;
}

ModuleRep module_tensor(const ModuleRep& a, const ModuleRep& b) {
  require_same_datum(a, b);
  const GroupDatum& d = *a.datum;
  ModuleRep out{a.datum, {}, {}};
  for (std::int64_t h = 0; h < d.group().order(); ++h)
    out.group_action.push_back(kronecker<Cyclotomic>(a.g_action(h), b.g_action(h)));
  out.y = add(kronecker<Cyclotomic>(a.y, b.g_action(d.g())), kronecker<Cyclotomic>(identity(a.dim()), b.y));
  return out;
}

ModuleRep module_dual(const ModuleRep& a) {
  const GroupDatum& d = *a.datum;
  const Group& G = d.group();
  ModuleRep out{a.datum, {}, {}};
  for (std::int64_t h = 0; h < G.order(); ++h) out.group_action.push_back(a.g_action(G.inverse(h)).transpose());
  out.y = scaled(multiply<Cyclotomic>(a.y, a.g_action(G.inverse(d.g()))).transpose(), Cyclotomic(-1));
  return out;
}

ModuleRep direct_sum(const ModuleRep& a, const ModuleRep& b) {
  require_same_datum(a, b);
  const Index da = a.dim(), db = b.dim();
  ModuleRep out{a.datum, {}, CycMatrix::Zero(da + db, da + db)};
  for (std::size_t h = 0; h < a.group_action.size(); ++h) {
    CycMatrix mat = CycMatrix::Zero(da + db, da + db);
    mat.topLeftCorner(da, da) = a.group_action[h];
    mat.bottomRightCorner(db, db) = b.group_action[h];
    out.group_action.push_back(std::move(mat));
  }
  out.y.topLeftCorner(da, da) = a.y;
  out.y.bottomRightCorner(db, db) = b.y;
  return out;
}

ModuleRep regular_module(const DatumPtr& datum) {
  const GroupDatum& d = *datum;
  const Group& G = d.group();
  const std::int64_t order = G.order(), n = d.n();
  const Index dim = static_cast<Index>(n * order);
  ModuleRep out{datum, {}, CycMatrix::Zero(dim, dim)};
  for (std::int64_t k = 0; k < order; ++k) {
    CycMatrix mat = CycMatrix::Zero(dim, dim);
    const Cyclotomic chi_inv = d.chi_at(k).inverse();
    Cyclotomic factor(1);
    for (std::int64_t a = 0; a < n; ++a) {
      for (std::int64_t h = 0; h < order; ++h) mat(a * order + G.mult(k, h), a * order + h) = factor;
      factor = factor * chi_inv;
    }
    out.group_action.push_back(std::move(mat));
  }
  for (std::int64_t a = 0; a + 1 < n; ++a)
    for (std::int64_t h = 0; h < order; ++h) out.y((a + 1) * order + h, a * order + h) = Cyclotomic(1);
  return out;
}

void verify_relations(const ModuleRep& mod) {
  const GroupDatum& d = *mod.datum;
  const Group& G = d.group();
  if (static_cast<std::int64_t>(mod.group_action.size()) != G.order())
    throw Error(ErrorKind::InconsistentModule, "module needs one matrix per group element");
  for (std::int64_t s : G.generators())
    for (std::int64_t h = 0; h < G.order(); ++h)
      if (multiply<Cyclotomic>(mod.g_action(s), mod.g_action(h)) != mod.g_action(G.mult(s, h)))
        throw Error(ErrorKind::InconsistentModule, "group matrices are not a homomorphism");
  if (mod.g_action(0) != identity(mod.dim())) throw Error(ErrorKind::InconsistentModule, "identity does not act trivially");
  CycMatrix power = identity(mod.dim());
  for (std::int64_t k = 0; k < d.n(); ++k) power = multiply<Cyclotomic>(power, mod.y);
  if (!is_zero_matrix<Cyclotomic>(power)) throw Error(ErrorKind::InconsistentModule, "y^n is not zero");
  for (std::int64_t s : G.generators()) {
    const CycMatrix lhs = multiply<Cyclotomic>(mod.y, mod.g_action(s));
    const CycMatrix rhs = scaled(multiply<Cyclotomic>(mod.g_action(s), mod.y), d.chi_at(s));
    if (lhs != rhs) throw Error(ErrorKind::InconsistentModule, "y h = chi(h) h y fails");
  }
}

std::vector<Summand> module_decompose(const ModuleRep& mod) {
  const GroupDatum& d = *mod.datum;
  const CharacterTable& t = d.table();
  const std::int64_t n = d.n(), m = d.m();

  // c[k] for k = 1..n+1 (c[n+1] = 0): composition factors of the y-image filtration.
  std::vector<std::vector<BigInt>> c(static_cast<std::size_t>(n + 2), std::vector<BigInt>(m, BigInt(0)));
  CycMatrix power = identity(mod.dim());
  std::vector<Cyclotomic> prev_char = subspace_character(mod, column_space<Cyclotomic>(power));
  for (std::int64_t k = 1; k <= n; ++k) {
    power = multiply<Cyclotomic>(mod.y, power);
    std::vector<Cyclotomic> cur_char;
    if (is_zero_matrix<Cyclotomic>(power))
      cur_char.assign(t.class_reps.size(), Cyclotomic(0));
    else
      cur_char = subspace_character(mod, column_space<Cyclotomic>(power));
    c[k] = decompose_or_throw(difference(prev_char, cur_char), t);
    prev_char = std::move(cur_char);
  }
  for (const auto& v : prev_char)
    if (!v.is_zero()) throw Error(ErrorKind::InconsistentModule, "y is not nilpotent of order n");

  std::vector<Summand> out;
  Index total = 0;
  for (std::int64_t i = 0; i < m; ++i)
    for (std::int64_t j = 1; j <= n; ++j) {
      const BigInt mult = c[j][d.tau(i, j - 1)] - c[j + 1][d.tau(i, j)];
      if (mult < 0) throw Error(ErrorKind::InconsistentModule, "negative multiplicity in decomposition");
      if (mult.is_zero()) continue;
      out.push_back({i, j, mult});
      total += mult.convert_to<Index>() * j * d.dim(i);
    }
  if (total != mod.dim()) throw Error(ErrorKind::InconsistentModule, "decomposition does not reconcile with the dimension");
  return out;
}

IntVector summands_to_vector(const std::vector<Summand>& s, std::int64_t n, std::int64_t m) {
  IntVector out = IntVector::Zero(n * m);
  for (const Summand& x : s) out(x.i * n + x.j - 1) += x.multiplicity;
  return out;
}

Index hom_dim(const ModuleRep& a, const ModuleRep& b) {
  require_same_datum(a, b);
  const Group& G = a.datum->group();
  std::vector<std::pair<const CycMatrix*, const CycMatrix*>> gens;
  for (std::int64_t s : G.generators()) gens.emplace_back(&a.g_action(s), &b.g_action(s));
  gens.emplace_back(&a.y, &b.y);
  const Index da = a.dim(), db = b.dim();
  // Unknown X is db x da, vectorised column-major: X(r, c) -> c*db + r.
  const Index unknowns = da * db;
  CycMatrix system = CycMatrix::Zero(static_cast<Index>(gens.size()) * unknowns, unknowns);
  Index row0 = 0;
  for (const auto& [ra, rb] : gens) {
    // (X ra - rb X)(r, c) = sum_k X(r, k) ra(k, c) - sum_k rb(r, k) X(k, c).
    for (Index r = 0; r < db; ++r)
      for (Index c = 0; c < da; ++c) {
        const Index row = row0 + c * db + r;
        for (Index k = 0; k < da; ++k)
          if (!(*ra)(k, c).is_zero()) system(row, k * db + r) += (*ra)(k, c);
        for (Index k = 0; k < db; ++k)
          if (!(*rb)(r, k).is_zero()) system(row, c * db + k) -= (*rb)(r, k);
      }
    row0 += unknowns;
  }
  return unknowns - rank<Cyclotomic>(system);
}

StructureProbe structure_probe(const ModuleRep& mod) {
  const GroupDatum& d = *mod.datum;
  const CharacterTable& t = d.table();
  StructureProbe out;
  const SubspaceBasis<Cyclotomic> kernel = null_space<Cyclotomic>(mod.y);
  out.socle = decompose_or_throw(subspace_character(mod, kernel), t);
  std::vector<Cyclotomic> whole;
  for (std::int64_t rep : t.class_reps) whole.push_back(trace<Cyclotomic>(mod.g_action(rep)));
  std::vector<Cyclotomic> image(t.class_reps.size(), Cyclotomic(0));
  if (!is_zero_matrix<Cyclotomic>(mod.y)) image = subspace_character(mod, column_space<Cyclotomic>(mod.y));
  out.top = decompose_or_throw(difference(whole, image), t);
  CycMatrix power = identity(mod.dim());
  for (std::int64_t k = 0; k <= d.n(); ++k) {
    out.radical_dims.push_back(rank<Cyclotomic>(power));
    power = multiply<Cyclotomic>(mod.y, power);
  }
  return out;
}

Cyclotomic pbw_antipode_trace(const GroupDatum& d) {
  const Group& G = d.group();
  const std::int64_t n = d.n();
  using Pbw = std::map<std::pair<std::int64_t, std::int64_t>, Cyclotomic>;  // (a, h) -> coefficient of y^a h
  auto mul = [&](const Pbw& x, const Pbw& y) {
    Pbw out;
    // (y^a h)(y^b k) = chi(h)^-b y^(a+b) hk, zero once a+b >= n.
    for (const auto& [kx, cx] : x)
      for (const auto& [ky, cy] : y) {
        const std::int64_t deg = kx.first + ky.first;
        if (deg >= n) continue;
        Cyclotomic v = cx * cy * d.chi_at(kx.second).pow(-ky.first);
        Cyclotomic& slot = out[{deg, G.mult(kx.second, ky.second)}];
        slot += v;
      }
    return out;
  };
  const Pbw s_y = {{{1, G.inverse(d.g())}, Cyclotomic(-1)}};
  Cyclotomic total(0);
  for (std::int64_t h = 0; h < G.order(); ++h) {
    Pbw s = {{{0, G.inverse(h)}, Cyclotomic(1)}};
    for (std::int64_t a = 0; a < n; ++a) {
      const auto it = s.find({a, h});
      if (it != s.end()) total += it->second;
      s = mul(s, s_y);
    }
  }
  return total;
}

}  // namespace greenring
