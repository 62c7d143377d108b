#include "greenring/datum.hpp"

#include "greenring/error.hpp"

#include <algorithm>
#include <numeric>

namespace greenring {
namespace {

std::int64_t find_row(const CharacterTable& t, const std::vector<Cyclotomic>& row) {
  for (std::int64_t i = 0; i < t.num_irreducibles(); ++i)
    if (t.values[i] == row) return i;
  return -1;
}

}  // namespace

std::shared_ptr<const GroupDatum> GroupDatum::create(DatumInput input) {
  std::shared_ptr<GroupDatum> d(new GroupDatum(std::move(input.group)));
  const Group& G = d->group_;
  if (!input.mu.is_zero())
    throw Error(ErrorKind::UnsupportedNonNilpotent, "mu must be 0 (only nilpotent type is supported)");
  if (input.g < 0 || input.g >= G.order()) throw Error(ErrorKind::InvalidDatum, "g is not an element of G");
  if (!G.is_central(input.g)) throw Error(ErrorKind::InvalidDatum, "g not central");

  CharacterTable raw = character_table(G, input.imported_table);
  if (input.chi < 0 || input.chi >= raw.num_irreducibles())
    throw Error(ErrorKind::InvalidDatum, "chi does not name an irreducible character");
  if (raw.dims[input.chi] != 1) throw Error(ErrorKind::InvalidDatum, "chi not linear");
  d->chi_ = input.chi;
  d->g_ = input.g;

  const Cyclotomic q = raw.values[input.chi][G.class_of(input.g)];
  const auto n = order_of_root(q);
  if (!n) throw Error(ErrorKind::InvalidDatum, "chi(g) is not a root of unity");
  if (*n < 2) throw Error(ErrorKind::Unsupported, "chi(g) = 1; the order of chi(g) must be at least 2");
  d->n_ = *n;

  std::int64_t l = 1;
  for (std::int64_t c = 0; c < raw.num_classes(); ++c) {
    const auto o = order_of_root(raw.values[input.chi][c]);
    if (!o) throw Error(ErrorKind::InvalidTable, "linear character value is not a root of unity");
    l = std::lcm(l, *o);
  }
  d->l_ = l;
  if (l % d->n_ != 0) throw Error(ErrorKind::InternalConsistency, "order of chi(g) does not divide order of chi");

  d->conductor_ = std::lcm(G.exponent(), 2 * d->n_);
  for (const auto& row : raw.values)
    for (const auto& v : row)
      if (d->conductor_ % v.conductor() != 0)
        throw Error(ErrorKind::InvalidTable, "character value outside Q(zeta_N) for N = lcm(exponent, 2n)");
  d->table_ = raw.embedded(d->conductor_);
  d->q_ = q.embed(d->conductor_);

  const CharacterTable& t = d->table_;
  for (std::int64_t h = 0; h < G.order(); ++h) d->chi_values_.push_back(t.values[d->chi_][G.class_of(h)]);

  const std::int64_t m = t.num_irreducibles();
  Permutations& p = d->perms_;
  p.tau.assign(m, -1);
  p.tau_inv.assign(m, -1);
  p.star.assign(m, -1);
  std::vector<Cyclotomic> chi_inv(t.num_classes());
  for (std::int64_t c = 0; c < t.num_classes(); ++c) chi_inv[c] = t.values[d->chi_][c].conj();
  for (std::int64_t i = 0; i < m; ++i) {
    const std::int64_t ti = find_row(t, class_product(chi_inv, t.values[i]));
    std::vector<Cyclotomic> conj_row;
    for (const auto& v : t.values[i]) conj_row.push_back(v.conj());
    const std::int64_t si = find_row(t, conj_row);
    if (ti < 0 || si < 0) throw Error(ErrorKind::InternalConsistency, "character table is not closed under chi^-1 or conjugation");
    p.tau[i] = ti;
    p.star[i] = si;
  }
  for (std::int64_t i = 0; i < m; ++i) {
    if (p.tau_inv[p.tau[i]] != -1) throw Error(ErrorKind::InternalConsistency, "tau is not a permutation");
    p.tau_inv[p.tau[i]] = i;
  }

  d->fusion_.assign(m, std::vector<std::vector<BigInt>>(m));
  for (std::int64_t i = 0; i < m; ++i)
    for (std::int64_t j = i; j < m; ++j) {
      d->fusion_[i][j] = char_decompose(class_product(t.values[i], t.values[j]), t);
      d->fusion_[j][i] = d->fusion_[i][j];
    }

  if (G.family() != GroupFamily::Generic) {
    d->reps_ = family_representations(G);
  } else if (input.imported_generator_matrices) {
    Representations reps;
    for (const auto& gens : *input.imported_generator_matrices) reps.matrices.push_back(extend_to_group(G, gens));
    reps.labels = t.labels;
    if (static_cast<std::int64_t>(reps.matrices.size()) != m)
      throw Error(ErrorKind::InvalidTable, "imported representations must cover every irreducible");
    d->reps_ = std::move(reps);
  } else if (std::all_of(t.dims.begin(), t.dims.end(), [](std::int64_t x) { return x == 1; })) {
    Representations reps;
    for (std::int64_t i = 0; i < m; ++i) {
      std::vector<CycMatrix> mats;
      for (std::int64_t h = 0; h < G.order(); ++h) mats.push_back(CycMatrix::Constant(1, 1, t.values[i][G.class_of(h)]));
      reps.matrices.push_back(std::move(mats));
    }
    reps.labels = t.labels;
    d->reps_ = std::move(reps);
  }
  if (d->reps_) {
    // Representations must agree with the table row for row.
    for (std::int64_t i = 0; i < m; ++i) {
      for (auto& mat : d->reps_->matrices[i])
        for (Index r = 0; r < mat.rows(); ++r)
          for (Index c = 0; c < mat.cols(); ++c) mat(r, c) = mat(r, c).embed(d->conductor_);
      for (std::int64_t c = 0; c < t.num_classes(); ++c)
        if (trace<Cyclotomic>(d->reps_->matrices[i][t.class_reps[c]]) != t.values[i][c])
          throw Error(ErrorKind::InvalidTable, "representation " + std::to_string(i + 1) + " disagrees with the character table");
    }
  }
  return d;
}

std::int64_t GroupDatum::tau(std::int64_t i, std::int64_t power) const {
  const auto& perm = power >= 0 ? perms_.tau : perms_.tau_inv;
  for (std::int64_t k = 0; k < (power >= 0 ? power : -power); ++k) i = perm[i];
  return i;
}

const Representations& GroupDatum::representations() const {
  if (!reps_) throw Error(ErrorKind::UnsupportedRepresentation, "no explicit matrices for the simple modules of this group");
  return *reps_;
}

Cyclotomic GroupDatum::antipode_trace() const {
  Cyclotomic total(0);
  for (std::int64_t k = 0; k < n_; ++k) {
    const std::int64_t target = group_.power(g_, -k);
    const Cyclotomic tail = q_.pow(-k * (k + 1) / 2);
    for (std::int64_t h = 0; h < group_.order(); ++h) {
      if (group_.mult(h, h) != target) continue;
      Cyclotomic term = chi_values_[h].pow(-k) * tail;
      total += k % 2 ? -term : term;
    }
  }
  return total;
}

GaugeComparison compare_gauge(const GroupDatum& left, const GroupDatum& right) {
  GaugeComparison out;
  out.trace_left = left.antipode_trace();
  out.trace_right = right.antipode_trace();
  out.traces_differ = out.trace_left != out.trace_right;
  const Group& G = left.group();
  if (G.family() == GroupFamily::Cyclic && right.group().family() == GroupFamily::Cyclic &&
      G.order() == right.group().order() && left.l() == G.order()) {
    bool found = false;
    const std::int64_t gen = G.generators().empty() ? 0 : G.generators()[0];
    for (std::int64_t i = 1; i <= G.order() && !found; ++i)
      if (std::gcd(i, G.order()) == 1 && left.chi_at(gen).pow(i) == right.chi_at(gen)) found = true;
    out.cyclic_automorphism = found;
  }
  return out;
}

}  // namespace greenring
