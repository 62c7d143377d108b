#pragma once

#include "greenring/greenring.hpp"

#include <vector>

namespace greenring {

/// Evaluation of a at the conjugacy classes: a acts on W_c by omega^t_c with
/// omega = zeta_l, and the classes split into
/// Omega_1 (t = 0), Omega_2 (t != 0, (l/n) does not divide t), Omega_3 (t != 0, (l/n) | t).
struct OmegaCounts {
  std::vector<std::int64_t> t;         // per class
  std::vector<Cyclotomic> values;      // omega^t = chi(rep)^-1
  std::vector<int> part;               // 1, 2 or 3 per class
  std::int64_t d1 = 0, d2 = 0, d3 = 0;
};

OmegaCounts omega_counts(const GroupDatum& datum);

/// theta = (1 - a)(1 + a^n + a^2n + ... + a^((l/n - 1) n)).
GreenElement theta(const RingPtr& ring);

/// M[1,n] theta, the generator of the Jacobson radical.
GreenElement radical_generator(const RingPtr& ring);

/// Rank over Z of the ideal generated by `gen`, from the rows gen * M_u.
std::int64_t ideal_rank(const GreenElement& gen);

/// Value of an element of r(kG) at conjugacy class c: sum_i x_i chi_i(c).
Cyclotomic evaluate_at_class(const GroupDatum& datum, const IntVector& x, std::int64_t c);

/// Univariate polynomial over Q(zeta), lowest degree first, no trailing zeros.
using CycPoly = std::vector<Cyclotomic>;

CycPoly poly_normalize(CycPoly p);
CycPoly poly_multiply(const CycPoly& a, const CycPoly& b);
CycPoly poly_derivative(const CycPoly& p);
CycPoly poly_remainder(CycPoly a, const CycPoly& b);
/// Monic gcd.
CycPoly poly_gcd(CycPoly a, CycPoly b);
std::int64_t poly_degree(const CycPoly& p);
/// Number of distinct roots in an algebraic closure: deg p - deg gcd(p, p').
std::int64_t distinct_root_count(const CycPoly& p);

/// (x - w - 1) F_n(w, x) for w = omega^t_c.
CycPoly root_polynomial(const GroupDatum& datum, const Cyclotomic& w);

struct RootCount {
  std::int64_t class_index = 0;
  std::int64_t distinct_roots = 0;
  bool in_omega3 = false;
};

std::vector<RootCount> root_counts(const GroupDatum& datum);

struct RadicalReport {
  OmegaCounts omega;
  GreenElement theta;
  GreenElement generator;
  std::int64_t rank = 0;
  bool nilpotency_checked = false;  // generator^2 == 0
  std::vector<RootCount> roots;
  std::int64_t simple_quotient_count = 0;  // sum of distinct root counts
};

RadicalReport radical_report(const RingPtr& ring);

}  // namespace greenring
