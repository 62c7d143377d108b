#pragma once

#include "greenring/datum.hpp"

#include <string>
#include <utility>
#include <vector>

namespace fixtures {

inline greenring::DatumPtr make(greenring::Group g, std::int64_t chi, std::int64_t elem) {
  return greenring::GroupDatum::create(greenring::DatumInput{std::move(g), std::nullopt, std::nullopt, chi, elem, 0});
}

inline std::int64_t row_labelled(const greenring::Group& g, const std::string& label) {
  const auto reps = greenring::family_representations(g);
  for (std::size_t i = 0; i < reps.labels.size(); ++i)
    if (reps.labels[i] == label) return static_cast<std::int64_t>(i);
  return -1;
}

/// Taft algebra: G = C_n generated by g, chi(g) = zeta_n^k.
inline greenring::DatumPtr taft(std::int64_t n, std::int64_t k = 1) { return make(greenring::Group::cyclic(n), k, 1); }

/// Generalized Taft algebra: G = C_2n generated by g, chi(g) = zeta_n.
inline greenring::DatumPtr generalized_taft(std::int64_t n) { return make(greenring::Group::cyclic(2 * n), 2, 1); }

/// G = C_4 = <h>, g = h^2, chi(h) = i: n = 2 while l = 4.
inline greenring::DatumPtr c4_square() { return make(greenring::Group::cyclic(4), 1, 2); }

/// Klein four-group with chi(g1) = -1, chi(g2) = 1 and g = g1.
inline greenring::DatumPtr klein() {
  greenring::Group g = greenring::Group::abelian({2, 2});
  const std::int64_t chi = row_labelled(g, "chi(1,0)");
  const std::int64_t elem = g.parse_element("g1");
  return make(std::move(g), chi, elem);
}

/// Dihedral group of order 4s with chi = F(1,0) and g = c^s.
inline greenring::DatumPtr dihedral(std::int64_t s) {
  greenring::Group g = greenring::Group::dihedral(s);
  const std::int64_t chi = row_labelled(g, "F(1,0)");
  const std::int64_t elem = g.parse_element("c^" + std::to_string(s));
  return make(std::move(g), chi, elem);
}

struct Named {
  std::string name;
  greenring::DatumPtr datum;
};

/// The data used throughout the acceptance checks.
inline std::vector<Named> standard_data() {
  return {{"taft n=2", taft(2)},
          {"taft n=3", taft(3)},
          {"taft n=4", taft(4)},
          {"generalized taft n=2", generalized_taft(2)},
          {"generalized taft n=3", generalized_taft(3)},
          {"dihedral s=3", dihedral(3)}};
}

}  // namespace fixtures
