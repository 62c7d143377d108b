#pragma once

#include "greenring/greenring.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace greenring {

struct SuiteResult {
  std::string name;
  bool pass = true;
  bool skipped = false;
  std::int64_t checked = 0;
  std::string witness;  // first counterexample, empty on success
};

/// clebsch-gordan, presentation, dual-bases, radical, grouplike, bifrobenius, oracle.
const std::vector<std::string>& suite_names();

/// Runs one named suite. The oracle suite is skipped when dim H exceeds `max_dim`.
SuiteResult run_suite(const std::string& name, const RingPtr& ring, std::int64_t max_dim = 200);

}  // namespace greenring
