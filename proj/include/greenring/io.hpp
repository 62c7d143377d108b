#pragma once

#include "greenring/datum.hpp"
#include "greenring/greenring.hpp"
#include "greenring/oracle.hpp"
#include "greenring/stable.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <utility>

namespace greenring {

using Json = nlohmann::json;

/// {"conductor": N, "terms": [[exponent, numerator, denominator], ...]}.
/// Rational values are written with conductor 1, everything else in Q(zeta_N)
/// for the given N (the value's own conductor when N = 0).
Json cyclotomic_to_json(const Cyclotomic& x, std::int64_t conductor = 0);
Cyclotomic cyclotomic_from_json(const Json& j);

/// Integers that fit in 64 bits become JSON numbers, others decimal strings.
Json bigint_to_json(const BigInt& x);
BigInt bigint_from_json(const Json& j);
Rational rational_from_json(const Json& j);

/// {"coeffs": [[i, j, c], ...]} with 1-based simple indices, lexicographic.
Json green_to_json(const GreenElement& x);
GreenElement green_from_json(const RingPtr& ring, const Json& j);
Json stable_to_json(const StableElement& x);
Json summands_to_json(const std::vector<Summand>& s);

/// "2 M[1,3] - M[2,1]"; "0" for the zero element.
std::string green_pretty(const GreenElement& x);

Json error_to_json(ErrorKind kind, const std::string& message);

Json read_json_file(const std::filesystem::path& path);

/// Datum file: {"group": {...}, "chi": index or label, "g": expression, "mu": 0}.
/// Group objects: {"family": "cyclic", "order": n}, {"family": "abelian", "orders": [...]},
/// {"family": "dihedral", "s": s}, or {"family": "generic", ...import fields...}
/// where the import fields may also live in a separate file named by "file".
DatumPtr datum_from_json(const Json& j, const std::filesystem::path& base_dir = {});
DatumPtr load_datum(const std::filesystem::path& path);

/// Parses "i,j" (1-based i, length j) into a 0-based label.
BasisLabel parse_label(const std::string& text);

}  // namespace greenring
