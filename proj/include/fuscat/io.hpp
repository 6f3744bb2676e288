#pragma once

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "fuscat/cocycle.hpp"
#include "fuscat/cyclotomic.hpp"
#include "fuscat/group.hpp"
#include "fuscat/modular_data.hpp"

namespace fuscat {

using Json = nlohmann::json;

/// Raised for unreadable files and JSON that does not match the expected schema.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"conductor": n, "coeffs": [["p","q"], ...]}; the coefficient list is the
/// canonical power-basis vector of length n.
Json to_json(const Cyclotomic& x);
/// Coefficients may be ["p","q"] pairs, "p/q" strings or integers, and the
/// list may be longer or shorter than the conductor.
Cyclotomic cyclotomic_from_json(const Json& j);

/// {"order": n, "table": [[...], ...]}
Json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);

/// A builtin name (Z8, Z2xZ4, S3, S4, D4) or a path to a group file.
FiniteGroup resolve_group(const std::string& spec);

/// {"group": <name or table>, "modulus": m, "exponents": [...]} with the
/// exponent of (a,b,c) at a|G|^2 + b|G| + c.
Json to_json(const Cocycle3& w, const std::string& group_name);
/// `group` may be omitted; when present it must agree with the group the
/// file names. Throws CochainError on malformed tables.
Cocycle3 cocycle_from_json(const Json& j, const std::optional<FiniteGroup>& group,
                           const std::filesystem::path& base_dir = {});

/// "trivial", "cyclic:N:t", "basis:i" (i-th generator of H^3(G; Z/|G|)) or
/// "file:path". Checks the cocycle identity; throws CochainError otherwise.
Cocycle3 resolve_cocycle(const std::string& spec, const FiniteGroup& group);

ModularDataInput modular_data_from_json(const Json& j);
Json to_json(const ModularData& m);

Json read_json_file(const std::filesystem::path& path);

}  // namespace fuscat
