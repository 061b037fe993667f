#pragma once

#include <json.hpp>
#include <string>

#include "dw/chars.hpp"
#include "dw/group.hpp"
#include "dw/rational.hpp"

namespace dw {

using Json = nlohmann::json;

// Named-group dispatch: family is one of cyclic | dihedral | symmetric |
// alternating | quaternion | direct_product. Throws ValidationError
// for unknown families or bad parameters.
//
// params: {"n": int} for the single-parameter families;
// {"factors": [groupdef, groupdef]} for direct_product.
FiniteGroup named_group(const std::string& family, const Json& params);

// Group-definition file:
// {"name": str, "kind": "table"|"perm"|"named",
//  "table": [[int]], "generators": [[int]],
//  "family": str, "params": {...}}
// with exactly one of table / generators / family present.
FiniteGroup group_from_json(const Json& j);

// Presentation file: {"generators": int, "relators": [[signed int]]}.
GroupPresentation presentation_from_json(const Json& j);

Json presentation_to_json(const GroupPresentation& p);

// Resolves a CLI token: a built-in name (Z6, S4, D4, Q8, A4, products
// like Z2xZ2, "trivial") or a path to a group JSON file.
FiniteGroup resolve_group(const std::string& token);

Json load_json_file(const std::string& path);

// {"classes": [...sizes], "degrees": [...], "table": [[{"re","im"}]]}
Json chartable_to_json(const CharacterTable& ct);

Json rational_to_json(const Rational& r);
Json complex_to_json(Complex c);

// Rounds away formatting noise so identical runs serialize identically.
double json_round(double v);

}  // namespace dw
