#pragma once

#include <json.hpp>

#include "arnold/bin_tree.hpp"
#include "arnold/harness.hpp"
#include "arnold/laurent_poly.hpp"
#include "arnold/signed_perm.hpp"

namespace arnold {

// SignedPerm: [2,-4,3,1]
// CycleForm: {"cycles":[{"entries":[1,-2,4],"bracket":false},...]}
// BinTree: null | {"label":k} | {"label":k,"left":..,"right":..}
// LaurentPoly: {"0":1,"2":1} (exponent -> coefficient)
nlohmann::json to_json(const SignedPerm& p);
nlohmann::json to_json(const Cycle& c);
nlohmann::json to_json(const CycleForm& c);
nlohmann::json to_json(const BinTree& t);
nlohmann::json to_json(const LaurentPoly& p);
nlohmann::json to_json(const CheckResult& r);

SignedPerm perm_from_json(const nlohmann::json& j);
CycleForm cycle_form_from_json(const nlohmann::json& j);
BinTree tree_from_json(const nlohmann::json& j);
LaurentPoly poly_from_json(const nlohmann::json& j);

}  // namespace arnold
